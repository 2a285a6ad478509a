#include "lacmodel/kernels.hpp"

#include <cmath>

namespace lac::kernels {

namespace scalar {

double dot(const double* a, const double* b, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += a[i] * b[i];
    return s;
}

double sumsq(const double* a, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += a[i] * a[i];
    return s;
}

void axpy(double alpha, const double* x, double* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void soft_threshold(const double* v, double t, double* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        const double m = std::fabs(v[i]) - t;
        out[i] = m > 0.0 ? (v[i] > 0.0 ? m : -m) : 0.0;
    }
}

void relu(const double* x, double* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] = x[i] > 0.0 ? x[i] : 0.0;
}

void relu_backward(const double* x, const double* gy, double* gx, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) gx[i] = x[i] > 0.0 ? gy[i] : 0.0;
}

void adam_update(double* p, double* m, double* v, const double* g, std::size_t n,
                 double lr, double beta1, double beta2, double eps,
                 double bc1, double bc2) {
    for (std::size_t i = 0; i < n; ++i) {
        m[i] = beta1 * m[i] + (1.0 - beta1) * g[i];
        v[i] = beta2 * v[i] + (1.0 - beta2) * g[i] * g[i];
        p[i] -= lr * (m[i] / bc1) / (std::sqrt(v[i] / bc2) + eps);
    }
}

}  // namespace scalar

#if defined(LACMODEL_HAVE_AVX2)
namespace avx2 {
double dot(const double* a, const double* b, std::size_t n);
double sumsq(const double* a, std::size_t n);
void axpy(double alpha, const double* x, double* y, std::size_t n);
void soft_threshold(const double* v, double t, double* out, std::size_t n);
void relu(const double* x, double* y, std::size_t n);
void relu_backward(const double* x, const double* gy, double* gx, std::size_t n);
void adam_update(double* p, double* m, double* v, const double* g, std::size_t n,
                 double lr, double beta1, double beta2, double eps,
                 double bc1, double bc2);
}  // namespace avx2
#endif

namespace {

struct KernelTable {
    double (*dot)(const double*, const double*, std::size_t);
    double (*sumsq)(const double*, std::size_t);
    void (*axpy)(double, const double*, double*, std::size_t);
    void (*soft_threshold)(const double*, double, double*, std::size_t);
    void (*relu)(const double*, double*, std::size_t);
    void (*relu_backward)(const double*, const double*, double*, std::size_t);
    void (*adam_update)(double*, double*, double*, const double*, std::size_t,
                        double, double, double, double, double, double);
};

constexpr KernelTable kScalarTable = {
    scalar::dot,  scalar::sumsq, scalar::axpy,          scalar::soft_threshold,
    scalar::relu, scalar::relu_backward, scalar::adam_update,
};

#if defined(LACMODEL_HAVE_AVX2)
constexpr KernelTable kAvx2Table = {
    avx2::dot,  avx2::sumsq, avx2::axpy,          avx2::soft_threshold,
    avx2::relu, avx2::relu_backward, avx2::adam_update,
};
#endif

bool cpu_has_avx2() {
#if defined(LACMODEL_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

Backend detect_backend() {
    return cpu_has_avx2() ? Backend::avx2 : Backend::scalar;
}

Backend g_backend = detect_backend();

const KernelTable& table_for(Backend b) {
#if defined(LACMODEL_HAVE_AVX2)
    if (b == Backend::avx2) return kAvx2Table;
#endif
    (void)b;
    return kScalarTable;
}

const KernelTable* g_table = &table_for(g_backend);

}  // namespace

Backend active_backend() { return g_backend; }

const char* backend_name(Backend b) {
    switch (b) {
        case Backend::scalar: return "scalar";
        case Backend::avx2: return "avx2";
    }
    return "?";
}

bool backend_supported(Backend b) {
    if (b == Backend::scalar) return true;
    return cpu_has_avx2();
}

bool force_backend(Backend b) {
    if (!backend_supported(b)) return false;
    g_backend = b;
    g_table = &table_for(b);
    return true;
}

double dot(const double* a, const double* b, std::size_t n) { return g_table->dot(a, b, n); }
double sumsq(const double* a, std::size_t n) { return g_table->sumsq(a, n); }
void axpy(double alpha, const double* x, double* y, std::size_t n) { g_table->axpy(alpha, x, y, n); }
void soft_threshold(const double* v, double t, double* out, std::size_t n) {
    g_table->soft_threshold(v, t, out, n);
}
void relu(const double* x, double* y, std::size_t n) { g_table->relu(x, y, n); }
void relu_backward(const double* x, const double* gy, double* gx, std::size_t n) {
    g_table->relu_backward(x, gy, gx, n);
}
void adam_update(double* p, double* m, double* v, const double* g, std::size_t n,
                 double lr, double beta1, double beta2, double eps,
                 double bc1, double bc2) {
    g_table->adam_update(p, m, v, g, n, lr, beta1, beta2, eps, bc1, bc2);
}

}  // namespace lac::kernels
