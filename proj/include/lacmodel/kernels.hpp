#pragma once

#include <cstddef>

// Array kernels used by the hot loops (GEMM, FISTA iterations, activations,
// Adam updates). Every kernel has a scalar reference implementation and may
// have SIMD variants; the backend is chosen once at runtime from CPU
// capabilities. SIMD variants reassociate sums, so results may differ from
// the scalar backend by rounding; within one process the selection is fixed,
// which keeps runs reproducible.

namespace lac::kernels {

enum class Backend { scalar, avx2 };

Backend active_backend();
const char* backend_name(Backend b);
bool backend_supported(Backend b);

/// Force a specific backend (tests, debugging). Returns false and leaves the
/// selection unchanged if the backend is not available on this CPU/build.
bool force_backend(Backend b);

double dot(const double* a, const double* b, std::size_t n);
double sumsq(const double* a, std::size_t n);

/// y += alpha * x
void axpy(double alpha, const double* x, double* y, std::size_t n);

/// out[i] = sign(v[i]) * max(|v[i]| - t, 0)
void soft_threshold(const double* v, double t, double* out, std::size_t n);

void relu(const double* x, double* y, std::size_t n);

/// gx[i] = x[i] > 0 ? gy[i] : 0
void relu_backward(const double* x, const double* gy, double* gx, std::size_t n);

/// One Adam update over a parameter block. bc1/bc2 are the bias-correction
/// denominators 1 - beta1^t and 1 - beta2^t for the current step t.
void adam_update(double* p, double* m, double* v, const double* g, std::size_t n,
                 double lr, double beta1, double beta2, double eps,
                 double bc1, double bc2);

}  // namespace lac::kernels
