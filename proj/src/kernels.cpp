#include "relmatch/kernels.hpp"

#include <atomic>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace relmatch::kernels {

namespace {
std::atomic<bool> g_parallel{true};
}  // namespace

void set_parallel_enabled(bool enabled) { g_parallel.store(enabled); }

bool parallel_enabled() {
#ifdef _OPENMP
  return g_parallel.load();
#else
  return false;
#endif
}

std::size_t parallel_grain() { return 64 * 1024; }

// ikj order: each c[i][j] accumulates over ascending k, the same rounding
// sequence in both variants.
void matmul_serial(const double* a, const double* b, double* c, std::size_t m,
                   std::size_t k, std::size_t n) {
  for (std::size_t i = 0; i < m; ++i) {
    double* ci = c + i * n;
    for (std::size_t j = 0; j < n; ++j) ci[j] = 0.0;
    for (std::size_t l = 0; l < k; ++l) {
      const double ail = a[i * k + l];
      const double* bl = b + l * n;
      for (std::size_t j = 0; j < n; ++j) ci[j] += ail * bl[j];
    }
  }
}

void matmul_omp(const double* a, const double* b, double* c, std::size_t m,
                std::size_t k, std::size_t n) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (std::size_t i = 0; i < m; ++i) {
    double* ci = c + i * n;
    for (std::size_t j = 0; j < n; ++j) ci[j] = 0.0;
    for (std::size_t l = 0; l < k; ++l) {
      const double ail = a[i * k + l];
      const double* bl = b + l * n;
      for (std::size_t j = 0; j < n; ++j) ci[j] += ail * bl[j];
    }
  }
}

void matmul(const double* a, const double* b, double* c, std::size_t m,
            std::size_t k, std::size_t n) {
  if (parallel_enabled() && m * k * n >= parallel_grain()) {
    matmul_omp(a, b, c, m, k, n);
  } else {
    matmul_serial(a, b, c, m, k, n);
  }
}

void matmul_abt_serial(const double* a, const double* b, double* c,
                       std::size_t m, std::size_t k, std::size_t n) {
  for (std::size_t i = 0; i < m; ++i) {
    const double* ai = a + i * k;
    double* ci = c + i * n;
    for (std::size_t j = 0; j < n; ++j) {
      const double* bj = b + j * k;
      double sum = 0.0;
      for (std::size_t l = 0; l < k; ++l) sum += ai[l] * bj[l];
      ci[j] = sum;
    }
  }
}

void matmul_abt_omp(const double* a, const double* b, double* c, std::size_t m,
                    std::size_t k, std::size_t n) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (std::size_t i = 0; i < m; ++i) {
    const double* ai = a + i * k;
    double* ci = c + i * n;
    for (std::size_t j = 0; j < n; ++j) {
      const double* bj = b + j * k;
      double sum = 0.0;
      for (std::size_t l = 0; l < k; ++l) sum += ai[l] * bj[l];
      ci[j] = sum;
    }
  }
}

void matmul_abt(const double* a, const double* b, double* c, std::size_t m,
                std::size_t k, std::size_t n) {
  if (parallel_enabled() && m * k * n >= parallel_grain()) {
    matmul_abt_omp(a, b, c, m, k, n);
  } else {
    matmul_abt_serial(a, b, c, m, k, n);
  }
}

void matmul_atb_serial(const double* a, const double* b, double* c,
                       std::size_t m, std::size_t k, std::size_t n) {
  for (std::size_t i = 0; i < m; ++i) {
    double* ci = c + i * n;
    for (std::size_t j = 0; j < n; ++j) {
      double sum = 0.0;
      for (std::size_t l = 0; l < k; ++l) sum += a[l * m + i] * b[l * n + j];
      ci[j] = sum;
    }
  }
}

void matmul_atb_omp(const double* a, const double* b, double* c, std::size_t m,
                    std::size_t k, std::size_t n) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (std::size_t i = 0; i < m; ++i) {
    double* ci = c + i * n;
    for (std::size_t j = 0; j < n; ++j) {
      double sum = 0.0;
      for (std::size_t l = 0; l < k; ++l) sum += a[l * m + i] * b[l * n + j];
      ci[j] = sum;
    }
  }
}

void matmul_atb(const double* a, const double* b, double* c, std::size_t m,
                std::size_t k, std::size_t n) {
  if (parallel_enabled() && m * k * n >= parallel_grain()) {
    matmul_atb_omp(a, b, c, m, k, n);
  } else {
    matmul_atb_serial(a, b, c, m, k, n);
  }
}

namespace {

// Shared body: per-row work item i updates the eigenvector accumulator and,
// for i outside {p,q}, the off-diagonal row/column pair.
inline void rotate_row(double* a, double* v, std::size_t n, std::size_t p,
                       std::size_t q, double c, double s, std::size_t i) {
  if (i != p && i != q) {
    const double aip = a[i * n + p];
    const double aiq = a[i * n + q];
    const double np = c * aip - s * aiq;
    const double nq = s * aip + c * aiq;
    a[i * n + p] = np;
    a[p * n + i] = np;
    a[i * n + q] = nq;
    a[q * n + i] = nq;
  }
  const double vip = v[i * n + p];
  const double viq = v[i * n + q];
  v[i * n + p] = c * vip - s * viq;
  v[i * n + q] = s * vip + c * viq;
}

}  // namespace

void jacobi_rotate_serial(double* a, double* v, std::size_t n, std::size_t p,
                          std::size_t q, double c, double s) {
  for (std::size_t i = 0; i < n; ++i) rotate_row(a, v, n, p, q, c, s, i);
}

void jacobi_rotate_omp(double* a, double* v, std::size_t n, std::size_t p,
                       std::size_t q, double c, double s) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (std::size_t i = 0; i < n; ++i) rotate_row(a, v, n, p, q, c, s, i);
}

void jacobi_rotate(double* a, double* v, std::size_t n, std::size_t p,
                   std::size_t q, double c, double s) {
  if (parallel_enabled() && n >= 256) {
    jacobi_rotate_omp(a, v, n, p, q, c, s);
  } else {
    jacobi_rotate_serial(a, v, n, p, q, c, s);
  }
}

}  // namespace relmatch::kernels
