#pragma once

#include <cstddef>

namespace relmatch::kernels {

// Dense inner loops, each in two variants: a serial reference and an
// OpenMP-parallel version. Parallelism is element-parallel only: every output
// element is produced by a single thread with the same inner-loop order as
// the serial path, so the two variants are bitwise identical. The unsuffixed
// entry points dispatch on problem size and the global switch below.

/// Globally enable/disable the OpenMP paths (default: enabled when compiled
/// with OpenMP support).
void set_parallel_enabled(bool enabled);
bool parallel_enabled();

/// Minimum number of output-element operations before a kernel goes parallel.
std::size_t parallel_grain();

/// c = a * b. a is m-by-k, b is k-by-n, c is m-by-n. c must not alias inputs.
void matmul_serial(const double* a, const double* b, double* c, std::size_t m,
                   std::size_t k, std::size_t n);
void matmul_omp(const double* a, const double* b, double* c, std::size_t m,
                std::size_t k, std::size_t n);
void matmul(const double* a, const double* b, double* c, std::size_t m,
            std::size_t k, std::size_t n);

/// c = a * b^T. a is m-by-k, b is n-by-k, c is m-by-n.
void matmul_abt_serial(const double* a, const double* b, double* c,
                       std::size_t m, std::size_t k, std::size_t n);
void matmul_abt_omp(const double* a, const double* b, double* c, std::size_t m,
                    std::size_t k, std::size_t n);
void matmul_abt(const double* a, const double* b, double* c, std::size_t m,
                std::size_t k, std::size_t n);

/// c = a^T * b. a is k-by-m, b is k-by-n, c is m-by-n.
void matmul_atb_serial(const double* a, const double* b, double* c,
                       std::size_t m, std::size_t k, std::size_t n);
void matmul_atb_omp(const double* a, const double* b, double* c, std::size_t m,
                    std::size_t k, std::size_t n);
void matmul_atb(const double* a, const double* b, double* c, std::size_t m,
                std::size_t k, std::size_t n);

/// One two-sided Jacobi rotation on the symmetric n-by-n matrix a, with the
/// rotation accumulated into v. Touches rows/columns p and q of a and columns
/// p and q of v; the (p,p),(q,q),(p,q) entries are the caller's job.
void jacobi_rotate_serial(double* a, double* v, std::size_t n, std::size_t p,
                          std::size_t q, double c, double s);
void jacobi_rotate_omp(double* a, double* v, std::size_t n, std::size_t p,
                       std::size_t q, double c, double s);
void jacobi_rotate(double* a, double* v, std::size_t n, std::size_t p,
                   std::size_t q, double c, double s);

}  // namespace relmatch::kernels
