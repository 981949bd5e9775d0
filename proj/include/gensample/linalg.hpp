#pragma once

// Thin wrappers over CBLAS/LAPACKE for the dense complex kernels. Matrices
// are column-major std::complex<double> buffers with an explicit leading
// dimension.

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <cblas.h>
#include <lapacke.h>

#include "gensample/error.hpp"

namespace gensample::linalg {

using cplx = std::complex<double>;

/// Column-major dense complex matrix.
struct CMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<cplx> data;

  CMatrix() = default;
  CMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}

  cplx& operator()(std::size_t i, std::size_t j) { return data[j * rows + i]; }
  const cplx& operator()(std::size_t i, std::size_t j) const { return data[j * rows + i]; }
  cplx* col(std::size_t j) { return data.data() + j * rows; }
  const cplx* col(std::size_t j) const { return data.data() + j * rows; }

  static CMatrix identity(std::size_t n) {
    CMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }
};

inline void check_info(int info, const char* routine) {
  if (info != 0) throw NumericalError(std::string(routine) + " failed with info " + std::to_string(info));
}

/// C = A^H B for column-major blocks (A: k x m, B: k x n, C: m x n).
inline void gemm_adjoint(std::size_t m, std::size_t n, std::size_t k, const cplx* a, std::size_t lda, const cplx* b,
                         std::size_t ldb, cplx* c, std::size_t ldc) {
  const cplx one(1.0), zero(0.0);
  cblas_zgemm(CblasColMajor, CblasConjTrans, CblasNoTrans, static_cast<int>(m), static_cast<int>(n),
              static_cast<int>(k), &one, a, static_cast<int>(lda), b, static_cast<int>(ldb), &zero, c,
              static_cast<int>(ldc));
}

/// Singular values (descending) of a copy of `a`.
inline std::vector<double> singular_values(CMatrix a) {
  const auto m = static_cast<lapack_int>(a.rows), n = static_cast<lapack_int>(a.cols);
  std::vector<double> s(static_cast<std::size_t>(std::min(m, n)));
  if (s.empty()) return s;
  check_info(LAPACKE_zgesdd(LAPACK_COL_MAJOR, 'N', m, n, a.data.data(), m, s.data(), nullptr, 1, nullptr, 1),
             "zgesdd");
  return s;
}

/// Eigenvalues (ascending) of the Gram matrix A^H A.
inline std::vector<double> gram_eigenvalues(const CMatrix& a) {
  const auto n = static_cast<int>(a.cols), k = static_cast<int>(a.rows);
  CMatrix g(a.cols, a.cols);
  cblas_zherk(CblasColMajor, CblasUpper, CblasConjTrans, n, k, 1.0, a.data.data(), k, 0.0, g.data.data(), n);
  std::vector<double> w(a.cols);
  if (w.empty()) return w;
  check_info(LAPACKE_zheevd(LAPACK_COL_MAJOR, 'N', 'U', n, g.data.data(), n, w.data()), "zheevd");
  return w;
}

/// y = A x and y = A^H x.
inline void gemv(const CMatrix& a, const cplx* x, cplx* y) {
  const cplx one(1.0), zero(0.0);
  cblas_zgemv(CblasColMajor, CblasNoTrans, static_cast<int>(a.rows), static_cast<int>(a.cols), &one,
              a.data.data(), static_cast<int>(a.rows), x, 1, &zero, y, 1);
}
inline void gemv_adjoint(const CMatrix& a, const cplx* x, cplx* y) {
  const cplx one(1.0), zero(0.0);
  cblas_zgemv(CblasColMajor, CblasConjTrans, static_cast<int>(a.rows), static_cast<int>(a.cols), &one,
              a.data.data(), static_cast<int>(a.rows), x, 1, &zero, y, 1);
}

}  // namespace gensample::linalg
