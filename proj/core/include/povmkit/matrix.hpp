#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "povmkit/eps.hpp"

namespace povmkit {

using Complex = std::complex<double>;

/// Dense complex matrix with row-major storage. Everything in this library
/// lives in dimension <= ~64, so all algorithms are direct O(n^3) kernels
/// with no blocking or sparsity.
class CMatrix {
 public:
  CMatrix() = default;
  CMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols, Complex(0.0, 0.0)) {}
  CMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static CMatrix identity(std::size_t n);
  static CMatrix column(std::initializer_list<Complex> entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_ && rows_ > 0; }
  bool is_column() const { return cols_ == 1; }

  Complex& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }

  const std::vector<Complex>& entries() const { return entries_; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> entries_;
};

CMatrix operator+(const CMatrix& a, const CMatrix& b);
CMatrix operator-(const CMatrix& a, const CMatrix& b);
CMatrix operator*(const CMatrix& a, const CMatrix& b);
CMatrix operator*(const Complex& c, const CMatrix& a);
CMatrix operator*(double c, const CMatrix& a);

/// Conjugate transpose.
CMatrix dagger(const CMatrix& a);

Complex trace(const CMatrix& a);

/// Hilbert-Schmidt inner product Tr(A† B); requires equal square shapes.
Complex trace_inner(const CMatrix& a, const CMatrix& b);

double frobenius_norm(const CMatrix& a);

/// ‖A − A†‖_F, zero iff A is Hermitian.
double hermiticity_defect(const CMatrix& a);

/// Entrywise comparison with absolute tolerance.
bool approx_equal(const CMatrix& a, const CMatrix& b, double eps = default_eps());

/// Stacks the rows of a square matrix into an N²×1 column: entry (i,j)
/// lands at position i·N + j.
CMatrix vec(const CMatrix& x);

/// Inverse of vec: the first N entries become row 0, and so on.
CMatrix unvec(const CMatrix& v, std::size_t n);

CMatrix kron(const CMatrix& a, const CMatrix& b);

/// Block-diagonal [[A,0],[0,B]]. Either operand may be 0×0.
CMatrix direct_sum(const CMatrix& a, const CMatrix& b);

/// Transpose on the second tensor factor of a (dim_a·dim_b)-dimensional
/// bipartite operator.
CMatrix partial_transpose(const CMatrix& m, std::size_t dim_a, std::size_t dim_b);

struct EigenResult {
  std::vector<double> eigenvalues;  // sorted descending
  CMatrix eigenvectors;             // orthonormal columns, matching order
};

/// Cyclic complex Jacobi diagonalization. Input must be Hermitian within
/// eps; throws otherwise, reporting the Hermiticity defect norm.
EigenResult hermitian_eigen(const CMatrix& h, double eps = default_eps());

}  // namespace povmkit
