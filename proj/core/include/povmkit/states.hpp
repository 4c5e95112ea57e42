#pragma once

#include "povmkit/matrix.hpp"

namespace povmkit {

/// Euclidean norm of a column vector.
double column_norm(const CMatrix& v);

/// Density matrix with validated physicality: Hermitian within eps, unit
/// trace within eps, smallest eigenvalue >= -eps.
class DensityMatrix {
 public:
  explicit DensityMatrix(CMatrix mat, double eps = default_eps());

  static DensityMatrix maximally_mixed(std::size_t dim);

  const CMatrix& mat() const { return mat_; }
  std::size_t dim() const { return mat_.rows(); }

 private:
  CMatrix mat_;
};

/// Unit-norm state vector. Unnormalized intermediates are plain CMatrix
/// columns; construct through normalized() to renormalize.
class PureState {
 public:
  explicit PureState(CMatrix amps, double eps = default_eps());

  static PureState normalized(const CMatrix& raw);

  const CMatrix& amps() const { return amps_; }
  std::size_t dim() const { return amps_.rows(); }

  DensityMatrix density() const;

 private:
  CMatrix amps_;
};

}  // namespace povmkit
