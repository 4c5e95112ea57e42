#include "povmkit/states.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace povmkit {

double column_norm(const CMatrix& v) {
  if (!v.is_column()) throw std::invalid_argument("column_norm: not a column vector");
  double s = 0.0;
  for (const Complex& c : v.entries()) s += std::norm(c);
  return std::sqrt(s);
}

DensityMatrix::DensityMatrix(CMatrix mat, double eps) : mat_(std::move(mat)) {
  if (!mat_.is_square()) throw std::invalid_argument("DensityMatrix: matrix not square");
  const double herm = hermiticity_defect(mat_);
  if (herm > eps) {
    std::ostringstream os;
    os << "DensityMatrix: not Hermitian, defect " << herm;
    throw std::invalid_argument(os.str());
  }
  const Complex tr = trace(mat_);
  if (std::abs(tr - Complex(1.0, 0.0)) > eps) {
    std::ostringstream os;
    os << "DensityMatrix: trace " << tr.real() << " != 1";
    throw std::invalid_argument(os.str());
  }
  const EigenResult eig = hermitian_eigen(mat_, std::max(eps, herm * 2.0));
  const double min_eig = eig.eigenvalues.back();
  if (min_eig < -eps) {
    std::ostringstream os;
    os << "DensityMatrix: not positive semidefinite, min eigenvalue " << min_eig;
    throw std::invalid_argument(os.str());
  }
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t dim) {
  return DensityMatrix((1.0 / static_cast<double>(dim)) * CMatrix::identity(dim));
}

PureState::PureState(CMatrix amps, double eps) : amps_(std::move(amps)) {
  if (!amps_.is_column()) throw std::invalid_argument("PureState: expected a column vector");
  const double n = column_norm(amps_);
  if (std::abs(n - 1.0) > eps) {
    std::ostringstream os;
    os << "PureState: norm " << n << " != 1";
    throw std::invalid_argument(os.str());
  }
}

PureState PureState::normalized(const CMatrix& raw) {
  const double n = column_norm(raw);
  if (n == 0.0) throw std::invalid_argument("PureState: cannot normalize zero vector");
  return PureState((1.0 / n) * raw);
}

DensityMatrix PureState::density() const { return DensityMatrix(amps_ * dagger(amps_)); }

}  // namespace povmkit
