#include "povmkit/tensors.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace povmkit {

namespace {

using BigRat = boost::multiprecision::cpp_rational;

}  // namespace

SphericalTensor tau(HalfInt j, int k, int q) {
  if (j.twice < 0) throw std::invalid_argument("tau: negative j");
  // Rank runs 0..2j; note j.twice equals 2j as a number.
  if (k < 0 || k > j.twice || std::abs(q) > k) {
    std::ostringstream os;
    os << "tau: (k=" << k << ", q=" << q << ") out of range for j=" << to_string(j);
    throw std::invalid_argument(os.str());
  }

  const int n = j.twice + 1;
  CMatrix m(n, n);
  for (int rc = 0; rc < n; ++rc) {
    const HalfInt mm = HalfInt::from_twice(j.twice - 2 * rc);
    const HalfInt mp = mm + HalfInt(q);
    if (std::abs(mp.twice) > j.twice) continue;
    const int rp = (j.twice - mp.twice) / 2;
    const ExactCoeff cg = clebsch_gordan(j, HalfInt(k), j, mm, HalfInt(q), mp);
    if (cg.is_zero()) continue;
    const BigRat scaled(cg.num * (2 * k + 1), cg.den);
    m(rp, rc) = cg.sign * std::sqrt(scaled.convert_to<double>());
  }
  return SphericalTensor{j, k, q, std::move(m)};
}

std::vector<SphericalTensor> tensor_basis(HalfInt j) {
  std::vector<SphericalTensor> basis;
  const int n = j.twice + 1;
  basis.reserve(static_cast<std::size_t>(n) * n);
  for (int k = 0; k <= j.twice; ++k)
    for (int q = -k; q <= k; ++q) basis.push_back(tau(j, k, q));
  return basis;
}

HalfInt spin_for_dim(std::size_t dim) {
  if (dim == 0) throw std::invalid_argument("spin_for_dim: zero dimension");
  return HalfInt::from_twice(static_cast<int>(dim) - 1);
}

FanoParameters::FanoParameters(HalfInt j) : j_(j) {
  if (j.twice < 0) throw std::invalid_argument("FanoParameters: negative j");
  const std::size_t n = static_cast<std::size_t>(j.twice) + 1;
  values_.assign(n * n, Complex(0.0, 0.0));
}

std::size_t FanoParameters::index(int k, int q) const {
  if (k < 0 || k > j_.twice || std::abs(q) > k) {
    std::ostringstream os;
    os << "FanoParameters: (k=" << k << ", q=" << q << ") out of range for j=" << to_string(j_);
    throw std::out_of_range(os.str());
  }
  // Ranks 0..k-1 occupy k² slots; q is offset by k within rank k.
  return static_cast<std::size_t>(k) * k + static_cast<std::size_t>(k + q);
}

Complex& FanoParameters::at(int k, int q) { return values_[index(k, q)]; }

const Complex& FanoParameters::at(int k, int q) const { return values_[index(k, q)]; }

FanoParameters fano_extract(const DensityMatrix& rho) {
  const HalfInt j = spin_for_dim(rho.dim());
  FanoParameters t(j);
  for (const SphericalTensor& op : tensor_basis(j)) {
    t.at(op.k, op.q) = trace(rho.mat() * op.mat);
  }
  return t;
}

FanoReconstruction fano_reconstruct(const FanoParameters& t, double eps) {
  const HalfInt j = t.j();
  const int n = j.twice + 1;
  for (int k = 0; k <= j.twice; ++k) {
    for (int q = -k; q <= k; ++q) {
      const Complex lhs = std::conj(t.at(k, q));
      const Complex rhs = ((q % 2 == 0) ? 1.0 : -1.0) * t.at(k, -q);
      if (std::abs(lhs - rhs) > std::max(eps, 1e-12)) {
        std::ostringstream os;
        os << "fano_reconstruct: conjugation symmetry violated at (k=" << k << ", q=" << q
           << ")";
        throw std::invalid_argument(os.str());
      }
    }
  }

  CMatrix m(n, n);
  for (const SphericalTensor& op : tensor_basis(j)) {
    m = m + (t.at(op.k, op.q) * dagger(op.mat));
  }
  m = (1.0 / n) * m;

  FanoReconstruction out;
  const EigenResult eig = hermitian_eigen(m, std::max(eps, 1e-9));
  out.min_eigenvalue = eig.eigenvalues.back();
  out.physical = out.min_eigenvalue >= -eps;
  out.mat = std::move(m);
  return out;
}

FanoParameters rotate_parameters(const FanoParameters& t, double alpha, double beta,
                                 double gamma) {
  const HalfInt j = t.j();
  FanoParameters out(j);
  for (int k = 0; k <= j.twice; ++k) {
    const CMatrix d = wigner_D(HalfInt(k), alpha, beta, gamma);
    // Rotated parameters pick up the conjugated D-matrix:
    // t'_q = Σ_{q'} conj(D^k_{q q'}) t_{q'}; rows index q from +k down.
    for (int q = -k; q <= k; ++q) {
      Complex acc = 0.0;
      for (int qp = -k; qp <= k; ++qp) {
        acc += std::conj(d(static_cast<std::size_t>(k - q), static_cast<std::size_t>(k - qp))) *
               t.at(k, qp);
      }
      out.at(k, q) = acc;
    }
  }
  return out;
}

}  // namespace povmkit
