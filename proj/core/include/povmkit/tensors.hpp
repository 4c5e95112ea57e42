#pragma once

#include <vector>

#include "povmkit/angmom.hpp"
#include "povmkit/halfint.hpp"
#include "povmkit/matrix.hpp"
#include "povmkit/states.hpp"

namespace povmkit {

/// Irreducible spherical tensor operator tau^k_q for spin j, Madison
/// normalization Tr(tau† tau) = 2j+1. Matrix element at (row m', col m)
/// is sqrt(2k+1)·C(j k j; m q m'), with m running from +j down to -j.
struct SphericalTensor {
  HalfInt j;
  int k = 0;
  int q = 0;
  CMatrix mat;
};

SphericalTensor tau(HalfInt j, int k, int q);

/// All (2j+1)² tensor operators in canonical order: k ascending from 0 to
/// 2j, and q from -k to +k within each rank.
std::vector<SphericalTensor> tensor_basis(HalfInt j);

/// Spin value carried by a (2j+1)-dimensional matrix space.
HalfInt spin_for_dim(std::size_t dim);

/// Fano parameters t^k_q = Tr(rho tau^k_q), stored in canonical order.
class FanoParameters {
 public:
  explicit FanoParameters(HalfInt j);

  HalfInt j() const { return j_; }
  std::size_t count() const { return values_.size(); }

  Complex& at(int k, int q);
  const Complex& at(int k, int q) const;

 private:
  std::size_t index(int k, int q) const;

  HalfInt j_;
  std::vector<Complex> values_;
};

FanoParameters fano_extract(const DensityMatrix& rho);

struct FanoReconstruction {
  CMatrix mat;
  bool physical = true;       // min eigenvalue >= -eps
  double min_eigenvalue = 0;  // of the reconstructed matrix
};

/// rho = 1/(2j+1) Σ_kq t^k_q tau^{k†}_q. Parameter sets violating the
/// conjugation symmetry conj(t^k_q) = (-1)^q t^k_{-q} are rejected; sets
/// leading to negative eigenvalues are returned with physical = false.
FanoReconstruction fano_reconstruct(const FanoParameters& t, double eps = default_eps());

/// Parameters of the rotated state D(R) rho D(R)†, for z-y-z Euler angles.
/// Rank blocks never mix.
FanoParameters rotate_parameters(const FanoParameters& t, double alpha, double beta,
                                 double gamma);

}  // namespace povmkit
