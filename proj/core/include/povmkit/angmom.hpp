#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "povmkit/halfint.hpp"
#include "povmkit/matrix.hpp"

namespace povmkit {

using BigInt = boost::multiprecision::cpp_int;

/// Exact coefficient of the form sign·sqrt(num/den) with num/den a
/// non-negative rational in lowest terms. Clebsch-Gordan coefficients are
/// always of this shape, so keeping the square exact makes downstream
/// tables reproducible rationals.
struct ExactCoeff {
  int sign = 0;  // -1, 0, +1
  BigInt num = 0;
  BigInt den = 1;

  bool is_zero() const { return sign == 0; }
  double to_double() const;

  friend bool operator==(const ExactCoeff&, const ExactCoeff&) = default;
};

/// Clebsch-Gordan coefficient C(j1 j2 j; m1 m2 m) in the Condon-Shortley
/// convention, evaluated exactly with the Racah sum over big-integer
/// factorials. Returns exact zero outside the triangle/projection
/// constraints; throws only for malformed (j,m) pairs (j-m not integral,
/// or a negative magnitude).
ExactCoeff clebsch_gordan(HalfInt j1, HalfInt j2, HalfInt j, HalfInt m1, HalfInt m2, HalfInt m);

/// Wigner small-d matrix d^j(beta), real (2j+1)x(2j+1); rows and columns
/// are indexed by m', m running from +j down to -j.
CMatrix wigner_small_d(HalfInt j, double beta);

/// Full Wigner rotation matrix for z-y-z Euler angles:
/// D^j_{m'm} = e^{-i m' alpha} d^j_{m'm}(beta) e^{-i m gamma}.
CMatrix wigner_D(HalfInt j, double alpha, double beta, double gamma);

}  // namespace povmkit
