#include "povmkit/angmom.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace povmkit {

namespace {

using BigRat = boost::multiprecision::cpp_rational;

BigInt factorial_big(int n) {
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

void require_valid_pair(const char* name, HalfInt j, HalfInt m) {
  if (j.twice < 0) {
    throw std::invalid_argument(std::string("clebsch_gordan: negative magnitude for ") + name);
  }
  if (((j.twice - m.twice) % 2) != 0) {
    throw std::invalid_argument(std::string("clebsch_gordan: j-m not integral for ") + name);
  }
}

// Factorial table in doubles for the Wigner-d kernel; grown on demand.
double dfact(int n) {
  static const std::vector<double> table = [] {
    std::vector<double> t(171);
    t[0] = 1.0;
    for (int i = 1; i < 171; ++i) t[i] = t[i - 1] * i;
    return t;
  }();
  return table.at(static_cast<std::size_t>(n));
}

}  // namespace

double ExactCoeff::to_double() const {
  if (sign == 0) return 0.0;
  const BigRat r(num, den);
  return sign * std::sqrt(r.convert_to<double>());
}

ExactCoeff clebsch_gordan(HalfInt j1, HalfInt j2, HalfInt j, HalfInt m1, HalfInt m2, HalfInt m) {
  require_valid_pair("(j1,m1)", j1, m1);
  require_valid_pair("(j2,m2)", j2, m2);
  require_valid_pair("(j,m)", j, m);

  const ExactCoeff zero{};
  if (m1.twice + m2.twice != m.twice) return zero;
  if (std::abs(m1.twice) > j1.twice || std::abs(m2.twice) > j2.twice ||
      std::abs(m.twice) > j.twice) {
    return zero;
  }
  // j1+j2+j must be an integer for the triple to couple at all.
  if (((j1.twice + j2.twice + j.twice) % 2) != 0) return zero;
  if (j.twice > j1.twice + j2.twice || j.twice < std::abs(j1.twice - j2.twice)) return zero;

  // All of these are guaranteed integral now.
  const int j1pj2mj = (j1.twice + j2.twice - j.twice) / 2;
  const int j1mj2pj = (j1.twice - j2.twice + j.twice) / 2;
  const int mj1pj2pj = (-j1.twice + j2.twice + j.twice) / 2;
  const int jsum1 = (j1.twice + j2.twice + j.twice) / 2 + 1;
  const int j1pm1 = (j1.twice + m1.twice) / 2;
  const int j1mm1 = (j1.twice - m1.twice) / 2;
  const int j2pm2 = (j2.twice + m2.twice) / 2;
  const int j2mm2 = (j2.twice - m2.twice) / 2;
  const int jpm = (j.twice + m.twice) / 2;
  const int jmm = (j.twice - m.twice) / 2;
  const int jmj2pm1 = (j.twice - j2.twice + m1.twice) / 2;
  const int jmj1mm2 = (j.twice - j1.twice - m2.twice) / 2;

  // Racah sum: rational, carries the sign of the coefficient.
  const int kmin = std::max({0, -jmj2pm1, -jmj1mm2});
  const int kmax = std::min({j1pj2mj, j1mm1, j2pm2});
  BigRat sum = 0;
  for (int k = kmin; k <= kmax; ++k) {
    BigInt d = factorial_big(k);
    d *= factorial_big(j1pj2mj - k);
    d *= factorial_big(j1mm1 - k);
    d *= factorial_big(j2pm2 - k);
    d *= factorial_big(jmj2pm1 + k);
    d *= factorial_big(jmj1mm2 + k);
    const BigRat term = BigRat(1, d);
    sum += (k % 2 == 0) ? term : -term;
  }
  if (sum == 0) return zero;

  // Square of the prefactor under the radical.
  BigRat pref(j.twice + 1, 1);
  pref *= BigRat(factorial_big(j1pj2mj) * factorial_big(j1mj2pj) * factorial_big(mj1pj2pj),
                 factorial_big(jsum1));
  pref *= factorial_big(j1pm1);
  pref *= factorial_big(j1mm1);
  pref *= factorial_big(j2pm2);
  pref *= factorial_big(j2mm2);
  pref *= factorial_big(jpm);
  pref *= factorial_big(jmm);

  const BigRat square = pref * sum * sum;  // cpp_rational keeps lowest terms
  ExactCoeff out;
  out.sign = sum > 0 ? 1 : -1;
  out.num = numerator(square);
  out.den = denominator(square);
  return out;
}

CMatrix wigner_small_d(HalfInt j, double beta) {
  if (j.twice < 0) throw std::invalid_argument("wigner_small_d: negative j");
  const int n = j.twice + 1;
  const double ch = std::cos(beta / 2.0);
  const double sh = std::sin(beta / 2.0);
  CMatrix d(n, n);
  for (int rp = 0; rp < n; ++rp) {
    const int mp2 = j.twice - 2 * rp;  // twice m'
    for (int rc = 0; rc < n; ++rc) {
      const int m2 = j.twice - 2 * rc;  // twice m
      const int jpm = (j.twice + m2) / 2;
      const int jmm = (j.twice - m2) / 2;
      const int jpmp = (j.twice + mp2) / 2;
      const int jmmp = (j.twice - mp2) / 2;
      const int lam = (mp2 - m2) / 2;  // m' - m
      const double pref =
          std::sqrt(dfact(jpmp) * dfact(jmmp) * dfact(jpm) * dfact(jmm));
      const int smin = std::max(0, -lam);
      const int smax = std::min(jpm, jmmp);
      double sum = 0.0;
      for (int s = smin; s <= smax; ++s) {
        const double denom = dfact(jpm - s) * dfact(s) * dfact(lam + s) * dfact(jmmp - s);
        const int cos_pow = j.twice + (m2 - mp2) / 2 - 2 * s;  // 2j + m - m' - 2s
        const int sin_pow = lam + 2 * s;
        double term = std::pow(ch, cos_pow) * std::pow(sh, sin_pow) / denom;
        if ((lam + s) % 2 != 0) term = -term;
        sum += term;
      }
      d(rp, rc) = pref * sum;
    }
  }
  return d;
}

CMatrix wigner_D(HalfInt j, double alpha, double beta, double gamma) {
  const CMatrix d = wigner_small_d(j, beta);
  const int n = j.twice + 1;
  CMatrix out(n, n);
  for (int rp = 0; rp < n; ++rp) {
    const double mp = (j.twice - 2 * rp) / 2.0;
    const Complex pa = std::exp(Complex(0.0, -mp * alpha));
    for (int rc = 0; rc < n; ++rc) {
      const double m = (j.twice - 2 * rc) / 2.0;
      const Complex pg = std::exp(Complex(0.0, -m * gamma));
      out(rp, rc) = pa * d(rp, rc) * pg;
    }
  }
  return out;
}

}  // namespace povmkit
