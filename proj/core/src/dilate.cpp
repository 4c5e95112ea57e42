#include "povmkit/dilate.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

namespace povmkit {

namespace {

unsigned long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  unsigned long long r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<unsigned long long>(n - k + i) / static_cast<unsigned long long>(i);
  }
  return r;
}

}  // namespace

DickeIsometry dicke_isometry(int n_qubits) {
  if (n_qubits < 1 || n_qubits > 20) {
    throw std::invalid_argument("dicke_isometry: n_qubits must be in 1..20, got " +
                                std::to_string(n_qubits));
  }
  const std::size_t dim = std::size_t{1} << n_qubits;
  CMatrix v(dim, static_cast<std::size_t>(n_qubits) + 1);
  for (int c = 0; c <= n_qubits; ++c) {
    const int ups = n_qubits - c;  // j+m up spins for column c (m = j - c)
    const double amp = 1.0 / std::sqrt(static_cast<double>(binomial(n_qubits, ups)));
    for (std::size_t basis = 0; basis < dim; ++basis) {
      const int downs = std::popcount(basis);
      if (n_qubits - downs == ups) v(basis, static_cast<std::size_t>(c)) = amp;
    }
  }
  return DickeIsometry{n_qubits, std::move(v)};
}

CgUnitary cg_unitary_two_qubits() {
  const double r = 1.0 / std::sqrt(2.0);
  CgUnitary out;
  out.u = CMatrix{{1, 0, 0, 0},  //
                  {0, r, r, 0},  //
                  {0, 0, 0, 1},  //
                  {0, r, -r, 0}};
  return out;
}

PovmElement dilate_element(const PovmElement& e, const DickeIsometry& iso) {
  const std::size_t sub = static_cast<std::size_t>(iso.n_qubits) + 1;
  if (!e.mat.is_square() || e.mat.rows() != sub) {
    throw std::invalid_argument("dilate_element: element dimension " +
                                std::to_string(e.mat.rows()) + " does not match subspace " +
                                std::to_string(sub));
  }
  return PovmElement{e.label, iso.v * e.mat * dagger(iso.v), e.multiplicity};
}

PovmSet dilate_set(const PovmSet& set, const DickeIsometry& iso) {
  PovmSet out;
  out.dim = std::size_t{1} << iso.n_qubits;
  out.elements.reserve(set.elements.size());
  for (const PovmElement& e : set.elements) out.elements.push_back(dilate_element(e, iso));
  return out;
}

CMatrix symmetric_component(const PureState& psi, const DickeIsometry& iso) {
  const std::size_t dim = std::size_t{1} << iso.n_qubits;
  if (psi.dim() != dim) {
    throw std::invalid_argument("symmetric_component: state dimension " +
                                std::to_string(psi.dim()) + " does not match " +
                                std::to_string(dim));
  }
  return iso.v * (dagger(iso.v) * psi.amps());
}

}  // namespace povmkit
