#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "povmkit/matrix.hpp"
#include "povmkit/povm.hpp"
#include "povmkit/states.hpp"

namespace povmkit {

/// Born probabilities p = Tr(E·rho), one entry per element in stored
/// order. Coalesced elements already carry their multiplicity in the
/// matrix, so raw and coalesced sets give consistent totals.
std::vector<std::pair<std::string, double>> born_probabilities(const DensityMatrix& rho,
                                                               const PovmSet& set);

/// Post-measurement state E·rho·E / Tr(E·rho·E). The element itself acts
/// as the update operator (not its square root). Throws when the outcome
/// has no support on rho.
DensityMatrix post_state(const DensityMatrix& rho, const PovmElement& e,
                         double eps = default_eps());

/// Normalized E·psi for a pure state; throws when ⟨psi|E|psi⟩ <= eps.
PureState post_state_pure(const PureState& psi, const PovmElement& e,
                          double eps = default_eps());

struct OutcomeSample {
  std::string label;
  double probability = 0.0;   // Born weight Tr(E·rho)
  double kraus_weight = 0.0;  // Tr(E·rho·E), the update-rule normalizer
  CMatrix post_state;
};

/// Draws one outcome from the Born distribution by inverse CDF over the
/// stored element order. The generator is std::mt19937_64 seeded with
/// `seed`; each draw consumes one 64-bit word mapped to [0,1) as
/// (x >> 11)·2^-53, so results are identical across platforms.
OutcomeSample sample_outcome(const DensityMatrix& rho, const PovmSet& set, std::uint64_t seed);

/// n consecutive draws from a single seeded generator (same stream
/// contract as sample_outcome); returns counts per label.
std::map<std::string, std::uint64_t> sample_counts(const DensityMatrix& rho, const PovmSet& set,
                                                   std::size_t n, std::uint64_t seed);

/// Real coefficients of M over the n-qubit Pauli strings, c_P =
/// Tr(P·M)/2^n; entries below 1e-13 are dropped. Qubit 1 is the leftmost
/// character and the most significant tensor factor.
struct PauliDecomposition {
  int n_qubits = 0;
  std::map<std::string, double> coeffs;
};

PauliDecomposition pauli_decompose(const CMatrix& m, int n_qubits);
CMatrix pauli_reconstruct(const PauliDecomposition& d);

/// Single-qubit Pauli matrix for 'I', 'X', 'Y' or 'Z'.
CMatrix pauli_matrix(char p);

struct PptResult {
  double min_eigenvalue = 0.0;
  bool entangled = false;
  // PPT is necessary and sufficient only for 2×2 and 2×3 splits; for
  // larger shapes a negative eigenvalue is still conclusive but a
  // positive spectrum is not.
  bool conclusive = false;
};

PptResult ppt_check(const DensityMatrix& rho, std::size_t dim_a, std::size_t dim_b,
                    double eps = default_eps());

}  // namespace povmkit
