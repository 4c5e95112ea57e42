#pragma once

#include <string>
#include <vector>

#include "povmkit/halfint.hpp"
#include "povmkit/matrix.hpp"

namespace povmkit {

/// An orthogonal family of N² basis matrices for the N×N matrix space,
/// with a common normalization Tr(M_a† M_b) = c·δ_ab.
struct BasisSet {
  std::size_t dim = 0;
  std::vector<CMatrix> mats;
};

/// One measurement operator. For coalesced sets, mat is the sum over the
/// merged degenerate elements (so it is multiplicity × the common matrix)
/// and multiplicity records how many raw elements it absorbed.
struct PovmElement {
  std::string label;
  CMatrix mat;
  int multiplicity = 1;
};

struct PovmSet {
  std::size_t dim = 0;
  std::vector<PovmElement> elements;
};

/// Elementary matrices E_ij (1 at position (i,j)), row-major order.
BasisSet elementary_basis(std::size_t n);

/// New orthonormal basis T_ij = unvec(U·vec(E_ij)) from an N²×N² unitary.
BasisSet basis_from_unitary(const CMatrix& u, double eps = default_eps());

/// The POVM {α·T T†} with α fixed by completeness, α = N / Σ Tr(T T†).
/// Requires the basis orthogonality invariant; throws on violation.
PovmSet povm_from_basis(const BasisSet& basis, double eps = default_eps());

/// Spherical-tensor POVM for spin j: elements tau^k_q tau^{k†}_q / (2j+1)²,
/// labeled "k=<k>,q=<signed q>", in canonical (k, q) order. All elements
/// are diagonal.
PovmSet spherical_povm(HalfInt j);

/// Merges elements whose matrices are equal within eps. Matrices and
/// multiplicities are summed, so probabilities are unchanged either way.
PovmSet coalesce_degenerate(const PovmSet& set, double eps = default_eps());

/// Frobenius norm of (Σ elements − identity).
double completeness_defect(const PovmSet& set);

/// Canonical element label, e.g. "k=1,q=+1" or "k=0,q=0".
std::string spherical_label(int k, int q);

}  // namespace povmkit
