#pragma once

#include "povmkit/matrix.hpp"
#include "povmkit/povm.hpp"
#include "povmkit/states.hpp"

namespace povmkit {

/// Isometry from the (N+1)-dimensional symmetric subspace into the full
/// 2^N-dimensional N-qubit space. Column c carries the Dicke state |j m⟩
/// with j = N/2 and m = j - c (so columns run m = +j ... -j): the equal
/// superposition of all computational basis states with j+m up spins.
/// Qubit 1 is the most significant bit; ↑ is bit value 0.
struct DickeIsometry {
  int n_qubits = 0;
  CMatrix v;  // 2^N × (N+1), dagger(v)·v = I
};

DickeIsometry dicke_isometry(int n_qubits);

/// The 4×4 basis-change matrix for two qubits whose rows are the coupled
/// states |11⟩, |10⟩, |1-1⟩, |00⟩ expressed in the computational basis
/// |↑↑⟩, |↑↓⟩, |↓↑⟩, |↓↓⟩. Real orthogonal.
struct CgUnitary {
  int n_qubits = 2;
  CMatrix u;
};

CgUnitary cg_unitary_two_qubits();

/// Embeds a symmetric-subspace element into the N-qubit space: V·E·V†.
PovmElement dilate_element(const PovmElement& e, const DickeIsometry& iso);

/// Elementwise dilation. The dilated elements sum to the symmetric
/// projector V·V†, not the 2^N identity.
PovmSet dilate_set(const PovmSet& set, const DickeIsometry& iso);

/// Projection V·V†·psi onto the symmetric subspace (unnormalized).
CMatrix symmetric_component(const PureState& psi, const DickeIsometry& iso);

}  // namespace povmkit
