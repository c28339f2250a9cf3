#pragma once

#include <memory>
#include <string>
#include <vector>

#include "motkit/algebra.hpp"
#include "motkit/matrix.hpp"
#include "motkit/projector_system.hpp"

namespace motkit {

// Generators of the correspondence algebra of the Hilbert square F of a
// K3 surface:
//   G1 = I·p1^*S_o,  G2 = o_F × F,  G3 = S_o × S_o,  G4 = E_o × delta,
// and their transposes G1t, G2t, G4t. G3 is its own transpose.

struct TableEntry {
  SymbolPair pair;
  FreeElement value;
};

/// The sixteen products among G1..G4 as stated, in row order.
std::vector<TableEntry> s2_stated_table();

/// Stated table plus the entries t(b)∘t(a) = t(a∘b) they imply; every
/// other pair is absent. Ring Z.
std::shared_ptr<const StructureAlgebra> s2_algebra();
/// Only delta and G1..G4, without involution.
std::shared_ptr<const StructureAlgebra> s2_plain_algebra();

/// One of G1, G2, G4 composed with one of G1t, G2t, G4t, in either order.
bool is_transpose_mixed(const SymbolPair& pair);

/// The sixteen stated identities read back from s2_algebra().
VerificationReport s2_table_check();

/// π^0 = G2, π^2 = G1 - 2G2 - 2G3 - G4, π^8 = G2t, π^6 = t(π^2),
/// π^4 = delta minus the rest.
ProjectorSystem s2_projectors();

/// Recomputes the stated entries from the product rule for pure tensors,
/// (γ×ρ)∘(α×β) = deg(β·γ) α×ρ, and its variants with G1 on one side,
/// using a small declared table of intersections. Entries the declared
/// data cannot decide are UNKNOWN.
VerificationReport cross_check_pure_tensors();

struct LatticeGram {
  std::string name;
  Matrix gram;
  /// diag(gram, -1): the half diagonal pairs to -1 against itself.
  Matrix extended;

  std::size_t rank() const { return gram.rows(); }
};

/// "K3" (U^3 ⊕ E8(-1)^2), "U", "E8minus". Throws InvalidStructure otherwise.
LatticeGram k3_gram(const std::string& name);
/// Throws InvalidStructure unless square, symmetric and integral.
LatticeGram lattice_from_gram(const Matrix& gram, std::string name = "custom");

/// With B = A^{-1}, the class Σ b_ij â_i⊗â_j - δ⊗δ acts on H^2 through the
/// extended pairing; checks B·A = I, that this action is the identity on the
/// rank r+1 block, and that it is idempotent. Throws InvalidStructure for a
/// singular Gram matrix.
VerificationReport pi2_cohomology_check(const LatticeGram& lattice);

}  // namespace motkit
