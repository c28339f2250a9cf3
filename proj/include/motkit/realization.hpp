#pragma once

#include <map>
#include <span>
#include <vector>

#include "motkit/algebra.hpp"
#include "motkit/matrix.hpp"

namespace motkit {

/// One graded piece H^{degree,0}, modeled as a free module of given rank.
struct Slot {
  int degree = 0;
  std::size_t rank = 1;

  friend bool operator==(const Slot&, const Slot&) = default;
};

/// Images of basis symbols in the block-diagonal algebra of endomorphisms
/// of the graded slots, one block per slot in slot order.
class GradedRealization {
 public:
  /// Throws InvalidStructure on repeated degrees, non-square or wrongly
  /// sized images, or entries outside the diagonal blocks.
  GradedRealization(std::vector<Slot> slots, std::map<Symbol, Matrix> images);

  const std::vector<Slot>& slots() const { return slots_; }
  const std::map<Symbol, Matrix>& images() const { return images_; }
  std::size_t dimension() const { return dimension_; }

  bool has_image(const Symbol& symbol) const { return images_.contains(symbol); }
  const Matrix& image(const Symbol& symbol) const;

 private:
  std::vector<Slot> slots_;
  std::map<Symbol, Matrix> images_;
  std::size_t dimension_ = 0;
};

/// Identity on the slot of the given degree, zero elsewhere; the zero
/// matrix when no slot carries that degree.
Matrix kunneth_target(std::span<const Slot> slots, int degree);

/// Block-diagonal matrix acting as scalars[degree] * id on each slot
/// (missing degrees act as zero).
Matrix scalar_blocks(std::span<const Slot> slots, const std::map<int, Rational>& scalars);

/// Linear extension of the symbol images.
Matrix realize(const FreeElement& e, const GradedRealization& realization);

/// image(a∘b) = image(a) image(b) for every defined table pair, and
/// image(unit) = id.
VerificationReport check_homomorphism(const GradedRealization& realization,
                                      const StructureAlgebra& algebra);

}  // namespace motkit
