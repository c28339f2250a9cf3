#pragma once

#include <map>
#include <memory>
#include <string>

#include "motkit/algebra.hpp"
#include "motkit/realization.hpp"

namespace motkit {

/// A graded family of elements of a structure algebra, intended to be a
/// complete system of orthogonal idempotents (checked by verify_system,
/// never assumed). Absent degrees stand for the zero projector.
class ProjectorSystem {
 public:
  ProjectorSystem(std::shared_ptr<const StructureAlgebra> algebra,
                  std::map<int, FreeElement> projectors, std::string label);

  const StructureAlgebra& algebra() const { return *algebra_; }
  const std::shared_ptr<const StructureAlgebra>& algebra_ptr() const { return algebra_; }
  const std::map<int, FreeElement>& projectors() const { return projectors_; }
  const std::string& label() const { return label_; }

  /// Zero element for degrees the system does not carry.
  FreeElement projector(int degree) const;
  int max_degree() const;

 private:
  std::shared_ptr<const StructureAlgebra> algebra_;
  std::map<int, FreeElement> projectors_;
  std::string label_;
};

/// Completeness, orthogonality and idempotency over the algebra's ring,
/// plus realize(ϖ^i) = kunneth_target(i) when a realization is given.
VerificationReport verify_system(const ProjectorSystem& system);
VerificationReport verify_system(const ProjectorSystem& system,
                                 const GradedRealization& realization);

/// degree i -> g∘ϖ^i. The components sum to g when the system is complete.
std::map<int, CompositionResult> decompose_by_system(const FreeElement& g,
                                                     const ProjectorSystem& system);

/// "a⊗b"; operands that are themselves tensors are parenthesized.
Symbol tensor_symbol(const Symbol& a, const Symbol& b);
FreeElement tensor_elements(const FreeElement& x, const FreeElement& y);

/// Basis a⊗b, product (a⊗b)∘(a'⊗b') = (a∘a')⊗(b∘b') whenever both
/// factors are defined. Throws RingMismatch for different rings.
StructureAlgebra tensor_algebras(const StructureAlgebra& a, const StructureAlgebra& b);

/// ϖ^i = Σ_{p+q=i} ϖ_A^p ⊗ ϖ_B^q. Throws PreconditionFailed when either
/// input has a FAIL verdict.
ProjectorSystem tensor_systems(const ProjectorSystem& a, const ProjectorSystem& b);

/// Slots of degree i collect the pairs (p, q) with p + q = i; images are
/// Kronecker products.
GradedRealization tensor_realizations(const GradedRealization& a, const GradedRealization& b);

/// The rank-one algebra of a projective line over its function field.
std::shared_ptr<const StructureAlgebra> trivial_algebra(const CoefficientRing& ring);
ProjectorSystem trivial_system(const CoefficientRing& ring);
GradedRealization trivial_realization();

/// Tensor with the trivial one-element system; degrees are unchanged.
ProjectorSystem stabilize_system(const ProjectorSystem& system);
GradedRealization stabilize_realization(const GradedRealization& realization);

/// A linear map given on basis symbols.
using LinearMap = std::map<Symbol, FreeElement>;

FreeElement apply_linear_map(const LinearMap& map, const FreeElement& x,
                             const StructureAlgebra& target);

/// T(a)∘T(b) = d·T(a∘b) over the defined basis pairs of the source.
VerificationReport scaled_transport_check(const LinearMap& map, const Integer& degree,
                                          const StructureAlgebra& source,
                                          const StructureAlgebra& target);

/// Maps every projector through T and divides exactly by scale. Requires
/// T(unit) = scale·unit; throws NotDivisible when a quotient leaves the ring.
ProjectorSystem pushforward_construct(const ProjectorSystem& system, const LinearMap& map,
                                      const Integer& scale,
                                      std::shared_ptr<const StructureAlgebra> target);

}  // namespace motkit
