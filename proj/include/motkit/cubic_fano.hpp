#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "motkit/algebra.hpp"
#include "motkit/cycle_expr.hpp"
#include "motkit/projector_system.hpp"
#include "motkit/realization.hpp"

namespace motkit {

// Basis of the correspondence algebra of the variety of lines F on a cubic
// of dimension d: delta, w0 = o×F and P = p1^*(I_*o)·I.

CoefficientRing half_integers();

/// a∘b acting on a test point tau, rewritten to normal form and read back
/// in the basis {delta, w0, P}.
struct DerivedRelation {
  SymbolPair pair;
  Expr start;
  std::vector<RewriteStep> trace;
  LinearForm normal_form;
  std::map<Symbol, Poly> value;

  /// "P∘P = 35*w0 - 2*P"
  std::string to_string() const;
};

struct CubicDerivation {
  int dim = 3;
  RewriteOptions options;
  std::vector<DerivedRelation> relations;  // w0∘w0, w0∘P, P∘w0, P∘P
};

/// Actions on a point tau: w0(x) = deg(x)·o, P(x) = I_*o·I_*x; a∘b acts as
/// a(b(tau)). origin_square = nullopt keeps (I_*o)^2 = c·o symbolic.
CubicDerivation derive_cubic_relations(int dim,
                                       std::optional<Rational> origin_square = Rational(5));

/// The derived value as an element; throws PreconditionFailed when a
/// coefficient is still symbolic.
FreeElement relation_element(const DerivedRelation& relation, const CoefficientRing& ring);

/// Literal table: w0∘w0 = w0, w0∘P = P∘w0 = 5w0, P∘P = 35w0 - 2P.
std::shared_ptr<const StructureAlgebra> cubic_algebra(int dim,
                                                      const CoefficientRing& ring = half_integers());

/// Derived relations against the literal table.
VerificationReport derivation_check(const CubicDerivation& derivation);

/// ϖ^0 = w0, ϖ^{d-2} = (5w0 - P)/2, ϖ^{2d-4} = delta - ϖ^0 - ϖ^{d-2}.
/// Over Z the division throws NotDivisible.
ProjectorSystem cubic_projectors(int dim, const CoefficientRing& ring = half_integers());

/// Slots 0, d-2, 2d-4 with the given ranks (default 1). [w0] projects to
/// degree 0; [P] = 5 on degree 0, -2 on degree d-2, 0 on degree 2d-4.
GradedRealization cubic_realization(int dim, const std::map<int, std::size_t>& ranks = {});

}  // namespace motkit
