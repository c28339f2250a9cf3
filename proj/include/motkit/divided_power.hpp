#pragma once

#include <memory>
#include <string>
#include <vector>

#include "motkit/algebra.hpp"
#include "motkit/projector_system.hpp"
#include "motkit/realization.hpp"

namespace motkit {

/// Σ c_m x^m for m ≤ bound; anything pushed past the bound is dropped.
class TruncatedPolynomial {
 public:
  explicit TruncatedPolynomial(unsigned bound) : coefficients_(bound + 1) {}
  static TruncatedPolynomial monomial(unsigned degree, unsigned bound);

  unsigned bound() const { return static_cast<unsigned>(coefficients_.size() - 1); }
  const Integer& operator[](unsigned m) const { return coefficients_.at(m); }
  Integer& operator[](unsigned m) { return coefficients_.at(m); }
  bool is_zero() const;

  TruncatedPolynomial& operator+=(const TruncatedPolynomial& other);
  friend bool operator==(const TruncatedPolynomial&, const TruncatedPolynomial&) = default;

  std::string to_string() const;

 private:
  std::vector<Integer> coefficients_;
};

/// RAISE is multiplication by x, LOWER is d/dx.
enum class Letter { Raise, Lower };

/// Letters in written order; application runs right to left.
using OperatorWord = std::vector<Letter>;

/// RAISE^raises LOWER^lowers.
OperatorWord power_word(unsigned raises, unsigned lowers);
OperatorWord concat(const OperatorWord& a, const OperatorWord& b);
std::string to_string(const OperatorWord& word);

TruncatedPolynomial apply_word(const OperatorWord& word, const TruncatedPolynomial& p);

struct WordTerm {
  Integer coefficient;
  OperatorWord word;

  friend bool operator==(const WordTerm&, const WordTerm&) = default;
};
using WordSum = std::vector<WordTerm>;

std::string to_string(const WordSum& sum);
TruncatedPolynomial apply_sum(const WordSum& sum, const TruncatedPolynomial& p);

/// Normally ordered form of LOWER^l RAISE^m:
/// Σ_i C(l,i) m(m-1)...(m-i+1) RAISE^{m-i} LOWER^{l-i}, omitting zero terms.
WordSum normal_order(unsigned l, unsigned m);

/// Compares LOWER^l RAISE^m with normal_order(l, m) on x^j for all
/// l, m ≤ max_lm and j ≤ max_j, at the given truncation bound.
VerificationReport normal_order_check(unsigned max_lm, unsigned max_j, unsigned bound);

/// "delta" for r = 0, "g<r>" otherwise.
Symbol gamma_symbol(unsigned r);

/// Closed-form table γ_r∘γ_s = Σ_i (r+s-i)!/(i!(r-i)!(s-i)!) γ_{r+s-i}
/// with γ_l = 0 for l > n. Throws PreconditionFailed for n = 0.
StructureAlgebra divided_power_algebra(unsigned n);

/// The same table computed from operator words on x^0..x^n: compose
/// RAISE^r LOWER^r with RAISE^s LOWER^s, divide by r!s!, and solve the
/// triangular system of γ eigenvalue patterns.
StructureAlgebra structure_constants_oracle(unsigned n);

enum class Grading { Curve, K3 };

/// Degree of the slot for e_m: m for a curve, 2m for a K3 surface.
int grading_degree(unsigned m, Grading grading);

/// e_m = Σ_{r ≥ m} (-1)^{r-m} C(r,m) γ_r.
ProjectorSystem kunneth_idempotents(unsigned n, Grading grading = Grading::Curve);
ProjectorSystem kunneth_idempotents(std::shared_ptr<const StructureAlgebra> algebra, unsigned n,
                                    Grading grading = Grading::Curve);

/// [γ_r] = C(m,r) on the slot of e_m, one rank-one slot per m ≤ n.
GradedRealization divided_power_realization(unsigned n, Grading grading = Grading::Curve);

/// RAISE^r LOWER^r = r! · (diagonal operator with eigenvalue C(m,r) on x^m),
/// compared on every monomial up to the bound n.
IdentityCheck factorial_commutator_check(unsigned r, unsigned n);

}  // namespace motkit
