#pragma once

#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "motkit/scalars.hpp"

namespace motkit {

/// Polynomial with rational coefficients in formal symbols such as
/// "deg(a)" or "c".
class Poly {
 public:
  using Monomial = std::vector<std::string>;  // sorted, with repetition

  Poly() = default;
  Poly(const Rational& c);  // NOLINT: constants convert implicitly
  Poly(int c) : Poly(Rational(c)) {}
  static Poly symbol(const std::string& name);

  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Throws PreconditionFailed unless constant.
  Rational constant() const;

  /// Replaces every occurrence of a symbol by a value.
  Poly substitute(const std::string& name, const Rational& value) const;
  /// q with q·name = *this, when every monomial contains the symbol.
  std::optional<Poly> divide_by_symbol(const std::string& name) const;

  Poly& operator+=(const Poly& other);
  Poly& operator*=(const Poly& other);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
  friend Poly operator-(const Poly& a) { return a * Poly(-1); }
  friend bool operator==(const Poly&, const Poly&) = default;

  std::string to_string() const;

 private:
  std::map<Monomial, Rational> terms_;
};

/// Cycles of dimension one on the cubic X, cycles of dimension two on the
/// variety of lines F, zero-cycles on F, and formal scalars.
enum class Sort { CurveOnX, SurfaceOnF, PointOnF, Scalar };

std::string to_string(Sort sort);

enum class Kind {
  Var,
  Origin,      // o, a zero-cycle on F
  Hyperplane,  // h^{d-1}, a curve on X
  Phi,         // curves on X -> surfaces on F
  Psi,         // points on F -> curves on X
  Istar,       // I_* = Φ∘Ψ
  Dot,         // intersection of two surfaces on F
  Add,
  Zero,
  Scale,       // scalar times cycle
  Const,       // polynomial scalar
  Deg,         // degree of a point on F or a curve on X
  ScalarAdd,
  ScalarMul,
};

struct Node;
using Expr = std::shared_ptr<const Node>;

struct Node {
  Kind kind;
  Sort sort;
  std::string name;               // Var
  std::optional<Rational> degree; // Var: declared degree, if any
  Poly value;                     // Const
  std::vector<Expr> args;
};

/// Sort-checked constructors; InvalidStructure for ill-sorted input.
namespace cyc {
Expr var(std::string name, Sort sort, std::optional<Rational> degree = std::nullopt);
Expr origin();
Expr hyperplane();
Expr phi(Expr x);
Expr psi(Expr x);
Expr istar(Expr x);
Expr dot(Expr x, Expr y);
Expr add(Expr x, Expr y);
Expr sum(std::vector<Expr> terms, Sort sort);
Expr zero(Sort sort);
Expr scale(Expr scalar, Expr x);
Expr scale(const Poly& scalar, Expr x);
Expr constant(Poly p);
Expr deg(Expr x);
Expr scalar_add(Expr x, Expr y);
Expr scalar_mul(Expr x, Expr y);
}  // namespace cyc

/// dim only changes how h^{d-1} is printed.
std::string to_string(const Expr& e, int dim = 3);

/// Canonical form of a cycle expression: atom key -> coefficient.
struct LinearForm {
  Sort sort = Sort::PointOnF;
  std::map<std::string, Poly> terms;

  LinearForm substitute(const std::string& name, const Rational& value) const;
  friend bool operator==(const LinearForm&, const LinearForm&) = default;
  std::string to_string() const;
};

struct RewriteOptions {
  int dim = 3;
  /// (I_*o)·(I_*o) = c·o; nullopt keeps c as the formal symbol "c".
  std::optional<Rational> origin_square = Rational(5);
  /// Rewrite h^{d-1} to 3Ψ(o).
  bool eliminate_hyperplane = true;
};

struct RewriteStep {
  std::string rule;
  std::string result;
};

struct Redex {
  std::vector<std::size_t> path;
  std::string rule;
  Expr replacement;
};

class RewriteSystem {
 public:
  explicit RewriteSystem(RewriteOptions options = {});

  const RewriteOptions& options() const { return options_; }

  /// Every applicable (position, rule) pair, in pre-order.
  std::vector<Redex> redexes(const Expr& e) const;

  /// Outermost-leftmost strategy.
  Expr normalize(const Expr& e, std::vector<RewriteStep>* trace = nullptr) const;
  /// A uniformly random redex at every step.
  Expr normalize_random(const Expr& e, std::mt19937_64& rng,
                        std::vector<RewriteStep>* trace = nullptr) const;

  /// Collects like terms of a normalized expression; intersection factors
  /// are sorted.
  LinearForm canonical(const Expr& e) const;

  std::string render(const Expr& e) const { return to_string(e, options_.dim); }

 private:
  template <class Pick>
  Expr run(Expr e, Pick pick, std::vector<RewriteStep>* trace) const;

  RewriteOptions options_;
};

}  // namespace motkit
