#include "motkit/cycle_expr.hpp"

#include <algorithm>

namespace motkit {

Poly::Poly(const Rational& c) {
  if (c != 0) terms_.emplace(Monomial{}, c);
}

Poly Poly::symbol(const std::string& name) {
  Poly p;
  p.terms_.emplace(Monomial{name}, Rational(1));
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rational Poly::constant() const {
  if (!is_constant()) throw PreconditionFailed("scalar " + to_string() + " is not a constant");
  return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

Poly Poly::substitute(const std::string& name, const Rational& value) const {
  Poly out;
  for (const auto& [mono, c] : terms_) {
    Poly term(c);
    Monomial rest;
    for (const auto& s : mono) {
      if (s == name) {
        term *= Poly(value);
      } else {
        rest.push_back(s);
      }
    }
    Poly m;
    if (!term.is_zero()) m.terms_.emplace(rest, term.constant());
    out += m;
  }
  return out;
}

std::optional<Poly> Poly::divide_by_symbol(const std::string& name) const {
  Poly out;
  for (const auto& [m, c] : terms_) {
    Monomial mono = m;
    auto it = std::find(mono.begin(), mono.end(), name);
    if (it == mono.end()) return std::nullopt;
    mono.erase(it);
    out.terms_.emplace(std::move(mono), c);
  }
  return out;
}

Poly& Poly::operator+=(const Poly& other) {
  for (const auto& [mono, c] : other.terms_) {
    Rational& slot = terms_[mono];
    slot += c;
    if (slot == 0) terms_.erase(mono);
  }
  return *this;
}

Poly& Poly::operator*=(const Poly& other) {
  Poly out;
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : other.terms_) {
      Monomial m = ma;
      m.insert(m.end(), mb.begin(), mb.end());
      std::sort(m.begin(), m.end());
      Poly t;
      t.terms_.emplace(std::move(m), ca * cb);
      out += t;
    }
  }
  *this = std::move(out);
  return *this;
}

namespace {

std::string monomial_string(const Poly::Monomial& m) {
  std::string out;
  for (std::size_t k = 0; k < m.size();) {
    std::size_t run = 1;
    while (k + run < m.size() && m[k + run] == m[k]) ++run;
    if (!out.empty()) out += "*";
    out += m[k];
    if (run > 1) out += "^" + std::to_string(run);
    k += run;
  }
  return out;
}

// Sign-separated pieces so callers can join with " + " / " - ".
std::vector<std::pair<bool, std::string>> signed_pieces(const Poly& p) {
  std::vector<std::pair<bool, std::string>> out;
  for (const auto& [mono, c] : p.terms()) {
    const bool negative = c < 0;
    const Rational a = negative ? Rational(-c) : c;
    std::string s;
    if (mono.empty()) {
      s = format_scalar(a);
    } else if (a == 1) {
      s = monomial_string(mono);
    } else {
      s = format_scalar(a) + "*" + monomial_string(mono);
    }
    out.emplace_back(negative, std::move(s));
  }
  return out;
}

std::string join_signed(const std::vector<std::pair<bool, std::string>>& pieces) {
  if (pieces.empty()) return "0";
  std::string out;
  for (const auto& [negative, s] : pieces) {
    if (out.empty()) {
      out = (negative ? "-" : "") + s;
    } else {
      out += (negative ? " - " : " + ") + s;
    }
  }
  return out;
}

}  // namespace

std::string Poly::to_string() const { return join_signed(signed_pieces(*this)); }

std::string to_string(Sort sort) {
  switch (sort) {
    case Sort::CurveOnX:
      return "curve on X";
    case Sort::SurfaceOnF:
      return "surface on F";
    case Sort::PointOnF:
      return "point on F";
    case Sort::Scalar:
      return "scalar";
  }
  return "?";
}

namespace cyc {
namespace {

Expr make(Kind kind, Sort sort, std::vector<Expr> args) {
  Node n{kind, sort, {}, std::nullopt, {}, std::move(args)};
  return std::make_shared<const Node>(std::move(n));
}

void expect(const Expr& x, Sort sort, const char* op) {
  if (!x) throw InvalidStructure(std::string("null operand of ") + op);
  if (x->sort != sort) {
    throw InvalidStructure(std::string("ill-sorted: ") + op + " expects a " + to_string(sort) +
                           ", got a " + to_string(x->sort));
  }
}

}  // namespace

Expr var(std::string name, Sort sort, std::optional<Rational> degree) {
  if (sort == Sort::Scalar) throw InvalidStructure("cycle variables cannot be scalars");
  if (degree && sort == Sort::SurfaceOnF) {
    throw InvalidStructure("only points on F and curves on X carry a degree");
  }
  Node n{Kind::Var, sort, std::move(name), std::move(degree), {}, {}};
  return std::make_shared<const Node>(std::move(n));
}

Expr origin() { return make(Kind::Origin, Sort::PointOnF, {}); }
Expr hyperplane() { return make(Kind::Hyperplane, Sort::CurveOnX, {}); }

Expr phi(Expr x) {
  expect(x, Sort::CurveOnX, "Φ");
  return make(Kind::Phi, Sort::SurfaceOnF, {std::move(x)});
}

Expr psi(Expr x) {
  expect(x, Sort::PointOnF, "Ψ");
  return make(Kind::Psi, Sort::CurveOnX, {std::move(x)});
}

Expr istar(Expr x) {
  expect(x, Sort::PointOnF, "I_*");
  return make(Kind::Istar, Sort::SurfaceOnF, {std::move(x)});
}

Expr dot(Expr x, Expr y) {
  expect(x, Sort::SurfaceOnF, "·");
  expect(y, Sort::SurfaceOnF, "·");
  return make(Kind::Dot, Sort::PointOnF, {std::move(x), std::move(y)});
}

Expr add(Expr x, Expr y) {
  if (!x || !y) throw InvalidStructure("null operand of +");
  if (x->sort == Sort::Scalar) throw InvalidStructure("ill-sorted: + of scalars, use scalar_add");
  expect(y, x->sort, "+");
  const Sort s = x->sort;
  return make(Kind::Add, s, {std::move(x), std::move(y)});
}

Expr sum(std::vector<Expr> terms, Sort sort) {
  if (terms.empty()) return zero(sort);
  Expr out = terms.front();
  expect(out, sort, "+");
  for (std::size_t k = 1; k < terms.size(); ++k) out = add(out, terms[k]);
  return out;
}

Expr zero(Sort sort) {
  if (sort == Sort::Scalar) return constant(Poly());
  return make(Kind::Zero, sort, {});
}

Expr scale(Expr scalar, Expr x) {
  expect(scalar, Sort::Scalar, "scaling");
  if (!x || x->sort == Sort::Scalar) throw InvalidStructure("ill-sorted: scaling needs a cycle");
  const Sort s = x->sort;
  return make(Kind::Scale, s, {std::move(scalar), std::move(x)});
}

Expr scale(const Poly& scalar, Expr x) { return scale(constant(scalar), std::move(x)); }

Expr constant(Poly p) {
  Node n{Kind::Const, Sort::Scalar, {}, std::nullopt, std::move(p), {}};
  return std::make_shared<const Node>(std::move(n));
}

Expr deg(Expr x) {
  if (!x || (x->sort != Sort::PointOnF && x->sort != Sort::CurveOnX)) {
    throw InvalidStructure("ill-sorted: deg takes a point on F or a curve on X");
  }
  return make(Kind::Deg, Sort::Scalar, {std::move(x)});
}

Expr scalar_add(Expr x, Expr y) {
  expect(x, Sort::Scalar, "scalar +");
  expect(y, Sort::Scalar, "scalar +");
  return make(Kind::ScalarAdd, Sort::Scalar, {std::move(x), std::move(y)});
}

Expr scalar_mul(Expr x, Expr y) {
  expect(x, Sort::Scalar, "scalar *");
  expect(y, Sort::Scalar, "scalar *");
  return make(Kind::ScalarMul, Sort::Scalar, {std::move(x), std::move(y)});
}

}  // namespace cyc

namespace {

bool needs_parens(const Expr& e) {
  return e->kind == Kind::Add || e->kind == Kind::ScalarAdd ||
         (e->kind == Kind::Const && e->value.terms().size() > 1);
}

std::string wrapped(const Expr& e, int dim) {
  const std::string s = to_string(e, dim);
  return needs_parens(e) ? "(" + s + ")" : s;
}

}  // namespace

std::string to_string(const Expr& e, int dim) {
  switch (e->kind) {
    case Kind::Var:
      return e->name;
    case Kind::Origin:
      return "o";
    case Kind::Hyperplane:
      return "h^" + std::to_string(dim - 1);
    case Kind::Phi:
      return "Φ(" + to_string(e->args[0], dim) + ")";
    case Kind::Psi:
      return "Ψ(" + to_string(e->args[0], dim) + ")";
    case Kind::Istar:
      return "I_*(" + to_string(e->args[0], dim) + ")";
    case Kind::Dot:
      return wrapped(e->args[0], dim) + "·" + wrapped(e->args[1], dim);
    case Kind::Add:
    case Kind::ScalarAdd:
      return to_string(e->args[0], dim) + " + " + to_string(e->args[1], dim);
    case Kind::Zero:
      return "0";
    case Kind::Scale:
    case Kind::ScalarMul:
      return wrapped(e->args[0], dim) + "*" + wrapped(e->args[1], dim);
    case Kind::Const:
      return e->value.to_string();
    case Kind::Deg:
      return "deg(" + to_string(e->args[0], dim) + ")";
  }
  return "?";
}

LinearForm LinearForm::substitute(const std::string& name, const Rational& value) const {
  LinearForm out{sort, {}};
  for (const auto& [key, c] : terms) {
    Poly p = c.substitute(name, value);
    if (!p.is_zero()) out.terms.emplace(key, std::move(p));
  }
  return out;
}

std::string LinearForm::to_string() const {
  std::vector<std::pair<bool, std::string>> pieces;
  for (const auto& [key, c] : terms) {
    const auto coeff = signed_pieces(c);
    if (coeff.size() == 1) {
      const auto& [negative, s] = coeff.front();
      pieces.emplace_back(negative, s == "1" ? key : s + "*" + key);
    } else {
      pieces.emplace_back(false, "(" + c.to_string() + ")*" + key);
    }
  }
  return join_signed(pieces);
}

namespace {

using Rules = std::vector<std::pair<const char*, Expr>>;

constexpr const char* kR0 = "R0 I_*=ΦΨ";
constexpr const char* kR1 = "R1 incidence relation";
constexpr const char* kR2 = "R2 (I_*o)^2";
constexpr const char* kR3 = "R3 h=3Ψ(o)";
constexpr const char* kDeg = "deg";
constexpr const char* kLin = "R4 linearity";
constexpr const char* kScalar = "scalar arithmetic";

bool is_const(const Expr& e, int value) {
  return e->kind == Kind::Const && e->value == Poly(value);
}

bool is_phi_psi_origin(const Expr& e) {
  return e->kind == Kind::Phi && e->args[0]->kind == Kind::Psi &&
         e->args[0]->args[0]->kind == Kind::Origin;
}

Expr minus_two_deg(const Expr& x) { return cyc::scalar_mul(cyc::constant(-2), cyc::deg(x)); }

// Linearity of a unary operator with respect to its single argument.
void unary_linearity(const Expr& e, Expr (*op)(Expr), Rules& out) {
  const Expr& x = e->args[0];
  if (x->kind == Kind::Add) out.emplace_back(kLin, cyc::add(op(x->args[0]), op(x->args[1])));
  if (x->kind == Kind::Scale) out.emplace_back(kLin, cyc::scale(x->args[0], op(x->args[1])));
  if (x->kind == Kind::Zero) out.emplace_back(kLin, cyc::zero(e->sort));
}

Rules local_rules(const Expr& e, const RewriteOptions& opt) {
  Rules out;
  switch (e->kind) {
    case Kind::Istar:
      out.emplace_back(kR0, cyc::phi(cyc::psi(e->args[0])));
      break;
    case Kind::Hyperplane:
      if (opt.eliminate_hyperplane) out.emplace_back(kR3, cyc::scale(Poly(3), cyc::psi(cyc::origin())));
      break;
    case Kind::Phi:
      unary_linearity(e, cyc::phi, out);
      break;
    case Kind::Psi: {
      unary_linearity(e, cyc::psi, out);
      const Expr& x = e->args[0];
      if (x->kind == Kind::Dot && x->args[0]->kind == Kind::Phi && x->args[1]->kind == Kind::Phi) {
        const Expr& a = x->args[0]->args[0];
        const Expr& b = x->args[1]->args[0];
        const Expr h_coeff = cyc::scalar_mul(cyc::scalar_mul(cyc::constant(3), cyc::deg(a)), cyc::deg(b));
        out.emplace_back(kR1, cyc::add(cyc::add(cyc::scale(minus_two_deg(a), b),
                                                cyc::scale(minus_two_deg(b), a)),
                                       cyc::scale(h_coeff, cyc::hyperplane())));
      }
      break;
    }
    case Kind::Dot: {
      const Expr& x = e->args[0];
      const Expr& y = e->args[1];
      if (is_phi_psi_origin(x) && is_phi_psi_origin(y)) {
        const Poly c = opt.origin_square ? Poly(*opt.origin_square) : Poly::symbol("c");
        out.emplace_back(kR2, cyc::scale(c, cyc::origin()));
      }
      if (x->kind == Kind::Add) {
        out.emplace_back(kLin, cyc::add(cyc::dot(x->args[0], y), cyc::dot(x->args[1], y)));
      }
      if (y->kind == Kind::Add) {
        out.emplace_back(kLin, cyc::add(cyc::dot(x, y->args[0]), cyc::dot(x, y->args[1])));
      }
      if (x->kind == Kind::Scale) out.emplace_back(kLin, cyc::scale(x->args[0], cyc::dot(x->args[1], y)));
      if (y->kind == Kind::Scale) out.emplace_back(kLin, cyc::scale(y->args[0], cyc::dot(x, y->args[1])));
      if (x->kind == Kind::Zero || y->kind == Kind::Zero) out.emplace_back(kLin, cyc::zero(Sort::PointOnF));
      break;
    }
    case Kind::Add:
      if (e->args[0]->kind == Kind::Zero) out.emplace_back(kLin, e->args[1]);
      if (e->args[1]->kind == Kind::Zero) out.emplace_back(kLin, e->args[0]);
      break;
    case Kind::Scale: {
      const Expr& s = e->args[0];
      const Expr& x = e->args[1];
      if (is_const(s, 0)) out.emplace_back(kLin, cyc::zero(e->sort));
      if (is_const(s, 1)) out.emplace_back(kLin, x);
      if (x->kind == Kind::Scale) out.emplace_back(kLin, cyc::scale(cyc::scalar_mul(s, x->args[0]), x->args[1]));
      if (x->kind == Kind::Add) out.emplace_back(kLin, cyc::add(cyc::scale(s, x->args[0]), cyc::scale(s, x->args[1])));
      if (x->kind == Kind::Zero) out.emplace_back(kLin, x);
      break;
    }
    case Kind::Deg: {
      const Expr& x = e->args[0];
      switch (x->kind) {
        case Kind::Origin:
          out.emplace_back(kDeg, cyc::constant(1));
          break;
        case Kind::Hyperplane:
          out.emplace_back(kDeg, cyc::constant(3));
          break;
        case Kind::Var:
          out.emplace_back(kDeg, cyc::constant(x->degree ? Poly(*x->degree)
                                                         : Poly::symbol("deg(" + x->name + ")")));
          break;
        case Kind::Psi:
          if (x->args[0]->kind == Kind::Var || x->args[0]->kind == Kind::Origin) {
            out.emplace_back(kDeg, cyc::deg(x->args[0]));
          }
          break;
        case Kind::Dot:
          out.emplace_back(kDeg, cyc::deg(cyc::psi(x)));
          break;
        case Kind::Add:
          out.emplace_back(kDeg, cyc::scalar_add(cyc::deg(x->args[0]), cyc::deg(x->args[1])));
          break;
        case Kind::Scale:
          out.emplace_back(kDeg, cyc::scalar_mul(x->args[0], cyc::deg(x->args[1])));
          break;
        case Kind::Zero:
          out.emplace_back(kDeg, cyc::constant(0));
          break;
        default:
          break;
      }
      break;
    }
    case Kind::ScalarAdd:
      if (e->args[0]->kind == Kind::Const && e->args[1]->kind == Kind::Const) {
        out.emplace_back(kScalar, cyc::constant(e->args[0]->value + e->args[1]->value));
      }
      break;
    case Kind::ScalarMul:
      if (e->args[0]->kind == Kind::Const && e->args[1]->kind == Kind::Const) {
        out.emplace_back(kScalar, cyc::constant(e->args[0]->value * e->args[1]->value));
      }
      break;
    default:
      break;
  }
  return out;
}

void collect_redexes(const Expr& e, std::vector<std::size_t>& path, const RewriteOptions& opt,
                     std::vector<Redex>& out) {
  for (auto& [rule, replacement] : local_rules(e, opt)) out.push_back({path, rule, replacement});
  for (std::size_t k = 0; k < e->args.size(); ++k) {
    path.push_back(k);
    collect_redexes(e->args[k], path, opt, out);
    path.pop_back();
  }
}

Expr replace_at(const Expr& e, const std::vector<std::size_t>& path, std::size_t depth,
                const Expr& replacement) {
  if (depth == path.size()) return replacement;
  Node copy = *e;
  copy.args[path[depth]] = replace_at(e->args[path[depth]], path, depth + 1, replacement);
  return std::make_shared<const Node>(std::move(copy));
}

constexpr std::size_t kStepLimit = 100000;

}  // namespace

RewriteSystem::RewriteSystem(RewriteOptions options) : options_(std::move(options)) {
  if (options_.dim != 3 && options_.dim != 4) throw PreconditionFailed("cubic dimension must be 3 or 4");
}

std::vector<Redex> RewriteSystem::redexes(const Expr& e) const {
  std::vector<Redex> out;
  std::vector<std::size_t> path;
  collect_redexes(e, path, options_, out);
  return out;
}

template <class Pick>
Expr RewriteSystem::run(Expr e, Pick pick, std::vector<RewriteStep>* trace) const {
  for (std::size_t step = 0;; ++step) {
    if (step == kStepLimit) throw InvalidStructure("rewriting did not terminate");
    const std::vector<Redex> all = redexes(e);
    if (all.empty()) return e;
    const Redex& r = all[pick(all.size())];
    e = replace_at(e, r.path, 0, r.replacement);
    if (trace) trace->push_back({r.rule, render(e)});
  }
}

Expr RewriteSystem::normalize(const Expr& e, std::vector<RewriteStep>* trace) const {
  return run(e, [](std::size_t) { return std::size_t{0}; }, trace);
}

Expr RewriteSystem::normalize_random(const Expr& e, std::mt19937_64& rng,
                                     std::vector<RewriteStep>* trace) const {
  return run(e, [&rng](std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
  }, trace);
}

namespace {

void collect(const Expr& e, const Poly& coeff, const RewriteSystem& sys, LinearForm& out);

std::string atom_key(const Expr& e, const RewriteSystem& sys) {
  auto inner = [&](const Expr& x) {
    LinearForm f{x->sort, {}};
    collect(x, Poly(1), sys, f);
    return f.to_string();
  };
  switch (e->kind) {
    case Kind::Phi:
      return "Φ(" + inner(e->args[0]) + ")";
    case Kind::Psi:
      return "Ψ(" + inner(e->args[0]) + ")";
    case Kind::Istar:
      return "I_*(" + inner(e->args[0]) + ")";
    case Kind::Dot: {
      std::string a = inner(e->args[0]);
      std::string b = inner(e->args[1]);
      if (b < a) std::swap(a, b);
      return "(" + a + ")·(" + b + ")";
    }
    default:
      return sys.render(e);
  }
}

void collect(const Expr& e, const Poly& coeff, const RewriteSystem& sys, LinearForm& out) {
  switch (e->kind) {
    case Kind::Add:
      collect(e->args[0], coeff, sys, out);
      collect(e->args[1], coeff, sys, out);
      return;
    case Kind::Zero:
      return;
    case Kind::Scale: {
      const Expr& s = e->args[0];
      const Poly factor = s->kind == Kind::Const ? s->value : Poly::symbol("[" + sys.render(s) + "]");
      collect(e->args[1], coeff * factor, sys, out);
      return;
    }
    default: {
      const std::string key = atom_key(e, sys);
      Poly& slot = out.terms[key];
      slot += coeff;
      if (slot.is_zero()) out.terms.erase(key);
    }
  }
}

}  // namespace

LinearForm RewriteSystem::canonical(const Expr& e) const {
  if (e->sort == Sort::Scalar) throw PreconditionFailed("canonical form of a scalar");
  LinearForm out{e->sort, {}};
  collect(e, Poly(1), *this, out);
  return out;
}

}  // namespace motkit
