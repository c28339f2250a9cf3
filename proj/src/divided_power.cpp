#include "motkit/divided_power.hpp"

#include <algorithm>

namespace motkit {

TruncatedPolynomial TruncatedPolynomial::monomial(unsigned degree, unsigned bound) {
  TruncatedPolynomial p(bound);
  if (degree <= bound) p[degree] = 1;
  return p;
}

bool TruncatedPolynomial::is_zero() const {
  return std::all_of(coefficients_.begin(), coefficients_.end(),
                     [](const Integer& c) { return c == 0; });
}

TruncatedPolynomial& TruncatedPolynomial::operator+=(const TruncatedPolynomial& other) {
  if (other.bound() != bound()) throw PreconditionFailed("truncation bounds differ");
  for (std::size_t m = 0; m < coefficients_.size(); ++m) coefficients_[m] += other.coefficients_[m];
  return *this;
}

std::string TruncatedPolynomial::to_string() const {
  std::string out;
  for (std::size_t m = 0; m < coefficients_.size(); ++m) {
    const Integer& c = coefficients_[m];
    if (c == 0) continue;
    if (!out.empty()) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    const Integer a = abs(c);
    const bool show = a != 1 || m == 0;
    if (show) out += a.str();
    if (m > 0) {
      if (show) out += "*";
      out += m == 1 ? "x" : "x^" + std::to_string(m);
    }
  }
  return out.empty() ? "0" : out;
}

OperatorWord power_word(unsigned raises, unsigned lowers) {
  OperatorWord w(raises, Letter::Raise);
  w.insert(w.end(), lowers, Letter::Lower);
  return w;
}

OperatorWord concat(const OperatorWord& a, const OperatorWord& b) {
  OperatorWord w = a;
  w.insert(w.end(), b.begin(), b.end());
  return w;
}

std::string to_string(const OperatorWord& word) {
  if (word.empty()) return "1";
  std::string out;
  for (std::size_t k = 0; k < word.size();) {
    std::size_t run = 1;
    while (k + run < word.size() && word[k + run] == word[k]) ++run;
    if (!out.empty()) out += "·";
    out += word[k] == Letter::Raise ? "RAISE" : "LOWER";
    if (run > 1) out += "^" + std::to_string(run);
    k += run;
  }
  return out;
}

TruncatedPolynomial apply_word(const OperatorWord& word, const TruncatedPolynomial& p) {
  TruncatedPolynomial cur = p;
  const unsigned n = p.bound();
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    TruncatedPolynomial next(n);
    if (*it == Letter::Raise) {
      for (unsigned m = 0; m < n; ++m) next[m + 1] = cur[m];
    } else {
      for (unsigned m = 1; m <= n; ++m) next[m - 1] = cur[m] * m;
    }
    cur = std::move(next);
  }
  return cur;
}

std::string to_string(const WordSum& sum) {
  if (sum.empty()) return "0";
  std::string out;
  for (const auto& t : sum) {
    const Integer a = abs(t.coefficient);
    if (out.empty()) {
      if (t.coefficient < 0) out += "-";
    } else {
      out += t.coefficient < 0 ? " - " : " + ";
    }
    if (t.word.empty()) {
      out += a.str();
    } else {
      if (a != 1) out += a.str() + "·";
      out += to_string(t.word);
    }
  }
  return out;
}

TruncatedPolynomial apply_sum(const WordSum& sum, const TruncatedPolynomial& p) {
  TruncatedPolynomial out(p.bound());
  for (const auto& t : sum) {
    TruncatedPolynomial q = apply_word(t.word, p);
    for (unsigned m = 0; m <= q.bound(); ++m) q[m] *= t.coefficient;
    out += q;
  }
  return out;
}

WordSum normal_order(unsigned l, unsigned m) {
  WordSum out;
  for (unsigned i = 0; i <= l && i <= m; ++i) {
    Integer c = binomial(l, i) * falling_factorial(m, i);
    if (c == 0) continue;
    out.push_back({std::move(c), power_word(m - i, l - i)});
  }
  return out;
}

VerificationReport normal_order_check(unsigned max_lm, unsigned max_j, unsigned bound) {
  VerificationReport report("normal ordering of LOWER^l RAISE^m (bound " +
                            std::to_string(bound) + ")");
  for (unsigned l = 0; l <= max_lm; ++l) {
    for (unsigned m = 0; m <= max_lm; ++m) {
      const OperatorWord lhs_word = concat(OperatorWord(l, Letter::Lower),
                                           OperatorWord(m, Letter::Raise));
      const WordSum rhs = normal_order(l, m);
      for (unsigned j = 0; j <= max_j; ++j) {
        const TruncatedPolynomial x = TruncatedPolynomial::monomial(j, bound);
        const TruncatedPolynomial a = apply_word(lhs_word, x);
        const TruncatedPolynomial b = apply_sum(rhs, x);
        report.add_equality("LOWER^" + std::to_string(l) + " RAISE^" + std::to_string(m) +
                                " = " + to_string(rhs) + " on x^" + std::to_string(j),
                            a.to_string(), b.to_string(), a == b);
      }
    }
  }
  return report;
}

Symbol gamma_symbol(unsigned r) { return r == 0 ? "delta" : "g" + std::to_string(r); }

namespace {

StructureAlgebra::Definition gamma_definition(unsigned n, const std::string& name) {
  if (n == 0) throw PreconditionFailed("divided power algebra needs n >= 1");
  StructureAlgebra::Definition def;
  def.name = name;
  def.ring = CoefficientRing::integers();
  for (unsigned r = 0; r <= n; ++r) def.basis.push_back(gamma_symbol(r));
  def.unit = gamma_symbol(0);
  Involution inv;
  for (const auto& s : def.basis) inv.emplace(s, s);
  def.involution = std::move(inv);
  return def;
}

// Diagonal entries of an operator on x^0..x^n; it must be diagonal.
std::vector<Integer> eigenvalues(const OperatorWord& word, unsigned n) {
  std::vector<Integer> out;
  for (unsigned m = 0; m <= n; ++m) {
    TruncatedPolynomial image = apply_word(word, TruncatedPolynomial::monomial(m, n));
    out.push_back(image[m]);
    image[m] = 0;
    if (!image.is_zero()) {
      throw InvalidStructure("operator " + to_string(word) + " is not diagonal on x^" +
                             std::to_string(m));
    }
  }
  return out;
}

std::vector<Integer> divided_eigenvalues(const OperatorWord& word, unsigned n,
                                         const Integer& divisor) {
  const std::vector<Integer> raw = eigenvalues(word, n);
  FreeElement e(CoefficientRing::integers());
  for (unsigned m = 0; m <= n; ++m) e.add_term("x^" + std::to_string(m), Rational(raw[m]));
  const FreeElement q = exact_divide(e, divisor);
  std::vector<Integer> out;
  for (unsigned m = 0; m <= n; ++m) {
    out.push_back(numerator(q.coefficient("x^" + std::to_string(m))));
  }
  return out;
}

}  // namespace

StructureAlgebra divided_power_algebra(unsigned n) {
  StructureAlgebra::Definition def = gamma_definition(n, "A'_" + std::to_string(n));
  for (unsigned r = 1; r <= n; ++r) {
    for (unsigned s = 1; s <= n; ++s) {
      FreeElement v(def.ring);
      for (unsigned i = 0; i <= std::min(r, s); ++i) {
        const unsigned l = r + s - i;
        if (l > n) continue;
        const Integer c = factorial(l) / (factorial(i) * factorial(r - i) * factorial(s - i));
        v.add_term(gamma_symbol(l), Rational(c));
      }
      def.products.emplace(std::pair{gamma_symbol(r), gamma_symbol(s)}, std::move(v));
    }
  }
  return StructureAlgebra(std::move(def));
}

StructureAlgebra structure_constants_oracle(unsigned n) {
  StructureAlgebra::Definition def = gamma_definition(n, "A'_" + std::to_string(n));

  // Eigenvalue pattern of γ_t, read off the operator RAISE^t LOWER^t / t!.
  std::vector<std::vector<Integer>> pattern;
  for (unsigned t = 0; t <= n; ++t) {
    pattern.push_back(divided_eigenvalues(power_word(t, t), n, factorial(t)));
    for (unsigned m = 0; m < t; ++m) {
      if (pattern[t][m] != 0) throw InvalidStructure("γ eigenvalue pattern is not triangular");
    }
    if (pattern[t][t] != 1) throw InvalidStructure("γ eigenvalue pattern is not unitriangular");
  }

  for (unsigned r = 0; r <= n; ++r) {
    for (unsigned s = 0; s <= n; ++s) {
      const OperatorWord word = concat(power_word(r, r), power_word(s, s));
      const std::vector<Integer> mu =
          divided_eigenvalues(word, n, factorial(r) * factorial(s));
      // mu_m = Σ_t c_t pattern[t][m], solved for c by increasing m.
      std::vector<Integer> c(n + 1);
      for (unsigned m = 0; m <= n; ++m) {
        Integer acc = mu[m];
        for (unsigned t = 0; t < m; ++t) acc -= c[t] * pattern[t][m];
        c[m] = acc;
      }
      FreeElement v(def.ring);
      for (unsigned t = 0; t <= n; ++t) v.add_term(gamma_symbol(t), Rational(c[t]));
      def.products.emplace(std::pair{gamma_symbol(r), gamma_symbol(s)}, std::move(v));
    }
  }
  return StructureAlgebra(std::move(def));
}

int grading_degree(unsigned m, Grading grading) {
  return grading == Grading::Curve ? static_cast<int>(m) : 2 * static_cast<int>(m);
}

ProjectorSystem kunneth_idempotents(unsigned n, Grading grading) {
  return kunneth_idempotents(std::make_shared<const StructureAlgebra>(divided_power_algebra(n)),
                             n, grading);
}

ProjectorSystem kunneth_idempotents(std::shared_ptr<const StructureAlgebra> algebra, unsigned n,
                                    Grading grading) {
  std::map<int, FreeElement> projectors;
  for (unsigned m = 0; m <= n; ++m) {
    FreeElement e(algebra->ring());
    for (unsigned r = m; r <= n; ++r) {
      Rational c(binomial(r, m));
      if ((r - m) % 2 == 1) c = -c;
      e.add_term(gamma_symbol(r), c);
    }
    projectors.emplace(grading_degree(m, grading), std::move(e));
  }
  const std::string label = std::string(grading == Grading::Curve ? "C" : "S") + "^[" +
                            std::to_string(n) + "]";
  return ProjectorSystem(std::move(algebra), std::move(projectors), label);
}

GradedRealization divided_power_realization(unsigned n, Grading grading) {
  std::vector<Slot> slots;
  for (unsigned m = 0; m <= n; ++m) slots.push_back({grading_degree(m, grading), 1});
  std::map<Symbol, Matrix> images;
  for (unsigned r = 0; r <= n; ++r) {
    std::map<int, Rational> scalars;
    for (unsigned m = 0; m <= n; ++m) scalars.emplace(grading_degree(m, grading), binomial(m, r));
    images.emplace(gamma_symbol(r), scalar_blocks(slots, scalars));
  }
  return GradedRealization(std::move(slots), std::move(images));
}

IdentityCheck factorial_commutator_check(unsigned r, unsigned n) {
  if (r > n) throw PreconditionFailed("factorial check needs r <= n");
  IdentityCheck check;
  check.name = "RAISE^" + std::to_string(r) + " LOWER^" + std::to_string(r) + " = " +
               std::to_string(r) + "!·γ_" + std::to_string(r) + " (bound " + std::to_string(n) + ")";
  const std::vector<Integer> lhs = eigenvalues(power_word(r, r), n);
  std::vector<Integer> rhs;
  for (unsigned m = 0; m <= n; ++m) rhs.push_back(factorial(r) * binomial(m, r));
  auto render = [](const std::vector<Integer>& v) {
    std::string s = "diag(";
    for (std::size_t k = 0; k < v.size(); ++k) s += (k ? ", " : "") + v[k].str();
    return s + ")";
  };
  check.lhs = render(lhs);
  check.rhs = render(rhs);
  check.verdict = lhs == rhs ? Verdict::Pass : Verdict::Fail;
  return check;
}

}  // namespace motkit
