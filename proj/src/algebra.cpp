#include "motkit/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace motkit {
namespace {

void validate_symbol(const Symbol& s) {
  if (s.empty()) throw InvalidStructure("empty basis symbol");
  for (unsigned char c : s) {
    if (c == '*' || std::isspace(c) != 0) {
      throw InvalidStructure("basis symbol \"" + s + "\" contains '*' or whitespace");
    }
  }
}

}  // namespace

std::string compose_name(const std::string& a, const std::string& b) {
  return a + "∘" + b;
}

StructureAlgebra::StructureAlgebra(Definition def)
    : name_(std::move(def.name)),
      ring_(std::move(def.ring)),
      basis_(std::move(def.basis)),
      unit_(std::move(def.unit)),
      involution_(std::move(def.involution)) {
  if (basis_.empty()) throw InvalidStructure("algebra " + name_ + ": empty basis");
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    validate_symbol(basis_[k]);
    if (!index_.emplace(basis_[k], k).second) {
      throw InvalidStructure("algebra " + name_ + ": duplicate basis symbol " + basis_[k]);
    }
  }
  if (!contains(unit_)) {
    throw InvalidStructure("algebra " + name_ + ": unit " + unit_ + " is not a basis symbol");
  }

  const std::size_t n = basis_.size();
  table_.assign(n * n, std::nullopt);
  const std::size_t u = index_of(unit_);
  for (std::size_t k = 0; k < n; ++k) {
    table_[u * n + k] = element(basis_[k]);
    table_[k * n + u] = element(basis_[k]);
  }

  for (auto& [key, value] : def.products) {
    const auto& [a, b] = key;
    if (!contains(a) || !contains(b)) {
      throw InvalidStructure("algebra " + name_ + ": product " + a + "*" + b +
                             " names a symbol outside the basis");
    }
    FreeElement v = value.over(ring_);
    for (const auto& [s, c] : v.terms()) {
      if (!contains(s)) {
        throw InvalidStructure("algebra " + name_ + ": product " + a + "*" + b +
                               " is supported on unknown symbol " + s);
      }
    }
    auto& slot = table_[index_of(a) * n + index_of(b)];
    if ((a == unit_ || b == unit_) && *slot != v) {
      throw InvalidStructure("algebra " + name_ + ": product " + a + "*" + b +
                             " contradicts the unit law");
    }
    slot = v;
    if (a != unit_ && b != unit_) declared_.emplace(key, std::move(v));
  }

  if (involution_) {
    const Involution& inv = *involution_;
    if (inv.size() != n) {
      throw InvalidStructure("algebra " + name_ + ": involution must be defined on every basis symbol");
    }
    std::set<Symbol> image;
    for (const auto& [s, t] : inv) {
      if (!contains(s) || !contains(t)) {
        throw InvalidStructure("algebra " + name_ + ": involution maps " + s + " to " + t +
                               " outside the basis");
      }
      image.insert(t);
      auto back = inv.find(t);
      if (back == inv.end() || back->second != s) {
        throw InvalidStructure("algebra " + name_ + ": involution is not involutive at " + s);
      }
    }
    if (image.size() != n) throw InvalidStructure("algebra " + name_ + ": involution is not a bijection");
    if (inv.at(unit_) != unit_) {
      throw InvalidStructure("algebra " + name_ + ": involution does not fix the unit");
    }
  }
}

std::size_t StructureAlgebra::index_of(const Symbol& symbol) const {
  auto it = index_.find(symbol);
  if (it == index_.end()) {
    throw UnsupportedSymbol("symbol " + symbol + " is not in the basis of " + name_);
  }
  return it->second;
}

const FreeElement* StructureAlgebra::product(std::size_t i, std::size_t j) const {
  const auto& slot = table_[i * basis_.size() + j];
  return slot ? &*slot : nullptr;
}

const FreeElement* StructureAlgebra::product(const Symbol& a, const Symbol& b) const {
  return product(index_of(a), index_of(b));
}

std::size_t StructureAlgebra::defined_pair_count() const {
  return static_cast<std::size_t>(std::count_if(
      table_.begin(), table_.end(), [](const auto& slot) { return slot.has_value(); }));
}

FreeElement StructureAlgebra::element(const Symbol& symbol) const {
  if (!contains(symbol)) {
    throw UnsupportedSymbol("symbol " + symbol + " is not in the basis of " + name_);
  }
  return FreeElement::basis(symbol, ring_);
}

void StructureAlgebra::require_member(const FreeElement& e) const {
  if (e.ring() != ring_) {
    throw RingMismatch("element over " + e.ring().to_string() + " used in algebra " + name_ +
                       " over " + ring_.to_string());
  }
  for (const auto& [s, c] : e.terms()) {
    if (!contains(s)) {
      throw UnsupportedSymbol("symbol " + s + " is not in the basis of " + name_);
    }
  }
}

CompositionResult compose(const FreeElement& a, const FreeElement& b,
                          const StructureAlgebra& algebra) {
  algebra.require_member(a);
  algebra.require_member(b);
  std::set<SymbolPair> missing;
  FreeElement value(algebra.ring());
  for (const auto& [s, cs] : a.terms()) {
    const std::size_t i = algebra.index_of(s);
    for (const auto& [t, ct] : b.terms()) {
      const FreeElement* p = algebra.product(i, algebra.index_of(t));
      if (p == nullptr) {
        missing.insert({s, t});
        continue;
      }
      if (!missing.empty()) continue;
      const Rational scale = cs * ct;
      for (const auto& [u, cu] : p->terms()) value.add_term(u, scale * cu);
    }
  }
  CompositionResult result;
  if (missing.empty()) {
    result.value = std::move(value);
  } else {
    result.missing.assign(missing.begin(), missing.end());
  }
  return result;
}

FreeElement transpose(const FreeElement& a, const StructureAlgebra& algebra) {
  if (!algebra.has_involution()) {
    throw PreconditionFailed("algebra " + algebra.name() + " has no transpose involution");
  }
  algebra.require_member(a);
  FreeElement out(algebra.ring());
  for (const auto& [s, c] : a.terms()) out.add_term(algebra.involution()->at(s), c);
  return out;
}

VerificationReport check_associativity(const StructureAlgebra& algebra) {
  VerificationReport report("associativity of " + algebra.name());
  const auto& basis = algebra.basis();
  for (const auto& a : basis) {
    for (const auto& b : basis) {
      for (const auto& c : basis) {
        const std::string name =
            "(" + compose_name(a, b) + ")∘" + c + " = " + a + "∘(" + compose_name(b, c) + ")";
        const FreeElement* ab = algebra.product(a, b);
        const FreeElement* bc = algebra.product(b, c);
        std::vector<SymbolPair> missing;
        if (ab == nullptr) missing.push_back({a, b});
        if (bc == nullptr) missing.push_back({b, c});
        if (!missing.empty()) {
          report.add_unknown(name, std::move(missing));
          continue;
        }
        const CompositionResult left = compose(*ab, algebra.element(c), algebra);
        const CompositionResult right = compose(algebra.element(a), *bc, algebra);
        if (!left.known() || !right.known()) {
          std::set<SymbolPair> all(left.missing.begin(), left.missing.end());
          all.insert(right.missing.begin(), right.missing.end());
          report.add_unknown(name, {all.begin(), all.end()});
          continue;
        }
        report.add_equality(name, left.value->to_string(), right.value->to_string(),
                            *left.value == *right.value);
      }
    }
  }
  return report;
}

VerificationReport check_commutativity(const StructureAlgebra& algebra) {
  VerificationReport report("commutativity of " + algebra.name());
  const auto& basis = algebra.basis();
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      const auto& a = basis[i];
      const auto& b = basis[j];
      const std::string name = compose_name(a, b) + " = " + compose_name(b, a);
      const FreeElement* ab = algebra.product(i, j);
      const FreeElement* ba = algebra.product(j, i);
      std::vector<SymbolPair> missing;
      if (ab == nullptr) missing.push_back({a, b});
      if (ba == nullptr) missing.push_back({b, a});
      if (!missing.empty()) {
        report.add_unknown(name, std::move(missing));
        continue;
      }
      report.add_equality(name, ab->to_string(), ba->to_string(), *ab == *ba);
    }
  }
  return report;
}

VerificationReport check_transpose_antiautomorphism(const StructureAlgebra& algebra) {
  if (!algebra.has_involution()) {
    throw PreconditionFailed("algebra " + algebra.name() + " has no transpose involution");
  }
  VerificationReport report("transpose anti-automorphism of " + algebra.name());
  const Involution& inv = *algebra.involution();
  for (const auto& a : algebra.basis()) {
    for (const auto& b : algebra.basis()) {
      const Symbol& ta = inv.at(a);
      const Symbol& tb = inv.at(b);
      const std::string name = "t(" + compose_name(a, b) + ") = " + compose_name(tb, ta);
      const FreeElement* ab = algebra.product(a, b);
      const FreeElement* ba_t = algebra.product(tb, ta);
      std::vector<SymbolPair> missing;
      if (ab == nullptr) missing.push_back({a, b});
      if (ba_t == nullptr) missing.push_back({tb, ta});
      if (!missing.empty()) {
        report.add_unknown(name, std::move(missing));
        continue;
      }
      const FreeElement lhs = transpose(*ab, algebra);
      report.add_equality(name, lhs.to_string(), ba_t->to_string(), lhs == *ba_t);
    }
  }
  return report;
}

VerificationReport compare_tables(const StructureAlgebra& expected, const StructureAlgebra& actual) {
  VerificationReport report("table of " + actual.name() + " against " + expected.name());
  if (expected.basis() != actual.basis()) {
    report.add_equality("basis", "", "", false, "bases differ");
    return report;
  }
  for (const auto& a : expected.basis()) {
    for (const auto& b : expected.basis()) {
      const FreeElement* x = expected.product(a, b);
      const FreeElement* y = actual.product(a, b);
      if (x == nullptr && y == nullptr) continue;
      const std::string name = compose_name(a, b);
      if (x == nullptr || y == nullptr) {
        report.add_equality(name, x ? x->to_string() : "undefined",
                            y ? y->to_string() : "undefined", false);
        continue;
      }
      report.add_equality(name, x->to_string(), y->to_string(), *x == *y);
    }
  }
  return report;
}

}  // namespace motkit
