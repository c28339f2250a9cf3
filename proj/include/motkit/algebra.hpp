#pragma once

#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "motkit/report.hpp"
#include "motkit/scalars.hpp"

namespace motkit {

using ProductTable = std::map<std::pair<Symbol, Symbol>, FreeElement>;
using Involution = std::map<Symbol, Symbol>;

/// An algebra presented by a (possibly partial) table of structure
/// constants on a finite basis. Pairs absent from the table are UNKNOWN,
/// never zero. Products with the unit are always defined.
class StructureAlgebra {
 public:
  struct Definition {
    std::string name;
    CoefficientRing ring;
    std::vector<Symbol> basis;
    Symbol unit;
    ProductTable products;
    std::optional<Involution> involution;
  };

  /// Validates the definition; throws InvalidStructure on the first
  /// violated invariant.
  explicit StructureAlgebra(Definition definition);

  const std::string& name() const { return name_; }
  const CoefficientRing& ring() const { return ring_; }
  const std::vector<Symbol>& basis() const { return basis_; }
  const Symbol& unit() const { return unit_; }
  std::size_t dimension() const { return basis_.size(); }

  bool contains(const Symbol& symbol) const { return index_.contains(symbol); }
  std::size_t index_of(const Symbol& symbol) const;

  /// nullptr when the pair is not in the table.
  const FreeElement* product(const Symbol& a, const Symbol& b) const;
  const FreeElement* product(std::size_t i, std::size_t j) const;

  /// Table entries as supplied, excluding the implicit unit products.
  const ProductTable& declared_products() const { return declared_; }
  std::size_t defined_pair_count() const;

  bool has_involution() const { return involution_.has_value(); }
  const std::optional<Involution>& involution() const { return involution_; }

  FreeElement element(const Symbol& symbol) const;
  FreeElement unit_element() const { return element(unit_); }
  FreeElement zero() const { return FreeElement(ring_); }

  /// Throws UnsupportedSymbol or RingMismatch unless e lives in this algebra.
  void require_member(const FreeElement& e) const;

 private:
  std::string name_;
  CoefficientRing ring_;
  std::vector<Symbol> basis_;
  Symbol unit_;
  ProductTable declared_;
  std::optional<Involution> involution_;
  std::unordered_map<Symbol, std::size_t> index_;
  std::vector<std::optional<FreeElement>> table_;
};

/// Result of composing two elements: a value, or the complete list of
/// table entries that were needed but absent.
struct CompositionResult {
  std::optional<FreeElement> value;
  std::vector<SymbolPair> missing;

  bool known() const { return value.has_value(); }
};

/// Bilinear extension of the product table.
CompositionResult compose(const FreeElement& a, const FreeElement& b,
                          const StructureAlgebra& algebra);

/// Symbol-wise application of the involution. Throws PreconditionFailed
/// when the algebra carries none.
FreeElement transpose(const FreeElement& a, const StructureAlgebra& algebra);

/// (a*b)*c = a*(b*c) over every basis triple; triples that need an absent
/// product are UNKNOWN.
VerificationReport check_associativity(const StructureAlgebra& algebra);

/// a*b = b*a over every unordered pair of distinct basis symbols.
VerificationReport check_commutativity(const StructureAlgebra& algebra);

/// t(a*b) = t(b)*t(a) wherever both sides are defined.
VerificationReport check_transpose_antiautomorphism(const StructureAlgebra& algebra);

/// Entry-by-entry comparison of two tables on the same basis.
VerificationReport compare_tables(const StructureAlgebra& expected, const StructureAlgebra& actual);

/// Human-readable "a∘b".
std::string compose_name(const std::string& a, const std::string& b);

}  // namespace motkit
