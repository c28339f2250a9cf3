#include "motkit/cubic_fano.hpp"

namespace motkit {
namespace {

void check_dim(int dim) {
  if (dim != 3 && dim != 4) throw PreconditionFailed("cubic dimension must be 3 or 4");
}

const Symbol kTestPoint = "tau";

Expr act(const Symbol& generator, const Expr& x) {
  if (generator == "delta") return x;
  if (generator == "w0") return cyc::scale(cyc::deg(x), cyc::origin());
  if (generator == "P") return cyc::dot(cyc::istar(cyc::origin()), cyc::istar(x));
  throw UnsupportedSymbol("no action for " + generator);
}

}  // namespace

CoefficientRing half_integers() { return CoefficientRing::inverting({2}); }

std::string DerivedRelation::to_string() const {
  LinearForm f{Sort::PointOnF, {}};
  for (const auto& [s, c] : value) f.terms.emplace(s, c);
  return compose_name(pair.left, pair.right) + " = " + f.to_string();
}

CubicDerivation derive_cubic_relations(int dim, std::optional<Rational> origin_square) {
  check_dim(dim);
  CubicDerivation out;
  out.dim = dim;
  out.options.dim = dim;
  out.options.origin_square = origin_square;
  const RewriteSystem sys(out.options);

  const Expr tau = cyc::var(kTestPoint, Sort::PointOnF);
  const std::string deg_tau = "deg(" + kTestPoint + ")";
  const std::string key_origin = sys.canonical(cyc::origin()).terms.begin()->first;
  const std::string key_tau = sys.canonical(tau).terms.begin()->first;
  const std::string key_p = sys.canonical(sys.normalize(act("P", tau))).terms.begin()->first;

  const Symbol gens[] = {"w0", "P"};
  for (const auto& a : gens) {
    for (const auto& b : gens) {
      DerivedRelation rel;
      rel.pair = {a, b};
      rel.start = act(a, act(b, tau));
      const Expr nf = sys.normalize(rel.start, &rel.trace);
      rel.normal_form = sys.canonical(nf);
      for (const auto& [key, c] : rel.normal_form.terms) {
        if (key == key_origin) {
          auto q = c.divide_by_symbol(deg_tau);
          if (!q) {
            throw InvalidStructure("coefficient " + c.to_string() + " of o is not a multiple of " + deg_tau);
          }
          rel.value["w0"] += *q;
        } else if (key == key_p) {
          rel.value["P"] += c;
        } else if (key == key_tau) {
          rel.value["delta"] += c;
        } else {
          throw InvalidStructure("normal form term " + key + " lies outside span{delta, w0, P}");
        }
      }
      for (auto it = rel.value.begin(); it != rel.value.end();) {
        it = it->second.is_zero() ? rel.value.erase(it) : std::next(it);
      }
      out.relations.push_back(std::move(rel));
    }
  }
  return out;
}

FreeElement relation_element(const DerivedRelation& relation, const CoefficientRing& ring) {
  FreeElement out(ring);
  for (const auto& [s, c] : relation.value) out.add_term(s, c.constant());
  return out;
}

std::shared_ptr<const StructureAlgebra> cubic_algebra(int dim, const CoefficientRing& ring) {
  check_dim(dim);
  StructureAlgebra::Definition def;
  def.name = "F(X_" + std::to_string(dim) + ")";
  def.ring = ring;
  def.basis = {"delta", "w0", "P"};
  def.unit = "delta";
  auto el = [&](std::initializer_list<std::pair<const Symbol, Rational>> t) {
    return FreeElement(FreeElement::Terms(t), ring);
  };
  def.products = {
      {{"w0", "w0"}, el({{"w0", 1}})},
      {{"w0", "P"}, el({{"w0", 5}})},
      {{"P", "w0"}, el({{"w0", 5}})},
      {{"P", "P"}, el({{"w0", 35}, {"P", -2}})},
  };
  def.involution = Involution{{"delta", "delta"}, {"w0", "w0"}, {"P", "P"}};
  return std::make_shared<const StructureAlgebra>(std::move(def));
}

VerificationReport derivation_check(const CubicDerivation& derivation) {
  const auto alg = cubic_algebra(derivation.dim);
  VerificationReport report("derived relations against the table of " + alg->name());
  for (const auto& rel : derivation.relations) {
    const FreeElement* expected = alg->product(rel.pair.left, rel.pair.right);
    const std::string name = "derived " + compose_name(rel.pair.left, rel.pair.right);
    bool symbolic = false;
    for (const auto& [s, c] : rel.value) symbolic = symbolic || !c.is_constant();
    if (symbolic) {
      report.add_equality(name, rel.to_string(), expected->to_string(), false,
                          "coefficients remain symbolic");
      continue;
    }
    const FreeElement got = relation_element(rel, alg->ring());
    report.add_equality(name, got.to_string(), expected->to_string(), got == *expected);
  }
  return report;
}

ProjectorSystem cubic_projectors(int dim, const CoefficientRing& ring) {
  auto alg = cubic_algebra(dim, ring);
  const FreeElement w0 = alg->element("w0");
  const FreeElement p = alg->element("P");
  const FreeElement pi0 = w0;
  const FreeElement mid = exact_divide(Rational(5) * w0 - p, 2);
  const FreeElement top = alg->unit_element() - pi0 - mid;
  return ProjectorSystem(alg, {{0, pi0}, {dim - 2, mid}, {2 * dim - 4, top}},
                         "F(X_" + std::to_string(dim) + ")");
}

GradedRealization cubic_realization(int dim, const std::map<int, std::size_t>& ranks) {
  check_dim(dim);
  const int degrees[] = {0, dim - 2, 2 * dim - 4};
  std::vector<Slot> slots;
  for (int d : degrees) {
    auto it = ranks.find(d);
    slots.push_back({d, it == ranks.end() ? std::size_t{1} : it->second});
  }
  for (const auto& [d, r] : ranks) {
    if (d != degrees[0] && d != degrees[1] && d != degrees[2]) {
      throw InvalidStructure("no slot of degree " + std::to_string(d) + " for a cubic of dimension " +
                             std::to_string(dim));
    }
  }
  std::map<Symbol, Matrix> images;
  images.emplace("delta", scalar_blocks(slots, {{degrees[0], 1}, {degrees[1], 1}, {degrees[2], 1}}));
  images.emplace("w0", scalar_blocks(slots, {{degrees[0], 1}}));
  images.emplace("P", scalar_blocks(slots, {{degrees[0], 5}, {degrees[1], -2}}));
  return GradedRealization(std::move(slots), std::move(images));
}

}  // namespace motkit
