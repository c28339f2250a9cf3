#include "motkit/projector_system.hpp"

#include <set>

namespace motkit {
namespace {

std::string projector_name(int degree) { return "ϖ^" + std::to_string(degree); }

void add_composition_check(VerificationReport& report, const std::string& name,
                           const CompositionResult& lhs, const FreeElement& rhs) {
  if (!lhs.known()) {
    report.add_unknown(name, lhs.missing);
    return;
  }
  report.add_equality(name, lhs.value->to_string(), rhs.to_string(), *lhs.value == rhs);
}

void check_axioms(VerificationReport& report, const ProjectorSystem& system) {
  const StructureAlgebra& alg = system.algebra();
  FreeElement sum = alg.zero();
  for (const auto& [degree, p] : system.projectors()) sum += p;
  const FreeElement unit = alg.unit_element();
  report.add_equality("Σ ϖ^i = " + alg.unit(), sum.to_string(), unit.to_string(), sum == unit);

  for (const auto& [i, pi] : system.projectors()) {
    for (const auto& [j, pj] : system.projectors()) {
      const CompositionResult c = compose(pi, pj, alg);
      if (i == j) {
        add_composition_check(report, compose_name(projector_name(i), projector_name(i)) +
                                          " = " + projector_name(i),
                              c, pi);
      } else {
        add_composition_check(
            report, compose_name(projector_name(i), projector_name(j)) + " = 0", c, alg.zero());
      }
    }
  }
}

}  // namespace

ProjectorSystem::ProjectorSystem(std::shared_ptr<const StructureAlgebra> algebra,
                                 std::map<int, FreeElement> projectors, std::string label)
    : algebra_(std::move(algebra)), label_(std::move(label)) {
  if (!algebra_) throw PreconditionFailed("projector system without an algebra");
  for (auto& [degree, p] : projectors) {
    if (degree < 0) throw InvalidStructure("projector of negative degree " + std::to_string(degree));
    algebra_->require_member(p);
    if (!p.is_zero()) projectors_.emplace(degree, std::move(p));
  }
}

FreeElement ProjectorSystem::projector(int degree) const {
  auto it = projectors_.find(degree);
  return it == projectors_.end() ? algebra_->zero() : it->second;
}

int ProjectorSystem::max_degree() const {
  return projectors_.empty() ? 0 : projectors_.rbegin()->first;
}

VerificationReport verify_system(const ProjectorSystem& system) {
  VerificationReport report("projector system " + system.label());
  check_axioms(report, system);
  return report;
}

VerificationReport verify_system(const ProjectorSystem& system,
                                 const GradedRealization& realization) {
  VerificationReport report = verify_system(system);
  std::set<int> degrees;
  for (const auto& [d, p] : system.projectors()) degrees.insert(d);
  for (const auto& s : realization.slots()) degrees.insert(s.degree);
  for (int d : degrees) {
    const Matrix image = realize(system.projector(d), realization);
    const Matrix target = kunneth_target(realization.slots(), d);
    report.add_equality("[" + projector_name(d) + "] = target(" + std::to_string(d) + ")",
                        image.to_string(), target.to_string(), image == target);
  }
  return report;
}

std::map<int, CompositionResult> decompose_by_system(const FreeElement& g,
                                                     const ProjectorSystem& system) {
  std::map<int, CompositionResult> out;
  for (const auto& [degree, p] : system.projectors()) {
    out.emplace(degree, compose(g, p, system.algebra()));
  }
  return out;
}

Symbol tensor_symbol(const Symbol& a, const Symbol& b) {
  auto wrap = [](const Symbol& s) {
    return s.find("⊗") == Symbol::npos ? s : "(" + s + ")";
  };
  return wrap(a) + "⊗" + wrap(b);
}

FreeElement tensor_elements(const FreeElement& x, const FreeElement& y) {
  if (x.ring() != y.ring()) {
    throw RingMismatch("tensor of elements over " + x.ring().to_string() + " and " +
                       y.ring().to_string());
  }
  FreeElement out(x.ring());
  for (const auto& [s, cs] : x.terms()) {
    for (const auto& [t, ct] : y.terms()) out.add_term(tensor_symbol(s, t), cs * ct);
  }
  return out;
}

StructureAlgebra tensor_algebras(const StructureAlgebra& a, const StructureAlgebra& b) {
  if (a.ring() != b.ring()) {
    throw RingMismatch("cannot tensor " + a.name() + " over " + a.ring().to_string() + " with " +
                       b.name() + " over " + b.ring().to_string());
  }
  StructureAlgebra::Definition def;
  def.name = a.name() + "⊗" + b.name();
  def.ring = a.ring();
  def.unit = tensor_symbol(a.unit(), b.unit());
  for (const auto& s : a.basis()) {
    for (const auto& t : b.basis()) def.basis.push_back(tensor_symbol(s, t));
  }
  const std::size_t na = a.dimension();
  const std::size_t nb = b.dimension();
  for (std::size_t i = 0; i < na; ++i) {
    for (std::size_t j = 0; j < nb; ++j) {
      if (i == a.index_of(a.unit()) && j == b.index_of(b.unit())) continue;
      for (std::size_t k = 0; k < na; ++k) {
        const FreeElement* pa = a.product(i, k);
        if (pa == nullptr) continue;
        for (std::size_t l = 0; l < nb; ++l) {
          if (k == a.index_of(a.unit()) && l == b.index_of(b.unit())) continue;
          const FreeElement* pb = b.product(j, l);
          if (pb == nullptr) continue;
          def.products.emplace(std::pair{tensor_symbol(a.basis()[i], b.basis()[j]),
                                         tensor_symbol(a.basis()[k], b.basis()[l])},
                               tensor_elements(*pa, *pb));
        }
      }
    }
  }
  if (a.has_involution() && b.has_involution()) {
    Involution inv;
    for (const auto& s : a.basis()) {
      for (const auto& t : b.basis()) {
        inv.emplace(tensor_symbol(s, t),
                    tensor_symbol(a.involution()->at(s), b.involution()->at(t)));
      }
    }
    def.involution = std::move(inv);
  }
  return StructureAlgebra(std::move(def));
}

namespace {

ProjectorSystem tensor_systems_unchecked(const ProjectorSystem& a, const ProjectorSystem& b) {
  auto algebra = std::make_shared<const StructureAlgebra>(tensor_algebras(a.algebra(), b.algebra()));
  std::map<int, FreeElement> projectors;
  for (const auto& [p, x] : a.projectors()) {
    for (const auto& [q, y] : b.projectors()) {
      auto [it, inserted] = projectors.try_emplace(p + q, algebra->zero());
      it->second += tensor_elements(x, y);
    }
  }
  return ProjectorSystem(algebra, std::move(projectors), a.label() + "⊗" + b.label());
}

}  // namespace

ProjectorSystem tensor_systems(const ProjectorSystem& a, const ProjectorSystem& b) {
  for (const ProjectorSystem* s : {&a, &b}) {
    if (verify_system(*s).overall() == Verdict::Fail) {
      throw PreconditionFailed("projector system " + s->label() + " fails verification");
    }
  }
  return tensor_systems_unchecked(a, b);
}

GradedRealization tensor_realizations(const GradedRealization& a, const GradedRealization& b) {
  struct Range {
    std::size_t offset;
    std::size_t rank;
  };
  auto ranges = [](const GradedRealization& r) {
    std::vector<Range> out;
    std::size_t offset = 0;
    for (const auto& s : r.slots()) {
      out.push_back({offset, s.rank});
      offset += s.rank;
    }
    return out;
  };
  const auto ra = ranges(a);
  const auto rb = ranges(b);

  // New basis vectors as (row in a, row in b), grouped by total degree.
  std::map<int, std::vector<std::pair<std::size_t, std::size_t>>> by_degree;
  for (std::size_t p = 0; p < a.slots().size(); ++p) {
    for (std::size_t q = 0; q < b.slots().size(); ++q) {
      auto& bucket = by_degree[a.slots()[p].degree + b.slots()[q].degree];
      for (std::size_t x = 0; x < ra[p].rank; ++x) {
        for (std::size_t y = 0; y < rb[q].rank; ++y) {
          bucket.emplace_back(ra[p].offset + x, rb[q].offset + y);
        }
      }
    }
  }
  std::vector<Slot> slots;
  std::vector<std::pair<std::size_t, std::size_t>> order;
  for (const auto& [degree, vectors] : by_degree) {
    slots.push_back({degree, vectors.size()});
    order.insert(order.end(), vectors.begin(), vectors.end());
  }

  std::map<Symbol, Matrix> images;
  for (const auto& [s, ma] : a.images()) {
    for (const auto& [t, mb] : b.images()) {
      Matrix m(order.size(), order.size());
      for (std::size_t r = 0; r < order.size(); ++r) {
        for (std::size_t c = 0; c < order.size(); ++c) {
          const Rational& x = ma(order[r].first, order[c].first);
          if (x == 0) continue;
          m(r, c) = x * mb(order[r].second, order[c].second);
        }
      }
      images.emplace(tensor_symbol(s, t), std::move(m));
    }
  }
  return GradedRealization(std::move(slots), std::move(images));
}

std::shared_ptr<const StructureAlgebra> trivial_algebra(const CoefficientRing& ring) {
  StructureAlgebra::Definition def;
  def.name = "P1";
  def.ring = ring;
  def.basis = {"delta_P1"};
  def.unit = "delta_P1";
  def.involution = Involution{{"delta_P1", "delta_P1"}};
  return std::make_shared<const StructureAlgebra>(std::move(def));
}

ProjectorSystem trivial_system(const CoefficientRing& ring) {
  auto algebra = trivial_algebra(ring);
  std::map<int, FreeElement> projectors{{0, algebra->unit_element()}};
  return ProjectorSystem(algebra, std::move(projectors), "P1");
}

GradedRealization trivial_realization() {
  return GradedRealization({Slot{0, 1}}, {{"delta_P1", Matrix::identity(1)}});
}

ProjectorSystem stabilize_system(const ProjectorSystem& system) {
  return tensor_systems_unchecked(system, trivial_system(system.algebra().ring()));
}

GradedRealization stabilize_realization(const GradedRealization& realization) {
  return tensor_realizations(realization, trivial_realization());
}

FreeElement apply_linear_map(const LinearMap& map, const FreeElement& x,
                             const StructureAlgebra& target) {
  FreeElement out = target.zero();
  for (const auto& [s, c] : x.terms()) {
    auto it = map.find(s);
    if (it == map.end()) throw UnsupportedSymbol("linear map undefined on " + s);
    out += c * it->second;
  }
  return out;
}

VerificationReport scaled_transport_check(const LinearMap& map, const Integer& degree,
                                          const StructureAlgebra& source,
                                          const StructureAlgebra& target) {
  VerificationReport report("scaled transport " + source.name() + " -> " + target.name() +
                            " (degree " + degree.str() + ")");
  for (const auto& s : source.basis()) {
    auto it = map.find(s);
    if (it == map.end()) throw UnsupportedSymbol("linear map undefined on " + s);
    target.require_member(it->second);
  }
  const Rational d(degree);
  for (const auto& a : source.basis()) {
    for (const auto& b : source.basis()) {
      const std::string name =
          "T(" + a + ")∘T(" + b + ") = " + degree.str() + "·T(" + compose_name(a, b) + ")";
      const FreeElement* ab = source.product(a, b);
      if (ab == nullptr) {
        report.add_unknown(name, {{a, b}}, "product undefined in source");
        continue;
      }
      const CompositionResult lhs = compose(map.at(a), map.at(b), target);
      const FreeElement rhs = d * apply_linear_map(map, *ab, target);
      if (!lhs.known()) {
        report.add_unknown(name, lhs.missing, "product undefined in target");
        continue;
      }
      report.add_equality(name, lhs.value->to_string(), rhs.to_string(), *lhs.value == rhs);
    }
  }
  return report;
}

ProjectorSystem pushforward_construct(const ProjectorSystem& system, const LinearMap& map,
                                      const Integer& scale,
                                      std::shared_ptr<const StructureAlgebra> target) {
  if (scale <= 0) throw PreconditionFailed("pushforward scale must be positive");
  const FreeElement unit_image =
      apply_linear_map(map, system.algebra().unit_element(), *target);
  const FreeElement expected = Rational(scale) * target->unit_element();
  if (unit_image != expected) {
    throw PreconditionFailed("T(" + system.algebra().unit() + ") = " + unit_image.to_string() +
                             ", expected " + expected.to_string());
  }
  std::map<int, FreeElement> projectors;
  for (const auto& [degree, p] : system.projectors()) {
    projectors.emplace(degree, exact_divide(apply_linear_map(map, p, *target), scale));
  }
  return ProjectorSystem(target, std::move(projectors), system.label() + "->" + target->name());
}

}  // namespace motkit
