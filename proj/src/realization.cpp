#include "motkit/realization.hpp"

#include <set>

namespace motkit {

GradedRealization::GradedRealization(std::vector<Slot> slots, std::map<Symbol, Matrix> images)
    : slots_(std::move(slots)), images_(std::move(images)) {
  std::set<int> degrees;
  std::vector<std::size_t> block_of;
  for (std::size_t k = 0; k < slots_.size(); ++k) {
    if (slots_[k].degree < 0) throw InvalidStructure("slot with negative degree");
    if (!degrees.insert(slots_[k].degree).second) {
      throw InvalidStructure("repeated slot degree " + std::to_string(slots_[k].degree));
    }
    dimension_ += slots_[k].rank;
    block_of.insert(block_of.end(), slots_[k].rank, k);
  }
  for (const auto& [symbol, m] : images_) {
    if (m.rows() != dimension_ || m.cols() != dimension_) {
      throw InvalidStructure("image of " + symbol + " has shape " + std::to_string(m.rows()) +
                             "x" + std::to_string(m.cols()) + ", expected " +
                             std::to_string(dimension_) + "x" + std::to_string(dimension_));
    }
    for (std::size_t r = 0; r < dimension_; ++r) {
      for (std::size_t c = 0; c < dimension_; ++c) {
        if (block_of[r] != block_of[c] && m(r, c) != 0) {
          throw InvalidStructure("image of " + symbol + " is not block diagonal at (" +
                                 std::to_string(r) + "," + std::to_string(c) + ")");
        }
      }
    }
  }
}

const Matrix& GradedRealization::image(const Symbol& symbol) const {
  auto it = images_.find(symbol);
  if (it == images_.end()) throw UnsupportedSymbol("realization has no image for " + symbol);
  return it->second;
}

Matrix kunneth_target(std::span<const Slot> slots, int degree) {
  std::map<int, Rational> scalars{{degree, Rational(1)}};
  return scalar_blocks(slots, scalars);
}

Matrix scalar_blocks(std::span<const Slot> slots, const std::map<int, Rational>& scalars) {
  std::size_t n = 0;
  for (const auto& s : slots) n += s.rank;
  Matrix out(n, n);
  std::size_t offset = 0;
  for (const auto& s : slots) {
    auto it = scalars.find(s.degree);
    if (it != scalars.end()) {
      for (std::size_t k = 0; k < s.rank; ++k) out(offset + k, offset + k) = it->second;
    }
    offset += s.rank;
  }
  return out;
}

Matrix realize(const FreeElement& e, const GradedRealization& realization) {
  Matrix out(realization.dimension(), realization.dimension());
  for (const auto& [symbol, c] : e.terms()) out += c * realization.image(symbol);
  return out;
}

VerificationReport check_homomorphism(const GradedRealization& realization,
                                      const StructureAlgebra& algebra) {
  VerificationReport report("realization homomorphism on " + algebra.name());
  for (const auto& s : algebra.basis()) realization.image(s);

  const Matrix unit_image = realization.image(algebra.unit());
  const Matrix id = Matrix::identity(realization.dimension());
  report.add_equality("[" + algebra.unit() + "] = id", unit_image.to_string(), id.to_string(),
                      unit_image == id);

  for (const auto& a : algebra.basis()) {
    for (const auto& b : algebra.basis()) {
      const std::string name = "[" + compose_name(a, b) + "] = [" + a + "][" + b + "]";
      const FreeElement* ab = algebra.product(a, b);
      if (ab == nullptr) {
        report.add_unknown(name, {{a, b}});
        continue;
      }
      const Matrix lhs = realize(*ab, realization);
      const Matrix rhs = realization.image(a) * realization.image(b);
      report.add_equality(name, lhs.to_string(), rhs.to_string(), lhs == rhs);
    }
  }
  return report;
}

}  // namespace motkit
