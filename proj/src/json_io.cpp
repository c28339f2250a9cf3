#include "motkit/json_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace motkit {
namespace {

std::string escape_pointer_token(const std::string& key) {
  std::string out;
  for (char c : key) {
    if (c == '~') {
      out += "~0";
    } else if (c == '/') {
      out += "~1";
    } else {
      out += c;
    }
  }
  return out;
}

// Position of a value inside an input document, for diagnostics.
class Where {
 public:
  Where(const std::string& source, std::string pointer = {})
      : source_(source), pointer_(std::move(pointer)) {}

  Where operator/(const std::string& key) const {
    return Where(source_, pointer_ + "/" + escape_pointer_token(key));
  }
  Where operator/(std::size_t index) const {
    return Where(source_, pointer_ + "/" + std::to_string(index));
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw InputError(source_ + ": at " + (pointer_.empty() ? "/" : pointer_) + ": " + message);
  }

  const std::string& source() const { return source_; }

 private:
  const std::string& source_;
  std::string pointer_;
};

const char* type_name(const Json& j) { return j.type_name(); }

void expect_object(const Json& j, const Where& w) {
  if (!j.is_object()) w.fail(std::string("expected an object, got ") + type_name(j));
}

void expect_array(const Json& j, const Where& w) {
  if (!j.is_array()) w.fail(std::string("expected an array, got ") + type_name(j));
}

std::string get_string(const Json& j, const Where& w) {
  if (!j.is_string()) w.fail(std::string("expected a string, got ") + type_name(j));
  return j.get<std::string>();
}

long long get_integer(const Json& j, const Where& w) {
  if (!j.is_number_integer()) w.fail(std::string("expected an integer, got ") + type_name(j));
  return j.get<long long>();
}

std::size_t get_count(const Json& j, const Where& w) {
  const long long v = get_integer(j, w);
  if (v < 0) w.fail("expected a non-negative integer");
  return static_cast<std::size_t>(v);
}

void allow_keys(const Json& j, const Where& w, std::initializer_list<const char*> keys) {
  expect_object(j, w);
  const std::set<std::string> allowed(keys.begin(), keys.end());
  for (const auto& [k, v] : j.items()) {
    if (!allowed.contains(k)) (w / k).fail("unexpected key \"" + k + "\"");
  }
}

const Json& require(const Json& j, const Where& w, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) w.fail(std::string("missing required key \"") + key + "\"");
  return *it;
}

Rational get_scalar(const Json& j, const Where& w) {
  const std::string text = get_string(j, w);
  try {
    return parse_scalar(text);
  } catch (const Error& e) {
    w.fail(e.what());
  }
}

FreeElement element_from_json(const Json& j, const Where& w, const CoefficientRing& ring) {
  expect_object(j, w);
  FreeElement::Terms terms;
  for (const auto& [s, c] : j.items()) terms.emplace(s, get_scalar(c, w / s));
  try {
    return FreeElement(std::move(terms), ring);
  } catch (const Error& e) {
    w.fail(e.what());
  }
}

OrderedJson element_to_json(const FreeElement& e) {
  OrderedJson out = OrderedJson::object();
  for (const auto& [s, c] : e.terms()) out[s] = format_scalar(c);
  return out;
}

Matrix matrix_from_json(const Json& j, const Where& w, bool allow_integers) {
  expect_array(j, w);
  const std::size_t rows = j.size();
  std::size_t cols = 0;
  std::vector<Rational> entries;
  for (std::size_t r = 0; r < rows; ++r) {
    const Where wr = w / r;
    expect_array(j[r], wr);
    if (r == 0) cols = j[r].size();
    if (j[r].size() != cols) wr.fail("rows of unequal length");
    for (std::size_t c = 0; c < cols; ++c) {
      const Json& x = j[r][c];
      if (allow_integers && x.is_number_integer()) {
        entries.emplace_back(x.get<long long>());
      } else {
        entries.push_back(get_scalar(x, wr / c));
      }
    }
  }
  return Matrix(rows, cols, std::move(entries));
}

OrderedJson matrix_to_json(const Matrix& m, std::size_t r0, std::size_t n) {
  OrderedJson out = OrderedJson::array();
  for (std::size_t r = r0; r < r0 + n; ++r) {
    OrderedJson row = OrderedJson::array();
    for (std::size_t c = r0; c < r0 + n; ++c) row.push_back(format_scalar(m(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

template <class F>
auto rethrow_as_input(const std::string& source, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const InputError&) {
    throw;
  } catch (const Error& e) {
    throw InputError(source + ": " + e.what());
  }
}

}  // namespace

Json parse_json(std::string_view text, const std::string& source) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    std::size_t line = 1;
    std::size_t col = 1;
    const std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t k = 0; k < end; ++k) {
      if (text[k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    // Drop the library's own "[json.exception...] parse error at ...:" prefix.
    std::string message = e.what();
    const auto column = message.find("column ");
    const auto colon = message.find(": ", column == std::string::npos ? 0 : column);
    if (colon != std::string::npos) message = message.substr(colon + 2);
    throw InputError(source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " +
                     message);
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path.string() + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Json load_json_file(const std::filesystem::path& path) {
  return parse_json(read_file(path), path.string());
}

CoefficientRing ring_from_json(const Json& j, const std::string& source) {
  const Where w = Where(source) / "ring";
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "Q") return CoefficientRing::rationals();
    if (s == "Z") return CoefficientRing::integers();
    w.fail("unknown ring \"" + s + "\" (expected \"Q\", \"Z\" or {\"invert\": [...]})");
  }
  allow_keys(j, w, {"invert"});
  auto it = j.find("invert");
  if (it == j.end()) return CoefficientRing::integers();
  expect_array(*it, w / "invert");
  std::vector<unsigned> primes;
  for (std::size_t k = 0; k < it->size(); ++k) {
    primes.push_back(static_cast<unsigned>(get_count((*it)[k], w / "invert" / k)));
  }
  try {
    return CoefficientRing::inverting(std::move(primes));
  } catch (const Error& e) {
    (w / "invert").fail(e.what());
  }
}

OrderedJson ring_to_json(const CoefficientRing& ring) {
  if (ring.is_rational()) return "Q";
  OrderedJson out = OrderedJson::object();
  if (!ring.inverted_primes().empty()) out["invert"] = ring.inverted_primes();
  return out;
}

StructureAlgebra algebra_from_json(const Json& j, const std::string& source) {
  const Where w(source);
  allow_keys(j, w, {"name", "ring", "basis", "unit", "products", "involution"});
  StructureAlgebra::Definition def;
  def.name = get_string(require(j, w, "name"), w / "name");
  if (auto it = j.find("ring"); it != j.end()) def.ring = ring_from_json(*it, source);

  const Json& basis = require(j, w, "basis");
  expect_array(basis, w / "basis");
  for (std::size_t k = 0; k < basis.size(); ++k) def.basis.push_back(get_string(basis[k], w / "basis" / k));
  def.unit = get_string(require(j, w, "unit"), w / "unit");

  if (auto it = j.find("products"); it != j.end()) {
    expect_object(*it, w / "products");
    for (const auto& [key, value] : it->items()) {
      const Where wk = w / "products" / key;
      const auto star = key.find('*');
      if (star == std::string::npos || key.find('*', star + 1) != std::string::npos || star == 0 ||
          star + 1 == key.size()) {
        wk.fail("product key must have the form \"a*b\"");
      }
      def.products.emplace(std::pair{key.substr(0, star), key.substr(star + 1)},
                           element_from_json(value, wk, def.ring));
    }
  }
  if (auto it = j.find("involution"); it != j.end()) {
    expect_object(*it, w / "involution");
    Involution inv;
    for (const auto& [s, t] : it->items()) inv.emplace(s, get_string(t, w / "involution" / s));
    def.involution = std::move(inv);
  }
  return rethrow_as_input(source, [&] { return StructureAlgebra(std::move(def)); });
}

OrderedJson algebra_to_json(const StructureAlgebra& algebra) {
  OrderedJson out;
  out["name"] = algebra.name();
  out["ring"] = ring_to_json(algebra.ring());
  out["basis"] = algebra.basis();
  out["unit"] = algebra.unit();
  OrderedJson products = OrderedJson::object();
  for (const auto& [key, value] : algebra.declared_products()) {
    products[key.first + "*" + key.second] = element_to_json(value);
  }
  out["products"] = std::move(products);
  if (algebra.has_involution()) {
    OrderedJson inv = OrderedJson::object();
    for (const auto& s : algebra.basis()) inv[s] = algebra.involution()->at(s);
    out["involution"] = std::move(inv);
  }
  return out;
}

ProjectorSystem system_from_json(const Json& j, const std::string& source,
                                 const std::filesystem::path& base_dir,
                                 std::shared_ptr<const StructureAlgebra> algebra) {
  const Where w(source);
  allow_keys(j, w, {"algebra", "projectors", "label"});
  if (!algebra) {
    const Json& a = require(j, w, "algebra");
    if (a.is_string()) {
      const std::filesystem::path p = base_dir / a.get<std::string>();
      algebra = std::make_shared<const StructureAlgebra>(algebra_from_json(load_json_file(p), p.string()));
    } else if (a.is_object()) {
      algebra = std::make_shared<const StructureAlgebra>(algebra_from_json(a, source + "#/algebra"));
    } else {
      (w / "algebra").fail("expected a file name or an inline algebra object");
    }
  }
  std::string label = std::filesystem::path(source).stem().string();
  if (auto it = j.find("label"); it != j.end()) label = get_string(*it, w / "label");

  const Json& projectors = require(j, w, "projectors");
  expect_object(projectors, w / "projectors");
  std::map<int, FreeElement> elems;
  for (const auto& [key, value] : projectors.items()) {
    const Where wk = w / "projectors" / key;
    if (key.empty() || key.size() > 6 || key.find_first_not_of("0123456789") != std::string::npos) {
      wk.fail("projector degree must be a non-negative integer");
    }
    elems.emplace(std::stoi(key), element_from_json(value, wk, algebra->ring()));
  }
  return rethrow_as_input(source, [&] {
    return ProjectorSystem(algebra, std::move(elems), label);
  });
}

OrderedJson system_to_json(const ProjectorSystem& system, const std::string& algebra_ref) {
  OrderedJson out;
  out["label"] = system.label();
  if (algebra_ref.empty()) {
    out["algebra"] = algebra_to_json(system.algebra());
  } else {
    out["algebra"] = algebra_ref;
  }
  OrderedJson projectors = OrderedJson::object();
  for (const auto& [d, p] : system.projectors()) projectors[std::to_string(d)] = element_to_json(p);
  out["projectors"] = std::move(projectors);
  return out;
}

GradedRealization realization_from_json(const Json& j, const std::string& source) {
  const Where w(source);
  allow_keys(j, w, {"slots", "images"});
  const Json& slots_j = require(j, w, "slots");
  expect_array(slots_j, w / "slots");
  std::vector<Slot> slots;
  for (std::size_t k = 0; k < slots_j.size(); ++k) {
    const Where ws = w / "slots" / k;
    allow_keys(slots_j[k], ws, {"degree", "rank"});
    Slot s;
    s.degree = static_cast<int>(get_count(require(slots_j[k], ws, "degree"), ws / "degree"));
    if (auto it = slots_j[k].find("rank"); it != slots_j[k].end()) s.rank = get_count(*it, ws / "rank");
    slots.push_back(s);
  }

  const Json& images_j = require(j, w, "images");
  expect_object(images_j, w / "images");
  std::map<Symbol, Matrix> images;
  for (const auto& [symbol, value] : images_j.items()) {
    const Where wi = w / "images" / symbol;
    if (value.is_object()) {
      allow_keys(value, wi, {"blocks"});
      const Json& blocks = require(value, wi, "blocks");
      expect_array(blocks, wi / "blocks");
      if (blocks.size() != slots.size()) wi.fail("expected one block per slot");
      std::vector<Matrix> ms;
      for (std::size_t k = 0; k < blocks.size(); ++k) {
        Matrix m = matrix_from_json(blocks[k], wi / "blocks" / k, false);
        if (blocks[k].empty()) m = Matrix(0, 0);
        if (m.rows() != slots[k].rank || (slots[k].rank > 0 && m.cols() != slots[k].rank)) {
          (wi / "blocks" / k).fail("block must be " + std::to_string(slots[k].rank) + "x" +
                                   std::to_string(slots[k].rank));
        }
        ms.push_back(std::move(m));
      }
      images.emplace(symbol, Matrix::block_diagonal(ms));
    } else {
      images.emplace(symbol, matrix_from_json(value, wi, false));
    }
  }
  return rethrow_as_input(source, [&] { return GradedRealization(std::move(slots), std::move(images)); });
}

OrderedJson realization_to_json(const GradedRealization& realization) {
  OrderedJson out;
  OrderedJson slots = OrderedJson::array();
  for (const auto& s : realization.slots()) {
    OrderedJson sj;
    sj["degree"] = s.degree;
    sj["rank"] = s.rank;
    slots.push_back(std::move(sj));
  }
  out["slots"] = std::move(slots);
  OrderedJson images = OrderedJson::object();
  for (const auto& [symbol, m] : realization.images()) {
    OrderedJson blocks = OrderedJson::array();
    std::size_t offset = 0;
    for (const auto& s : realization.slots()) {
      blocks.push_back(matrix_to_json(m, offset, s.rank));
      offset += s.rank;
    }
    images[symbol]["blocks"] = std::move(blocks);
  }
  out["images"] = std::move(images);
  return out;
}

LatticeGram gram_from_json(const Json& j, const std::string& source) {
  const Where w(source);
  allow_keys(j, w, {"gram", "name"});
  std::string name = "custom";
  if (auto it = j.find("name"); it != j.end()) name = get_string(*it, w / "name");
  const Matrix m = matrix_from_json(require(j, w, "gram"), w / "gram", true);
  return rethrow_as_input(source, [&] { return lattice_from_gram(m, name); });
}

OrderedJson gram_to_json(const LatticeGram& lattice) {
  OrderedJson out;
  out["name"] = lattice.name;
  OrderedJson rows = OrderedJson::array();
  for (std::size_t r = 0; r < lattice.gram.rows(); ++r) {
    OrderedJson row = OrderedJson::array();
    for (std::size_t c = 0; c < lattice.gram.cols(); ++c) {
      row.push_back(static_cast<long long>(numerator(lattice.gram(r, c))));
    }
    rows.push_back(std::move(row));
  }
  out["gram"] = std::move(rows);
  return out;
}

OrderedJson report_to_json(const VerificationReport& report) {
  OrderedJson out;
  out["title"] = report.title();
  out["verdict"] = std::string(to_string(report.overall()));
  OrderedJson counts;
  counts["pass"] = report.count(Verdict::Pass);
  counts["fail"] = report.count(Verdict::Fail);
  counts["unknown"] = report.count(Verdict::Unknown);
  out["counts"] = std::move(counts);
  OrderedJson checks = OrderedJson::array();
  for (const auto& c : report.checks()) {
    OrderedJson cj;
    cj["name"] = c.name;
    cj["verdict"] = std::string(to_string(c.verdict));
    if (c.verdict != Verdict::Unknown) {
      cj["lhs"] = c.lhs;
      cj["rhs"] = c.rhs;
    }
    if (!c.missing.empty()) {
      OrderedJson missing = OrderedJson::array();
      for (const auto& p : c.missing) missing.push_back(p.to_string());
      cj["missing"] = std::move(missing);
    }
    if (!c.detail.empty()) cj["detail"] = c.detail;
    checks.push_back(std::move(cj));
  }
  out["checks"] = std::move(checks);
  return out;
}

void write_json_file(const std::filesystem::path& path, const OrderedJson& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError(path.string() + ": cannot write file");
  out << j.dump(2) << "\n";
}

}  // namespace motkit
