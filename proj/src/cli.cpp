#include "motkit/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <functional>
#include <optional>
#include <vector>

#include <CLI11.hpp>
#include <openssl/evp.h>

#include "motkit/cubic_fano.hpp"
#include "motkit/divided_power.hpp"
#include "motkit/hilb_s2.hpp"
#include "motkit/json_io.hpp"

namespace motkit::cli {
namespace fs = std::filesystem;

std::string sha256_hex(std::string_view bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw Error("sha256 failed");
  }
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned i = 0; i < len; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 15];
  }
  return out;
}

namespace {

struct Input {
  std::string path;
  std::string sha256;
};

struct RunReport {
  std::vector<std::string> arguments;
  std::vector<Input> inputs;
  std::vector<VerificationReport> sections;
  std::vector<std::string> notes;
  std::vector<std::string> trace;  // JSON lines
  std::optional<std::string> error;
  std::optional<int> forced_exit;

  std::size_t total(Verdict v) const {
    std::size_t n = 0;
    for (const auto& s : sections) n += s.count(v);
    return n;
  }

  int exit_code() const {
    if (forced_exit) return *forced_exit;
    if (error) return kInputError;
    if (total(Verdict::Fail) > 0) return kSomeFail;
    if (total(Verdict::Unknown) > 0) return kSomeUnknown;
    return kAllPass;
  }

  Verdict verdict() const {
    if (total(Verdict::Fail) > 0) return Verdict::Fail;
    if (total(Verdict::Unknown) > 0) return Verdict::Unknown;
    return Verdict::Pass;
  }
};

struct Flags {
  bool json = false;
  bool trace = false;
  std::string emit;
};

// Reads an input file once, recording its digest.
Json load_input(RunReport& run, const std::string& path) {
  const std::string bytes = read_file(path);
  run.inputs.push_back({path, sha256_hex(bytes)});
  return parse_json(bytes, path);
}

std::string base_dir(const std::string& path) {
  fs::path p = fs::path(path).parent_path();
  return p.empty() ? "." : p.string();
}

std::string join_lines(const std::vector<std::string>& items, const std::string& sep) {
  std::string out;
  for (std::size_t k = 0; k < items.size(); ++k) out += (k ? sep : "") + items[k];
  return out;
}

void print_text(const RunReport& run, std::ostream& out) {
  out << kToolName << " " << kVersion << "\n";
  out << "command: " << join_lines(run.arguments, " ") << "\n";
  for (const auto& in : run.inputs) out << "input: " << in.path << " sha256 " << in.sha256 << "\n";
  for (const auto& s : run.sections) {
    out << "\n== " << s.title() << " ==\n";
    out << "verdict " << to_string(s.overall()) << ": " << s.count(Verdict::Pass) << " pass, "
        << s.count(Verdict::Fail) << " fail, " << s.count(Verdict::Unknown) << " unknown\n";
    for (const auto& c : s.checks()) {
      if (c.verdict == Verdict::Pass) continue;
      out << "  " << to_string(c.verdict) << " " << c.name;
      if (c.verdict == Verdict::Fail) {
        out << "\n      lhs: " << c.lhs << "\n      rhs: " << c.rhs;
      }
      if (!c.missing.empty()) out << " (missing " << join_pairs(c.missing) << ")";
      if (!c.detail.empty()) out << " [" << c.detail << "]";
      out << "\n";
    }
  }
  if (!run.notes.empty()) out << "\n";
  for (const auto& n : run.notes) out << "note: " << n << "\n";
  if (!run.trace.empty()) {
    out << "\ntrace:\n";
    for (const auto& t : run.trace) out << t << "\n";
  }
  if (run.error) out << "\nerror: " << *run.error << "\n";
  out << "\nsummary: " << (run.error ? "ERROR" : std::string(to_string(run.verdict()))) << ", "
      << run.total(Verdict::Pass) << " pass, " << run.total(Verdict::Fail) << " fail, "
      << run.total(Verdict::Unknown) << " unknown, exit " << run.exit_code() << "\n";
}

void print_json(const RunReport& run, std::ostream& out) {
  OrderedJson j;
  j["tool"] = kToolName;
  j["version"] = kVersion;
  j["arguments"] = run.arguments;
  OrderedJson inputs = OrderedJson::array();
  for (const auto& in : run.inputs) {
    OrderedJson ij;
    ij["path"] = in.path;
    ij["sha256"] = in.sha256;
    inputs.push_back(std::move(ij));
  }
  j["inputs"] = std::move(inputs);
  OrderedJson sections = OrderedJson::array();
  for (const auto& s : run.sections) sections.push_back(report_to_json(s));
  j["sections"] = std::move(sections);
  j["notes"] = run.notes;
  if (!run.trace.empty()) {
    OrderedJson trace = OrderedJson::array();
    for (const auto& t : run.trace) trace.push_back(OrderedJson::parse(t));
    j["trace"] = std::move(trace);
  }
  if (run.error) j["error"] = *run.error;
  OrderedJson summary;
  summary["verdict"] = run.error ? "ERROR" : std::string(to_string(run.verdict()));
  summary["pass"] = run.total(Verdict::Pass);
  summary["fail"] = run.total(Verdict::Fail);
  summary["unknown"] = run.total(Verdict::Unknown);
  j["summary"] = std::move(summary);
  j["exit_code"] = run.exit_code();
  out << j.dump(2) << "\n";
}

std::string degree_list(const ProjectorSystem& sys) {
  std::vector<std::string> ds;
  for (const auto& [d, p] : sys.projectors()) ds.push_back(std::to_string(d));
  return join_lines(ds, ", ");
}

// Writes name into the emit directory, if one was requested.
void emit_file(const Flags& flags, RunReport& run, const std::string& name, const OrderedJson& j) {
  if (flags.emit.empty()) return;
  fs::create_directories(flags.emit);
  const fs::path p = fs::path(flags.emit) / name;
  write_json_file(p, j);
  run.notes.push_back("wrote " + p.generic_string());
}

void add_trace(RunReport& run, const CubicDerivation& derivation) {
  for (const auto& rel : derivation.relations) {
    const std::string relation = compose_name(rel.pair.left, rel.pair.right);
    std::size_t step = 0;
    for (const auto& s : rel.trace) {
      OrderedJson line;
      line["relation"] = relation;
      line["step"] = ++step;
      line["rule"] = s.rule;
      line["expr"] = s.result;
      run.trace.push_back(line.dump());
    }
    OrderedJson line;
    line["relation"] = relation;
    line["normal_form"] = rel.normal_form.to_string();
    line["result"] = rel.to_string();
    run.trace.push_back(line.dump());
  }
}

// ---- subcommand bodies ----

void cmd_verify(RunReport& run, const std::string& algebra_path, const std::string& system_path,
                const std::string& realization_path) {
  const Json aj = load_input(run, algebra_path);
  auto alg = std::make_shared<const StructureAlgebra>(algebra_from_json(aj, algebra_path));
  const Json sj = load_input(run, system_path);
  const ProjectorSystem sys = system_from_json(sj, system_path, base_dir(system_path), alg);
  std::optional<GradedRealization> real;
  if (!realization_path.empty()) {
    real = realization_from_json(load_input(run, realization_path), realization_path);
  }
  run.sections.push_back(check_associativity(*alg));
  if (real) {
    run.sections.push_back(verify_system(sys, *real));
    run.sections.push_back(check_homomorphism(*real, *alg));
  } else {
    run.sections.push_back(verify_system(sys));
  }
  run.notes.push_back("degrees: " + degree_list(sys));
}

void cmd_builtin_divided_power(RunReport& run, const Flags& flags, unsigned n, bool k3) {
  const Grading grading = k3 ? Grading::K3 : Grading::Curve;
  auto alg = std::make_shared<const StructureAlgebra>(divided_power_algebra(n));
  const StructureAlgebra oracle = structure_constants_oracle(n);
  VerificationReport cross = compare_tables(oracle, *alg);
  run.sections.push_back(VerificationReport("oracle table against closed form for " + alg->name()));
  for (const auto& c : cross.checks()) run.sections.back().add(c);
  run.sections.push_back(check_associativity(*alg));
  run.sections.push_back(check_commutativity(*alg));
  VerificationReport fact("factorial relation up to n = " + std::to_string(n));
  for (unsigned r = 0; r <= n; ++r) fact.add(factorial_commutator_check(r, n));
  run.sections.push_back(std::move(fact));
  const ProjectorSystem sys = kunneth_idempotents(alg, n, grading);
  const GradedRealization real = divided_power_realization(n, grading);
  run.sections.push_back(verify_system(sys, real));
  run.sections.push_back(check_homomorphism(real, *alg));
  run.notes.push_back("degrees: " + degree_list(sys));
  emit_file(flags, run, "algebra.json", algebra_to_json(*alg));
  emit_file(flags, run, "system.json", system_to_json(sys, "algebra.json"));
  emit_file(flags, run, "realization.json", realization_to_json(real));
}

void cmd_builtin_s2(RunReport& run, const Flags& flags) {
  const auto alg = s2_algebra();
  run.sections.push_back(s2_table_check());
  run.sections.push_back(cross_check_pure_tensors());
  run.sections.push_back(check_associativity(*s2_plain_algebra()));
  run.sections.push_back(check_associativity(*alg));
  run.sections.push_back(check_transpose_antiautomorphism(*alg));
  const ProjectorSystem sys = s2_projectors();
  run.sections.push_back(verify_system(sys));
  run.notes.push_back("degrees: " + degree_list(sys));
  run.notes.push_back("products mixing {G1, G2, G4} with {G1t, G2t, G4t} are not in the stated table");
  emit_file(flags, run, "algebra.json", algebra_to_json(*alg));
  emit_file(flags, run, "system.json", system_to_json(sys, "algebra.json"));
}

void cmd_builtin_cubic(RunReport& run, const Flags& flags, int dim) {
  const CubicDerivation derivation = derive_cubic_relations(dim);
  run.sections.push_back(derivation_check(derivation));
  if (flags.trace) add_trace(run, derivation);
  const auto alg = cubic_algebra(dim);
  run.sections.push_back(check_associativity(*alg));
  run.sections.push_back(check_commutativity(*alg));
  const ProjectorSystem sys = cubic_projectors(dim);
  const GradedRealization real = cubic_realization(dim);
  run.sections.push_back(verify_system(sys, real));
  run.sections.push_back(check_homomorphism(real, *alg));

  VerificationReport over_z("projectors of " + alg->name() + " over Z");
  try {
    cubic_projectors(dim, CoefficientRing::integers());
    over_z.add_equality("construction over Z raises NotDivisible", "constructed", "NotDivisible", false);
  } catch (const NotDivisible& e) {
    over_z.add_equality("construction over Z raises NotDivisible", "NotDivisible", "NotDivisible", true,
                        e.what());
  }
  run.sections.push_back(std::move(over_z));
  run.notes.push_back("degrees: " + degree_list(sys));
  emit_file(flags, run, "algebra.json", algebra_to_json(*alg));
  emit_file(flags, run, "system.json", system_to_json(sys, "algebra.json"));
  emit_file(flags, run, "realization.json", realization_to_json(real));
}

void cmd_builtin_k3(RunReport& run, const Flags& flags, const std::string& lattice,
                    const std::string& gram_path) {
  const LatticeGram g = gram_path.empty() ? k3_gram(lattice)
                                          : gram_from_json(load_input(run, gram_path), gram_path);
  run.sections.push_back(pi2_cohomology_check(g));
  run.notes.push_back("lattice " + g.name + " of rank " + std::to_string(g.rank()) +
                      ", determinant " + format_scalar(g.gram.determinant()));
  emit_file(flags, run, "gram.json", gram_to_json(g));
}

void cmd_tensor(RunReport& run, const std::string& a_path, const std::string& b_path,
                const std::string& out_path) {
  const ProjectorSystem a = system_from_json(load_input(run, a_path), a_path, base_dir(a_path));
  const ProjectorSystem b = system_from_json(load_input(run, b_path), b_path, base_dir(b_path));
  if (a.algebra().ring() != b.algebra().ring()) {
    throw InputError("ring mismatch: " + a_path + " is over " + a.algebra().ring().to_string() + ", " +
                     b_path + " is over " + b.algebra().ring().to_string());
  }
  run.sections.push_back(verify_system(a));
  run.sections.push_back(verify_system(b));
  for (int k = 0; k < 2; ++k) {
    if (run.sections[k].overall() == Verdict::Fail) {
      run.notes.push_back("precondition failed: " + std::string(k == 0 ? a_path : b_path) +
                          " does not verify; nothing written");
      run.forced_exit = kSomeFail;
      return;
    }
  }
  const ProjectorSystem t = tensor_systems(a, b);
  write_json_file(out_path, system_to_json(t));
  run.sections.push_back(check_associativity(t.algebra()));
  run.sections.push_back(verify_system(t));
  run.notes.push_back("degrees: " + degree_list(t));
  run.notes.push_back("wrote " + out_path);
}

void cmd_derive_cubic(RunReport& run, int dim, bool symbolic) {
  const CubicDerivation derivation =
      derive_cubic_relations(dim, symbolic ? std::nullopt : std::optional<Rational>(5));
  add_trace(run, derivation);
  if (symbolic) {
    for (const auto& rel : derivation.relations) run.notes.push_back(rel.to_string());
    run.notes.push_back("(I_*o)^2 = c*o kept symbolic; no comparison against the table");
    return;
  }
  run.sections.push_back(derivation_check(derivation));
  for (const auto& rel : derivation.relations) run.notes.push_back(rel.to_string());
}

void cmd_normal_order(RunReport& run, unsigned l, unsigned m, unsigned max_j, unsigned bound) {
  const OperatorWord lhs = concat(OperatorWord(l, Letter::Lower), OperatorWord(m, Letter::Raise));
  const WordSum rhs = normal_order(l, m);
  VerificationReport report(to_string(lhs) + " = " + to_string(rhs) + " (bound " +
                            std::to_string(bound) + ")");
  for (unsigned j = 0; j <= std::min(max_j, bound); ++j) {
    const TruncatedPolynomial x = TruncatedPolynomial::monomial(j, bound);
    const TruncatedPolynomial a = apply_word(lhs, x);
    const TruncatedPolynomial b = apply_sum(rhs, x);
    report.add_equality("on x^" + std::to_string(j), a.to_string(), b.to_string(), a == b);
  }
  run.sections.push_back(std::move(report));
  run.notes.push_back(to_string(lhs) + " = " + to_string(rhs));
}

void cmd_structure_constants(RunReport& run, const Flags& flags, unsigned n) {
  const StructureAlgebra oracle = structure_constants_oracle(n);
  const StructureAlgebra closed = divided_power_algebra(n);
  run.sections.push_back(compare_tables(oracle, closed));
  for (unsigned r = 1; r <= n; ++r) {
    for (unsigned s = r; s <= n; ++s) {
      run.notes.push_back(compose_name(gamma_symbol(r), gamma_symbol(s)) + " = " +
                          oracle.product(gamma_symbol(r), gamma_symbol(s))->to_string());
    }
  }
  emit_file(flags, run, "algebra.json", algebra_to_json(oracle));
}

// Runs body, translating library errors into the report.
void guarded(RunReport& run, std::ostream& err, const std::function<void()>& body,
             bool precondition_is_input_error) {
  try {
    body();
  } catch (const InputError& e) {
    run.error = e.what();
  } catch (const RingMismatch& e) {
    run.error = e.what();
  } catch (const PreconditionFailed& e) {
    if (precondition_is_input_error) {
      run.error = e.what();
    } else {
      run.notes.push_back(std::string("precondition failed: ") + e.what());
      run.forced_exit = kSomeFail;
    }
  } catch (const NotDivisible& e) {
    run.notes.push_back(std::string("construction failed: ") + e.what());
    run.forced_exit = kSomeFail;
  } catch (const Error& e) {
    run.error = e.what();
  } catch (const fs::filesystem_error& e) {
    run.error = e.what();
  }
  if (run.error) err << kToolName << ": " << *run.error << "\n";
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of correspondence algebras and projector systems", kToolName};
  app.fallthrough();
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolName) + " " + kVersion);

  Flags flags;
  app.add_flag("--json", flags.json, "Print the report as JSON");
  app.add_flag("--trace", flags.trace, "Include rewrite traces");
  app.add_option("--emit", flags.emit, "Write the constructed files into DIR");

  std::string algebra_path, system_path, realization_path;
  auto* verify = app.add_subcommand("verify", "Check an algebra file and a projector system");
  verify->add_option("algebra", algebra_path, "Algebra JSON")->required();
  verify->add_option("system", system_path, "System JSON")->required();
  verify->add_option("realization", realization_path, "Realization JSON");

  auto* builtin = app.add_subcommand("builtin", "Materialize and check a shipped construction");
  builtin->require_subcommand(1);
  unsigned dp_n = 0;
  bool k3_grading = false;
  auto* dp = builtin->add_subcommand("divided-power", "A'_n with its Kunneth idempotents");
  dp->add_option("n", dp_n)->required()->check(CLI::Range(1u, 16u));
  dp->add_flag("--k3-grading", k3_grading, "Degrees 2m instead of m");
  auto* s2 = builtin->add_subcommand("s2", "Hilbert square of a K3 surface");
  int cubic_dim = 3;
  auto* cubic = builtin->add_subcommand("cubic", "Variety of lines of a cubic");
  cubic->add_option("--dim", cubic_dim)->required()->check(CLI::IsMember({3, 4}));
  std::string lattice = "K3", gram_path;
  auto* k3 = builtin->add_subcommand("k3-cohomology", "Cohomological check of the projector on H^2");
  auto* lat_opt = k3->add_option("--lattice", lattice, "K3, U or E8minus")
                      ->check(CLI::IsMember({"K3", "U", "E8minus"}));
  k3->add_option("--gram", gram_path, "Gram matrix JSON")->excludes(lat_opt);

  std::string tensor_a, tensor_b, tensor_out;
  auto* tensor = app.add_subcommand("tensor", "Tensor product of two projector systems");
  tensor->add_option("a", tensor_a)->required();
  tensor->add_option("b", tensor_b)->required();
  tensor->add_option("out", tensor_out)->required();

  auto* derive = app.add_subcommand("derive", "Run a symbolic derivation");
  derive->require_subcommand(1);
  int derive_dim = 3;
  bool symbolic = false;
  auto* derive_cubic = derive->add_subcommand("cubic", "Relations among delta, w0 and P");
  derive_cubic->add_option("--dim", derive_dim)->required()->check(CLI::IsMember({3, 4}));
  derive_cubic->add_flag("--symbolic", symbolic, "Keep (I_*o)^2 = c*o symbolic");

  unsigned no_l = 0, no_m = 0, no_j = 14, no_bound = 20;
  auto* no = app.add_subcommand("normal-order", "Normal ordering of LOWER^l RAISE^m");
  no->add_option("l", no_l)->required()->check(CLI::Range(0u, 64u));
  no->add_option("m", no_m)->required()->check(CLI::Range(0u, 64u));
  no->add_option("--max-j", no_j, "Largest test monomial")->check(CLI::Range(0u, 256u));
  no->add_option("--bound", no_bound, "Truncation bound")->check(CLI::Range(0u, 256u));

  unsigned sc_n = 0;
  auto* sc = app.add_subcommand("structure-constants", "Operator-oracle table of A'_n");
  sc->add_option("n", sc_n)->required()->check(CLI::Range(1u, 16u));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kAllPass : kInputError;
  }

  RunReport run;
  run.arguments.assign(args.begin(), args.end());

  if (!flags.emit.empty() && !*builtin && !*sc) {
    err << kToolName << ": --emit applies to builtin and structure-constants only\n";
    return kInputError;
  }

  if (*verify) {
    guarded(run, err, [&] { cmd_verify(run, algebra_path, system_path, realization_path); }, true);
  } else if (*dp) {
    guarded(run, err, [&] { cmd_builtin_divided_power(run, flags, dp_n, k3_grading); }, true);
  } else if (*s2) {
    guarded(run, err, [&] { cmd_builtin_s2(run, flags); }, true);
  } else if (*cubic) {
    guarded(run, err, [&] { cmd_builtin_cubic(run, flags, cubic_dim); }, true);
  } else if (*k3) {
    guarded(run, err, [&] { cmd_builtin_k3(run, flags, lattice, gram_path); }, true);
  } else if (*tensor) {
    guarded(run, err, [&] { cmd_tensor(run, tensor_a, tensor_b, tensor_out); }, false);
  } else if (*derive_cubic) {
    guarded(run, err, [&] { cmd_derive_cubic(run, derive_dim, symbolic); }, true);
    if (flags.trace && !flags.json && !run.error) {
      for (const auto& t : run.trace) out << t << "\n";
      return run.exit_code();
    }
  } else if (*no) {
    guarded(run, err, [&] { cmd_normal_order(run, no_l, no_m, no_j, no_bound); }, true);
  } else if (*sc) {
    guarded(run, err, [&] { cmd_structure_constants(run, flags, sc_n); }, true);
  }

  if (flags.json) {
    print_json(run, out);
  } else {
    print_text(run, out);
  }
  return run.exit_code();
}

}  // namespace motkit::cli
