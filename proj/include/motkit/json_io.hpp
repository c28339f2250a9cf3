#pragma once

#include <filesystem>
#include <memory>
#include <string>
#include <string_view>

#include <json.hpp>

#include "motkit/algebra.hpp"
#include "motkit/hilb_s2.hpp"
#include "motkit/projector_system.hpp"
#include "motkit/realization.hpp"

namespace motkit {

using Json = nlohmann::json;
// Output keeps insertion order so reports read top-down.
using OrderedJson = nlohmann::ordered_json;

/// Throws InputError "source:line:col: message" on a syntax error.
Json parse_json(std::string_view text, const std::string& source);
/// Reads and parses a file; InputError when unreadable.
Json load_json_file(const std::filesystem::path& path);
std::string read_file(const std::filesystem::path& path);

// Schema readers throw InputError naming the source and a JSON pointer
// to the offending value. Errors from the algebra layer (invalid tables,
// ring violations) propagate unchanged.

CoefficientRing ring_from_json(const Json& j, const std::string& source);
OrderedJson ring_to_json(const CoefficientRing& ring);

StructureAlgebra algebra_from_json(const Json& j, const std::string& source);
OrderedJson algebra_to_json(const StructureAlgebra& algebra);

/// "algebra" is a path relative to base_dir or an inline algebra object;
/// a non-null override replaces it.
ProjectorSystem system_from_json(const Json& j, const std::string& source,
                                 const std::filesystem::path& base_dir,
                                 std::shared_ptr<const StructureAlgebra> algebra_override = nullptr);
/// Inline algebra when algebra_ref is empty, otherwise the given path.
OrderedJson system_to_json(const ProjectorSystem& system, const std::string& algebra_ref = {});

GradedRealization realization_from_json(const Json& j, const std::string& source);
OrderedJson realization_to_json(const GradedRealization& realization);

LatticeGram gram_from_json(const Json& j, const std::string& source);
/// Integral entries are written as JSON integers.
OrderedJson gram_to_json(const LatticeGram& lattice);

OrderedJson report_to_json(const VerificationReport& report);

/// Writes dump(2) plus a trailing newline.
void write_json_file(const std::filesystem::path& path, const OrderedJson& j);

}  // namespace motkit
