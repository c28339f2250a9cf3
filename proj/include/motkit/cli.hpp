#pragma once

#include <ostream>
#include <span>
#include <string>
#include <string_view>

namespace motkit::cli {

inline constexpr const char* kToolName = "motkit";
inline constexpr const char* kVersion = "0.1.0";

// Exit codes.
inline constexpr int kAllPass = 0;
inline constexpr int kSomeFail = 1;
inline constexpr int kSomeUnknown = 2;
inline constexpr int kInputError = 3;

/// args excludes the program name. Reports go to out, diagnostics to err.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

/// Lower-case hex digest.
std::string sha256_hex(std::string_view bytes);

}  // namespace motkit::cli
