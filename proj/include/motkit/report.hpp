#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "motkit/scalars.hpp"

namespace motkit {

enum class Verdict { Pass, Fail, Unknown };

std::string_view to_string(Verdict verdict);

/// An ordered pair of basis symbols; names a product-table entry.
struct SymbolPair {
  Symbol left;
  Symbol right;

  friend auto operator<=>(const SymbolPair&, const SymbolPair&) = default;
  std::string to_string() const { return left + "*" + right; }
};

/// One checked identity. lhs and rhs hold both computed sides so a FAIL is
/// self-describing; missing lists the absent products behind an UNKNOWN.
struct IdentityCheck {
  std::string name;
  Verdict verdict = Verdict::Pass;
  std::string lhs;
  std::string rhs;
  std::vector<SymbolPair> missing;
  std::string detail;
};

class VerificationReport {
 public:
  VerificationReport() = default;
  explicit VerificationReport(std::string title) : title_(std::move(title)) {}

  const std::string& title() const { return title_; }
  const std::vector<IdentityCheck>& checks() const { return checks_; }

  void add(IdentityCheck check) { checks_.push_back(std::move(check)); }
  /// Records either PASS or FAIL depending on lhs == rhs.
  void add_equality(std::string name, std::string lhs, std::string rhs, bool equal,
                    std::string detail = {});
  void add_unknown(std::string name, std::vector<SymbolPair> missing, std::string detail = {});

  std::size_t count(Verdict verdict) const;
  /// FAIL if any check failed, otherwise UNKNOWN if any was undecided.
  Verdict overall() const;
  bool empty() const { return checks_.empty(); }

  /// Checks whose verdict is not PASS.
  std::vector<IdentityCheck> exceptions() const;

 private:
  std::string title_;
  std::vector<IdentityCheck> checks_;
};

/// Missing-pair list rendered "a*b, c*d".
std::string join_pairs(const std::vector<SymbolPair>& pairs);

}  // namespace motkit
