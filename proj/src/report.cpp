#include "motkit/report.hpp"

#include <algorithm>

namespace motkit {

std::string_view to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::Pass:
      return "PASS";
    case Verdict::Fail:
      return "FAIL";
    case Verdict::Unknown:
      return "UNKNOWN";
  }
  return "?";
}

void VerificationReport::add_equality(std::string name, std::string lhs, std::string rhs,
                                      bool equal, std::string detail) {
  IdentityCheck check;
  check.name = std::move(name);
  check.verdict = equal ? Verdict::Pass : Verdict::Fail;
  check.lhs = std::move(lhs);
  check.rhs = std::move(rhs);
  check.detail = std::move(detail);
  checks_.push_back(std::move(check));
}

void VerificationReport::add_unknown(std::string name, std::vector<SymbolPair> missing,
                                     std::string detail) {
  IdentityCheck check;
  check.name = std::move(name);
  check.verdict = Verdict::Unknown;
  check.missing = std::move(missing);
  check.detail = std::move(detail);
  checks_.push_back(std::move(check));
}

std::size_t VerificationReport::count(Verdict verdict) const {
  return static_cast<std::size_t>(std::count_if(
      checks_.begin(), checks_.end(),
      [verdict](const IdentityCheck& c) { return c.verdict == verdict; }));
}

Verdict VerificationReport::overall() const {
  if (count(Verdict::Fail) > 0) return Verdict::Fail;
  if (count(Verdict::Unknown) > 0) return Verdict::Unknown;
  return Verdict::Pass;
}

std::vector<IdentityCheck> VerificationReport::exceptions() const {
  std::vector<IdentityCheck> out;
  std::copy_if(checks_.begin(), checks_.end(), std::back_inserter(out),
               [](const IdentityCheck& c) { return c.verdict != Verdict::Pass; });
  return out;
}

std::string join_pairs(const std::vector<SymbolPair>& pairs) {
  std::string out;
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    if (k > 0) out += ", ";
    out += pairs[k].to_string();
  }
  return out;
}

}  // namespace motkit
