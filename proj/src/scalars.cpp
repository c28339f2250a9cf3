#include "motkit/scalars.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace motkit {
namespace {

bool is_prime(unsigned p) {
  if (p < 2) return false;
  for (unsigned d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

bool is_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isdigit(c) != 0;
  });
}

}  // namespace

CoefficientRing CoefficientRing::rationals() {
  CoefficientRing ring;
  ring.rational_ = true;
  return ring;
}

CoefficientRing CoefficientRing::inverting(std::vector<unsigned> primes) {
  for (unsigned p : primes) {
    if (!is_prime(p)) {
      throw InvalidStructure("cannot invert " + std::to_string(p) + ": not a prime");
    }
  }
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  CoefficientRing ring;
  ring.primes_ = std::move(primes);
  return ring;
}

bool CoefficientRing::contains(const Rational& value) const {
  if (rational_) return true;
  Integer q = boost::multiprecision::denominator(value);
  for (unsigned p : primes_) {
    while (q % p == 0) q /= p;
  }
  return q == 1;
}

std::string CoefficientRing::to_string() const {
  if (rational_) return "Q";
  if (primes_.empty()) return "Z";
  std::string out = "Z[";
  for (std::size_t i = 0; i < primes_.size(); ++i) {
    if (i > 0) out += ",";
    out += "1/" + std::to_string(primes_[i]);
  }
  return out + "]";
}

std::string format_scalar(const Rational& value) {
  const Integer num = boost::multiprecision::numerator(value);
  const Integer den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational parse_scalar(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num_text = body.substr(0, slash);
  if (!is_digits(num_text)) {
    throw InvalidStructure("malformed scalar \"" + std::string(text) + "\"");
  }
  Integer num{std::string(num_text)};
  Integer den = 1;
  if (slash != std::string_view::npos) {
    const std::string_view den_text = body.substr(slash + 1);
    if (!is_digits(den_text)) {
      throw InvalidStructure("malformed scalar \"" + std::string(text) + "\"");
    }
    den = Integer(std::string(den_text));
    if (den == 0) {
      throw InvalidStructure("zero denominator in scalar \"" + std::string(text) + "\"");
    }
    if (boost::multiprecision::gcd(num, den) != 1) {
      throw InvalidStructure("scalar \"" + std::string(text) + "\" is not in lowest terms");
    }
  }
  if (negative) num = -num;
  return Rational(num, den);
}

Integer factorial(unsigned n) {
  Integer out = 1;
  for (unsigned k = 2; k <= n; ++k) out *= k;
  return out;
}

Integer binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  Integer out = 1;
  for (unsigned i = 1; i <= k; ++i) {
    out = out * (n - k + i) / i;
  }
  return out;
}

Integer falling_factorial(unsigned m, unsigned i) {
  if (i > m) return 0;
  Integer out = 1;
  for (unsigned k = 0; k < i; ++k) out *= (m - k);
  return out;
}

FreeElement::FreeElement(CoefficientRing ring) : ring_(std::move(ring)) {}

FreeElement::FreeElement(Terms terms, CoefficientRing ring) : ring_(std::move(ring)) {
  for (auto& [symbol, coeff] : terms) add_term(symbol, coeff);
}

FreeElement FreeElement::basis(Symbol symbol, CoefficientRing ring) {
  FreeElement out(std::move(ring));
  out.terms_.emplace(std::move(symbol), Rational(1));
  return out;
}

Rational FreeElement::coefficient(const Symbol& symbol) const {
  auto it = terms_.find(symbol);
  return it == terms_.end() ? Rational(0) : it->second;
}

FreeElement FreeElement::over(const CoefficientRing& ring) const {
  return FreeElement(terms_, ring);
}

FreeElement& FreeElement::add_term(const Symbol& symbol, const Rational& coefficient) {
  if (coefficient == 0) return *this;
  if (!ring_.contains(coefficient)) {
    throw RingViolation("coefficient " + format_scalar(coefficient) + " of " + symbol +
                        " does not lie in " + ring_.to_string());
  }
  auto [it, inserted] = terms_.try_emplace(symbol, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
  return *this;
}

void FreeElement::require_same_ring(const FreeElement& other) const {
  if (ring_ != other.ring_) {
    throw RingMismatch("cannot combine elements over " + ring_.to_string() + " and " +
                       other.ring_.to_string());
  }
}

FreeElement& FreeElement::operator+=(const FreeElement& other) {
  require_same_ring(other);
  for (const auto& [symbol, coeff] : other.terms_) add_term(symbol, coeff);
  return *this;
}

FreeElement& FreeElement::operator-=(const FreeElement& other) {
  require_same_ring(other);
  for (const auto& [symbol, coeff] : other.terms_) add_term(symbol, -coeff);
  return *this;
}

FreeElement& FreeElement::operator*=(const Rational& scalar) {
  if (!ring_.contains(scalar)) {
    throw RingViolation("scalar " + format_scalar(scalar) + " does not lie in " +
                        ring_.to_string());
  }
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [symbol, coeff] : terms_) coeff *= scalar;
  return *this;
}

std::string FreeElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [symbol, coeff] : terms_) {
    const bool negative = coeff < 0;
    const Rational magnitude = negative ? Rational(-coeff) : coeff;
    if (first) {
      if (negative) out << "-";
    } else {
      out << (negative ? " - " : " + ");
    }
    if (magnitude != 1) out << format_scalar(magnitude) << "*";
    out << symbol;
    first = false;
  }
  return out.str();
}

FreeElement linear_combine(std::span<const Rational> coeffs,
                           std::span<const FreeElement> elems) {
  if (coeffs.size() != elems.size()) {
    throw PreconditionFailed("linear_combine: " + std::to_string(coeffs.size()) +
                             " coefficients for " + std::to_string(elems.size()) +
                             " elements");
  }
  if (elems.empty()) return FreeElement();
  FreeElement out(elems.front().ring());
  for (std::size_t k = 0; k < elems.size(); ++k) {
    if (elems[k].ring() != out.ring()) {
      throw RingMismatch("linear_combine: elements over " + out.ring().to_string() +
                         " and " + elems[k].ring().to_string());
    }
    if (coeffs[k] == 0) continue;
    for (const auto& [symbol, c] : elems[k].terms()) out.add_term(symbol, coeffs[k] * c);
  }
  return out;
}

FreeElement exact_divide(const FreeElement& elem, const Integer& n) {
  if (n == 0) throw PreconditionFailed("exact_divide: division by zero");
  FreeElement out(elem.ring());
  for (const auto& [symbol, coeff] : elem.terms()) {
    const Rational quotient = coeff / Rational(n);
    if (!elem.ring().contains(quotient)) {
      throw NotDivisible(symbol, format_scalar(coeff), n.str());
    }
    out.add_term(symbol, quotient);
  }
  return out;
}

}  // namespace motkit
