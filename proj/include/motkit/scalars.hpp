#pragma once

#include <compare>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "motkit/errors.hpp"

namespace motkit {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using Symbol = std::string;

/// A coefficient ring of the form Z[S^-1] for a finite set of primes S,
/// or the full field Q.
class CoefficientRing {
 public:
  CoefficientRing() = default;

  static CoefficientRing integers() { return {}; }
  static CoefficientRing rationals();
  /// Throws InvalidStructure if some entry is not prime.
  static CoefficientRing inverting(std::vector<unsigned> primes);

  bool is_rational() const { return rational_; }
  const std::vector<unsigned>& inverted_primes() const { return primes_; }

  /// p/q in lowest terms lies in the ring iff every prime factor of q is
  /// inverted.
  bool contains(const Rational& value) const;

  /// "Z", "Q", "Z[1/2]", "Z[1/2,1/3]".
  std::string to_string() const;

  friend bool operator==(const CoefficientRing&, const CoefficientRing&) = default;

 private:
  std::vector<unsigned> primes_;
  bool rational_ = false;
};

/// Decimal "p" or "p/q" with q > 0 and gcd(p, q) = 1.
std::string format_scalar(const Rational& value);

/// Parses the serialized scalar form. Rejects zero or negative
/// denominators and fractions not in lowest terms.
Rational parse_scalar(std::string_view text);

Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);
/// m (m-1) ... (m-i+1); equals 1 for i = 0 and 0 for i > m.
Integer falling_factorial(unsigned m, unsigned i);

/// A finite formal linear combination of basis symbols with coefficients in
/// a fixed ring. Zero coefficients are never stored, so equality is
/// term-wise.
class FreeElement {
 public:
  using Terms = std::map<Symbol, Rational>;

  explicit FreeElement(CoefficientRing ring = CoefficientRing::integers());
  /// Validates every coefficient against the ring and drops zeros.
  FreeElement(Terms terms, CoefficientRing ring);

  static FreeElement basis(Symbol symbol, CoefficientRing ring);

  const Terms& terms() const { return terms_; }
  const CoefficientRing& ring() const { return ring_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coefficient(const Symbol& symbol) const;

  /// Same coefficients declared over another ring; throws RingViolation if
  /// a coefficient does not belong to it.
  FreeElement over(const CoefficientRing& ring) const;

  FreeElement& add_term(const Symbol& symbol, const Rational& coefficient);
  FreeElement& operator+=(const FreeElement& other);
  FreeElement& operator-=(const FreeElement& other);
  FreeElement& operator*=(const Rational& scalar);

  friend FreeElement operator+(FreeElement lhs, const FreeElement& rhs) { return lhs += rhs; }
  friend FreeElement operator-(FreeElement lhs, const FreeElement& rhs) { return lhs -= rhs; }
  friend FreeElement operator*(const Rational& scalar, FreeElement e) { return e *= scalar; }
  friend FreeElement operator-(FreeElement e) { return e *= Rational(-1); }

  friend bool operator==(const FreeElement&, const FreeElement&) = default;

  /// "0", "g1 + 2*g2", "5/2*w0 - 1/2*P".
  std::string to_string() const;

 private:
  void require_same_ring(const FreeElement& other) const;

  Terms terms_;
  CoefficientRing ring_;
};

/// sum_k coeffs[k] * elems[k]. All elements must share one ring and the
/// sequences must have equal length.
FreeElement linear_combine(std::span<const Rational> coeffs,
                           std::span<const FreeElement> elems);

/// The unique x with n * x = elem, provided every coefficient of x stays in
/// the ring. Throws NotDivisible naming the first offending symbol.
FreeElement exact_divide(const FreeElement& elem, const Integer& n);

}  // namespace motkit
