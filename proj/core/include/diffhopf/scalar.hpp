#pragma once

// Exact arithmetic in the coefficient differential field K.
//
// K is either Q with the zero derivation or Q(t) with d/dt. Both are
// represented by the same Scalar type: a value that happens to lie in Q is
// always stored as a plain rational, so equal values have identical
// representations.

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

namespace diffhopf {

using Rational = mpq_class;

enum class FieldKind { Rationals, RationalFunctions };

std::string field_name(FieldKind kind);
FieldKind parse_field_name(const std::string& name);

/// Dense univariate polynomial over Q in the variable t. No trailing zeros.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(Rational c);
  static UPoly t();
  static UPoly from_coeffs(std::vector<Rational> coeffs);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const Rational& coeff(std::size_t i) const { return c_[i]; }
  const Rational& lead() const { return c_.back(); }
  const std::vector<Rational>& coeffs() const { return c_; }

  UPoly operator-() const;
  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  UPoly scaled(const Rational& c) const;
  UPoly derivative() const;
  UPoly monic() const;

  // Euclidean division, b != 0.
  static void divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r);
  // Monic gcd; gcd(0, 0) = 0.
  static UPoly gcd(UPoly a, UPoly b);

  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Reduced fraction p/q in Q(t) with q monic and gcd(p, q) = 1.
struct RatFunc {
  UPoly num;
  UPoly den;
};

class Scalar {
 public:
  Scalar() : v_(Rational(0)) {}
  Scalar(long n) : v_(Rational(n)) {}  // NOLINT(google-explicit-constructor)
  Scalar(const Rational& q) : v_(q) {}  // NOLINT(google-explicit-constructor)
  static Scalar t();
  static Scalar fraction(UPoly num, UPoly den);

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const { return std::holds_alternative<Rational>(v_); }
  const Rational& rational() const { return std::get<Rational>(v_); }
  // Numerator / denominator views; for rationals the numerator has degree <= 0.
  UPoly numerator() const;
  UPoly denominator() const;

  Scalar operator-() const;
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

  /// Derivation of K: zero on Q, d/dt on Q(t).
  Scalar derive() const;

  /// True if the value involves t.
  bool depends_on_t() const { return !is_rational(); }

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// Parser-compatible rendering, e.g. "5/6", "t^2 - 1", "(t + 1)/(t - 1)".
  std::string to_string() const;
  /// True when to_string() is a single signed rational or a bare polynomial
  /// term that needs no parentheses as a factor.
  bool needs_parens_as_factor() const;

 private:
  std::variant<Rational, RatFunc> v_;
};

std::string rational_to_string(const Rational& q);

}  // namespace diffhopf
