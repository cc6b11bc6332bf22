#include "diffhopf/scalar.hpp"

#include <sstream>
#include <utility>

#include "diffhopf/error.hpp"

namespace diffhopf {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::PresentationMismatch: return "PresentationMismatch";
    case Errc::NonUnitDenominatorImage: return "NonUnitDenominatorImage";
    case Errc::AntipodeRequired: return "AntipodeRequired";
    case Errc::ZeroElement: return "ZeroElement";
    case Errc::BoundsExceeded: return "BoundsExceeded";
    case Errc::UnknownComodule: return "UnknownComodule";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::UnknownIdentifier: return "UnknownIdentifier";
    case Errc::IllegalInverse: return "IllegalInverse";
    case Errc::FormatError: return "FormatError";
    case Errc::NotGenerated: return "NotGenerated";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

std::string field_name(FieldKind kind) {
  return kind == FieldKind::Rationals ? "Q" : "Q(t)";
}

FieldKind parse_field_name(const std::string& name) {
  if (name == "Q") return FieldKind::Rationals;
  if (name == "Q(t)") return FieldKind::RationalFunctions;
  throw Error(Errc::FormatError, "unknown field '" + name + "' (expected \"Q\" or \"Q(t)\")");
}

std::string rational_to_string(const Rational& q) {
  return q.get_str();
}

// ---------------------------------------------------------------------------
// UPoly

UPoly::UPoly(Rational c) {
  if (c != 0) c_.push_back(std::move(c));
}

UPoly UPoly::t() {
  UPoly p;
  p.c_ = {Rational(0), Rational(1)};
  return p;
}

UPoly UPoly::from_coeffs(std::vector<Rational> coeffs) {
  UPoly p;
  p.c_ = std::move(coeffs);
  p.trim();
  return p;
}

void UPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UPoly UPoly::operator-() const {
  UPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  UPoly r;
  r.c_.resize(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) r.c_[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) r.c_[i] += b.c_[i];
  r.trim();
  return r;
}

UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

UPoly operator*(const UPoly& a, const UPoly& b) {
  UPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
  r.trim();
  return r;
}

UPoly UPoly::scaled(const Rational& c) const {
  if (c == 0) return UPoly();
  UPoly r = *this;
  for (auto& x : r.c_) x *= c;
  return r;
}

UPoly UPoly::derivative() const {
  UPoly r;
  for (std::size_t i = 1; i < c_.size(); ++i) r.c_.push_back(c_[i] * Rational(static_cast<long>(i)));
  r.trim();
  return r;
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  Rational inv = 1 / lead();
  return scaled(inv);
}

void UPoly::divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r) {
  if (b.is_zero()) throw Error(Errc::DivisionByZero, "polynomial division by zero");
  q = UPoly();
  r = a;
  if (r.degree() < b.degree()) return;
  q.c_.assign(static_cast<std::size_t>(r.degree() - b.degree() + 1), Rational(0));
  const Rational inv_lead = 1 / b.lead();
  while (!r.is_zero() && r.degree() >= b.degree()) {
    const std::size_t shift = static_cast<std::size_t>(r.degree() - b.degree());
    Rational f = r.lead() * inv_lead;
    q.c_[shift] = f;
    for (std::size_t i = 0; i < b.c_.size(); ++i) r.c_[i + shift] -= f * b.c_[i];
    r.trim();
  }
  q.trim();
}

UPoly UPoly::gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

namespace {

// Renders c*t^k as a signed term; first term carries a leading '-' only.
void append_term(std::ostringstream& os, const Rational& c, std::size_t k, bool first) {
  Rational mag = abs(c);
  if (c < 0)
    os << (first ? "-" : " - ");
  else if (!first)
    os << " + ";
  if (k == 0) {
    os << mag.get_str();
    return;
  }
  if (mag != 1) os << mag.get_str() << "*";
  os << "t";
  if (k > 1) os << "^" << k;
}

}  // namespace

std::string UPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = c_.size(); k-- > 0;) {
    if (c_[k] == 0) continue;
    append_term(os, c_[k], k, first);
    first = false;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Scalar

namespace {

Scalar make_reduced(UPoly num, UPoly den) {
  if (den.is_zero()) throw Error(Errc::DivisionByZero, "division by zero in K");
  if (num.is_zero()) return Scalar(0);
  UPoly g = UPoly::gcd(num, den);
  if (g.degree() > 0) {
    UPoly q, r;
    UPoly::divmod(num, g, q, r);
    num = std::move(q);
    UPoly::divmod(den, g, q, r);
    den = std::move(q);
  }
  Rational lc = den.lead();
  if (lc != 1) {
    Rational inv = 1 / lc;
    num = num.scaled(inv);
    den = den.scaled(inv);
  }
  if (den.degree() == 0 && num.degree() == 0) return Scalar(num.coeff(0));
  return Scalar::fraction(std::move(num), std::move(den));
}

RatFunc as_ratfunc(const Scalar& s) { return RatFunc{s.numerator(), s.denominator()}; }

}  // namespace

Scalar Scalar::t() { return fraction(UPoly::t(), UPoly(Rational(1))); }

Scalar Scalar::fraction(UPoly num, UPoly den) {
  // Callers inside this file pass reduced data; external callers get reduced.
  if (den.is_zero()) throw Error(Errc::DivisionByZero, "division by zero in K");
  Scalar s;
  bool reduced = den.lead() == 1 && UPoly::gcd(num, den).degree() == 0 &&
                 !(den.degree() == 0 && num.degree() <= 0);
  if (!reduced) return make_reduced(std::move(num), std::move(den));
  s.v_ = RatFunc{std::move(num), std::move(den)};
  return s;
}

bool Scalar::is_zero() const {
  if (auto* q = std::get_if<Rational>(&v_)) return *q == 0;
  return false;
}

bool Scalar::is_one() const {
  if (auto* q = std::get_if<Rational>(&v_)) return *q == 1;
  return false;
}

UPoly Scalar::numerator() const {
  if (auto* q = std::get_if<Rational>(&v_)) return UPoly(*q);
  return std::get<RatFunc>(v_).num;
}

UPoly Scalar::denominator() const {
  if (std::holds_alternative<Rational>(v_)) return UPoly(Rational(1));
  return std::get<RatFunc>(v_).den;
}

Scalar Scalar::operator-() const {
  if (auto* q = std::get_if<Rational>(&v_)) return Scalar(Rational(-*q));
  Scalar s = *this;
  auto& f = std::get<RatFunc>(s.v_);
  f.num = -f.num;
  return s;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  if (a.is_rational() && b.is_rational()) return Scalar(Rational(a.rational() + b.rational()));
  RatFunc x = as_ratfunc(a), y = as_ratfunc(b);
  if (x.den == y.den) return make_reduced(x.num + y.num, x.den);
  return make_reduced(x.num * y.den + y.num * x.den, x.den * y.den);
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (a.is_rational() && b.is_rational()) return Scalar(Rational(a.rational() * b.rational()));
  if (a.is_zero() || b.is_zero()) return Scalar(0);
  if (a.is_rational()) {
    Scalar s = b;
    auto& f = std::get<RatFunc>(s.v_);
    f.num = f.num.scaled(a.rational());
    return s;
  }
  if (b.is_rational()) return b * a;
  RatFunc x = as_ratfunc(a), y = as_ratfunc(b);
  return make_reduced(x.num * y.num, x.den * y.den);
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  if (b.is_zero()) throw Error(Errc::DivisionByZero, "division by zero in K");
  if (a.is_rational() && b.is_rational()) return Scalar(Rational(a.rational() / b.rational()));
  RatFunc x = as_ratfunc(a), y = as_ratfunc(b);
  return make_reduced(x.num * y.den, x.den * y.num);
}

Scalar Scalar::derive() const {
  if (is_rational()) return Scalar(0);
  const auto& f = std::get<RatFunc>(v_);
  UPoly num = f.num.derivative() * f.den - f.num * f.den.derivative();
  return make_reduced(std::move(num), f.den * f.den);
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.v_.index() != b.v_.index()) return false;
  if (a.is_rational()) return a.rational() == b.rational();
  const auto& x = std::get<RatFunc>(a.v_);
  const auto& y = std::get<RatFunc>(b.v_);
  return x.num == y.num && x.den == y.den;
}

namespace {

bool single_term(const UPoly& p) {
  int nonzero = 0;
  for (const auto& c : p.coeffs())
    if (c != 0) ++nonzero;
  return nonzero <= 1;
}

std::string wrap(const UPoly& p) {
  if (single_term(p) && p.degree() <= 0) return p.to_string();
  if (single_term(p) && p.lead() == 1) return p.to_string();
  return "(" + p.to_string() + ")";
}

}  // namespace

std::string Scalar::to_string() const {
  if (is_rational()) return rational().get_str();
  const auto& f = std::get<RatFunc>(v_);
  if (f.den.degree() == 0) return f.num.to_string();
  std::string num = single_term(f.num) ? f.num.to_string() : "(" + f.num.to_string() + ")";
  // A leading coefficient like "3/2*t" must stay grouped before the division.
  if (single_term(f.num) && f.num.degree() > 0 && abs(f.num.lead()) != 1) num = "(" + num + ")";
  return num + "/" + wrap(f.den);
}

bool Scalar::needs_parens_as_factor() const {
  if (is_rational()) return false;
  const auto& f = std::get<RatFunc>(v_);
  return !(f.den.degree() == 0 && single_term(f.num) && f.num.lead() > 0);
}

}  // namespace diffhopf
