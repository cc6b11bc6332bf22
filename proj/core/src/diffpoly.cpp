#include "diffhopf/diffpoly.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

#include "diffhopf/error.hpp"

namespace diffhopf {

// ---------------------------------------------------------------------------
// Monomial

Monomial Monomial::of(Var v, std::uint32_t exp) {
  Monomial m;
  if (exp == 0) return m;
  m.f_.emplace_back(v.key(), exp);
  m.degree_ = exp;
  return m;
}

std::uint32_t Monomial::exponent(Var v) const {
  const std::uint32_t k = v.key();
  for (const auto& [key, e] : f_)
    if (key == k) return e;
  return 0;
}

std::uint32_t Monomial::max_order() const {
  std::uint32_t best = 0;
  for (const auto& [key, e] : f_) best = std::max(best, Var::from_key(key).order);
  return best;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  r.f_.reserve(a.f_.size() + b.f_.size());
  std::size_t i = 0, j = 0;
  while (i < a.f_.size() && j < b.f_.size()) {
    if (a.f_[i].first > b.f_[j].first) {
      r.f_.push_back(a.f_[i++]);
    } else if (a.f_[i].first < b.f_[j].first) {
      r.f_.push_back(b.f_[j++]);
    } else {
      r.f_.emplace_back(a.f_[i].first, a.f_[i].second + b.f_[j].second);
      ++i;
      ++j;
    }
  }
  for (; i < a.f_.size(); ++i) r.f_.push_back(a.f_[i]);
  for (; j < b.f_.size(); ++j) r.f_.push_back(b.f_[j]);
  r.degree_ = a.degree_ + b.degree_;
  return r;
}

std::optional<Monomial> Monomial::divide(const Monomial& a, const Monomial& b) {
  if (b.degree_ > a.degree_) return std::nullopt;
  Monomial r;
  std::size_t j = 0;
  for (const auto& [key, e] : a.f_) {
    if (j < b.f_.size() && b.f_[j].first > key) return std::nullopt;
    if (j < b.f_.size() && b.f_[j].first == key) {
      if (b.f_[j].second > e) return std::nullopt;
      if (b.f_[j].second < e) r.f_.emplace_back(key, e - b.f_[j].second);
      ++j;
    } else {
      r.f_.emplace_back(key, e);
    }
  }
  if (j != b.f_.size()) return std::nullopt;
  r.degree_ = a.degree_ - b.degree_;
  return r;
}

Monomial Monomial::shifted(std::int32_t offset) const {
  if (offset == 0) return *this;
  Monomial r;
  r.degree_ = degree_;
  r.f_.reserve(f_.size());
  for (const auto& [key, e] : f_) {
    Var v = Var::from_key(key);
    v.gen = static_cast<std::uint32_t>(static_cast<std::int32_t>(v.gen) + offset);
    r.f_.emplace_back(v.key(), e);
  }
  return r;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (a.degree_ != b.degree_) return a.degree_ <=> b.degree_;
  const std::size_t n = std::min(a.f_.size(), b.f_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a.f_[i].first != b.f_[i].first) return a.f_[i].first <=> b.f_[i].first;
    if (a.f_[i].second != b.f_[i].second) return a.f_[i].second <=> b.f_[i].second;
  }
  return a.f_.size() <=> b.f_.size();
}

// ---------------------------------------------------------------------------
// Poly

Poly::Poly(Scalar c) {
  if (!c.is_zero()) terms_.push_back(Term{Monomial(), std::move(c)});
}

Poly Poly::of(Monomial m, Scalar c) {
  Poly p;
  if (!c.is_zero()) p.terms_.push_back(Term{std::move(m), std::move(c)});
  return p;
}

Poly Poly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& x, const Term& y) { return x.mono > y.mono; });
  Poly p;
  p.terms_.reserve(terms.size());
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
    } else {
      if (!p.terms_.empty() && p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
  return p;
}

Scalar Poly::constant_term() const {
  if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coeff;
  return Scalar(0);
}

std::uint32_t Poly::max_order() const {
  std::uint32_t best = 0;
  for (const auto& t : terms_) best = std::max(best, t.mono.max_order());
  return best;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Poly operator+(const Poly& a, const Poly& b) {
  Poly r;
  r.terms_.reserve(a.terms_.size() + b.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < a.terms_.size() && j < b.terms_.size()) {
    const auto cmp = a.terms_[i].mono <=> b.terms_[j].mono;
    if (cmp > 0) {
      r.terms_.push_back(a.terms_[i++]);
    } else if (cmp < 0) {
      r.terms_.push_back(b.terms_[j++]);
    } else {
      Scalar c = a.terms_[i].coeff + b.terms_[j].coeff;
      if (!c.is_zero()) r.terms_.push_back(Poly::Term{a.terms_[i].mono, std::move(c)});
      ++i;
      ++j;
    }
  }
  for (; i < a.terms_.size(); ++i) r.terms_.push_back(a.terms_[i]);
  for (; j < b.terms_.size(); ++j) r.terms_.push_back(b.terms_[j]);
  return r;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  if (a.terms_.size() == 1) return b.times(a.terms_[0].mono).scaled(a.terms_[0].coeff);
  if (b.terms_.size() == 1) return a.times(b.terms_[0].mono).scaled(b.terms_[0].coeff);
  std::vector<Poly::Term> terms;
  terms.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_) terms.push_back(Poly::Term{x.mono * y.mono, x.coeff * y.coeff});
  return Poly::from_terms(std::move(terms));
}

Poly Poly::scaled(const Scalar& c) const {
  if (c.is_zero()) return Poly();
  if (c.is_one()) return *this;
  Poly r = *this;
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

Poly Poly::times(const Monomial& m) const {
  if (m.is_one()) return *this;
  Poly r = *this;
  for (auto& t : r.terms_) t.mono = t.mono * m;  // multiplication by a monomial preserves the order
  return r;
}

Poly Poly::pow(std::uint32_t e) const {
  Poly result(Scalar(1));
  Poly base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e > 0) base = base * base;
  }
  return result;
}

Poly Poly::shifted(std::int32_t offset) const {
  if (offset == 0) return *this;
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const auto& t : terms_) terms.push_back(Term{t.mono.shifted(offset), t.coeff});
  return from_terms(std::move(terms));
}

std::optional<Poly> Poly::divide_exact(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw Error(Errc::DivisionByZero, "polynomial division by zero");
  if (a.is_zero()) return Poly();
  // The trailing term of a product is the product of the trailing terms.
  if (!Monomial::divide(a.terms_.back().mono, b.terms_.back().mono)) return std::nullopt;
  std::map<Monomial, Scalar, std::greater<>> rem;
  for (const auto& t : a.terms_) rem.emplace_hint(rem.end(), t.mono, t.coeff);
  Poly quot;
  const Term& lb = b.lead();
  while (!rem.empty()) {
    auto top = rem.begin();
    auto m = Monomial::divide(top->first, lb.mono);
    if (!m) return std::nullopt;
    Scalar c = top->second / lb.coeff;
    rem.erase(top);
    for (std::size_t k = 1; k < b.terms_.size(); ++k) {
      auto [it, fresh] = rem.try_emplace(b.terms_[k].mono * *m);
      it->second -= b.terms_[k].coeff * c;
      if (it->second.is_zero()) rem.erase(it);
    }
    quot.terms_.push_back(Term{std::move(*m), std::move(c)});  // produced in descending order
  }
  return quot;
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Ring

RingPtr Ring::make(Spec spec) {
  const std::size_t n = spec.names.size();
  if (n >= 0xffff) throw Error(Errc::InvalidArgument, "too many generators");
  if (spec.rules.empty()) spec.rules.resize(n);
  if (spec.rules.size() != n) throw Error(Errc::InvalidArgument, "rule list does not match generators");
  std::set<std::string> seen;
  for (const auto& name : spec.names) {
    if (name.empty() || !seen.insert(name).second)
      throw Error(Errc::InvalidArgument, "generator names must be nonempty and distinct");
    if (name == "t" || name == "d" || name == "tensor")
      throw Error(Errc::InvalidArgument, "reserved generator name '" + name + "'");
  }
  for (const auto& d : spec.denominators) {
    if (d.is_zero() || d.is_constant()) throw Error(Errc::InvalidArgument, "denominators must be nonconstant");
    if (d.max_order() != 0) throw Error(Errc::InvalidArgument, "denominators must have derivative order 0");
  }
  for (auto& rule : spec.rules) {
    if (!rule) continue;
    if (rule->num.max_order() != 0)
      throw Error(Errc::InvalidArgument, "rewrite rules must be order-0 expressions");
    rule->den.resize(spec.denominators.size(), 0);
  }
  std::shared_ptr<Ring> ring(new Ring());
  ring->spec_ = std::move(spec);
  ring->base_gens_ = ring->num_generators();
  ring->base_dens_ = ring->num_denominators();
  RingPtr cref = ring;
  for (std::uint32_t i = 0; i < ring->num_denominators(); ++i) {
    Element dd = derive_poly(cref, ring->spec_.denominators[i]);
    ring->den_derivs_.push_back(Fraction{dd.numerator(), dd.denominator_exponents()});
  }
  return ring;
}

RingPtr Ring::tensor_power(const RingPtr& base, std::uint32_t k) {
  if (k == 1) return base;
  std::lock_guard<std::mutex> lock(base->powers_mutex_);
  auto& slot = base->powers_[k];
  if (auto alive = slot.lock()) return alive;
  const std::uint32_t n = base->num_generators();
  const std::uint32_t nd = base->num_denominators();
  Spec spec;
  spec.field = base->field();
  for (std::uint32_t c = 0; c < k; ++c)
    for (std::uint32_t j = 0; j < n; ++j) spec.names.push_back(base->name(j) + "#" + std::to_string(c + 1));
  for (std::uint32_t c = 0; c < k; ++c)
    for (std::uint32_t i = 0; i < nd; ++i) spec.denominators.push_back(base->denominator(i).shifted(static_cast<std::int32_t>(c * n)));
  spec.rules.resize(static_cast<std::size_t>(k) * n);
  for (std::uint32_t c = 0; c < k; ++c) {
    for (std::uint32_t j = 0; j < n; ++j) {
      const auto& rule = base->rule(j);
      if (!rule) continue;
      Fraction f;
      f.num = rule->num.shifted(static_cast<std::int32_t>(c * n));
      f.den.assign(static_cast<std::size_t>(k) * nd, 0);
      for (std::uint32_t i = 0; i < nd; ++i) f.den[c * nd + i] = rule->den[i];
      spec.rules[c * n + j] = std::move(f);
    }
  }
  std::shared_ptr<Ring> ring(new Ring());
  ring->spec_ = std::move(spec);
  ring->legs_ = k;
  ring->base_gens_ = n;
  ring->base_dens_ = nd;
  ring->base_ = base;
  // d(denominator) in leg c is the shifted base derivative.
  for (std::uint32_t c = 0; c < k; ++c) {
    for (std::uint32_t i = 0; i < nd; ++i) {
      const Fraction& bd = base->denominator_derivative(i);
      Fraction f;
      f.num = bd.num.shifted(static_cast<std::int32_t>(c * n));
      f.den.assign(static_cast<std::size_t>(k) * nd, 0);
      for (std::uint32_t q = 0; q < nd; ++q) f.den[c * nd + q] = bd.den[q];
      ring->den_derivs_.push_back(std::move(f));
    }
  }
  slot = ring;
  return ring;
}

RingPtr Ring::scalars(FieldKind field) {
  static const RingPtr q = Ring::make(Spec{FieldKind::Rationals, {}, {}, {}});
  static const RingPtr qt = Ring::make(Spec{FieldKind::RationalFunctions, {}, {}, {}});
  return field == FieldKind::Rationals ? q : qt;
}

std::optional<std::uint32_t> Ring::find_generator(const std::string& name) const {
  for (std::uint32_t j = 0; j < spec_.names.size(); ++j)
    if (spec_.names[j] == name) return j;
  return std::nullopt;
}

bool Ring::has_rules() const {
  return std::any_of(spec_.rules.begin(), spec_.rules.end(), [](const auto& r) { return r.has_value(); });
}

std::string Ring::var_name(Var v) const {
  const std::string& n = name(v.gen);
  if (v.order == 0) return n;
  if (v.order == 1) return "d(" + n + ")";
  return "d^" + std::to_string(v.order) + "(" + n + ")";
}

// ---------------------------------------------------------------------------
// Element

void require_same_ring(const Element& a, const Element& b) {
  if (a.ring().get() != b.ring().get())
    throw Error(Errc::PresentationMismatch, "elements belong to different presentations");
}

Element::Element(RingPtr ring) : ring_(std::move(ring)), den_(ring_->num_denominators(), 0) {}

Element::Element(RingPtr ring, Poly num, std::vector<std::uint32_t> den)
    : ring_(std::move(ring)), num_(std::move(num)), den_(std::move(den)) {
  den_.resize(ring_->num_denominators(), 0);
  reduce();
}

Element Element::constant(RingPtr ring, Scalar c) { return Element(std::move(ring), Poly(std::move(c)), {}); }

Element Element::generator(RingPtr ring, std::uint32_t gen) { return variable(std::move(ring), Var{gen, 0}); }

Element Element::variable(RingPtr ring, Var v) {
  if (v.gen >= ring->num_generators()) throw Error(Errc::IndexOutOfRange, "generator index out of range");
  if (ring->rule(v.gen) && v.order > 0) return generator(ring, v.gen).derive(v.order);
  return Element(std::move(ring), Poly::of(Monomial::of(v)), {});
}

Element Element::from_poly(RingPtr ring, Poly p) { return Element(std::move(ring), std::move(p), {}); }

Element Element::denominator_inverse(RingPtr ring, std::uint32_t i, std::uint32_t power) {
  std::vector<std::uint32_t> den(ring->num_denominators(), 0);
  den.at(i) = power;
  return Element(std::move(ring), Poly(Scalar(1)), std::move(den));
}

bool Element::has_denominator() const {
  return std::any_of(den_.begin(), den_.end(), [](std::uint32_t e) { return e > 0; });
}

Scalar Element::constant_value() const {
  if (!is_constant()) throw Error(Errc::InvalidArgument, "element is not a constant");
  return num_.constant_term();
}

void Element::reduce() {
  if (num_.is_zero()) {
    std::fill(den_.begin(), den_.end(), 0);
    return;
  }
  for (std::uint32_t i = 0; i < den_.size(); ++i) {
    while (den_[i] > 0) {
      auto q = Poly::divide_exact(num_, ring_->denominator(i));
      if (!q) break;
      num_ = std::move(*q);
      --den_[i];
    }
  }
}

Element Element::operator-() const {
  Element r = *this;
  r.num_ = -r.num_;
  return r;
}

namespace {

Poly lift(const Ring& ring, const Poly& p, const std::vector<std::uint32_t>& from,
          const std::vector<std::uint32_t>& to) {
  Poly r = p;
  for (std::uint32_t i = 0; i < from.size(); ++i)
    if (to[i] > from[i]) r = r * ring.denominator(i).pow(to[i] - from[i]);
  return r;
}

}  // namespace

Element operator+(const Element& a, const Element& b) {
  require_same_ring(a, b);
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return Element(a.ring_, a.num_ + b.num_, a.den_);
  std::vector<std::uint32_t> den(a.den_.size());
  for (std::size_t i = 0; i < den.size(); ++i) den[i] = std::max(a.den_[i], b.den_[i]);
  return Element(a.ring_, lift(*a.ring_, a.num_, a.den_, den) + lift(*a.ring_, b.num_, b.den_, den), den);
}

Element operator-(const Element& a, const Element& b) { return a + (-b); }

Element operator*(const Element& a, const Element& b) {
  require_same_ring(a, b);
  if (a.is_zero() || b.is_zero()) return Element(a.ring_);
  std::vector<std::uint32_t> den(a.den_.size());
  for (std::size_t i = 0; i < den.size(); ++i) den[i] = a.den_[i] + b.den_[i];
  Element r(a.ring_);
  r.num_ = a.num_ * b.num_;
  r.den_ = std::move(den);
  if (a.has_denominator() || b.has_denominator()) r.reduce();
  return r;
}

Element Element::scaled(const Scalar& c) const {
  Element r = *this;
  r.num_ = r.num_.scaled(c);
  if (r.num_.is_zero()) std::fill(r.den_.begin(), r.den_.end(), 0);
  return r;
}

Element Element::pow(std::uint32_t e) const {
  Element result = constant(ring_, Scalar(1));
  Element base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e > 0) base = base * base;
  }
  return result;
}

Element derive_poly(const RingPtr& ring, const Poly& p) {
  std::vector<Poly::Term> plain;
  Element ruled(ring);
  for (const auto& term : p.terms()) {
    if (!term.coeff.is_rational()) {
      Scalar dc = term.coeff.derive();
      if (!dc.is_zero()) plain.push_back(Poly::Term{term.mono, dc});
    }
    for (const auto& [key, e] : term.mono.factors()) {
      const Var v = Var::from_key(key);
      Monomial rest = *Monomial::divide(term.mono, Monomial::of(v));
      Scalar c = term.coeff * Scalar(static_cast<long>(e));
      const auto& rule = ring->rule(v.gen);
      if (rule) {
        Element piece(ring, rule->num.times(rest).scaled(c), rule->den);
        ruled += piece;
      } else {
        plain.push_back(Poly::Term{rest * Monomial::of(Var{v.gen, v.order + 1}), std::move(c)});
      }
    }
  }
  return Element::from_poly(ring, Poly::from_terms(std::move(plain))) + ruled;
}

Element Element::derive() const {
  if (num_.is_zero()) return Element(ring_);
  Element dn = derive_poly(ring_, num_);
  if (!has_denominator()) return dn;
  Element result = dn * Element(ring_, Poly(Scalar(1)), den_);
  for (std::uint32_t i = 0; i < den_.size(); ++i) {
    if (den_[i] == 0) continue;
    std::vector<std::uint32_t> den = den_;
    ++den[i];
    Element part(ring_, num_.scaled(Scalar(static_cast<long>(den_[i]))), den);
    const Fraction& dd = ring_->denominator_derivative(i);
    result -= part * Element(ring_, dd.num, dd.den);
  }
  return result;
}

Element Element::derive(std::uint32_t times) const {
  Element r = *this;
  for (std::uint32_t k = 0; k < times; ++k) r = r.derive();
  return r;
}

std::optional<Element> Element::inverse() const {
  if (num_.is_zero()) return std::nullopt;
  Poly n = num_;
  std::vector<std::uint32_t> exps(den_.size(), 0);
  bool progress = true;
  while (!n.is_constant() && progress) {
    progress = false;
    for (std::uint32_t i = 0; i < den_.size(); ++i) {
      while (auto q = Poly::divide_exact(n, ring_->denominator(i))) {
        n = std::move(*q);
        ++exps[i];
        progress = true;
      }
    }
  }
  if (!n.is_constant()) return std::nullopt;
  Scalar c = n.constant_term();
  Poly num(Scalar(1) / c);
  for (std::uint32_t i = 0; i < den_.size(); ++i)
    if (den_[i] > 0) num = num * ring_->denominator(i).pow(den_[i]);
  return Element(ring_, std::move(num), std::move(exps));
}

Element Element::embedded(const RingPtr& target, std::uint32_t gen_offset, std::uint32_t den_offset) const {
  std::vector<std::uint32_t> den(target->num_denominators(), 0);
  for (std::uint32_t i = 0; i < den_.size(); ++i) den.at(den_offset + i) = den_[i];
  Element r(target);
  r.num_ = num_.shifted(static_cast<std::int32_t>(gen_offset));
  r.den_ = std::move(den);
  return r;
}

bool operator==(const Element& a, const Element& b) {
  require_same_ring(a, b);
  if (a.den_ == b.den_) return a.num_ == b.num_;
  return (a - b).is_zero();
}

Element to_leg(const Element& x, const RingPtr& power, std::uint32_t c) {
  if (power->base().get() != x.ring().get() || c >= power->legs())
    throw Error(Errc::PresentationMismatch, "element does not belong to the tensor power's base");
  return x.embedded(power, c * power->base_generators(), c * power->base_denominators());
}

Element tensor_of(const std::vector<Element>& legs) {
  if (legs.empty()) throw Error(Errc::InvalidArgument, "empty tensor");
  if (legs.size() == 1) return legs.front();
  const RingPtr power = Ring::tensor_power(legs.front().ring(), static_cast<std::uint32_t>(legs.size()));
  Element r = Element::constant(power, Scalar(1));
  for (std::uint32_t c = 0; c < legs.size(); ++c) r *= to_leg(legs[c], power, c);
  return r;
}

std::vector<std::pair<Element, Element>> split_tensor(const Element& x) {
  const Ring& ring = *x.ring();
  if (ring.legs() != 2) throw Error(Errc::InvalidArgument, "split_tensor needs an element of A (x) A");
  const RingPtr& base = ring.base();
  const std::uint32_t n = ring.base_generators();
  const std::uint32_t nd = ring.base_denominators();
  std::map<Monomial, std::vector<Poly::Term>, std::greater<>> groups;
  for (const auto& term : x.numerator().terms()) {
    Monomial left, right;
    for (const auto& [key, e] : term.mono.factors()) {
      const Var v = Var::from_key(key);
      if (v.gen < n)
        left = left * Monomial::of(v, e);
      else
        right = right * Monomial::of(Var{v.gen - n, v.order}, e);
    }
    groups[right].push_back(Poly::Term{std::move(left), term.coeff});
  }
  const auto& den = x.denominator_exponents();
  const std::vector<std::uint32_t> dl(den.begin(), den.begin() + nd), dr(den.begin() + nd, den.end());
  std::vector<std::pair<Element, Element>> out;
  for (auto& [right, terms] : groups)
    out.emplace_back(Element(base, Poly::from_terms(std::move(terms)), dl), Element(base, Poly::of(right), dr));
  return out;
}

}  // namespace diffhopf
