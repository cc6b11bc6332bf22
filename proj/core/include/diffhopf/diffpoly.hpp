#pragma once

// Differential polynomial algebras K{y_1..y_n} localized at a finite set of
// designated denominators, optionally with rewrite rules d(y_j) -> f_j.
//
// An Element is a fraction P / prod_i d_i^{k_i}. After every operation the
// fraction is reduced: no d_i with k_i > 0 divides P. Tensor powers A^{(x)k}
// are again rings of this kind (generators and denominators are copied once
// per tensor leg), so tensor elements share the Element machinery.

#include <compare>
#include <map>
#include <mutex>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "diffhopf/scalar.hpp"

namespace diffhopf {

/// The derived variable d^order(y_gen).
struct Var {
  std::uint32_t gen = 0;
  std::uint32_t order = 0;

  std::uint32_t key() const { return (order << 16) | gen; }
  static Var from_key(std::uint32_t k) { return Var{k & 0xffffu, k >> 16}; }
  friend bool operator==(const Var& a, const Var& b) = default;
  friend auto operator<=>(const Var& a, const Var& b) { return a.key() <=> b.key(); }
};

/// Product of derived variables. Factors are kept sorted by descending key.
class Monomial {
 public:
  using Factor = std::pair<std::uint32_t, std::uint32_t>;  // (var key, exponent)

  Monomial() = default;
  static Monomial of(Var v, std::uint32_t exp = 1);

  bool is_one() const { return f_.empty(); }
  std::uint32_t degree() const { return degree_; }
  const std::vector<Factor>& factors() const { return f_; }
  std::uint32_t exponent(Var v) const;
  std::uint32_t max_order() const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// a / b when b divides a.
  static std::optional<Monomial> divide(const Monomial& a, const Monomial& b);
  /// Re-index every generator: gen -> gen + offset.
  Monomial shifted(std::int32_t offset) const;

  friend bool operator==(const Monomial& a, const Monomial& b) = default;
  /// Graded lexicographic order; higher derivative order ranks higher.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

 private:
  std::vector<Factor> f_;
  std::uint32_t degree_ = 0;
};

/// Sparse polynomial with Scalar coefficients, terms sorted descending.
class Poly {
 public:
  struct Term {
    Monomial mono;
    Scalar coeff;
  };

  Poly() = default;
  explicit Poly(Scalar c);
  static Poly of(Monomial m, Scalar c = Scalar(1));
  static Poly from_terms(std::vector<Term> terms);  // sorts and combines

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  Scalar constant_term() const;
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  const Term& lead() const { return terms_.front(); }
  std::uint32_t max_order() const;

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly scaled(const Scalar& c) const;
  Poly times(const Monomial& m) const;
  Poly pow(std::uint32_t e) const;
  Poly shifted(std::int32_t offset) const;

  /// Exact quotient a / b, or nullopt when b does not divide a.
  static std::optional<Poly> divide_exact(const Poly& a, const Poly& b);

  friend bool operator==(const Poly& a, const Poly& b);

 private:
  std::vector<Term> terms_;
};

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

/// Raw fraction data, used where an Element cannot be formed yet.
struct Fraction {
  Poly num;
  std::vector<std::uint32_t> den;  // exponent per designated denominator
};

/// A localized differential polynomial ring with optional rewrite rules.
class Ring {
 public:
  struct Spec {
    FieldKind field = FieldKind::RationalFunctions;
    std::vector<std::string> names;
    std::vector<Poly> denominators;
    // Per generator: d(gen) -> rule (order-0 fraction), or nullopt if free.
    std::vector<std::optional<Fraction>> rules;
  };

  static RingPtr make(Spec spec);
  /// k-fold tensor power; generator j of leg c has index c*n + j.
  static RingPtr tensor_power(const RingPtr& base, std::uint32_t k);
  /// The ring K itself (no generators).
  static RingPtr scalars(FieldKind field);

  FieldKind field() const { return spec_.field; }
  std::uint32_t num_generators() const { return static_cast<std::uint32_t>(spec_.names.size()); }
  std::uint32_t num_denominators() const { return static_cast<std::uint32_t>(spec_.denominators.size()); }
  const std::vector<std::string>& names() const { return spec_.names; }
  const std::string& name(std::uint32_t gen) const { return spec_.names.at(gen); }
  std::optional<std::uint32_t> find_generator(const std::string& name) const;
  const Poly& denominator(std::uint32_t i) const { return spec_.denominators.at(i); }
  const std::optional<Fraction>& rule(std::uint32_t gen) const { return spec_.rules.at(gen); }
  bool has_rules() const;
  /// d(denominator i) as a fraction over this ring.
  const Fraction& denominator_derivative(std::uint32_t i) const { return den_derivs_.at(i); }

  /// Base ring and leg count when this ring is a tensor power (legs = 1 otherwise).
  std::uint32_t legs() const { return legs_; }
  std::uint32_t base_generators() const { return base_gens_; }
  std::uint32_t base_denominators() const { return base_dens_; }
  /// The ring this one is a tensor power of; nullptr for ordinary rings.
  const RingPtr& base() const { return base_; }

  std::string var_name(Var v) const;

 private:
  Ring() = default;
  Spec spec_;
  std::vector<Fraction> den_derivs_;
  std::uint32_t legs_ = 1;
  std::uint32_t base_gens_ = 0;
  std::uint32_t base_dens_ = 0;
  RingPtr base_;
  mutable std::mutex powers_mutex_;
  mutable std::map<std::uint32_t, std::weak_ptr<const Ring>> powers_;
};

class Element {
 public:
  explicit Element(RingPtr ring);  // zero
  Element(RingPtr ring, Poly num, std::vector<std::uint32_t> den);

  static Element constant(RingPtr ring, Scalar c);
  static Element generator(RingPtr ring, std::uint32_t gen);
  /// d^order(gen), applying rewrite rules when the generator has one.
  static Element variable(RingPtr ring, Var v);
  static Element from_poly(RingPtr ring, Poly p);
  static Element denominator_inverse(RingPtr ring, std::uint32_t i, std::uint32_t power = 1);

  const RingPtr& ring() const { return ring_; }
  const Poly& numerator() const { return num_; }
  const std::vector<std::uint32_t>& denominator_exponents() const { return den_; }
  bool has_denominator() const;

  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return !has_denominator() && num_.is_constant(); }
  Scalar constant_value() const;  // requires is_constant()

  Element operator-() const;
  friend Element operator+(const Element& a, const Element& b);
  friend Element operator-(const Element& a, const Element& b);
  friend Element operator*(const Element& a, const Element& b);
  Element& operator+=(const Element& b) { return *this = *this + b; }
  Element& operator-=(const Element& b) { return *this = *this - b; }
  Element& operator*=(const Element& b) { return *this = *this * b; }
  Element scaled(const Scalar& c) const;
  Element pow(std::uint32_t e) const;

  Element derive() const;
  Element derive(std::uint32_t times) const;

  /// Inverse when this element is a unit c * prod d_i^{e_i}; nullopt otherwise.
  std::optional<Element> inverse() const;

  /// Re-express over `target`, shifting generators and denominators.
  Element embedded(const RingPtr& target, std::uint32_t gen_offset, std::uint32_t den_offset) const;

  friend bool operator==(const Element& a, const Element& b);
  friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }

 private:
  void reduce();
  RingPtr ring_;
  Poly num_;
  std::vector<std::uint32_t> den_;
};

/// Tensor elements live in Ring::tensor_power(base, 2).
using TensorElement = Element;

void require_same_ring(const Element& a, const Element& b);

/// Derivative of a polynomial (no denominators) as an element of `ring`.
Element derive_poly(const RingPtr& ring, const Poly& p);

/// x placed in leg c of a tensor power of x's ring.
Element to_leg(const Element& x, const RingPtr& power, std::uint32_t c);
/// legs[0] (x) legs[1] (x) ... in Ring::tensor_power(base, legs.size()).
Element tensor_of(const std::vector<Element>& legs);
/// Writes x in A (x) A as sum left_k (x) right_k where the right factors are
/// distinct monomials over the right-leg denominator, hence independent.
std::vector<std::pair<Element, Element>> split_tensor(const Element& x);

}  // namespace diffhopf
