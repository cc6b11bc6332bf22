#pragma once

// Hand-rolled random generators for property tests. Everything is driven by
// a seeded std::mt19937 so failures reproduce.

#include <random>
#include <vector>

#include "diffhopf/diffpoly.hpp"
#include "diffhopf/scalar.hpp"

namespace gen {

using diffhopf::Element;
using diffhopf::FieldKind;
using diffhopf::Monomial;
using diffhopf::Poly;
using diffhopf::Rational;
using diffhopf::RingPtr;
using diffhopf::Scalar;
using diffhopf::UPoly;
using diffhopf::Var;

inline int uniform(std::mt19937& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline Rational rational(std::mt19937& rng, int range = 5) {
  Rational q(uniform(rng, -range, range), uniform(rng, 1, range));
  q.canonicalize();
  return q;
}

inline Rational nonzero_rational(std::mt19937& rng, int range = 5) {
  Rational q;
  do q = rational(rng, range);
  while (q == 0);
  return q;
}

inline UPoly upoly(std::mt19937& rng, int max_degree) {
  std::vector<Rational> c;
  const int d = uniform(rng, 0, max_degree);
  for (int i = 0; i <= d; ++i) c.push_back(rational(rng));
  return UPoly::from_coeffs(std::move(c));
}

/// Over Q(t) roughly half the values involve t.
inline Scalar scalar(std::mt19937& rng, FieldKind field) {
  if (field == FieldKind::Rationals || uniform(rng, 0, 1) == 0) return Scalar(rational(rng));
  UPoly den;
  do den = upoly(rng, 2);
  while (den.is_zero());
  return Scalar::fraction(upoly(rng, 2), den);
}

inline Scalar nonzero_scalar(std::mt19937& rng, FieldKind field) {
  Scalar s;
  do s = scalar(rng, field);
  while (s.is_zero());
  return s;
}

struct ElementShape {
  int max_terms = 3;
  std::uint32_t max_order = 2;
  std::uint32_t max_degree = 2;
  std::uint32_t max_den = 1;
};

inline Monomial monomial(std::mt19937& rng, const RingPtr& ring, const ElementShape& shape) {
  Monomial m;
  const std::uint32_t n = ring->num_generators();
  if (n == 0) return m;
  const int factors = uniform(rng, 0, static_cast<int>(shape.max_degree));
  for (int f = 0; f < factors; ++f) {
    const auto g = static_cast<std::uint32_t>(uniform(rng, 0, static_cast<int>(n) - 1));
    const std::uint32_t order = ring->rule(g) ? 0 : static_cast<std::uint32_t>(uniform(rng, 0, static_cast<int>(shape.max_order)));
    m = m * Monomial::of(Var{g, order});
  }
  return m;
}

/// Random element: a few terms over random denominator powers. Rules are
/// respected by only using order 0 for ruled generators.
inline Element element(std::mt19937& rng, const RingPtr& ring, const ElementShape& shape = {}) {
  std::vector<Poly::Term> terms;
  const int count = uniform(rng, 1, shape.max_terms);
  for (int i = 0; i < count; ++i) terms.push_back(Poly::Term{monomial(rng, ring, shape), scalar(rng, ring->field())});
  std::vector<std::uint32_t> den(ring->num_denominators(), 0);
  for (auto& e : den) e = static_cast<std::uint32_t>(uniform(rng, 0, static_cast<int>(shape.max_den)));
  return Element(ring, Poly::from_terms(std::move(terms)), std::move(den));
}

/// Random invertible rational matrix (unit lower times unit upper, then a
/// random diagonal), so invertibility holds by construction.
inline std::vector<std::vector<Scalar>> invertible_matrix(std::mt19937& rng, std::size_t n, int range = 3) {
  std::vector<std::vector<Scalar>> l(n, std::vector<Scalar>(n)), u = l, m = l;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i > j) l[i][j] = Scalar(rational(rng, range));
      if (i < j) u[i][j] = Scalar(rational(rng, range));
      if (i == j) {
        l[i][j] = Scalar(1);
        u[i][j] = Scalar(nonzero_rational(rng, range));
      }
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) m[i][j] += l[i][k] * u[k][j];
  return m;
}

}  // namespace gen
