#include <doctest.h>

#include "diffhopf/expr.hpp"
#include "diffhopf/hopf.hpp"
#include "diffhopf/linalg.hpp"
#include "support/gen.hpp"

using namespace diffhopf;

namespace {

// Cofactor expansion along the first row.
Scalar laplace(const ScalarMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return Scalar(1);
  Scalar acc;
  for (std::size_t c = 0; c < n; ++c) {
    ScalarMatrix minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Scalar> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(row);
    }
    const Scalar t = m[0][c] * laplace(minor);
    acc = c % 2 == 0 ? acc + t : acc - t;
  }
  return acc;
}

ScalarMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, FieldKind field) {
  ScalarMatrix m(rows, std::vector<Scalar>(cols));
  for (auto& row : m)
    for (auto& x : row)
      if (gen::uniform(rng, 0, 2) != 0) x = gen::scalar(rng, field);
  return m;
}

}  // namespace

TEST_CASE("determinant agrees with cofactor expansion") {
  std::mt19937 rng(3);
  for (int i = 0; i < 60; ++i) {
    const auto n = static_cast<std::size_t>(gen::uniform(rng, 0, 4));
    const ScalarMatrix m = random_matrix(rng, n, n, i % 2 ? FieldKind::Rationals : FieldKind::RationalFunctions);
    CHECK(determinant(m) == laplace(m));
  }
}

TEST_CASE("inverse") {
  std::mt19937 rng(4);
  for (int i = 0; i < 40; ++i) {
    const auto n = static_cast<std::size_t>(gen::uniform(rng, 1, 4));
    const ScalarMatrix m = gen::invertible_matrix(rng, n);
    const auto inv = inverse(m);
    REQUIRE(inv);
    CHECK(multiply(m, *inv) == identity_matrix(n));
  }
  CHECK_FALSE(inverse({{Scalar(1), Scalar(2)}, {Scalar(2), Scalar(4)}}));
}

TEST_CASE("nullspace vectors are solutions and count matches rank") {
  std::mt19937 rng(5);
  for (int i = 0; i < 60; ++i) {
    const auto rows = static_cast<std::size_t>(gen::uniform(rng, 0, 4));
    const auto cols = static_cast<std::size_t>(gen::uniform(rng, 1, 5));
    const ScalarMatrix m = random_matrix(rng, rows, cols, FieldKind::Rationals);
    const auto ns = nullspace(m, cols);
    for (const auto& v : ns)
      for (const auto& row : m) {
        Scalar s;
        for (std::size_t c = 0; c < cols; ++c) s += row[c] * v[c];
        CHECK(s.is_zero());
      }
    ScalarMatrix copy = m;
    CHECK(ns.size() + rref(copy).size() == cols);
  }
}

TEST_CASE("polynomial determinant") {
  auto gl = builtin(Builtin::GL, FieldKind::RationalFunctions, 3);
  const RingPtr& r = gl->ring();
  std::vector<std::vector<Poly>> x(3, std::vector<Poly>(3));
  for (std::uint32_t i = 0; i < 3; ++i)
    for (std::uint32_t j = 0; j < 3; ++j) x[i][j] = Element::generator(r, i * 3 + j).numerator();
  CHECK(determinant(x) == r->denominator(0));
  x[2] = x[0];
  CHECK(determinant(x).is_zero());
  // A leading zero forces a row swap.
  std::vector<std::vector<Poly>> swap{{Poly(), x[0][1]}, {x[1][0], x[1][1]}};
  CHECK(determinant(swap) == -(x[0][1] * x[1][0]));
}

TEST_CASE("span solver") {
  auto gm = builtin(Builtin::Gm, FieldKind::RationalFunctions);
  const RingPtr& r = gm->ring();
  SpanSolver s(r);
  CHECK(s.add(parse_expr("d(y)/y", r)));
  CHECK(s.add(parse_expr("y", r)));
  CHECK_FALSE(s.add(parse_expr("3*d(y)/y - t*y", r)));
  CHECK(s.add(parse_expr("1/y^2", r)));
  const auto c = s.coordinates(parse_expr("2*d(y)/y + 1/y^2", r));
  REQUIRE(c);
  CHECK(*c == std::vector<Scalar>{Scalar(2), Scalar(0), Scalar(1)});
  CHECK_FALSE(s.coordinates(parse_expr("d(y)", r)));
}

TEST_CASE("property: span solver coordinates reconstruct the element") {
  std::mt19937 rng(6);
  auto gl = builtin(Builtin::GL, FieldKind::RationalFunctions, 2);
  for (int trial = 0; trial < 30; ++trial) {
    SpanSolver s(gl->ring());
    for (int k = 0; k < 4; ++k) s.add(gen::element(rng, gl->ring()));
    Element target(gl->ring());
    std::vector<Scalar> want;
    for (const auto& b : s.basis()) {
      want.push_back(gen::scalar(rng, FieldKind::Rationals));
      target += b.scaled(want.back());
    }
    const auto got = s.coordinates(target);
    REQUIRE(got);
    CHECK(*got == want);
  }
}
