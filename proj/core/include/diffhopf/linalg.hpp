#pragma once

// Exact linear algebra over K and over the K-span of algebra elements.

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "diffhopf/diffpoly.hpp"

namespace diffhopf {

using ScalarMatrix = std::vector<std::vector<Scalar>>;

ScalarMatrix identity_matrix(std::size_t n);
ScalarMatrix multiply(const ScalarMatrix& a, const ScalarMatrix& b);

/// In-place reduced row echelon form; returns the pivot columns.
std::vector<std::size_t> rref(ScalarMatrix& m);

/// Basis of {x : m x = 0}, one vector per free column (1 there, 0 on the
/// other free columns). `cols` is needed when m has no rows.
std::vector<std::vector<Scalar>> nullspace(ScalarMatrix m, std::size_t cols);

Scalar determinant(ScalarMatrix m);
std::optional<ScalarMatrix> inverse(const ScalarMatrix& m);

/// Determinant of a square matrix of polynomials by fraction-free
/// (Bareiss) elimination.
Poly determinant(std::vector<std::vector<Poly>> m);

/// Incremental K-linear independence test and coordinate solver for
/// elements of one ring. Fractions are compared over a common denominator
/// that grows as needed.
class SpanSolver {
 public:
  explicit SpanSolver(RingPtr ring);

  /// Adds x if it is independent of the vectors added so far.
  bool add(const Element& x);
  /// Coordinates of x in the added vectors, or nullopt if x is not in the span.
  std::optional<std::vector<Scalar>> coordinates(const Element& x);

  std::size_t size() const { return basis_.size(); }
  const std::vector<Element>& basis() const { return basis_; }

 private:
  using Vec = std::map<Monomial, Scalar, std::greater<>>;
  struct Row {
    Vec v;
    std::vector<Scalar> combo;  // row = sum combo[i] * basis_[i] (times the common denominator)
  };

  Vec lift(const Element& x);
  // Reduces v against the rows; returns the elimination coefficients per row.
  std::vector<std::pair<const Row*, Scalar>> reduce(Vec& v) const;

  RingPtr ring_;
  std::vector<std::uint32_t> den_;
  std::vector<Element> basis_;
  std::map<Monomial, Row, std::greater<>> rows_;  // keyed by pivot (leading monomial)
};

}  // namespace diffhopf
