#include "diffhopf/linalg.hpp"

#include "diffhopf/error.hpp"

namespace diffhopf {

ScalarMatrix identity_matrix(std::size_t n) {
  ScalarMatrix m(n, std::vector<Scalar>(n));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = Scalar(1);
  return m;
}

ScalarMatrix multiply(const ScalarMatrix& a, const ScalarMatrix& b) {
  const std::size_t n = a.size();
  const std::size_t k = b.size();
  const std::size_t m = k == 0 ? 0 : b[0].size();
  ScalarMatrix r(n, std::vector<Scalar>(m));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (a[i][l].is_zero()) continue;
      for (std::size_t j = 0; j < m; ++j) r[i][j] += a[i][l] * b[l][j];
    }
  return r;
}

std::vector<std::size_t> rref(ScalarMatrix& m) {
  std::vector<std::size_t> pivots;
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    const Scalar inv = Scalar(1) / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      const Scalar f = m[i][c];
      for (std::size_t j = c; j < cols; ++j)
        if (!m[r][j].is_zero()) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::vector<std::vector<Scalar>> nullspace(ScalarMatrix m, std::size_t cols) {
  const std::vector<std::size_t> pivots = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Scalar> v(cols);
    v[f] = Scalar(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

Scalar determinant(ScalarMatrix m) {
  const std::size_t n = m.size();
  Scalar det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c].is_zero()) ++p;
    if (p == n) return Scalar(0);
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    const Scalar inv = Scalar(1) / m[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m[i][c].is_zero()) continue;
      const Scalar f = m[i][c] * inv;
      for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  return det;
}

std::optional<ScalarMatrix> inverse(const ScalarMatrix& m) {
  const std::size_t n = m.size();
  ScalarMatrix aug(n, std::vector<Scalar>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = m[i][j];
    aug[i][n + i] = Scalar(1);
  }
  const auto pivots = rref(aug);
  if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1)) return std::nullopt;
  ScalarMatrix inv(n, std::vector<Scalar>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
  return inv;
}

Poly determinant(std::vector<std::vector<Poly>> m) {
  const std::size_t n = m.size();
  if (n == 0) return Poly(Scalar(1));
  Poly prev(Scalar(1));
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t p = k + 1;
      while (p < n && m[p][k].is_zero()) ++p;
      if (p == n) return Poly();
      std::swap(m[p], m[k]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Poly num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        auto q = Poly::divide_exact(num, prev);
        if (!q) throw Error(Errc::InvalidArgument, "fraction-free elimination lost exactness");
        m[i][j] = std::move(*q);
      }
      m[i][k] = Poly();
    }
    prev = m[k][k];
  }
  return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

// ---------------------------------------------------------------------------
// SpanSolver

SpanSolver::SpanSolver(RingPtr ring) : ring_(std::move(ring)), den_(ring_->num_denominators(), 0) {}

SpanSolver::Vec SpanSolver::lift(const Element& x) {
  if (x.ring().get() != ring_.get()) throw Error(Errc::PresentationMismatch, "element from another presentation");
  const auto& d = x.denominator_exponents();
  // Grow the common denominator; stored rows are multiplied along.
  Poly grow(Scalar(1));
  for (std::uint32_t i = 0; i < den_.size(); ++i)
    if (d[i] > den_[i]) {
      grow = grow * ring_->denominator(i).pow(d[i] - den_[i]);
      den_[i] = d[i];
    }
  if (!grow.is_constant()) {
    std::map<Monomial, Row, std::greater<>> grown;
    for (auto& [pivot, row] : rows_) {
      Poly p;
      std::vector<Poly::Term> terms;
      for (auto& [mono, c] : row.v) terms.push_back(Poly::Term{mono, c});
      p = Poly::from_terms(std::move(terms)) * grow;
      Row nr{{}, std::move(row.combo)};
      for (const auto& t : p.terms()) nr.v.emplace_hint(nr.v.end(), t.mono, t.coeff);
      Monomial lead = nr.v.begin()->first;
      grown.emplace(std::move(lead), std::move(nr));
    }
    rows_ = std::move(grown);
  }
  Poly num = x.numerator();
  for (std::uint32_t i = 0; i < den_.size(); ++i)
    if (den_[i] > d[i]) num = num * ring_->denominator(i).pow(den_[i] - d[i]);
  Vec v;
  for (const auto& t : num.terms()) v.emplace_hint(v.end(), t.mono, t.coeff);
  return v;
}

std::vector<std::pair<const SpanSolver::Row*, Scalar>> SpanSolver::reduce(Vec& v) const {
  std::vector<std::pair<const Row*, Scalar>> used;
  for (const auto& [pivot, row] : rows_) {
    if (v.empty()) break;
    if (v.begin()->first < pivot) continue;  // nothing left at or above this pivot
    auto it = v.find(pivot);
    if (it == v.end()) continue;
    const Scalar f = it->second / row.v.begin()->second;
    for (const auto& [mono, c] : row.v) {
      auto [slot, fresh] = v.try_emplace(mono);
      slot->second -= f * c;
      if (slot->second.is_zero()) v.erase(slot);
    }
    used.emplace_back(&row, f);
  }
  return used;
}

bool SpanSolver::add(const Element& x) {
  Vec v = lift(x);
  auto used = reduce(v);
  if (v.empty()) return false;
  std::vector<Scalar> combo(basis_.size() + 1);
  combo.back() = Scalar(1);
  for (const auto& [row, f] : used)
    for (std::size_t i = 0; i < row->combo.size(); ++i) combo[i] -= f * row->combo[i];
  basis_.push_back(x);
  for (auto& [pivot, row] : rows_) row.combo.resize(basis_.size());
  Monomial lead = v.begin()->first;
  rows_.emplace(std::move(lead), Row{std::move(v), std::move(combo)});
  return true;
}

std::optional<std::vector<Scalar>> SpanSolver::coordinates(const Element& x) {
  Vec v = lift(x);
  auto used = reduce(v);
  if (!v.empty()) return std::nullopt;
  std::vector<Scalar> coords(basis_.size());
  for (const auto& [row, f] : used)
    for (std::size_t i = 0; i < row->combo.size(); ++i) coords[i] += f * row->combo[i];
  return coords;
}

}  // namespace diffhopf
