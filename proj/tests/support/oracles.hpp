#pragma once

// Independent recomputations used to check library output. None of these
// call the routine they are checking.

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include "diffhopf/comodule.hpp"

namespace oracle {

using namespace diffhopf;

/// Change of basis: the comodule with matrix P A P^{-1}.
inline Comodule conjugate(const Comodule& v, const ScalarMatrix& p) {
  const ScalarMatrix pinv = *inverse(p);
  const std::size_t n = v.dim();
  ElementMatrix m(n, std::vector<Element>(n, Element(v.hopf->ring())));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l)
          if (!p[i][k].is_zero() && !pinv[l][j].is_zero()) m[i][j] += v.matrix[k][l].scaled(p[i][k] * pinv[l][j]);
  return Comodule::make(v.hopf, std::move(m));
}

/// V^(p) by applying the derivation of K[d] (x) V (x) A to rho(v_j) s times,
/// d(d^q v (x) a) = d^{q+1} v (x) a + d^q v (x) d(a), and reading off the
/// coefficient of d^q v_i. No binomial coefficients are used.
inline ElementMatrix prolong_by_derivation(const Comodule& v, std::uint32_t p) {
  const std::size_t n = v.dim();
  const RingPtr& ring = v.hopf->ring();
  ElementMatrix out(n * (p + 1), std::vector<Element>(n * (p + 1), Element(ring)));
  for (std::size_t j = 0; j < n; ++j) {
    std::map<std::pair<std::uint32_t, std::size_t>, Element> rho;
    for (std::size_t i = 0; i < n; ++i) rho.emplace(std::make_pair(0u, i), v.matrix[i][j]);
    for (std::uint32_t s = 0; s <= p; ++s) {
      for (const auto& [key, a] : rho) out[key.first * n + key.second][s * n + j] = a;
      std::map<std::pair<std::uint32_t, std::size_t>, Element> next;
      for (const auto& [key, a] : rho) {
        auto up = std::make_pair(key.first + 1, key.second);
        next.try_emplace(up, Element(ring)).first->second += a;
        next.try_emplace(key, Element(ring)).first->second += a.derive();
      }
      rho = std::move(next);
    }
  }
  return out;
}

/// Solution space of A_W phi = phi A_V assembled column by column: for each
/// unknown u the matrix A_W E_u - E_u A_V, expanded over monomials sorted
/// ascending with unknowns in a shuffled order, then eliminated densely.
class HomSystem {
 public:
  HomSystem(const Comodule& v, const Comodule& w, std::mt19937& rng) : n_(v.dim()), m_(w.dim()) {
    const std::size_t unknowns = n_ * m_;
    perm_.resize(unknowns);
    std::iota(perm_.begin(), perm_.end(), 0);
    std::shuffle(perm_.begin(), perm_.end(), rng);
    const RingPtr& ring = v.hopf->ring();
    for (std::size_t i = 0; i < m_; ++i)
      for (std::size_t j = 0; j < n_; ++j) {
        // Entry (i,j) of A_W E_u - E_u A_V for every u = (k,l).
        std::vector<Element> entry(unknowns, Element(ring));
        for (std::size_t k = 0; k < m_; ++k)
          for (std::size_t l = 0; l < n_; ++l) {
            Element e(ring);
            if (l == j) e += w.matrix[i][k];
            if (k == i) e -= v.matrix[l][j];
            entry[perm_[k * n_ + l]] = e;
          }
        std::vector<std::uint32_t> den(ring->num_denominators(), 0);
        for (const auto& e : entry)
          for (std::size_t d = 0; d < den.size(); ++d) den[d] = std::max(den[d], e.denominator_exponents()[d]);
        std::map<Monomial, std::vector<Scalar>> rows;  // ascending
        for (std::size_t c = 0; c < unknowns; ++c) {
          Poly num = entry[c].numerator();
          for (std::uint32_t d = 0; d < den.size(); ++d)
            num = num * ring->denominator(d).pow(den[d] - entry[c].denominator_exponents()[d]);
          for (const auto& t : num.terms()) rows.try_emplace(t.mono, std::vector<Scalar>(unknowns)).first->second[c] += t.coeff;
        }
        for (auto& [mono, row] : rows) eqs_.push_back(std::move(row));
      }
    rank_ = eliminate(eqs_, unknowns);
  }

  std::size_t dimension() const { return n_ * m_ - rank_; }

  /// Whether the morphism matrix (given in the natural unknown order) solves the system.
  bool solves(const ScalarMatrix& phi) const {
    std::vector<Scalar> x(n_ * m_);
    for (std::size_t k = 0; k < m_; ++k)
      for (std::size_t l = 0; l < n_; ++l) x[perm_[k * n_ + l]] = phi[k][l];
    for (const auto& row : eqs_) {
      Scalar s;
      for (std::size_t c = 0; c < row.size(); ++c) s += row[c] * x[c];
      if (!s.is_zero()) return false;
    }
    return true;
  }

  /// Rank of a set of vectors by the same elimination.
  static std::size_t rank(std::vector<std::vector<Scalar>> rows, std::size_t cols) { return eliminate(rows, cols); }

 private:
  // Forward elimination, right-most column first.
  static std::size_t eliminate(std::vector<std::vector<Scalar>>& rows, std::size_t cols) {
    std::size_t r = 0;
    for (std::size_t c = cols; c-- > 0 && r < rows.size();) {
      std::size_t p = r;
      while (p < rows.size() && rows[p][c].is_zero()) ++p;
      if (p == rows.size()) continue;
      std::swap(rows[p], rows[r]);
      for (std::size_t i = r + 1; i < rows.size(); ++i) {
        if (rows[i][c].is_zero()) continue;
        const Scalar f = rows[i][c] / rows[r][c];
        for (std::size_t k = 0; k < cols; ++k) rows[i][k] -= f * rows[r][k];
      }
      ++r;
    }
    return r;
  }

  std::size_t n_, m_, rank_ = 0;
  std::vector<std::size_t> perm_;
  std::vector<std::vector<Scalar>> eqs_;
};

/// A small pool of comodules over one Hopf algebra, for random pairs.
inline std::vector<Comodule> gm_pool(const HopfPtr& gm) {
  const Comodule v = standard_rep(gm);
  const Comodule e = trivial_comodule(gm);
  const RingPtr& r = gm->ring();
  const Element one = Element::constant(r, Scalar(1));
  const Element a = Element::generator(r, 0).derive() * *Element::generator(r, 0).inverse();
  const Comodule u = Comodule::make(gm, {{one, a}, {Element(r), one}});
  return {e, v, dual(v), u, dual(u), direct_sum(v, e), direct_sum(u, v), tensor(v, u), prolong(v, 1), prolong(v, 2),
          tensor(v, v), direct_sum(e, e)};
}

}  // namespace oracle
