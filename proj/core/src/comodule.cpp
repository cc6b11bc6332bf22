#include "diffhopf/comodule.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "diffhopf/error.hpp"
#include "diffhopf/expr.hpp"

namespace diffhopf {

namespace {

std::string entry_name(std::size_t i, std::size_t j) {
  return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

void require_same_hopf(const Comodule& a, const Comodule& b) {
  if (a.hopf.get() != b.hopf.get()) throw Error(Errc::PresentationMismatch, "comodules over different Hopf algebras");
}

long binomial(std::uint32_t n, std::uint32_t k) {
  long r = 1;
  for (std::uint32_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

Element zero_of(const HopfPtr& h) { return Element(h->ring()); }

Poly lifted_numerator(const Element& x, const std::vector<std::uint32_t>& den) {
  Poly num = x.numerator();
  const auto& d = x.denominator_exponents();
  for (std::uint32_t i = 0; i < den.size(); ++i)
    if (den[i] > d[i]) num = num * x.ring()->denominator(i).pow(den[i] - d[i]);
  return num;
}

Element element_det(const ElementMatrix& m, const RingPtr& ring) {
  const std::size_t n = m.size();
  if (n == 0) return Element::constant(ring, Scalar(1));
  if (n == 1) return m[0][0];
  Element acc(ring);
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c].is_zero()) continue;
    ElementMatrix minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Element> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(std::move(row));
    }
    Element term = m[0][c] * element_det(minor, ring);
    acc = (c % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

Scalar evaluate(const Poly& p, const std::vector<Scalar>& point) {
  Scalar acc;
  for (const auto& t : p.terms()) {
    Scalar v = t.coeff;
    for (const auto& [key, e] : t.mono.factors())
      for (std::uint32_t k = 0; k < e; ++k) v *= point.at(Var::from_key(key).gen);
    acc += v;
  }
  return acc;
}

ScalarMatrix combine(const std::vector<ComoduleMorphism>& basis, const std::vector<Scalar>& lambda) {
  ScalarMatrix m(basis.front().matrix.size(), std::vector<Scalar>(basis.front().matrix.front().size()));
  for (std::size_t k = 0; k < basis.size(); ++k)
    for (std::size_t i = 0; i < m.size(); ++i)
      for (std::size_t j = 0; j < m[i].size(); ++j)
        if (!basis[k].matrix[i][j].is_zero()) m[i][j] += lambda[k] * basis[k].matrix[i][j];
  return m;
}

}  // namespace

Comodule Comodule::make(HopfPtr hopf, ElementMatrix matrix, std::vector<std::string> basis) {
  const std::size_t n = matrix.size();
  for (const auto& row : matrix) {
    if (row.size() != n) throw Error(Errc::InvalidArgument, "comodule matrix must be square");
    for (const auto& e : row)
      if (e.ring().get() != hopf->ring().get())
        throw Error(Errc::PresentationMismatch, "comodule entry lives in another presentation");
  }
  if (basis.empty())
    for (std::size_t i = 0; i < n; ++i) basis.push_back("v" + std::to_string(i + 1));
  if (basis.size() != n) throw Error(Errc::InvalidArgument, "basis labels do not match the dimension");
  return Comodule{std::move(hopf), std::move(matrix), std::move(basis)};
}

Report check_comodule(const Comodule& v) {
  Report r;
  const HopfAlgebra& h = *v.hopf;
  const std::size_t n = v.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Element& a = v.matrix[i][j];
      Element rhs(h.ring2());
      for (std::size_t k = 0; k < n; ++k)
        if (!v.matrix[i][k].is_zero() && !v.matrix[k][j].is_zero()) rhs += tensor_of({v.matrix[i][k], v.matrix[k][j]});
      const Element lhs = h.apply_delta(a);
      const std::string loc = entry_name(i, j);
      if (lhs != rhs)
        r.fail(Witness{"coassociativity", loc, "Delta(a" + loc + ") = sum_r a(i,r) (x) a(r,j)", to_string(lhs),
                       to_string(rhs)});
      const Scalar eps = h.apply_counit(a);
      const Scalar want(i == j ? 1 : 0);
      if (eps != want) r.fail(Witness{"counit", loc, "epsilon(a" + loc + ") = delta_ij", eps.to_string(), want.to_string()});
    }
  }
  return r;
}

Report verify_intertwiner(const ComoduleMorphism& phi) {
  require_same_hopf(phi.source, phi.target);
  const std::size_t n = phi.source.dim(), m = phi.target.dim();
  if (phi.matrix.size() != m || (m > 0 && phi.matrix.front().size() != n))
    throw Error(Errc::InvalidArgument, "morphism matrix has the wrong shape");
  Report r;
  const auto& av = phi.source.matrix;
  const auto& aw = phi.target.matrix;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Element lhs = zero_of(phi.source.hopf), rhs = zero_of(phi.source.hopf);
      for (std::size_t k = 0; k < m; ++k)
        if (!phi.matrix[k][j].is_zero()) lhs += aw[i][k].scaled(phi.matrix[k][j]);
      for (std::size_t l = 0; l < n; ++l)
        if (!phi.matrix[i][l].is_zero()) rhs += av[l][j].scaled(phi.matrix[i][l]);
      if (lhs != rhs)
        r.fail(Witness{"intertwining", entry_name(i, j), "(A_W phi)" + entry_name(i, j) + " = (phi A_V)" + entry_name(i, j),
                       to_string(lhs), to_string(rhs)});
    }
  }
  return r;
}

Comodule prolong(const Comodule& v, std::uint32_t p) {
  if (p == 0) throw Error(Errc::InvalidArgument, "prolongation order must be positive");
  const std::size_t n = v.dim();
  const std::size_t big = n * (p + 1);
  // derivs[k][i][j] = d^k a_ij
  std::vector<ElementMatrix> derivs{v.matrix};
  for (std::uint32_t k = 1; k <= p; ++k) {
    ElementMatrix next = derivs.back();
    for (auto& row : next)
      for (auto& e : row) e = e.derive();
    derivs.push_back(std::move(next));
  }
  ElementMatrix m(big, std::vector<Element>(big, zero_of(v.hopf)));
  for (std::uint32_t s = 0; s <= p; ++s)
    for (std::uint32_t q = 0; q <= s; ++q) {
      const Scalar c(binomial(s, q));
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m[q * n + i][s * n + j] = derivs[s - q][i][j].scaled(c);
    }
  std::vector<std::string> labels;
  for (std::uint32_t q = 0; q <= p; ++q)
    for (const auto& b : v.basis)
      labels.push_back(q == 0 ? b : (q == 1 ? "d(" + b + ")" : "d^" + std::to_string(q) + "(" + b + ")"));
  return Comodule::make(v.hopf, std::move(m), std::move(labels));
}

ComoduleMorphism prolong_morphism(const ComoduleMorphism& phi, std::uint32_t p) {
  const std::size_t m = phi.target.dim(), n = phi.source.dim();
  ScalarMatrix big(m * (p + 1), std::vector<Scalar>(n * (p + 1)));
  for (std::uint32_t q = 0; q <= p; ++q)
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j) big[q * m + i][q * n + j] = phi.matrix[i][j];
  return ComoduleMorphism{prolong(phi.source, p), prolong(phi.target, p), std::move(big)};
}

Comodule tensor(const Comodule& v, const Comodule& w) {
  require_same_hopf(v, w);
  const std::size_t n = v.dim(), m = w.dim();
  ElementMatrix t(n * m, std::vector<Element>(n * m, zero_of(v.hopf)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (v.matrix[i][j].is_zero()) continue;
      for (std::size_t k = 0; k < m; ++k)
        for (std::size_t l = 0; l < m; ++l) t[i * m + k][j * m + l] = v.matrix[i][j] * w.matrix[k][l];
    }
  std::vector<std::string> labels;
  for (const auto& a : v.basis)
    for (const auto& b : w.basis) labels.push_back(a + "*" + b);
  return Comodule::make(v.hopf, std::move(t), std::move(labels));
}

Comodule direct_sum(const Comodule& v, const Comodule& w) {
  require_same_hopf(v, w);
  const std::size_t n = v.dim(), m = w.dim();
  ElementMatrix s(n + m, std::vector<Element>(n + m, zero_of(v.hopf)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) s[i][j] = v.matrix[i][j];
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) s[n + i][n + j] = w.matrix[i][j];
  std::vector<std::string> labels = v.basis;
  for (const auto& b : w.basis) {
    std::string l = b;
    while (std::find(labels.begin(), labels.end(), l) != labels.end()) l += "'";
    labels.push_back(l);
  }
  return Comodule::make(v.hopf, std::move(s), std::move(labels));
}

Comodule dual(const Comodule& v) {
  const std::size_t n = v.dim();
  ElementMatrix d(n, std::vector<Element>(n, zero_of(v.hopf)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) d[i][j] = v.hopf->apply_antipode(v.matrix[j][i]);
  std::vector<std::string> labels;
  for (const auto& b : v.basis) labels.push_back("dual(" + b + ")");
  return Comodule::make(v.hopf, std::move(d), std::move(labels));
}

Comodule sym_power(const Comodule& v, std::uint32_t s) {
  const std::size_t n = v.dim();
  std::vector<std::vector<std::size_t>> multisets;
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (cur.size() == s) {
      multisets.push_back(cur);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      cur.push_back(i);
      self(self, i);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  const std::size_t dim = multisets.size();
  ElementMatrix m(dim, std::vector<Element>(dim, zero_of(v.hopf)));
  for (std::size_t col = 0; col < dim; ++col) {
    const auto& js = multisets[col];
    for (std::size_t row = 0; row < dim; ++row) {
      std::vector<std::size_t> is = multisets[row];
      Element sum = zero_of(v.hopf);
      do {
        Element prod = Element::constant(v.hopf->ring(), Scalar(1));
        for (std::size_t k = 0; k < s && !prod.is_zero(); ++k) prod *= v.matrix[is[k]][js[k]];
        sum += prod;
      } while (std::next_permutation(is.begin(), is.end()));
      m[row][col] = std::move(sum);
    }
  }
  std::vector<std::string> labels;
  for (const auto& ms : multisets) {
    std::string l;
    for (auto i : ms) l += (l.empty() ? "" : "*") + v.basis[i];
    labels.push_back(ms.empty() ? "1" : l);
  }
  return Comodule::make(v.hopf, std::move(m), std::move(labels));
}

Comodule standard_rep(const HopfPtr& h) {
  const std::string& id = h->builtin_id();
  const RingPtr& r = h->ring();
  if (id.rfind("gl", 0) == 0) {
    const auto n = static_cast<std::size_t>(id[2] - '0');
    ElementMatrix m(n, std::vector<Element>(n, Element(r)));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m[i][j] = Element::generator(r, static_cast<std::uint32_t>(i * n + j));
    return Comodule::make(h, std::move(m));
  }
  if (id.rfind("gm", 0) == 0) return Comodule::make(h, {{Element::generator(r, 0)}});
  if (id.rfind("ga", 0) == 0) {
    const Element one = Element::constant(r, Scalar(1));
    return Comodule::make(h, {{one, Element::generator(r, 0)}, {Element(r), one}});
  }
  if (id == "trivial") return trivial_comodule(h);
  throw Error(Errc::InvalidArgument, "no standard representation for '" + h->name() + "'");
}

Comodule trivial_comodule(const HopfPtr& h) {
  return Comodule::make(h, {{Element::constant(h->ring(), Scalar(1))}}, {"e"});
}

Comodule det_comodule(const HopfPtr& h) {
  const Comodule w = standard_rep(h);
  return Comodule::make(h, {{element_det(w.matrix, h->ring())}}, {"det"});
}

Comodule det_twist(const Comodule& v, std::uint32_t r) {
  const Element d = v.hopf->apply_antipode(det_comodule(v.hopf).matrix[0][0]);
  const Comodule twist = Comodule::make(v.hopf, {{d.pow(r)}}, {r == 1 ? "det*" : "det*^" + std::to_string(r)});
  return tensor(twist, v);
}

Comodule pushforward(const Comodule& v, const HopfMorphism& f) {
  if (v.hopf.get() != f.source().get())
    throw Error(Errc::PresentationMismatch, "comodule is not over the morphism's source");
  ElementMatrix m;
  for (const auto& row : v.matrix) {
    std::vector<Element> out;
    for (const auto& e : row) out.push_back(f.apply(e));
    m.push_back(std::move(out));
  }
  return Comodule::make(f.target(), std::move(m), v.basis);
}

// ---------------------------------------------------------------------------
// Hom spaces

std::vector<ComoduleMorphism> hom_basis(const Comodule& v, const Comodule& w) {
  require_same_hopf(v, w);
  const std::size_t n = v.dim(), m = w.dim();
  const std::size_t unknowns = n * m;
  auto u = [n](std::size_t k, std::size_t l) { return k * n + l; };
  ScalarMatrix rows;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<std::pair<std::size_t, Element>> coeffs;
      for (std::size_t k = 0; k < m; ++k)
        if (!w.matrix[i][k].is_zero()) coeffs.emplace_back(u(k, j), w.matrix[i][k]);
      for (std::size_t l = 0; l < n; ++l)
        if (!v.matrix[l][j].is_zero()) coeffs.emplace_back(u(i, l), -v.matrix[l][j]);
      if (coeffs.empty()) continue;
      std::vector<std::uint32_t> den(v.hopf->ring()->num_denominators(), 0);
      for (const auto& [idx, e] : coeffs)
        for (std::size_t d = 0; d < den.size(); ++d) den[d] = std::max(den[d], e.denominator_exponents()[d]);
      std::map<Monomial, std::vector<Scalar>, std::greater<>> eqs;
      for (const auto& [idx, e] : coeffs) {
        const Poly lifted = lifted_numerator(e, den);
        for (const auto& t : lifted.terms()) {
          auto [it, fresh] = eqs.try_emplace(t.mono, std::vector<Scalar>(unknowns));
          it->second[idx] += t.coeff;
        }
      }
      for (auto& [mono, row] : eqs) rows.push_back(std::move(row));
    }
  }
  std::vector<ComoduleMorphism> out;
  for (const auto& sol : nullspace(std::move(rows), unknowns)) {
    ScalarMatrix phi(m, std::vector<Scalar>(n));
    for (std::size_t k = 0; k < m; ++k)
      for (std::size_t l = 0; l < n; ++l) phi[k][l] = sol[u(k, l)];
    out.push_back(ComoduleMorphism{v, w, std::move(phi)});
  }
  return out;
}

std::string verdict_name(SplitResult::Verdict v) {
  switch (v) {
    case SplitResult::Verdict::Splits: return "splits";
    case SplitResult::Verdict::NoSplitting: return "no splitting over K";
    case SplitResult::Verdict::Inconclusive: return "inconclusive";
  }
  return "";
}

SplitResult constant_split_check(const Comodule& v, std::uint32_t p, std::uint64_t seed) {
  if (p == 0) throw Error(Errc::InvalidArgument, "prolongation order must be positive");
  SplitResult res;
  Comodule copies = v;
  for (std::uint32_t k = 0; k < p; ++k) copies = direct_sum(copies, v);
  const Comodule prolonged = prolong(v, p);
  const auto homs = hom_basis(copies, prolonged);
  res.hom_dim = homs.size();
  res.report.note("hom_dim", std::to_string(homs.size()));
  const std::size_t big = prolonged.dim();

  auto finish = [&] {
    res.report.note("verdict", verdict_name(res.verdict));
    if (res.verdict != SplitResult::Verdict::Splits) res.report.pass = false;
    return res;
  };
  auto accept = [&](const ScalarMatrix& m) {
    if (determinant(m).is_zero()) return false;
    ComoduleMorphism phi{copies, prolonged, m};
    const Report check = verify_intertwiner(phi);
    if (!check.pass) {
      res.report.merge(check);
      return false;
    }
    res.witness = std::move(phi);
    res.verdict = SplitResult::Verdict::Splits;
    return true;
  };

  if (homs.empty() || big == 0) {
    if (big == 0) {
      res.verdict = SplitResult::Verdict::Splits;
      res.witness = ComoduleMorphism{copies, prolonged, {}};
    } else {
      res.verdict = SplitResult::Verdict::NoSplitting;
      res.det_polynomial = Poly();
    }
    return finish();
  }

  std::mt19937_64 rng(seed);
  if (homs.size() <= 6) {
    std::vector<std::vector<Poly>> generic(big, std::vector<Poly>(big));
    for (std::size_t k = 0; k < homs.size(); ++k)
      for (std::size_t i = 0; i < big; ++i)
        for (std::size_t j = 0; j < big; ++j)
          if (!homs[k].matrix[i][j].is_zero())
            generic[i][j] = generic[i][j] + Poly::of(Monomial::of(Var{static_cast<std::uint32_t>(k), 0}), homs[k].matrix[i][j]);
    const Poly det = determinant(generic);
    res.det_polynomial = det;
    if (det.is_zero()) {
      res.verdict = SplitResult::Verdict::NoSplitting;
      return finish();
    }
    // A nonzero polynomial has a non-root among few small integer points.
    for (int trial = 0; trial < 4096; ++trial) {
      const long range = 1L << std::min(20, 1 + trial / 16);
      std::uniform_int_distribution<long> dist(-range, range);
      std::vector<Scalar> lambda;
      for (std::size_t k = 0; k < homs.size(); ++k) lambda.emplace_back(dist(rng));
      if (evaluate(det, lambda).is_zero()) continue;
      if (accept(combine(homs, lambda))) break;
    }
  } else {
    for (int trial = 0; trial < 64; ++trial) {
      const long range = 1L << (1 + trial / 8);
      std::uniform_int_distribution<long> dist(-range, range);
      std::vector<Scalar> lambda;
      for (std::size_t k = 0; k < homs.size(); ++k) lambda.emplace_back(dist(rng));
      if (accept(combine(homs, lambda))) break;
    }
  }
  return finish();
}

// ---------------------------------------------------------------------------
// Representative functions

Comodule induced_comodule(const HopfPtr& h, const std::vector<Element>& basis) {
  SpanSolver solver(h->ring());
  for (const auto& b : basis)
    if (!solver.add(b)) throw Error(Errc::InvalidArgument, "basis elements are linearly dependent");
  const std::size_t n = basis.size();
  ElementMatrix m(n, std::vector<Element>(n, zero_of(h)));
  for (std::size_t j = 0; j < n; ++j) {
    for (const auto& [left, right] : split_tensor(h->apply_delta(basis[j]))) {
      auto coords = solver.coordinates(left);
      if (!coords) throw Error(Errc::InvalidArgument, "span is not closed under the coaction");
      for (std::size_t i = 0; i < n; ++i)
        if (!(*coords)[i].is_zero()) m[i][j] += right.scaled((*coords)[i]);
    }
  }
  std::vector<std::string> labels;
  for (const auto& b : basis) labels.push_back(to_string(b));
  return Comodule::make(h, std::move(m), std::move(labels));
}

OrbitModule orbit_module(const HopfPtr& h, const Element& f) {
  if (f.is_zero()) throw Error(Errc::ZeroElement, "orbit of the zero function");
  if (f.ring().get() != h->ring().get()) throw Error(Errc::PresentationMismatch, "element from another presentation");
  SpanSolver solver(h->ring());
  solver.add(f);
  for (const auto& [left, right] : split_tensor(h->apply_delta(f))) solver.add(left);
  std::vector<Element> basis = solver.basis();
  Comodule c = induced_comodule(h, basis);
  return OrbitModule{f, std::move(basis), std::move(c)};
}

CoordinateRep coordinate_rep(const OrbitModule& om) {
  const HopfPtr& h = om.comodule.hopf;
  const std::size_t n = om.basis.size();
  std::vector<Scalar> eps;
  for (const auto& b : om.basis) eps.push_back(h->apply_counit(b));
  std::size_t first = 0;
  while (first < n && eps[first].is_zero()) ++first;
  if (first == n) throw Error(Errc::ZeroElement, "every basis function vanishes at the identity");

  CoordinateRep rep;
  for (std::size_t k = 0; k < n; ++k) rep.order.push_back(k);
  std::swap(rep.order[0], rep.order[first]);

  ElementMatrix permuted(n, std::vector<Element>(n, zero_of(h)));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(om.comodule.basis[rep.order[i]]);
    for (std::size_t j = 0; j < n; ++j) permuted[i][j] = om.comodule.matrix[rep.order[i]][rep.order[j]];
  }
  rep.conjugation = identity_matrix(n);
  for (std::size_t j = 0; j < n; ++j) rep.conjugation[0][j] = eps[rep.order[j]];
  const ScalarMatrix inv = *inverse(rep.conjugation);

  ElementMatrix conj(n, std::vector<Element>(n, zero_of(h)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Element acc = zero_of(h);
      for (std::size_t k = 0; k < n; ++k) {
        if (rep.conjugation[i][k].is_zero()) continue;
        for (std::size_t l = 0; l < n; ++l)
          if (!inv[l][j].is_zero()) acc += permuted[k][l].scaled(rep.conjugation[i][k] * inv[l][j]);
      }
      conj[i][j] = std::move(acc);
    }
  rep.comodule = Comodule::make(h, std::move(conj), std::move(labels));
  // The first row of C c C^{-1} is the basis h C^{-1}: its first entry is
  // h_1 / eps(h_1) and entry k is h_k - eps(h_k)/eps(h_1) h_1.
  const std::size_t pos = static_cast<std::size_t>(std::find(rep.order.begin(), rep.order.end(), 0) - rep.order.begin());
  rep.row = 0;
  rep.col = pos;
  rep.scale = pos == 0 ? eps[0] : Scalar(1);
  return rep;
}

std::string coaction_string(const Comodule& v, std::size_t j) {
  std::string out;
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (v.matrix[i][j].is_zero()) continue;
    out += (out.empty() ? "" : " + ") + std::string("tensor(") + v.basis[i] + ", " + to_string(v.matrix[i][j]) + ")";
  }
  return out.empty() ? "0" : out;
}

RegularEmbedding regular_embedding(const Comodule& u) {
  RegularEmbedding emb;
  const std::size_t n = u.dim();
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Element> col;
    for (std::size_t i = 0; i < n; ++i) col.push_back(u.matrix[i][j]);
    emb.components.push_back(std::move(col));
    emb.coaction.push_back(coaction_string(u, j));
    for (std::size_t i = 0; i < n; ++i) {
      const Scalar e = u.hopf->apply_counit(u.matrix[i][j]);
      if (e != Scalar(i == j ? 1 : 0))
        emb.report.fail(Witness{"counit", entry_name(i, j), "(id (x) epsilon)rho(" + u.basis[j] + ") = " + u.basis[j],
                                e.to_string(), i == j ? "1" : "0"});
    }
  }
  return emb;
}

LSpace linear_comodule_L(std::uint32_t n, std::uint32_t r, std::uint32_t s, std::uint32_t p, FieldKind field) {
  if (n < 1 || n > 3 || s > 3 || p > 3)
    throw Error(Errc::BoundsExceeded, "L_{r,s,p} is limited to 1 <= n <= 3, s <= 3, p <= 3");
  const HopfPtr h = builtin(Builtin::GL, field, n);
  const RingPtr& ring = h->ring();
  const std::size_t vars = static_cast<std::size_t>(n) * n * (p + 1);
  std::size_t dim = 0, binom = 1;  // sum over k <= s of C(vars + k - 1, k)
  for (std::uint32_t k = 0; k <= s; ++k) {
    if (k > 0) binom = binom * (vars + k - 1) / k;
    dim += binom;
  }
  if (dim > 400) throw Error(Errc::BoundsExceeded, "L_{r,s,p} would have dimension " + std::to_string(dim));

  std::vector<Element> basis;
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t q = 0; q <= p; ++q)
      for (std::uint32_t j = 0; j < n; ++j) basis.push_back(Element::variable(ring, Var{i * n + j, q}));
  LSpace out{induced_comodule(h, basis), {}, {}, {}};

  const Comodule v = standard_rep(h);
  const Comodule vp = p == 0 ? v : prolong(v, p);
  Comodule copies = vp;
  for (std::uint32_t i = 1; i < n; ++i) copies = direct_sum(copies, vp);
  out.iso = ComoduleMorphism{copies, out.l01p, identity_matrix(copies.dim())};
  out.iso_report = verify_intertwiner(out.iso);

  Comodule l0 = sym_power(out.l01p, 0);
  for (std::uint32_t k = 1; k <= s; ++k) l0 = direct_sum(l0, sym_power(out.l01p, k));
  out.l = r == 0 ? l0 : det_twist(l0, r);
  return out;
}

}  // namespace diffhopf
