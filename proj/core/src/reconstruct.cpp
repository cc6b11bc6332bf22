#include "diffhopf/reconstruct.hpp"

#include <algorithm>
#include <random>

#include "diffhopf/error.hpp"
#include "diffhopf/expr.hpp"

namespace diffhopf {

namespace {

std::vector<Scalar> unit_vector(std::size_t n, std::size_t k) {
  std::vector<Scalar> v(n);
  v.at(k) = Scalar(1);
  return v;
}

std::uint32_t max_order(const Element& x) {
  std::uint32_t ord = 0;
  for (const auto& t : x.numerator().terms())
    for (const auto& [key, e] : t.mono.factors()) ord = std::max(ord, Var::from_key(key).order);
  return ord;
}

}  // namespace

// ---------------------------------------------------------------------------
// ReconElement

ReconElement ReconElement::of(Symbol s, Scalar c) {
  ReconElement x;
  x.add(s, c);
  return x;
}

void ReconElement::add(const Symbol& s, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(s, c);
  if (fresh) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

ReconElement operator+(const ReconElement& a, const ReconElement& b) {
  ReconElement r = a;
  for (const auto& [s, c] : b.terms_) r.add(s, c);
  return r;
}

ReconElement operator-(const ReconElement& a, const ReconElement& b) { return a + b.scaled(Scalar(-1)); }

ReconElement ReconElement::scaled(const Scalar& c) const {
  ReconElement r;
  for (const auto& [s, x] : terms_) r.add(s, x * c);
  return r;
}

// ---------------------------------------------------------------------------
// Registry

Registry::Registry(HopfPtr hopf) : hopf_(std::move(hopf)) {}

std::optional<std::size_t> Registry::find(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t Registry::require(const std::string& name) const {
  auto k = find(name);
  if (!k) throw Error(Errc::UnknownComodule, "no comodule named '" + name + "'");
  return *k;
}

std::size_t Registry::insert(std::string name, Comodule c) {
  if (c.hopf.get() != hopf_.get()) throw Error(Errc::PresentationMismatch, "comodule '" + name + "' is over another Hopf algebra");
  if (index_.count(name)) throw Error(Errc::InvalidArgument, "duplicate comodule name '" + name + "'");
  comodules_.push_back(std::move(c));
  names_.push_back(name);
  index_.emplace(std::move(name), comodules_.size() - 1);
  return comodules_.size() - 1;
}

std::size_t Registry::add(std::string name, Comodule c) {
  const Report r = check_comodule(c);
  if (!r.pass) throw Error(Errc::InvalidArgument, "comodule '" + name + "' fails the comodule axioms");
  return insert(std::move(name), std::move(c));
}

void Registry::add_morphism(std::string name, std::size_t source, std::size_t target, ScalarMatrix matrix) {
  const Comodule& s = comodule(source);
  const Comodule& t = comodule(target);
  if (matrix.size() != t.dim() || std::any_of(matrix.begin(), matrix.end(), [&](const auto& row) { return row.size() != s.dim(); }))
    throw Error(Errc::InvalidArgument, "morphism '" + name + "' has the wrong shape");
  morphisms_.push_back(RegistryMorphism{std::move(name), source, target, std::move(matrix)});
}

std::size_t Registry::tensor_index(std::size_t a, std::size_t b) {
  const std::string n = "tensor(" + name(a) + "," + name(b) + ")";
  if (auto k = find(n)) return *k;
  return insert(n, tensor(comodule(a), comodule(b)));
}

std::size_t Registry::dual_index(std::size_t a) {
  const std::string n = "dual(" + name(a) + ")";
  if (auto k = find(n)) return *k;
  return insert(n, dual(comodule(a)));
}

std::size_t Registry::prolong_index(std::size_t a, std::uint32_t p) {
  const std::string n = "prolong(" + name(a) + "," + std::to_string(p) + ")";
  if (auto k = find(n)) return *k;
  return insert(n, prolong(comodule(a), p));
}

std::size_t Registry::trivial_index() {
  if (auto k = find("trivial")) return *k;
  return insert("trivial", trivial_comodule(hopf_));
}

void Registry::close(const Closure& c) {
  std::vector<std::size_t> layer(size());
  for (std::size_t k = 0; k < layer.size(); ++k) layer[k] = k;
  if (c.dual) {
    const std::size_t n = layer.size();
    for (std::size_t k = 0; k < n; ++k) layer.push_back(dual_index(layer[k]));
  }
  if (c.prolong > 0) {
    const std::size_t n = layer.size();
    for (std::size_t k = 0; k < n; ++k)
      for (std::uint32_t p = 1; p <= c.prolong; ++p) layer.push_back(prolong_index(layer[k], p));
  }
  if (c.tensor_factors >= 2) {
    const std::size_t n = layer.size();
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a; b < n; ++b) tensor_index(layer[a], layer[b]);
  }
  if (!c.standard_morphisms) return;
  const std::size_t n = size();
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t d = comodule(k).dim();
    if (auto p = find("prolong(" + name(k) + ",1)")) {
      ScalarMatrix inc(2 * d, std::vector<Scalar>(d)), proj(d, std::vector<Scalar>(2 * d));
      for (std::size_t i = 0; i < d; ++i) {
        inc[i][i] = Scalar(1);
        proj[i][d + i] = Scalar(1);
      }
      add_morphism("inclusion(" + name(k) + ")", k, *p, std::move(inc));
      add_morphism("projection(" + name(k) + ")", *p, k, std::move(proj));
    }
    if (auto dk = find("dual(" + name(k) + ")")) {
      if (auto t = find("tensor(" + name(k) + "," + name(*dk) + ")")) {
        const std::size_t e = trivial_index();
        ScalarMatrix ev(1, std::vector<Scalar>(d * d)), coev(d * d, std::vector<Scalar>(1));
        for (std::size_t i = 0; i < d; ++i) {
          ev[0][i * d + i] = Scalar(1);
          coev[i * d + i][0] = Scalar(1);
        }
        add_morphism("evaluation(" + name(k) + ")", *t, e, std::move(ev));
        add_morphism("coevaluation(" + name(k) + ")", e, *t, std::move(coev));
      }
    }
  }
}

std::vector<Symbol> Registry::symbols() const {
  std::vector<Symbol> out;
  for (std::size_t k = 0; k < size(); ++k)
    for (std::size_t j = 0; j < comodule(k).dim(); ++j)
      for (std::size_t i = 0; i < comodule(k).dim(); ++i) out.push_back(Symbol{k, j, i});
  return out;
}

// ---------------------------------------------------------------------------
// Printing and Phi

std::string to_string(const Symbol& s, const Registry& reg) {
  if (s.is_unit()) return "1";
  return "a_" + reg.name(s.comodule) + "(" + std::to_string(s.j + 1) + "," + std::to_string(s.i + 1) + ")";
}

std::string to_string(const ReconElement& x, const Registry& reg) {
  if (x.is_zero()) return "0";
  std::string out;
  for (const auto& [s, c] : x.terms()) {
    std::string coeff = c.to_string();
    bool negative = !coeff.empty() && coeff[0] == '-' && !c.needs_parens_as_factor();
    if (negative) coeff.erase(0, 1);
    if (c.needs_parens_as_factor()) coeff = "(" + coeff + ")";
    std::string term;
    if (s.is_unit()) term = coeff;
    else term = (coeff == "1" ? "" : coeff + "*") + to_string(s, reg);
    if (out.empty()) out = (negative ? "-" : "") + term;
    else out += (negative ? " - " : " + ") + term;
  }
  return out;
}

Element phi(const Registry& reg, const Symbol& s) {
  if (s.is_unit()) return Element::constant(reg.hopf()->ring(), Scalar(1));
  if (s.comodule >= reg.size()) throw Error(Errc::UnknownComodule, "symbol refers to an unknown comodule");
  const Comodule& c = reg.comodule(s.comodule);
  if (s.i >= c.dim() || s.j >= c.dim()) throw Error(Errc::IndexOutOfRange, "symbol index out of range for " + reg.name(s.comodule));
  return c.matrix[s.i][s.j];
}

Element phi(const Registry& reg, const ReconElement& x) {
  Element acc(reg.hopf()->ring());
  for (const auto& [s, c] : x.terms()) acc += phi(reg, s).scaled(c);
  return acc;
}

Element phi(const Registry& reg, const ReconTensor& x) {
  Element acc(reg.hopf()->ring2());
  for (const auto& [legs, c] : x) acc += tensor_of({phi(reg, legs.first), phi(reg, legs.second)}).scaled(c);
  return acc;
}

// ---------------------------------------------------------------------------
// Operations

ReconElement pairing(const Registry& reg, std::size_t v, const std::vector<Scalar>& vec,
                     const std::vector<Scalar>& covec) {
  const std::size_t n = reg.comodule(v).dim();
  if (vec.size() != n || covec.size() != n) throw Error(Errc::IndexOutOfRange, "coordinate vector has the wrong length");
  ReconElement x;
  for (std::size_t j = 0; j < n; ++j) {
    if (vec[j].is_zero()) continue;
    for (std::size_t i = 0; i < n; ++i)
      if (!covec[i].is_zero()) x = x + ReconElement::of(Symbol{v, j, i}, vec[j] * covec[i]);
  }
  return x;
}

ReconElement tilde_product(Registry& reg, const ReconElement& x, const ReconElement& y) {
  ReconElement out;
  for (const auto& [s, c] : x.terms())
    for (const auto& [t, d] : y.terms()) {
      if (s.is_unit() || t.is_unit()) {
        out = out + ReconElement::of(s.is_unit() ? t : s, c * d);
        continue;
      }
      const std::size_t m = reg.comodule(t.comodule).dim();
      const std::size_t k = reg.tensor_index(s.comodule, t.comodule);
      out = out + ReconElement::of(Symbol{k, s.j * m + t.j, s.i * m + t.i}, c * d);
    }
  return out;
}

ReconElement tilde_derive(Registry& reg, const ReconElement& x) {
  ReconElement out;
  for (const auto& [s, c] : x.terms()) {
    if (s.is_unit()) continue;
    const std::size_t n = reg.comodule(s.comodule).dim();
    const std::size_t w = reg.prolong_index(s.comodule, 1);
    // F(u_i) on the basis (v_k, dv_k): u_i(v_k) and d(u_i(v_k)).
    std::vector<Scalar> f(2 * n);
    for (std::size_t k = 0; k < n; ++k) {
      const Scalar value(k == s.i ? 1 : 0);
      f[k] = value;
      f[n + k] = value.derive();
    }
    out = out + pairing(reg, w, unit_vector(2 * n, n + s.j), f).scaled(c);
  }
  return out;
}

ReconTensor tilde_delta(const Registry& reg, const ReconElement& x) {
  ReconTensor out;
  auto add = [&](const Symbol& a, const Symbol& b, const Scalar& c) {
    auto [it, fresh] = out.try_emplace({a, b}, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) out.erase(it);
    }
  };
  for (const auto& [s, c] : x.terms()) {
    if (s.is_unit()) {
      add(s, s, c);
      continue;
    }
    for (std::size_t k = 0; k < reg.comodule(s.comodule).dim(); ++k)
      add(Symbol{s.comodule, k, s.i}, Symbol{s.comodule, s.j, k}, c);
  }
  return out;
}

ReconElement tilde_antipode(Registry& reg, const ReconElement& x) {
  ReconElement out;
  for (const auto& [s, c] : x.terms()) {
    if (s.is_unit()) {
      out = out + ReconElement::of(s, c);
      continue;
    }
    out = out + ReconElement::of(Symbol{reg.dual_index(s.comodule), s.i, s.j}, c);
  }
  return out;
}

Scalar tilde_counit(const ReconElement& x) {
  Scalar acc;
  for (const auto& [s, c] : x.terms())
    if (s.is_unit() || s.i == s.j) acc += c;
  return acc;
}

ReconElement tilde_antipode_contract(Registry& reg, const ReconTensor& t) {
  ReconElement out;
  for (const auto& [legs, c] : t)
    out = out + tilde_product(reg, tilde_antipode(reg, ReconElement::of(legs.first)), ReconElement::of(legs.second)).scaled(c);
  return out;
}

ReconElement tilde_counit_contract(const ReconTensor& t) {
  ReconElement out;
  for (const auto& [legs, c] : t) out = out + ReconElement::of(legs.first, c * tilde_counit(ReconElement::of(legs.second)));
  return out;
}

ReconTensor tilde_delta_in_basis(const Registry& reg, std::size_t v, const std::vector<Scalar>& vec,
                                 const std::vector<Scalar>& covec, const ScalarMatrix& p) {
  const std::size_t n = reg.comodule(v).dim();
  const auto pinv = inverse(p);
  if (!pinv) throw Error(Errc::InvalidArgument, "basis change is not invertible");
  ReconTensor out;
  // w_m = sum_k p[k][m] v_k, dual basis w_m* = sum_l pinv[m][l] u_l.
  for (std::size_t m = 0; m < n; ++m) {
    std::vector<Scalar> wm(n), wm_dual(n);
    for (std::size_t k = 0; k < n; ++k) {
      wm[k] = p[k][m];
      wm_dual[k] = (*pinv)[m][k];
    }
    const ReconElement left = pairing(reg, v, wm, covec);
    const ReconElement right = pairing(reg, v, vec, wm_dual);
    for (const auto& [a, c] : left.terms())
      for (const auto& [b, d] : right.terms()) {
        auto [it, fresh] = out.try_emplace({a, b}, c * d);
        if (!fresh) {
          it->second += c * d;
          if (it->second.is_zero()) out.erase(it);
        }
      }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Checks

Report check_relations(const Registry& reg) {
  Report r;
  std::size_t checked = 0;
  for (const auto& mor : reg.morphisms()) {
    const std::size_t nv = reg.comodule(mor.source).dim(), nw = reg.comodule(mor.target).dim();
    for (std::size_t i = 0; i < nw; ++i)
      for (std::size_t j = 0; j < nv; ++j) {
        // a_V(v_j (x) phi*(w_i*)) = a_W(phi(v_j) (x) w_i*)
        std::vector<Scalar> pullback(nv), image(nw);
        for (std::size_t l = 0; l < nv; ++l) pullback[l] = mor.matrix[i][l];
        for (std::size_t k = 0; k < nw; ++k) image[k] = mor.matrix[k][j];
        const ReconElement lhs = pairing(reg, mor.source, unit_vector(nv, j), pullback);
        const ReconElement rhs = pairing(reg, mor.target, image, unit_vector(nw, i));
        const Element pl = phi(reg, lhs), pr = phi(reg, rhs);
        ++checked;
        if (pl != pr)
          r.fail(Witness{"morphism relation",
                         "(" + reg.name(mor.source) + ", " + reg.name(mor.target) + ", " + std::to_string(i + 1) + ", " +
                             std::to_string(j + 1) + ")",
                         "a_V(v (x) " + mor.name + "*(u)) = a_W(" + mor.name + "(v) (x) u)", to_string(pl), to_string(pr)});
      }
  }
  for (std::size_t v = 0; v < reg.size(); ++v) {
    auto p = reg.find("prolong(" + reg.name(v) + ",1)");
    if (!p) continue;
    const std::size_t n = reg.comodule(v).dim();
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < n; ++i) {
        const Element lhs = phi(reg, Symbol{v, j, i});
        const Element rhs = phi(reg, Symbol{*p, n + j, n + i});
        ++checked;
        if (lhs != rhs)
          r.fail(Witness{"prolongation relation",
                         "(" + reg.name(*p) + ", " + reg.name(v) + ", " + std::to_string(i + 1) + ", " + std::to_string(j + 1) + ")",
                         "a_V(v (x) u) = a_V(1)(dv (x) pi*(u))", to_string(lhs), to_string(rhs)});
      }
  }
  r.note("relations", std::to_string(checked));
  return r;
}

Report check_reconstruction(Registry& reg, std::size_t random_elements, std::uint64_t seed) {
  Report r;
  const HopfAlgebra& h = *reg.hopf();
  const std::vector<Symbol> symbols = reg.symbols();
  const std::size_t base = reg.size();
  const RingPtr& ring = h.ring();
  const Element one = Element::constant(ring, Scalar(1));

  auto expect = [&](bool ok, const std::string& check, const std::string& where, const std::string& identity,
                    auto&& lhs, auto&& rhs) {
    if (!ok) r.fail(Witness{check, where, identity, lhs(), rhs()});
  };

  auto laws = [&](const ReconElement& x, const std::string& where) {
    const Element px = phi(reg, x);
    const Element dx = phi(reg, tilde_derive(reg, x));
    expect(dx == px.derive(), "derivation", where, "Phi(d~(x)) = d(Phi(x))", [&] { return to_string(dx); },
           [&] { return to_string(px.derive()); });
    const ReconTensor delta = tilde_delta(reg, x);
    const Element pdelta = phi(reg, delta);
    const Element want_delta = h.apply_delta(px);
    expect(pdelta == want_delta, "Delta", where, "(Phi (x) Phi)(Delta~(x)) = Delta(Phi(x))",
           [&] { return to_string(pdelta); }, [&] { return to_string(want_delta); });
    const Element ps = phi(reg, tilde_antipode(reg, x));
    const Element want_s = h.apply_antipode(px);
    expect(ps == want_s, "antipode", where, "Phi(S~(x)) = S(Phi(x))", [&] { return to_string(ps); },
           [&] { return to_string(want_s); });
    const Scalar eps = tilde_counit(x), want_eps = h.apply_counit(px);
    expect(eps == want_eps, "counit", where, "eps~(x) = epsilon(Phi(x))", [&] { return eps.to_string(); },
           [&] { return want_eps.to_string(); });
    const Element cl = phi(reg, tilde_counit_contract(delta));
    expect(cl == px, "counit law", where, "m(id (x) eps~)Delta~(x) = x", [&] { return to_string(cl); },
           [&] { return to_string(px); });
    const Element al = phi(reg, tilde_antipode_contract(reg, delta));
    const Element want_al = one.scaled(eps);
    expect(al == want_al, "antipode law", where, "m(S~ (x) id)Delta~(x) = eps~(x)1", [&] { return to_string(al); },
           [&] { return to_string(want_al); });
  };

  for (const auto& s : symbols) laws(ReconElement::of(s), to_string(s, reg));

  std::mt19937_64 rng(seed);
  auto pick = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };
  auto small_rational = [&] {
    Rational q(static_cast<long>(pick(11)) - 5, static_cast<long>(pick(4)) + 1);
    q.canonicalize();
    return Scalar(q);
  };
  // Random elements use symbols of comodules of dimension <= 3 so that
  // products stay small.
  std::vector<Symbol> small;
  for (const auto& s : symbols)
    if (reg.comodule(s.comodule).dim() <= 3) small.push_back(s);
  std::vector<ReconElement> randoms;
  for (std::size_t k = 0; k < random_elements && !small.empty(); ++k) {
    ReconElement x = ReconElement::constant(pick(2) ? small_rational() : Scalar(0));
    const std::size_t terms = 1 + pick(3);
    for (std::size_t t = 0; t < terms; ++t) x = x + ReconElement::of(small[pick(small.size())], small_rational());
    randoms.push_back(std::move(x));
  }
  for (std::size_t k = 0; k < randoms.size(); ++k) {
    const ReconElement& x = randoms[k];
    const std::string where = "random #" + std::to_string(k + 1);
    laws(x, where);
    const ReconElement& y = randoms[(k + 1) % randoms.size()];
    const Element sum = phi(reg, x + y), want_sum = phi(reg, x) + phi(reg, y);
    expect(sum == want_sum, "Phi additive", where, "Phi(x + y) = Phi(x) + Phi(y)", [&] { return to_string(sum); },
           [&] { return to_string(want_sum); });
    const Element prod = phi(reg, tilde_product(reg, x, y)), want_prod = phi(reg, x) * phi(reg, y);
    expect(prod == want_prod, "Phi multiplicative", where, "Phi(x y) = Phi(x) Phi(y)", [&] { return to_string(prod); },
           [&] { return to_string(want_prod); });
  }

  // Basis-change independence of Delta~ on the original comodules.
  for (std::size_t v = 0; v < base; ++v) {
    const std::size_t n = reg.comodule(v).dim();
    if (n == 0 || n > 9) continue;
    ScalarMatrix p;
    do {
      p.assign(n, std::vector<Scalar>(n));
      for (auto& row : p)
        for (auto& x : row) x = small_rational();
    } while (determinant(p).is_zero());
    std::vector<Scalar> vec(n), covec(n);
    for (std::size_t k = 0; k < n; ++k) {
      vec[k] = small_rational();
      covec[k] = small_rational();
    }
    const Element changed = phi(reg, tilde_delta_in_basis(reg, v, vec, covec, p));
    const Element standard = phi(reg, tilde_delta(reg, pairing(reg, v, vec, covec)));
    expect(changed == standard, "basis independence", reg.name(v), "Delta~ in a changed basis = Delta~",
           [&] { return to_string(changed); }, [&] { return to_string(standard); });
  }

  r.note("symbols", std::to_string(symbols.size()));
  r.note("random_elements", std::to_string(randoms.size()));
  r.note("comodules", std::to_string(reg.size()));
  return r;
}

Report check_generation(Registry& reg, const std::vector<GenerationTarget>& targets, std::uint32_t degree) {
  Report r;
  const RingPtr& ring = reg.hopf()->ring();
  // Generators: a K-basis of the Phi-images of symbols, then of their derivatives.
  struct Gen {
    Element value;
    std::string text;
  };
  std::vector<Gen> gens;
  std::vector<ReconElement> gen_exprs;
  bool gens_ready = false;
  std::uint32_t derived = 0;

  auto build = [&](std::uint32_t order) {
    if (!gens_ready) {
      SpanSolver s(ring);
      s.add(Element::constant(ring, Scalar(1)));
      for (const auto& sym : reg.symbols()) {
        const Element v = phi(reg, sym);
        if (!v.is_zero() && s.add(v)) {
          gens.push_back(Gen{v, to_string(sym, reg)});
          gen_exprs.push_back(ReconElement::of(sym));
        }
      }
      gens_ready = true;
    }
    std::vector<ReconElement> frontier = gen_exprs;
    for (; derived < order; ++derived) {
      std::vector<ReconElement> next;
      for (const auto& e : frontier) next.push_back(tilde_derive(reg, e));
      for (const auto& e : next) {
        const Element v = phi(reg, e);
        if (!v.is_zero()) gens.push_back(Gen{v, to_string(e, reg)});
      }
      frontier = std::move(next);
    }
  };

  for (std::size_t t = 0; t < targets.size(); ++t) {
    const GenerationTarget& g = targets[t];
    const std::string target_text = to_string(g.target);
    if (g.expression) {
      const Element v = phi(reg, *g.expression);
      if (v != g.target) {
        r.fail(Witness{"NotGenerated", target_text, "Phi(expression) = target", to_string(v), target_text});
        return r;
      }
      r.note(target_text, to_string(*g.expression, reg));
      continue;
    }
    build(max_order(g.target));
    std::optional<std::string> found;
    SpanSolver span(ring);
    std::vector<std::string> texts;
    auto try_add = [&](const Element& v, std::string text) {
      if (span.add(v)) texts.push_back(std::move(text));
    };
    try_add(Element::constant(ring, Scalar(1)), "1");
    std::vector<std::pair<Element, std::string>> layer{{Element::constant(ring, Scalar(1)), ""}};
    for (std::uint32_t d = 1; d <= degree && !found; ++d) {
      std::vector<std::pair<Element, std::string>> next;
      for (const auto& [v, text] : layer)
        for (const auto& gen : gens) {
          Element prod = v * gen.value;
          std::string ptext = text.empty() ? gen.text : text + "*" + gen.text;
          try_add(prod, ptext);
          next.emplace_back(std::move(prod), std::move(ptext));
        }
      layer = std::move(next);
      if (auto c = span.coordinates(g.target)) {
        std::string expr;
        for (std::size_t k = 0; k < c->size(); ++k) {
          if ((*c)[k].is_zero()) continue;
          const std::string coeff = (*c)[k] == Scalar(1) ? "" : "(" + (*c)[k].to_string() + ")*";
          expr += (expr.empty() ? "" : " + ") + coeff + texts[k];
        }
        found = expr.empty() ? "0" : expr;
      }
    }
    if (!found && degree == 0 && g.target == Element::constant(ring, Scalar(1))) found = "1";
    if (!found) {
      r.fail(Witness{"NotGenerated", target_text, "target in the d-K-algebra generated by Phi-images", target_text,
                     "not found up to degree " + std::to_string(degree)});
      return r;
    }
    r.note(target_text, *found);
  }
  return r;
}

}  // namespace diffhopf
