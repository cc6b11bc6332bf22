#include "diffhopf/hopf.hpp"

#include <mutex>
#include <tuple>

#include "diffhopf/error.hpp"
#include "diffhopf/expr.hpp"

namespace diffhopf {

namespace {

// g -> g placed in leg c of `power`.
RingHom leg_inclusion(const RingPtr& base, const RingPtr& power, std::uint32_t c) {
  std::vector<Element> images;
  for (std::uint32_t j = 0; j < base->num_generators(); ++j)
    images.push_back(to_leg(Element::generator(base, j), power, c));
  return RingHom(base, power, std::move(images));
}

// g -> epsilon(g) * 1, as an endomorphism of the ring.
RingHom unit_counit(const RingPtr& ring, const std::vector<Scalar>& counit) {
  std::vector<Element> images;
  for (const auto& c : counit) images.push_back(Element::constant(ring, c));
  return RingHom(ring, ring, std::move(images));
}

RingHom pair_hom(const RingPtr& power, const RingHom& a, const RingHom& b) {
  return RingHom::on_tensor_power(power, {&a, &b});
}

}  // namespace

HopfAlgebra::HopfAlgebra(Spec spec, RingHom delta, RingHom antipode, RingHom counit)
    : name_(std::move(spec.name)),
      builtin_id_(std::move(spec.builtin_id)),
      ring_(spec.ring),
      ring2_(Ring::tensor_power(spec.ring, 2)),
      ring3_(Ring::tensor_power(spec.ring, 3)),
      delta_images_(std::move(spec.delta)),
      counit_images_(std::move(spec.counit)),
      delta_(std::move(delta)),
      antipode_(std::move(antipode)),
      counit_(std::move(counit)) {
  const std::uint32_t n = ring_->num_generators();
  const std::uint32_t nd = ring_->num_denominators();
  const RingHom id = identity_hom(ring_);
  const RingHom eps = unit_counit(ring_, counit_images_);
  delta_left_ = pair_hom(ring2_, delta_.shifted_into(ring3_, 0, 0), leg_inclusion(ring_, ring3_, 2));
  delta_right_ = pair_hom(ring2_, leg_inclusion(ring_, ring3_, 0), delta_.shifted_into(ring3_, n, nd));
  counit_left_ = pair_hom(ring2_, eps, id);
  counit_right_ = pair_hom(ring2_, id, eps);
  antipode_left_ = pair_hom(ring2_, antipode_, id);
  antipode_right_ = pair_hom(ring2_, id, antipode_);
  multiply_ = pair_hom(ring2_, id, id);
  antipode_both_ = pair_hom(ring2_, antipode_.shifted_into(ring2_, 0, 0), antipode_.shifted_into(ring2_, n, nd));
}

HopfPtr HopfAlgebra::make(Spec spec) {
  const RingPtr& ring = spec.ring;
  const std::uint32_t n = ring->num_generators();
  if (spec.delta.size() != n || spec.antipode.size() != n || spec.counit.size() != n)
    throw Error(Errc::InvalidArgument, "structure maps need one image per generator");
  const RingPtr ring2 = Ring::tensor_power(ring, 2);
  for (auto& d : spec.delta)
    if (d.ring().get() != ring2.get()) throw Error(Errc::PresentationMismatch, "Delta image must lie in A (x) A");
  RingHom delta(ring, ring2, spec.delta);
  RingHom antipode(ring, ring, spec.antipode, spec.antipode_overrides);
  std::vector<Element> eps;
  for (const auto& c : spec.counit) eps.push_back(Element::constant(Ring::scalars(ring->field()), c));
  RingHom counit(ring, Ring::scalars(ring->field()), std::move(eps));
  return HopfPtr(new HopfAlgebra(std::move(spec), std::move(delta), std::move(antipode), std::move(counit)));
}

// ---------------------------------------------------------------------------
// Builtins

namespace {

Poly gen_poly(std::uint32_t g) { return Poly::of(Monomial::of(Var{g, 0})); }

// Laplace expansion along the first row.
Poly det_poly(const std::vector<std::vector<Poly>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return Poly(Scalar(1));
  if (n == 1) return m[0][0];
  Poly acc;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<Poly>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Poly> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(std::move(row));
    }
    Poly term = m[0][c] * det_poly(minor);
    acc = (c % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

std::vector<std::optional<Fraction>> zero_rules(std::uint32_t n) {
  return std::vector<std::optional<Fraction>>(n, Fraction{Poly(), {}});
}

HopfPtr make_gm(FieldKind field, bool constant, std::string id) {
  Ring::Spec rs{field, {"y"}, {gen_poly(0)}, constant ? zero_rules(1) : std::vector<std::optional<Fraction>>{}};
  RingPtr ring = Ring::make(std::move(rs));
  Element y = Element::generator(ring, 0);
  HopfAlgebra::Spec s;
  s.name = id;
  s.builtin_id = std::move(id);
  s.ring = ring;
  s.delta = {tensor_of({y, y})};
  s.antipode = {*y.inverse()};
  s.counit = {Scalar(1)};
  return HopfAlgebra::make(std::move(s));
}

HopfPtr make_ga(FieldKind field, bool constant, std::string id) {
  Ring::Spec rs{field, {"y"}, {}, constant ? zero_rules(1) : std::vector<std::optional<Fraction>>{}};
  RingPtr ring = Ring::make(std::move(rs));
  Element y = Element::generator(ring, 0);
  Element one = Element::constant(ring, Scalar(1));
  HopfAlgebra::Spec s;
  s.name = id;
  s.builtin_id = std::move(id);
  s.ring = ring;
  s.delta = {tensor_of({y, one}) + tensor_of({one, y})};
  s.antipode = {-y};
  s.counit = {Scalar(0)};
  return HopfAlgebra::make(std::move(s));
}

HopfPtr make_gl(FieldKind field, std::uint32_t n, bool constant, std::string id) {
  if (n < 1 || n > 4) throw Error(Errc::BoundsExceeded, "GL(n) is supported for 1 <= n <= 4");
  Ring::Spec rs;
  rs.field = field;
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j) rs.names.push_back("X" + std::to_string(i + 1) + std::to_string(j + 1));
  std::vector<std::vector<Poly>> x(n, std::vector<Poly>(n));
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j) x[i][j] = gen_poly(i * n + j);
  rs.denominators = {det_poly(x)};
  if (constant) rs.rules = zero_rules(n * n);
  RingPtr ring = Ring::make(std::move(rs));
  const RingPtr ring2 = Ring::tensor_power(ring, 2);

  HopfAlgebra::Spec s;
  s.name = id;
  s.builtin_id = std::move(id);
  s.ring = ring;
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = 0; j < n; ++j) {
      Element d(ring2);
      for (std::uint32_t l = 0; l < n; ++l)
        d += tensor_of({Element::generator(ring, i * n + l), Element::generator(ring, l * n + j)});
      s.delta.push_back(std::move(d));
      // (X^{-1})_ij = (-1)^{i+j} minor_ji / det
      std::vector<std::vector<Poly>> minor;
      for (std::uint32_t r = 0; r < n; ++r) {
        if (r == j) continue;
        std::vector<Poly> row;
        for (std::uint32_t c = 0; c < n; ++c)
          if (c != i) row.push_back(x[r][c]);
        minor.push_back(std::move(row));
      }
      Poly cof = det_poly(minor);
      if ((i + j) % 2 == 1) cof = -cof;
      s.antipode.push_back(Element(ring, std::move(cof), {1}));
      s.counit.push_back(Scalar(i == j ? 1 : 0));
    }
  }
  return HopfAlgebra::make(std::move(s));
}

HopfPtr make_trivial(FieldKind field) {
  HopfAlgebra::Spec s;
  s.name = "trivial";
  s.builtin_id = "trivial";
  s.ring = Ring::make(Ring::Spec{field, {}, {}, {}});
  return HopfAlgebra::make(std::move(s));
}

std::string builtin_id(Builtin kind, std::uint32_t n) {
  switch (kind) {
    case Builtin::Gm: return "gm";
    case Builtin::Ga: return "ga";
    case Builtin::GL: return "gl" + std::to_string(n);
    case Builtin::GmConstant: return "gm-const";
    case Builtin::GaConstant: return "ga-const";
    case Builtin::GLConstant: return "gl" + std::to_string(n) + "-const";
    case Builtin::Trivial: return "trivial";
  }
  return "";
}

}  // namespace

HopfPtr builtin(Builtin kind, FieldKind field, std::uint32_t n) {
  // Builtins are shared so that comodules over "the same" builtin agree.
  static std::mutex mutex;
  static std::map<std::tuple<int, int, std::uint32_t>, HopfPtr> cache;
  if (kind != Builtin::GL && kind != Builtin::GLConstant) n = 0;
  if ((kind == Builtin::GL || kind == Builtin::GLConstant) && (n < 1 || n > 4))
    throw Error(Errc::BoundsExceeded, "GL(n) is supported for 1 <= n <= 4");
  std::lock_guard<std::mutex> lock(mutex);
  auto key = std::make_tuple(static_cast<int>(kind), static_cast<int>(field), n);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  std::string id = builtin_id(kind, n);
  HopfPtr h;
  switch (kind) {
    case Builtin::Gm: h = make_gm(field, false, id); break;
    case Builtin::GmConstant: h = make_gm(field, true, id); break;
    case Builtin::Ga: h = make_ga(field, false, id); break;
    case Builtin::GaConstant: h = make_ga(field, true, id); break;
    case Builtin::GL: h = make_gl(field, n, false, id); break;
    case Builtin::GLConstant: h = make_gl(field, n, true, id); break;
    case Builtin::Trivial: h = make_trivial(field); break;
  }
  cache.emplace(key, h);
  return h;
}

HopfPtr builtin_by_name(const std::string& name, std::optional<FieldKind> field) {
  std::string base = name;
  bool constant = false;
  if (base.size() > 6 && base.substr(base.size() - 6) == "-const") {
    constant = true;
    base.resize(base.size() - 6);
  }
  const FieldKind f = field.value_or(constant ? FieldKind::Rationals : FieldKind::RationalFunctions);
  if (base == "gm") return builtin(constant ? Builtin::GmConstant : Builtin::Gm, f);
  if (base == "ga") return builtin(constant ? Builtin::GaConstant : Builtin::Ga, f);
  if (base == "trivial" && !constant) return builtin(Builtin::Trivial, f);
  if (base.size() == 3 && base.substr(0, 2) == "gl" && base[2] >= '1' && base[2] <= '9')
    return builtin(constant ? Builtin::GLConstant : Builtin::GL, f, static_cast<std::uint32_t>(base[2] - '0'));
  throw Error(Errc::UnknownIdentifier, "unknown builtin '" + name + "'");
}

// ---------------------------------------------------------------------------
// Axiom checks

namespace {

void expect_equal(Report& r, const char* check, const std::string& loc, const std::string& identity,
                  const Element& lhs, const Element& rhs) {
  if (lhs != rhs) r.fail(Witness{check, loc, identity, to_string(lhs), to_string(rhs)});
}

std::string subst(std::string pattern, const std::string& x) {
  for (std::size_t p = pattern.find('@'); p != std::string::npos; p = pattern.find('@', p + x.size()))
    pattern.replace(p, 1, x);
  return pattern;
}

}  // namespace

Report check_hopf_axioms(const HopfAlgebra& h, std::uint32_t depth) {
  Report r;
  const RingPtr& ring = h.ring();
  for (std::uint32_t g = 0; g < ring->num_generators(); ++g) {
    for (std::uint32_t k = 0; k <= depth; ++k) {
      const Var v{g, k};
      const std::string loc = ring->var_name(v);
      const Element x = Element::variable(ring, v);
      const Element dx = h.apply_delta(x);
      const Element unit = Element::constant(ring, h.apply_counit(x));

      expect_equal(r, "coassociativity", loc, subst("(Delta (x) id)Delta(@) = (id (x) Delta)Delta(@)", loc),
                   h.delta_left().apply(dx), h.delta_right().apply(dx));
      expect_equal(r, "counit", loc, subst("(epsilon (x) id)Delta(@) = @", loc), h.counit_left().apply(dx), x);
      expect_equal(r, "counit", loc, subst("(id (x) epsilon)Delta(@) = @", loc), h.counit_right().apply(dx), x);
      expect_equal(r, "antipode", loc, subst("m(S (x) id)Delta(@) = epsilon(@)1", loc), h.antipode_left().apply(dx),
                   unit);
      expect_equal(r, "antipode", loc, subst("m(id (x) S)Delta(@) = epsilon(@)1", loc),
                   h.antipode_right().apply(dx), unit);

      if (k == 0) continue;
      // Each structure map must commute with d; on a ruled generator this is
      // the rule-first versus map-first comparison.
      const Element prev = Element::variable(ring, Var{g, k - 1});
      const std::string ploc = ring->var_name(Var{g, k - 1});
      const char* kind = (ring->rule(g) && k == 1) ? "rewrite rule" : "derivation";
      expect_equal(r, kind, loc, subst("Delta(d(@)) = d(Delta(@))", ploc), h.apply_delta(prev.derive()),
                   h.apply_delta(prev).derive());
      expect_equal(r, kind, loc, subst("S(d(@)) = d(S(@))", ploc), h.apply_antipode(prev.derive()),
                   h.apply_antipode(prev).derive());
      expect_equal(r, kind, loc, subst("epsilon(d(@)) = d(epsilon(@))", ploc), h.counit().apply(prev.derive()),
                   h.counit().apply(prev).derive());
    }
  }
  return r;
}

HopfMorphism::HopfMorphism(HopfPtr source, HopfPtr target, std::vector<Element> images,
                           std::map<Var, Element> overrides)
    : source_(std::move(source)),
      target_(std::move(target)),
      map_(source_->ring(), target_->ring(), std::move(images), std::move(overrides)) {
  if (source_->field() != target_->field())
    throw Error(Errc::PresentationMismatch, "Hopf morphism between different coefficient fields");
}

Report check_hopf_morphism(const HopfMorphism& f, std::uint32_t depth) {
  Report r;
  const HopfAlgebra& s = *f.source();
  const HopfAlgebra& t = *f.target();
  const RingPtr& ring = s.ring();
  const RingHom ff = pair_hom(s.ring2(), f.map().shifted_into(t.ring2(), 0, 0),
                              f.map().shifted_into(t.ring2(), t.ring()->num_generators(), t.ring()->num_denominators()));
  for (std::uint32_t g = 0; g < ring->num_generators(); ++g) {
    for (std::uint32_t k = 0; k <= depth; ++k) {
      const Var v{g, k};
      const std::string loc = ring->var_name(v);
      const Element x = Element::variable(ring, v);
      const Element fx = f.apply(x);
      expect_equal(r, "Delta", loc, subst("Delta(f(@)) = (f (x) f)(Delta(@))", loc), t.apply_delta(fx),
                   ff.apply(s.apply_delta(x)));
      expect_equal(r, "antipode", loc, subst("S(f(@)) = f(S(@))", loc), t.apply_antipode(fx),
                   f.apply(s.apply_antipode(x)));
      expect_equal(r, "counit", loc, subst("epsilon(f(@)) = epsilon(@)", loc), t.counit().apply(fx),
                   s.counit().apply(x));
      if (k == 0) continue;
      const Element prev = Element::variable(ring, Var{g, k - 1});
      expect_equal(r, "derivation", loc, subst("f(d(@)) = d(f(@))", ring->var_name(Var{g, k - 1})),
                   f.apply(prev.derive()), f.apply(prev).derive());
    }
  }
  return r;
}

}  // namespace diffhopf
