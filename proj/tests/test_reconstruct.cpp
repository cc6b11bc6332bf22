#include <doctest.h>

#include "diffhopf/error.hpp"
#include "diffhopf/expr.hpp"
#include "diffhopf/reconstruct.hpp"

using namespace diffhopf;

namespace {

const FieldKind QT = FieldKind::RationalFunctions;

struct GmRegistry {
  HopfPtr gm = builtin(Builtin::Gm, QT);
  RingPtr ring = gm->ring();
  Element y = Element::generator(ring, 0);
  Element one = Element::constant(ring, Scalar(1));
  Element a = parse_expr("d(y)/y", ring);
  Registry reg{gm};
  std::size_t v = reg.add("V", standard_rep(gm));
  std::size_t t = reg.add("trivial", trivial_comodule(gm));
  std::size_t u = reg.add("U", Comodule::make(gm, {{one, a}, {Element(ring), one}}));

  ReconElement sym(std::size_t c, std::size_t j, std::size_t i) const { return ReconElement::of(Symbol{c, j - 1, i - 1}); }
};

bool has_check(const Report& r, const std::string& check) {
  for (const auto& w : r.witnesses)
    if (w.check == check) return true;
  return false;
}

}  // namespace

TEST_CASE_FIXTURE(GmRegistry, "Phi on symbols") {
  CHECK(phi(reg, sym(u, 2, 1)) == a);
  CHECK(phi(reg, sym(t, 1, 1)) == one);
  const ReconElement prod = tilde_product(reg, sym(v, 1, 1), tilde_antipode(reg, sym(v, 1, 1)));
  CHECK(phi(reg, prod) == one);
  CHECK(to_string(sym(u, 2, 1), reg) == "a_U(2,1)");
  CHECK_THROWS_AS(phi(reg, Symbol{99, 0, 0}), Error);
  CHECK_THROWS_AS(phi(reg, Symbol{v, 1, 0}), Error);
  CHECK_THROWS_AS(reg.require("W"), Error);
}

TEST_CASE_FIXTURE(GmRegistry, "product") {
  const ReconElement p = tilde_product(reg, sym(u, 1, 1), sym(u, 1, 1));
  REQUIRE(p.terms().size() == 1);
  const Symbol s = p.terms().begin()->first;
  CHECK(reg.name(s.comodule) == "tensor(U,U)");
  CHECK(s.j == 0);
  CHECK(s.i == 0);
  CHECK(phi(reg, p) == one);

  const ReconElement x = sym(u, 2, 1).scaled(Scalar(3)) + sym(v, 1, 1);
  CHECK(phi(reg, tilde_product(reg, x, sym(t, 1, 1))) == phi(reg, x));
  CHECK(phi(reg, tilde_product(reg, x, ReconElement::constant(Scalar(2)))) == phi(reg, x).scaled(Scalar(2)));
}

TEST_CASE_FIXTURE(GmRegistry, "derivation") {
  CHECK(phi(reg, tilde_derive(reg, sym(v, 1, 1))) == y.derive());
  CHECK(phi(reg, tilde_derive(reg, sym(t, 1, 1))).is_zero());
  CHECK(phi(reg, tilde_derive(reg, sym(u, 2, 1))) == a.derive());
  CHECK(reg.find("prolong(V,1)"));
}

TEST_CASE_FIXTURE(GmRegistry, "coproduct, antipode and counit") {
  const ReconTensor d = tilde_delta(reg, sym(v, 1, 1));
  REQUIRE(d.size() == 1);
  CHECK(d.begin()->first == std::make_pair(Symbol{v, 0, 0}, Symbol{v, 0, 0}));
  CHECK(phi(reg, d) == gm->apply_delta(y));
  CHECK(phi(reg, tilde_delta(reg, sym(t, 1, 1))) == tensor_of({one, one}));

  const ReconElement s = tilde_antipode(reg, sym(v, 1, 1));
  CHECK(reg.name(s.terms().begin()->first.comodule) == "dual(V)");
  CHECK(phi(reg, s) == *y.inverse());

  CHECK(tilde_counit(sym(u, 1, 1)) == Scalar(1));
  CHECK(tilde_counit(sym(u, 2, 1)) == Scalar(0));
}

TEST_CASE_FIXTURE(GmRegistry, "relations") {
  CHECK(check_relations(reg).pass);  // no morphisms

  const std::size_t u1 = reg.prolong_index(u, 1);
  ScalarMatrix inc(4, std::vector<Scalar>(2)), proj(2, std::vector<Scalar>(4));
  for (std::size_t i = 0; i < 2; ++i) {
    inc[i][i] = Scalar(1);
    proj[i][2 + i] = Scalar(1);
  }
  reg.add_morphism("inclusion", u, u1, inc);
  reg.add_morphism("projection", u1, u, proj);
  reg.add_morphism("unit", t, u, {{Scalar(1)}, {Scalar(0)}});
  CHECK(check_relations(reg).pass);

  reg.add_morphism("corrupted", u, u, {{Scalar(0), Scalar(0)}, {Scalar(1), Scalar(0)}});
  const Report bad = check_relations(reg);
  REQUIRE_FALSE(bad.pass);
  CHECK(bad.witnesses.front().check == "morphism relation");
  CHECK(bad.witnesses.front().location == "(U, U, 1, 1)");
}

TEST_CASE("reconstruction suite on the closed Gm registry") {
  auto gm = builtin(Builtin::Gm, QT);
  Registry reg(gm);
  reg.add("V", standard_rep(gm));
  reg.close(Closure{true, 2, 2, true});
  CHECK(reg.find("tensor(V,dual(V))"));
  CHECK(reg.find("prolong(dual(V),2)"));
  CHECK_FALSE(reg.morphisms().empty());

  const Report rel = check_relations(reg);
  CHECK(rel.pass);
  const Report rec = check_reconstruction(reg, 200, 7);
  CHECK(rec.pass);
  for (const auto& w : rec.witnesses) MESSAGE(w.check << " at " << w.location);

  const RingPtr& ring = gm->ring();
  const Report gen = check_generation(
      reg, {{parse_expr("y", ring), {}}, {parse_expr("1/y", ring), {}}, {parse_expr("d(y)", ring), {}}});
  CHECK(gen.pass);
}

TEST_CASE_FIXTURE(GmRegistry, "generation") {
  Registry only(gm);
  only.add("trivial", trivial_comodule(gm));
  const Report no = check_generation(only, {{y, {}}});
  REQUIRE_FALSE(no.pass);
  CHECK(no.witnesses.front().check == "NotGenerated");
  CHECK(no.witnesses.front().location == "y");
  CHECK(check_generation(only, {{one, {}}}).pass);

  // Explicit expressions.
  const std::size_t dv = reg.dual_index(v);
  CHECK(check_generation(reg, {{*y.inverse(), ReconElement::of(Symbol{dv, 0, 0})}}).pass);
  CHECK_FALSE(check_generation(reg, {{y, ReconElement::of(Symbol{dv, 0, 0})}}).pass);
  // d(y)^2 / y needs a product and a derivative.
  const Report sq = check_generation(reg, {{parse_expr("d(y)^2/y", ring), {}}});
  CHECK(sq.pass);
}

TEST_CASE_FIXTURE(GmRegistry, "basis independence of the coproduct") {
  for (int trial = 0; trial < 10; ++trial) {
    ScalarMatrix p{{Scalar(1), Scalar(trial)}, {Scalar(-2), Scalar(1)}};
    std::vector<Scalar> vec{Scalar(trial - 3), Scalar(2)}, covec{Scalar(1), Scalar(-trial)};
    CHECK(phi(reg, tilde_delta_in_basis(reg, u, vec, covec, p)) == phi(reg, tilde_delta(reg, pairing(reg, u, vec, covec))));
  }
}

TEST_CASE("a wrong antipode breaks the antipode law in the registry") {
  auto ga = builtin(Builtin::Ga, QT);
  HopfAlgebra::Spec spec;
  spec.name = "ga-mutated";
  spec.ring = ga->ring();
  spec.delta = ga->delta_images();
  spec.antipode = {Element::generator(ga->ring(), 0)};
  spec.counit = ga->counit_images();
  auto bad = HopfAlgebra::make(std::move(spec));
  const Element one = Element::constant(bad->ring(), Scalar(1));
  Registry reg(bad);
  reg.add("V", Comodule::make(bad, {{one, Element::generator(bad->ring(), 0)}, {Element(bad->ring()), one}}));
  const Report r = check_reconstruction(reg, 10, 1);
  CHECK_FALSE(r.pass);
  CHECK(has_check(r, "antipode law"));
  CHECK_FALSE(has_check(r, "Delta"));
}
