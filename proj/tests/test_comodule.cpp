#include <doctest.h>

#include "diffhopf/comodule.hpp"
#include "diffhopf/error.hpp"
#include "diffhopf/expr.hpp"
#include "support/gen.hpp"
#include "support/oracles.hpp"

using namespace diffhopf;

namespace {

const FieldKind QT = FieldKind::RationalFunctions;

struct GmFixture {
  HopfPtr gm = builtin(Builtin::Gm, QT);
  RingPtr r = gm->ring();
  Element y = Element::generator(r, 0);
  Element one = Element::constant(r, Scalar(1));
  Element zero = Element(r);
  Element a = parse_expr("d(y)/y", r);
  Comodule u = Comodule::make(gm, {{one, a}, {zero, one}}, {"u1", "u2"});
  Comodule v = standard_rep(gm);

  Element e(const std::string& s) const { return parse_expr(s, r); }
};

ScalarMatrix ints(std::vector<std::vector<long>> m) {
  ScalarMatrix out;
  for (auto& row : m) {
    std::vector<Scalar> r;
    for (long x : row) r.emplace_back(x);
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

TEST_CASE_FIXTURE(GmFixture, "comodule axioms") {
  CHECK(check_comodule(u).pass);
  CHECK(check_comodule(trivial_comodule(gm)).pass);
  CHECK(gm->apply_delta(a) == tensor_of({a, one}) + tensor_of({one, a}));

  const Report bad = check_comodule(Comodule::make(gm, {{y, zero}, {zero, y.derive()}}));
  REQUIRE_FALSE(bad.pass);
  bool counit = false;
  for (const auto& w : bad.witnesses)
    if (w.check == "counit" && w.location == "(2,2)") {
      counit = true;
      CHECK(w.lhs == "0");
      CHECK(w.rhs == "1");
    }
  CHECK(counit);
}

TEST_CASE_FIXTURE(GmFixture, "prolongation") {
  const Comodule u1 = prolong(u, 1);
  // Ascending basis (u1, u2, d(u1), d(u2)); diagonal blocks are B, the
  // off-diagonal block holds dB above the diagonal.
  const Element da = a.derive();
  const ElementMatrix want{{one, a, zero, da}, {zero, one, zero, zero}, {zero, zero, one, a}, {zero, zero, zero, one}};
  CHECK(u1.matrix == want);
  CHECK(u1.basis == std::vector<std::string>{"u1", "u2", "d(u1)", "d(u2)"});
  CHECK(check_comodule(u1).pass);

  const Comodule t2 = prolong(trivial_comodule(gm), 2);
  CHECK(t2.matrix == ElementMatrix{{one, zero, zero}, {zero, one, zero}, {zero, zero, one}});

  const Comodule v2 = prolong(v, 2);
  const Element dy = y.derive();
  CHECK(v2.matrix[0][2] == dy.derive());
  CHECK(v2.matrix[1][2] == dy.scaled(Scalar(2)));
  CHECK(v2.matrix[2][2] == y);
  CHECK_THROWS_AS(prolong(v, 0), Error);
}

TEST_CASE("prolongation matches the derivation oracle") {
  std::mt19937 rng(11);
  auto gm = builtin(Builtin::Gm, QT);
  auto gl3 = builtin(Builtin::GL, QT, 3);
  std::vector<Comodule> cases{standard_rep(gm), oracle::gm_pool(gm)[3],
                              oracle::conjugate(standard_rep(gl3), gen::invertible_matrix(rng, 3))};
  for (const auto& c : cases) {
    REQUIRE(check_comodule(c).pass);
    for (std::uint32_t p = 1; p <= 3; ++p) {
      CAPTURE(p);
      CHECK(prolong(c, p).matrix == oracle::prolong_by_derivation(c, p));
    }
  }
}

TEST_CASE_FIXTURE(GmFixture, "prolonged morphisms intertwine") {
  const ComoduleMorphism nil{u, u, ints({{0, 1}, {0, 0}})};
  REQUIRE(verify_intertwiner(nil).pass);
  for (std::uint32_t p = 1; p <= 3; ++p) CHECK(verify_intertwiner(prolong_morphism(nil, p)).pass);
}

TEST_CASE_FIXTURE(GmFixture, "constructions") {
  CHECK(dual(v).matrix == ElementMatrix{{*y.inverse()}});
  CHECK(dual(u).matrix == ElementMatrix{{one, zero}, {-a, one}});
  CHECK(direct_sum(trivial_comodule(gm), trivial_comodule(gm)).matrix == ElementMatrix{{one, zero}, {zero, one}});
  CHECK(tensor(v, v).matrix == ElementMatrix{{y * y}});

  const Comodule s2 = sym_power(u, 2);
  // Basis u1^2, u1 u2, u2^2: rho(u2^2) = u1^2 (x) a^2 + 2 u1 u2 (x) a + u2^2 (x) 1.
  CHECK(s2.matrix == ElementMatrix{{one, a, a * a}, {zero, one, a.scaled(Scalar(2))}, {zero, zero, one}});

  auto gl2 = builtin(Builtin::GL, QT, 2);
  const Comodule w = standard_rep(gl2);
  for (const auto& c : {tensor(u, dual(u)), direct_sum(u, v), dual(prolong(u, 1)), sym_power(u, 3), sym_power(w, 2),
                        sym_power(prolong(w, 1), 2), det_comodule(gl2), det_twist(w, 1), det_twist(sym_power(w, 2), 2),
                        sym_power(w, 0)})
    CHECK(check_comodule(c).pass);
  CHECK(sym_power(w, 2).dim() == 3);
  CHECK(det_twist(w, 1).matrix[0][0] == gl2->apply_antipode(det_comodule(gl2).matrix[0][0]) * w.matrix[0][0]);

  CHECK_THROWS_AS(tensor(u, w), Error);
}

TEST_CASE("pushforward along the worked-example morphism") {
  auto gl = builtin(Builtin::GL, QT, 2);
  auto gm = builtin(Builtin::Gm, QT);
  const RingPtr& r = gm->ring();
  const Element one = Element::constant(r, Scalar(1));
  HopfMorphism rho(gl, gm, {one, parse_expr("d(y)/y", r), Element(r), one});
  const Comodule pushed = pushforward(standard_rep(gl), rho);
  CHECK(pushed.matrix == ElementMatrix{{one, parse_expr("d(y)/y", r)}, {Element(r), one}});
  CHECK(check_comodule(pushed).pass);
}

TEST_CASE_FIXTURE(GmFixture, "intertwiners") {
  CHECK(verify_intertwiner({u, u, identity_matrix(2)}).pass);
  CHECK(verify_intertwiner({u, u, ints({{0, 1}, {0, 0}})}).pass);
  const Report bad = verify_intertwiner({u, u, ints({{0, 0}, {1, 0}})});
  REQUIRE_FALSE(bad.pass);
  CHECK(bad.witnesses.front().check == "intertwining");
}

TEST_CASE_FIXTURE(GmFixture, "hom spaces") {
  const auto uu = hom_basis(u, u);
  REQUIRE(uu.size() == 2);
  // Span equals {[[p, q], [0, p]]}.
  for (const auto& phi : uu) {
    CHECK(phi.matrix[1][0].is_zero());
    CHECK(phi.matrix[0][0] == phi.matrix[1][1]);
  }
  CHECK(oracle::HomSystem::rank({{uu[0].matrix[0][0], uu[0].matrix[0][1]}, {uu[1].matrix[0][0], uu[1].matrix[0][1]}}, 2) == 2);

  CHECK(hom_basis(v, v).size() == 1);

  const auto top = hom_basis(direct_sum(v, v), prolong(v, 1));
  REQUIRE(top.size() == 2);
  for (const auto& phi : top) {
    // The d(v) row vanishes.
    CHECK(phi.matrix[1][0].is_zero());
    CHECK(phi.matrix[1][1].is_zero());
  }
}

TEST_CASE("property: hom solver agrees with a re-solve in another monomial order") {
  std::mt19937 rng(12);
  auto gm = builtin(Builtin::Gm, QT);
  const auto pool = oracle::gm_pool(gm);
  for (int trial = 0; trial < 20; ++trial) {
    Comodule v = pool[static_cast<std::size_t>(gen::uniform(rng, 0, static_cast<int>(pool.size()) - 1))];
    Comodule w = pool[static_cast<std::size_t>(gen::uniform(rng, 0, static_cast<int>(pool.size()) - 1))];
    v = oracle::conjugate(v, gen::invertible_matrix(rng, v.dim()));
    w = oracle::conjugate(w, gen::invertible_matrix(rng, w.dim()));
    const auto basis = hom_basis(v, w);
    const oracle::HomSystem sys(v, w, rng);
    CHECK(basis.size() == sys.dimension());
    std::vector<std::vector<Scalar>> flat;
    for (const auto& phi : basis) {
      CHECK(sys.solves(phi.matrix));
      CHECK(verify_intertwiner(phi).pass);
      std::vector<Scalar> f;
      for (const auto& row : phi.matrix) f.insert(f.end(), row.begin(), row.end());
      flat.push_back(std::move(f));
    }
    CHECK(oracle::HomSystem::rank(flat, v.dim() * w.dim()) == basis.size());
  }
}

TEST_CASE("constant splitting") {
  auto gmc = builtin(Builtin::GmConstant, FieldKind::Rationals);
  const Comodule vc = standard_rep(gmc);
  CHECK(prolong(vc, 1).matrix[0][1].is_zero());
  for (std::uint32_t p = 1; p <= 3; ++p) {
    CAPTURE(p);
    const SplitResult s = constant_split_check(vc, p);
    CHECK(s.verdict == SplitResult::Verdict::Splits);
    REQUIRE(s.witness);
    CHECK(verify_intertwiner(*s.witness).pass);
    CHECK_FALSE(determinant(s.witness->matrix).is_zero());
  }

  auto gm = builtin(Builtin::Gm, QT);
  const SplitResult no = constant_split_check(standard_rep(gm), 1);
  CHECK(no.verdict == SplitResult::Verdict::NoSplitting);
  CHECK_FALSE(no.report.pass);
  CHECK(no.hom_dim == 2);
  REQUIRE(no.det_polynomial);
  CHECK(no.det_polynomial->is_zero());
  CHECK_FALSE(no.witness);

  for (std::uint32_t p = 1; p <= 3; ++p) {
    const SplitResult t = constant_split_check(trivial_comodule(gm), p);
    CHECK(t.verdict == SplitResult::Verdict::Splits);
    REQUIRE(t.witness);
    CHECK(verify_intertwiner(*t.witness).pass);
  }
}

TEST_CASE_FIXTURE(GmFixture, "orbit modules") {
  const OrbitModule om = orbit_module(gm, a);
  REQUIRE(om.basis.size() == 2);
  CHECK(om.basis[0] == a);
  CHECK(om.basis[1] == one);
  CHECK(om.comodule.matrix == ElementMatrix{{one, zero}, {a, one}});
  CHECK(check_comodule(om.comodule).pass);

  const OrbitModule og = orbit_module(gm, y);
  CHECK(og.comodule.matrix == ElementMatrix{{y}});

  auto ga = builtin(Builtin::Ga, QT);
  const Element dz = Element::generator(ga->ring(), 0).derive();
  const Element gone = Element::constant(ga->ring(), Scalar(1));
  const OrbitModule oa = orbit_module(ga, dz);
  CHECK(oa.comodule.matrix == ElementMatrix{{gone, Element(ga->ring())}, {dz, gone}});

  CHECK_THROWS_AS(orbit_module(gm, zero), Error);
}

TEST_CASE("property: orbit modules are minimal and contain f") {
  std::mt19937 rng(13);
  for (auto h : {builtin(Builtin::Gm, QT), builtin(Builtin::GL, QT, 2)}) {
    gen::ElementShape shape;
    shape.max_terms = 2;
    shape.max_order = 1;
    for (int trial = 0; trial < 15; ++trial) {
      const Element f = gen::element(rng, h->ring(), shape);
      if (f.is_zero()) continue;
      const OrbitModule om = orbit_module(h, f);
      CHECK(om.basis.front() == f);
      CHECK(check_comodule(om.comodule).pass);
      // Keeping f and dropping any other basis vector leaves a span not
      // closed under Delta.
      if (om.basis.size() > 1)
        for (std::size_t k = 1; k < om.basis.size(); ++k) {
          std::vector<Element> fewer = om.basis;
          fewer.erase(fewer.begin() + static_cast<long>(k));
          CHECK_THROWS_AS(induced_comodule(h, fewer), Error);
        }
    }
  }
}

TEST_CASE_FIXTURE(GmFixture, "coordinate representations") {
  const CoordinateRep c = coordinate_rep(orbit_module(gm, a));
  CHECK(c.conjugation == identity_matrix(2));
  CHECK(c.order == std::vector<std::size_t>{1, 0});
  CHECK(c.row == 0);
  CHECK(c.col == 1);
  CHECK(c.comodule.matrix[c.row][c.col].scaled(c.scale) == a);
  CHECK(check_comodule(c.comodule).pass);

  const CoordinateRep g = coordinate_rep(orbit_module(gm, y.scaled(Scalar(3))));
  CHECK(g.conjugation == ScalarMatrix{{Scalar(3)}});
  CHECK(g.comodule.matrix[0][0].scaled(g.scale) == y.scaled(Scalar(3)));

  auto ga = builtin(Builtin::Ga, QT);
  const Element dz = Element::generator(ga->ring(), 0).derive();
  const CoordinateRep gc = coordinate_rep(orbit_module(ga, dz));
  CHECK(gc.row == 0);
  CHECK(gc.col == 1);
  CHECK(gc.comodule.matrix[0][1] == dz);
}

TEST_CASE("property: coordinate representation recovers f") {
  std::mt19937 rng(14);
  auto gm = builtin(Builtin::Gm, QT);
  for (int trial = 0; trial < 20; ++trial) {
    const Element f = gen::element(rng, gm->ring());
    if (f.is_zero()) continue;
    const CoordinateRep c = coordinate_rep(orbit_module(gm, f));
    CHECK(c.comodule.matrix[c.row][c.col].scaled(c.scale) == f);
    CHECK(check_comodule(c.comodule).pass);
  }
}

TEST_CASE_FIXTURE(GmFixture, "regular embedding") {
  const RegularEmbedding emb = regular_embedding(u);
  CHECK(emb.report.pass);
  CHECK(emb.components[1] == std::vector<Element>{a, one});
  CHECK(emb.coaction[1] == "tensor(u1, d(y)/y) + tensor(u2, 1)");
  CHECK(regular_embedding(trivial_comodule(gm)).components[0] == std::vector<Element>{one});
  CHECK(regular_embedding(tensor(v, v)).components[0] == std::vector<Element>{y * y});
}

TEST_CASE("L spaces") {
  const LSpace l1 = linear_comodule_L(1, 0, 1, 0);
  CHECK(l1.l01p.dim() == 1);
  CHECK(l1.iso_report.pass);

  for (std::uint32_t p = 0; p <= 1; ++p) {
    const LSpace l = linear_comodule_L(2, 0, 1, p);
    CHECK(l.l01p.dim() == 4 * (p + 1));
    CHECK(l.iso_report.pass);
    CHECK(determinant(l.iso.matrix) == Scalar(1));
    CHECK(check_comodule(l.l01p).pass);
  }

  // Delta(d X_ij) = sum_l d X_il (x) X_lj + X_il (x) d X_lj, read off the 8-dim space.
  const LSpace l = linear_comodule_L(2, 0, 1, 1);
  auto gl = builtin(Builtin::GL, QT, 2);
  const RingPtr& r = gl->ring();
  auto x = [&](std::uint32_t i, std::uint32_t j, std::uint32_t q) { return Element::variable(r, Var{i * 2 + j, q}); };
  for (std::uint32_t i = 0; i < 2; ++i)
    for (std::uint32_t j = 0; j < 2; ++j) {
      Element want(gl->ring2());
      for (std::uint32_t m = 0; m < 2; ++m)
        want += tensor_of({x(i, m, 1), x(m, j, 0)}) + tensor_of({x(i, m, 0), x(m, j, 1)});
      CHECK(gl->apply_delta(x(i, j, 1)) == want);
    }

  const LSpace big = linear_comodule_L(2, 1, 2, 1);
  CHECK(big.l.dim() == 1 + 8 + 36);
  CHECK_THROWS_AS(linear_comodule_L(4, 0, 1, 0), Error);
  CHECK_THROWS_AS(linear_comodule_L(3, 0, 3, 3), Error);
}
