#include <doctest.h>

#include <cstdlib>
#include <filesystem>

#include "diffhopf/error.hpp"
#include "diffhopf/expr.hpp"
#include "io.hpp"

using namespace diffhopf;
using namespace diffhopf::cli;

namespace {

const fs::path kFixtures = DIFFHOPF_FIXTURES;

Loader isolated() { return Loader(std::vector<fs::path>{}); }

std::vector<fs::path> canonical_fixtures() {
  std::vector<fs::path> out;
  for (const auto& e : fs::recursive_directory_iterator(kFixtures))
    if (e.path().extension() == ".json" && e.path().filename() != "malformed.json") out.push_back(e.path());
  std::sort(out.begin(), out.end());
  return out;
}

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return Errc::InvalidArgument;
}

std::string message_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("fixture files re-serialize byte-identically") {
  const auto files = canonical_fixtures();
  CHECK(files.size() >= 15);
  Loader loader = isolated();
  for (const auto& f : files) {
    CAPTURE(f.string());
    CHECK(loader.reserialize(f) == read_file(f));
  }
}

TEST_CASE("fixture files verify as expected") {
  Loader loader = isolated();
  CHECK(check_comodule(loader.comodule_file(kFixtures / "U.json").comodule).pass);
  CHECK(check_comodule(loader.comodule_file(kFixtures / "gm_standard.json").comodule).pass);
  CHECK(check_comodule(loader.comodule_file(kFixtures / "gl2_standard.json").comodule).pass);
  CHECK_FALSE(check_comodule(loader.comodule_file(kFixtures / "broken.json").comodule).pass);
  CHECK(check_hopf_axioms(*loader.hopf("gm.json", kFixtures), 3).pass);
  CHECK(check_hopf_axioms(*loader.hopf("gm_const.json", kFixtures), 3).pass);
  CHECK_FALSE(check_hopf_axioms(*loader.hopf("ga_mutated.json", kFixtures), 3).pass);
  CHECK_FALSE(check_hopf_axioms(*loader.hopf("ga_literal.json", kFixtures), 3).pass);
  CHECK(check_hopf_morphism(loader.hopf_morphism_file(kFixtures / "rho.json")).pass);
  CHECK_FALSE(check_hopf_morphism(loader.hopf_morphism_file(kFixtures / "rho_bad.json")).pass);
  CHECK(verify_intertwiner(loader.morphism_file(kFixtures / "U_scale.json")).pass);
  CHECK_FALSE(verify_intertwiner(loader.morphism_file(kFixtures / "U_bad_endo.json")).pass);
}

TEST_CASE("files naming one presentation share it") {
  Loader loader = isolated();
  const auto c = loader.comodule_file(kFixtures / "gm_file_standard.json");
  CHECK(c.comodule.hopf.get() == loader.hopf("gm.json", kFixtures).get());
  CHECK(c.hopf_ref == "gm.json");
  CHECK(loader.hopf("gm", kFixtures).get() == builtin(Builtin::Gm, FieldKind::RationalFunctions).get());
}

TEST_CASE("search path") {
  const fs::path elsewhere = fs::temp_directory_path();
  CHECK(code_of([&] { isolated().hopf("gm.json", elsewhere); }) == Errc::FormatError);
  CHECK(Loader(std::vector<fs::path>{kFixtures}).hopf("gm.json", elsewhere)->name() == "gm-file");
  ::setenv("DIFFHOPF_PATH", ("/nonexistent:" + kFixtures.string()).c_str(), 1);
  CHECK(Loader().hopf("gm.json", elsewhere)->name() == "gm-file");
  ::unsetenv("DIFFHOPF_PATH");
}

TEST_CASE("presentation round trip") {
  for (const auto& name : {"gm", "ga", "gl2", "gm-const", "gl2-const", "trivial"}) {
    CAPTURE(name);
    const HopfPtr h = builtin_by_name(name);
    const Json once = presentation_to_json(*h);
    const HopfPtr back = presentation_from_json(once, name);
    CHECK(dump(presentation_to_json(*back)) == dump(once));
    CHECK(check_hopf_axioms(*back, 1).pass);
  }
}

TEST_CASE("a serialized prolongation loads and passes the comodule check") {
  Loader loader = isolated();
  const auto u = loader.comodule_file(kFixtures / "U.json");
  const Comodule u1 = prolong(u.comodule, 1);
  const std::string text = dump(comodule_to_json(u1, u.hopf_ref));
  const Comodule back = comodule_from_json(parse_json(text, "u1"), u.comodule.hopf, "u1");
  CHECK(back.matrix == u1.matrix);
  CHECK(back.basis == u1.basis);
  CHECK(check_comodule(back).pass);
  CHECK(dump(comodule_to_json(back, u.hopf_ref)) == text);
}

TEST_CASE("malformed input is a FormatError with a location") {
  Loader loader = isolated();
  CHECK(code_of([&] { loader.comodule_file(kFixtures / "malformed.json"); }) == Errc::FormatError);
  CHECK(code_of([&] { loader.comodule_file(kFixtures / "missing.json"); }) == Errc::FormatError);

  const HopfPtr gm = builtin_by_name("gm");
  auto load = [&](const std::string& text) { comodule_from_json(parse_json(text, "c"), gm, "c"); };
  CHECK(code_of([&] { load(R"j({"hopf": "gm", "matrix": [["y"]]})j"); }) == Errc::FormatError);
  CHECK(message_of([&] { load(R"j({"hopf": "gm", "matrix": [["y"]]})j"); }) == "c: missing field 'dim'");
  CHECK(code_of([&] { load(R"j({"hopf": "gm", "dim": 2, "matrix": [["y"]]})j"); }) == Errc::FormatError);
  CHECK(code_of([&] { load(R"j({"hopf": "gm", "dim": 1, "matrix": [[3]]})j"); }) == Errc::FormatError);
  CHECK(code_of([&] { load(R"j({"hopf": "gm", "dim": -1, "matrix": []})j"); }) == Errc::FormatError);
  CHECK(code_of([&] { load(R"j({"hopf": "gm", "dim": 1, "matrix": [["z"]]})j"); }) == Errc::UnknownIdentifier);
  CHECK(message_of([&] { load(R"j({"hopf": "gm", "dim": 1, "matrix": [["y +"]]})j"); }).starts_with("c.matrix[0][0]: "));
  CHECK(code_of([&] { load(R"j({"hopf": "gm", "dim": 1, "matrix": [["1/(y+1)"]]})j"); }) == Errc::IllegalInverse);

  Json p = presentation_to_json(*gm);
  p.erase("delta");
  CHECK(code_of([&] { presentation_from_json(p, "p"); }) == Errc::FormatError);
  p = presentation_to_json(*gm);
  p["antipode_overrides"] = Json{{"y^2", "y"}};
  CHECK(code_of([&] { presentation_from_json(p, "p"); }) == Errc::FormatError);
  p = presentation_to_json(*gm);
  p["field"] = "R";
  CHECK(code_of([&] { presentation_from_json(p, "p"); }) == Errc::FormatError);
}

TEST_CASE("registry manifests") {
  Loader loader = isolated();
  RegistryManifest m;
  Registry reg = loader.registry_file(kFixtures / "registry" / "gm.json", &m);
  CHECK(m.has_closure);
  CHECK(m.targets == std::vector<std::string>{"y", "1/y", "d(y)"});
  CHECK(reg.find("prolong(V,2)"));
  CHECK(check_relations(reg).pass);

  Registry bad = loader.registry_file(kFixtures / "registry" / "corrupted.json");
  REQUIRE(bad.morphisms().size() == 2);
  CHECK(bad.morphisms()[0].source == bad.require("U"));
  const Report r = check_relations(bad);
  REQUIRE_FALSE(r.pass);
  CHECK(r.witnesses.front().location == "(U, U, 1, 1)");
}
