#include "io.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "diffhopf/error.hpp"
#include "diffhopf/expr.hpp"

namespace diffhopf::cli {

namespace {

[[noreturn]] void format_error(const std::string& origin, const std::string& what) {
  throw Error(Errc::FormatError, origin + ": " + what);
}

const Json& field(const Json& j, const char* key, const std::string& origin) {
  if (!j.is_object()) format_error(origin, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) format_error(origin, std::string("missing field '") + key + "'");
  return *it;
}

std::string text(const Json& j, const std::string& origin) {
  if (!j.is_string()) format_error(origin, "expected a string");
  return j.get<std::string>();
}

std::vector<std::string> strings(const Json& j, const std::string& origin) {
  if (!j.is_array()) format_error(origin, "expected an array of strings");
  std::vector<std::string> out;
  for (std::size_t k = 0; k < j.size(); ++k) out.push_back(text(j[k], origin + "[" + std::to_string(k) + "]"));
  return out;
}

std::size_t count(const Json& j, const std::string& origin) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long>() >= 0))
    format_error(origin, "expected a nonnegative integer");
  return j.get<std::size_t>();
}

// Parse errors carry the JSON location in front of the parser message.
template <class F>
auto located(const std::string& origin, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    throw Error(e.code(), origin + ": " + e.what());
  }
}

Var single_variable(const Element& x, const std::string& origin) {
  const Poly& p = x.numerator();
  if (x.has_denominator() || p.terms().size() != 1 || p.lead().coeff != Scalar(1) || p.lead().mono.factors().size() != 1 ||
      p.lead().mono.factors()[0].second != 1)
    format_error(origin, "expected a single derived variable");
  return Var::from_key(p.lead().mono.factors()[0].first);
}

Json element_matrix_json(const ElementMatrix& m) {
  Json rows = Json::array();
  for (const auto& row : m) {
    Json r = Json::array();
    for (const auto& e : row) r.push_back(to_string(e));
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json parse_json(const std::string& content, const std::string& origin) {
  try {
    return Json::parse(content);
  } catch (const nlohmann::json::parse_error& e) {
    format_error(origin, std::string("malformed JSON at byte ") + std::to_string(e.byte));
  }
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::FormatError, "cannot read '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// ---------------------------------------------------------------------------
// Presentations

Json presentation_to_json(const HopfAlgebra& h) {
  const RingPtr& ring = h.ring();
  Json j;
  j["name"] = h.name();
  j["field"] = field_name(h.field());
  j["generators"] = ring->names();
  Json dens = Json::array();
  for (std::uint32_t i = 0; i < ring->num_denominators(); ++i) dens.push_back(to_string(ring->denominator(i), *ring));
  j["denominators"] = std::move(dens);
  Json rewrite = Json::object();
  for (std::uint32_t g = 0; g < ring->num_generators(); ++g)
    if (const auto& rule = ring->rule(g)) rewrite[ring->name(g)] = to_string(Element(ring, rule->num, rule->den));
  j["rewrite"] = std::move(rewrite);
  Json delta = Json::object(), antipode = Json::object(), counit = Json::object();
  for (std::uint32_t g = 0; g < ring->num_generators(); ++g) {
    delta[ring->name(g)] = to_string(h.delta_images()[g]);
    antipode[ring->name(g)] = to_string(h.antipode().images()[g]);
    counit[ring->name(g)] = h.counit_images()[g].to_string();
  }
  j["delta"] = std::move(delta);
  j["antipode"] = std::move(antipode);
  j["counit"] = std::move(counit);
  Json overrides = Json::object();
  for (const auto& [v, image] : h.antipode_overrides()) overrides[ring->var_name(v)] = to_string(image);
  j["antipode_overrides"] = std::move(overrides);
  return j;
}

HopfPtr presentation_from_json(const Json& j, const std::string& origin) {
  const FieldKind fk = located(origin + ".field", [&] { return parse_field_name(text(field(j, "field", origin), origin + ".field")); });
  const std::vector<std::string> names = strings(field(j, "generators", origin), origin + ".generators");

  const RingPtr bare = located(origin, [&] { return Ring::make(Ring::Spec{fk, names, {}, {}}); });
  std::vector<Poly> dens;
  const auto den_texts = strings(j.value("denominators", Json::array()), origin + ".denominators");
  for (std::size_t k = 0; k < den_texts.size(); ++k) {
    const std::string where = origin + ".denominators[" + std::to_string(k) + "]";
    dens.push_back(located(where, [&] { return parse_expr(den_texts[k], bare).numerator(); }));
  }
  const RingPtr localized = located(origin, [&] { return Ring::make(Ring::Spec{fk, names, dens, {}}); });

  std::vector<std::optional<Fraction>> rules(names.size());
  const Json rewrite = j.value("rewrite", Json::object());
  if (!rewrite.is_object()) format_error(origin + ".rewrite", "expected an object");
  for (const auto& [key, value] : rewrite.items()) {
    const std::string where = origin + ".rewrite." + key;
    auto it = std::find(names.begin(), names.end(), key);
    if (it == names.end()) format_error(where, "unknown generator");
    const Element e = located(where, [&] { return parse_expr(text(value, where), localized); });
    rules[static_cast<std::size_t>(it - names.begin())] = Fraction{e.numerator(), e.denominator_exponents()};
  }
  const RingPtr ring = located(origin, [&] { return Ring::make(Ring::Spec{fk, names, dens, rules}); });
  const RingPtr ring2 = Ring::tensor_power(ring, 2);

  HopfAlgebra::Spec spec;
  spec.name = j.value("name", std::string());
  spec.ring = ring;
  auto per_generator = [&](const char* key) {
    const Json& obj = field(j, key, origin);
    if (!obj.is_object()) format_error(origin + "." + key, "expected an object keyed by generator");
    std::vector<std::string> out;
    for (const auto& name : names) out.push_back(text(field(obj, name.c_str(), origin + "." + key), origin + "." + key + "." + name));
    if (obj.size() != names.size()) format_error(origin + "." + key, "entries must match the generators");
    return out;
  };
  const auto delta = per_generator("delta");
  const auto antipode = per_generator("antipode");
  const auto counit = per_generator("counit");
  for (std::size_t g = 0; g < names.size(); ++g) {
    spec.delta.push_back(located(origin + ".delta." + names[g], [&] { return parse_expr(delta[g], ring2); }));
    spec.antipode.push_back(located(origin + ".antipode." + names[g], [&] { return parse_expr(antipode[g], ring); }));
    spec.counit.push_back(located(origin + ".counit." + names[g], [&] { return parse_scalar(counit[g], fk); }));
  }
  const Json overrides = j.value("antipode_overrides", Json::object());
  if (!overrides.is_object()) format_error(origin + ".antipode_overrides", "expected an object");
  for (const auto& [key, value] : overrides.items()) {
    const std::string where = origin + ".antipode_overrides." + key;
    const Var v = single_variable(located(where, [&] { return parse_expr(key, localized); }), where);
    spec.antipode_overrides.emplace(v, located(where, [&] { return parse_expr(text(value, where), ring); }));
  }
  return located(origin, [&] { return HopfAlgebra::make(std::move(spec)); });
}

// ---------------------------------------------------------------------------
// Comodules and morphisms

Json matrix_to_json(const ElementMatrix& m) { return element_matrix_json(m); }

Json scalar_matrix_to_json(const ScalarMatrix& m) {
  Json rows = Json::array();
  for (const auto& row : m) {
    Json r = Json::array();
    for (const auto& x : row) r.push_back(x.to_string());
    rows.push_back(std::move(r));
  }
  return rows;
}

ScalarMatrix scalar_matrix_from_json(const Json& j, FieldKind fk, const std::string& origin) {
  if (!j.is_array()) format_error(origin, "expected an array of rows");
  ScalarMatrix m;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const auto row = strings(j[i], origin + "[" + std::to_string(i) + "]");
    std::vector<Scalar> r;
    for (std::size_t k = 0; k < row.size(); ++k)
      r.push_back(located(origin + "[" + std::to_string(i) + "][" + std::to_string(k) + "]",
                          [&] { return parse_scalar(row[k], fk); }));
    m.push_back(std::move(r));
  }
  return m;
}

Json comodule_to_json(const Comodule& c, const std::string& hopf_ref) {
  Json j;
  j["hopf"] = hopf_ref;
  j["dim"] = c.dim();
  j["basis"] = c.basis;
  j["matrix"] = element_matrix_json(c.matrix);
  return j;
}

Comodule comodule_from_json(const Json& j, const HopfPtr& hopf, const std::string& origin) {
  const std::size_t n = count(field(j, "dim", origin), origin + ".dim");
  const Json& rows = field(j, "matrix", origin);
  if (!rows.is_array() || rows.size() != n) format_error(origin + ".matrix", "expected " + std::to_string(n) + " rows");
  ElementMatrix m;
  for (std::size_t i = 0; i < n; ++i) {
    const std::string where = origin + ".matrix[" + std::to_string(i) + "]";
    const auto row = strings(rows[i], where);
    if (row.size() != n) format_error(where, "expected " + std::to_string(n) + " entries");
    std::vector<Element> r;
    for (std::size_t k = 0; k < n; ++k)
      r.push_back(located(where + "[" + std::to_string(k) + "]", [&] { return parse_expr(row[k], hopf->ring()); }));
    m.push_back(std::move(r));
  }
  std::vector<std::string> basis;
  if (j.contains("basis")) basis = strings(j["basis"], origin + ".basis");
  return located(origin, [&] { return Comodule::make(hopf, std::move(m), std::move(basis)); });
}

Json report_to_json(const std::string& command, const Report& r, const Json& payload) {
  Json j;
  j["command"] = command;
  j["pass"] = r.pass;
  for (const auto& [key, value] : payload.items()) j[key] = value;
  Json facts = Json::object();
  for (const auto& [key, value] : r.facts) facts[key] = value;
  j["facts"] = std::move(facts);
  Json ws = Json::array();
  for (const auto& w : r.witnesses) {
    Json x;
    x["check"] = w.check;
    x["location"] = w.location;
    x["identity"] = w.identity;
    x["lhs"] = w.lhs;
    x["rhs"] = w.rhs;
    ws.push_back(std::move(x));
  }
  j["witnesses"] = std::move(ws);
  return j;
}

// ---------------------------------------------------------------------------
// Registry manifests

Json manifest_to_json(const RegistryManifest& m) {
  Json j;
  j["hopf"] = m.hopf;
  Json members = Json::array();
  for (const auto& c : m.comodules) members.push_back(Json{{"name", c.name}, {"file", c.file}});
  j["comodules"] = std::move(members);
  Json mors = Json::array();
  for (const auto& f : m.morphisms) {
    Json x;
    x["name"] = f.name;
    if (!f.file.empty()) {
      x["file"] = f.file;
    } else {
      x["source"] = f.source;
      x["target"] = f.target;
      x["matrix"] = f.matrix;
    }
    mors.push_back(std::move(x));
  }
  j["morphisms"] = std::move(mors);
  if (m.has_closure) {
    j["closure"] = Json{{"dual", m.closure.dual},
                        {"tensor", m.closure.tensor_factors},
                        {"prolong", m.closure.prolong},
                        {"standard_morphisms", m.closure.standard_morphisms}};
  }
  j["targets"] = m.targets;
  return j;
}

RegistryManifest manifest_from_json(const Json& j, const std::string& origin) {
  RegistryManifest m;
  m.hopf = text(field(j, "hopf", origin), origin + ".hopf");
  const Json& members = field(j, "comodules", origin);
  if (!members.is_array()) format_error(origin + ".comodules", "expected an array");
  for (std::size_t k = 0; k < members.size(); ++k) {
    const std::string where = origin + ".comodules[" + std::to_string(k) + "]";
    m.comodules.push_back({text(field(members[k], "name", where), where + ".name"), text(field(members[k], "file", where), where + ".file")});
  }
  const Json mors = j.value("morphisms", Json::array());
  if (!mors.is_array()) format_error(origin + ".morphisms", "expected an array");
  for (std::size_t k = 0; k < mors.size(); ++k) {
    const std::string where = origin + ".morphisms[" + std::to_string(k) + "]";
    RegistryManifest::Morphism f;
    f.name = text(field(mors[k], "name", where), where + ".name");
    if (mors[k].contains("file")) {
      f.file = text(mors[k]["file"], where + ".file");
    } else {
      f.source = text(field(mors[k], "source", where), where + ".source");
      f.target = text(field(mors[k], "target", where), where + ".target");
      f.matrix = field(mors[k], "matrix", where);
    }
    m.morphisms.push_back(std::move(f));
  }
  if (j.contains("closure")) {
    const Json& c = j["closure"];
    const std::string where = origin + ".closure";
    if (!c.is_object()) format_error(where, "expected an object");
    m.has_closure = true;
    m.closure.dual = c.value("dual", false);
    m.closure.tensor_factors = static_cast<std::uint32_t>(count(c.value("tensor", Json(1)), where + ".tensor"));
    m.closure.prolong = static_cast<std::uint32_t>(count(c.value("prolong", Json(0)), where + ".prolong"));
    m.closure.standard_morphisms = c.value("standard_morphisms", false);
  }
  if (j.contains("targets")) m.targets = strings(j["targets"], origin + ".targets");
  return m;
}

// ---------------------------------------------------------------------------
// Loader

Loader::Loader(std::vector<fs::path> search_path) : search_(std::move(search_path)) {}

std::vector<fs::path> Loader::search_path_from_env() {
  std::vector<fs::path> out;
  const char* env = std::getenv("DIFFHOPF_PATH");
  if (!env) return out;
  std::string s = env;
  std::size_t start = 0;
  while (start <= s.size()) {
    const std::size_t end = std::min(s.find(':', start), s.size());
    if (end > start) out.emplace_back(s.substr(start, end - start));
    start = end + 1;
  }
  return out;
}

fs::path Loader::resolve(const std::string& ref, const fs::path& base_dir) const {
  const fs::path p(ref);
  if (p.is_absolute()) {
    if (fs::exists(p)) return p;
  } else {
    if (fs::exists(base_dir / p)) return base_dir / p;
    for (const auto& dir : search_)
      if (fs::exists(dir / p)) return dir / p;
  }
  throw Error(Errc::FormatError, "file not found: '" + ref + "'");
}

HopfPtr Loader::hopf(const std::string& ref, const fs::path& base_dir, std::optional<FieldKind> fk) {
  if (ref.size() < 5 || ref.substr(ref.size() - 5) != ".json") return builtin_by_name(ref, fk);
  const fs::path path = fs::weakly_canonical(resolve(ref, base_dir));
  auto it = presentations_.find(path.string());
  if (it != presentations_.end()) return it->second;
  HopfPtr h = presentation_from_json(parse_json(read_file(path), path.string()), path.filename().string());
  presentations_.emplace(path.string(), h);
  return h;
}

Loader::ComoduleFile Loader::comodule_file(const fs::path& path) {
  const std::string origin = path.filename().string();
  const Json j = parse_json(read_file(path), origin);
  const std::string ref = text(field(j, "hopf", origin), origin + ".hopf");
  HopfPtr h = hopf(ref, path.parent_path());
  return ComoduleFile{comodule_from_json(j, h, origin), ref};
}

ComoduleMorphism Loader::morphism_file(const fs::path& path) {
  const std::string origin = path.filename().string();
  const Json j = parse_json(read_file(path), origin);
  Comodule source = comodule_file(resolve(text(field(j, "source", origin), origin + ".source"), path.parent_path())).comodule;
  Comodule target = comodule_file(resolve(text(field(j, "target", origin), origin + ".target"), path.parent_path())).comodule;
  ScalarMatrix m = scalar_matrix_from_json(field(j, "matrix", origin), source.hopf->field(), origin + ".matrix");
  if (m.size() != target.dim() || (!m.empty() && m.front().size() != source.dim()))
    format_error(origin + ".matrix", "expected a " + std::to_string(target.dim()) + "x" + std::to_string(source.dim()) + " matrix");
  for (const auto& row : m)
    if (row.size() != source.dim()) format_error(origin + ".matrix", "ragged matrix");
  return ComoduleMorphism{std::move(source), std::move(target), std::move(m)};
}

HopfMorphism Loader::hopf_morphism_file(const fs::path& path) {
  const std::string origin = path.filename().string();
  const Json j = parse_json(read_file(path), origin);
  HopfPtr source = hopf(text(field(j, "source", origin), origin + ".source"), path.parent_path());
  HopfPtr target = hopf(text(field(j, "target", origin), origin + ".target"), path.parent_path());
  const Json& images = field(j, "images", origin);
  if (!images.is_object()) format_error(origin + ".images", "expected an object keyed by generator");
  std::vector<Element> imgs;
  for (const auto& name : source->ring()->names()) {
    const std::string where = origin + ".images." + name;
    imgs.push_back(located(where, [&] { return parse_expr(text(field(images, name.c_str(), origin + ".images"), where), target->ring()); }));
  }
  if (images.size() != imgs.size()) format_error(origin + ".images", "entries must match the source generators");
  std::map<Var, Element> overrides;
  const Json given = j.value("overrides", Json::object());
  if (!given.is_object()) format_error(origin + ".overrides", "expected an object");
  for (const auto& [key, value] : given.items()) {
    const std::string where = origin + ".overrides." + key;
    const Var v = single_variable(located(where, [&] { return parse_expr(key, source->ring()); }), where);
    overrides.emplace(v, located(where, [&] { return parse_expr(text(value, where), target->ring()); }));
  }
  return located(origin, [&] { return HopfMorphism(source, target, std::move(imgs), std::move(overrides)); });
}

Registry Loader::registry_file(const fs::path& path, RegistryManifest* out) {
  const std::string origin = path.filename().string();
  const RegistryManifest m = manifest_from_json(parse_json(read_file(path), origin), origin);
  const fs::path dir = path.parent_path();
  Registry reg(hopf(m.hopf, dir));
  std::map<std::string, std::string> by_file;  // canonical member path -> name
  for (const auto& c : m.comodules) {
    ComoduleFile f = comodule_file(resolve(c.file, dir));
    if (f.comodule.hopf.get() != reg.hopf().get())
      format_error(origin, "comodule '" + c.name + "' is not over the registry's Hopf algebra");
    located(origin, [&] { return reg.add(c.name, std::move(f.comodule)); });
    by_file.emplace(fs::weakly_canonical(resolve(c.file, dir)).string(), c.name);
  }
  auto member = [&](const std::string& ref, const fs::path& base, const std::string& where) {
    if (reg.find(ref)) return reg.require(ref);
    auto it = by_file.end();
    if (fs::exists(base / ref)) it = by_file.find(fs::weakly_canonical(base / ref).string());
    if (it == by_file.end()) format_error(where, "'" + ref + "' is not a registry member");
    return reg.require(it->second);
  };
  if (m.has_closure) reg.close(m.closure);
  for (std::size_t k = 0; k < m.morphisms.size(); ++k) {
    const auto& f = m.morphisms[k];
    const std::string where = origin + ".morphisms[" + std::to_string(k) + "]";
    std::size_t s, t;
    ScalarMatrix matrix;
    if (!f.file.empty()) {
      const fs::path mp = resolve(f.file, dir);
      const Json mj = parse_json(read_file(mp), mp.filename().string());
      s = member(text(field(mj, "source", where), where), mp.parent_path(), where);
      t = member(text(field(mj, "target", where), where), mp.parent_path(), where);
      matrix = scalar_matrix_from_json(field(mj, "matrix", where), reg.hopf()->field(), where + ".matrix");
    } else {
      s = member(f.source, dir, where);
      t = member(f.target, dir, where);
      matrix = scalar_matrix_from_json(f.matrix, reg.hopf()->field(), where + ".matrix");
    }
    located(where, [&] {
      reg.add_morphism(f.name, s, t, std::move(matrix));
      return 0;
    });
  }
  if (out) *out = m;
  return reg;
}

std::string Loader::reserialize(const fs::path& path) {
  const std::string origin = path.filename().string();
  const Json j = parse_json(read_file(path), origin);
  if (!j.is_object()) format_error(origin, "expected an object");
  if (j.contains("generators")) return dump(presentation_to_json(*presentation_from_json(j, origin)));
  if (j.contains("comodules")) {
    RegistryManifest m;
    registry_file(path, &m);
    return dump(manifest_to_json(m));
  }
  if (j.contains("images")) {
    const HopfMorphism f = hopf_morphism_file(path);
    Json out;
    out["source"] = j["source"];
    out["target"] = j["target"];
    Json images = Json::object();
    const auto& names = f.source()->ring()->names();
    for (std::uint32_t g = 0; g < names.size(); ++g) images[names[g]] = to_string(f.apply(Element::generator(f.source()->ring(), g)));
    out["images"] = std::move(images);
    if (j.contains("overrides")) {
      Json ov = Json::object();
      for (const auto& [key, value] : j["overrides"].items()) {
        const Element k = parse_expr(key, f.source()->ring());
        ov[to_string(k)] = to_string(f.apply(k));
      }
      out["overrides"] = std::move(ov);
    }
    return dump(out);
  }
  if (j.contains("source")) {
    const ComoduleMorphism f = morphism_file(path);
    Json out;
    out["source"] = j["source"];
    out["target"] = j["target"];
    out["matrix"] = scalar_matrix_to_json(f.matrix);
    return dump(out);
  }
  const ComoduleFile c = comodule_file(path);
  return dump(comodule_to_json(c.comodule, c.hopf_ref));
}

}  // namespace diffhopf::cli
