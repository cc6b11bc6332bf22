#include "commands.hpp"

#include <fstream>
#include <functional>

#include <CLI11.hpp>

#include "diffhopf/error.hpp"
#include "diffhopf/expr.hpp"
#include "io.hpp"

namespace diffhopf::cli {

namespace {

struct Output {
  std::ostream& out;
  int emit(const std::string& command, const Report& r, const Json& payload = Json::object()) {
    out << dump(report_to_json(command, r, payload));
    return r.pass ? 0 : 1;
  }
};

std::optional<FieldKind> field_option(const std::string& s) {
  if (s.empty()) return std::nullopt;
  return parse_field_name(s);
}

// A hopf reference in `ref_dir` as seen from `out_dir`.
std::string rebase_ref(const std::string& ref, const fs::path& ref_dir, const fs::path& out_dir) {
  const fs::path p = ref_dir / ref;
  if (fs::path(ref).is_absolute() || !fs::exists(p)) return ref;
  return fs::relative(fs::absolute(p), fs::absolute(out_dir)).generic_string();
}

void write_text(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(Errc::FormatError, "cannot write '" + path + "'");
  f << content;
}

void write_comodule(const std::string& path, const Comodule& c, const std::string& hopf_ref, const fs::path& input) {
  const fs::path out_dir = fs::path(path).parent_path();
  write_text(path, dump(comodule_to_json(c, rebase_ref(hopf_ref, input.parent_path(), out_dir))));
}

Json strings_of(const std::vector<Element>& xs) {
  Json j = Json::array();
  for (const auto& x : xs) j.push_back(to_string(x));
  return j;
}

Json error_json(std::string_view code, const std::string& message) {
  Json j;
  j["error"] = Json{{"code", std::string(code)}, {"message", message}};
  return j;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact checks for differential Hopf algebras and their comodules", "diffhopf"};
  app.require_subcommand(1);
  Output o{out};
  Loader loader;
  const fs::path cwd = fs::current_path();
  std::function<int()> action;

  // check-hopf
  std::string hopf_file, builtin_name, field_text;
  std::uint32_t depth = 3;
  auto* check_hopf = app.add_subcommand("check-hopf", "Check the Hopf algebra axioms of a presentation");
  check_hopf->add_option("file", hopf_file, "Presentation file or builtin name");
  check_hopf->add_option("--builtin", builtin_name, "Builtin presentation");
  check_hopf->add_option("--field", field_text, "Q or Q(t)");
  check_hopf->add_option("--depth", depth, "Highest derivative order checked")->capture_default_str();
  check_hopf->callback([&] {
    action = [&] {
      const std::string ref = builtin_name.empty() ? hopf_file : builtin_name;
      if (ref.empty()) throw Error(Errc::InvalidArgument, "check-hopf needs a file or --builtin");
      const HopfPtr h = loader.hopf(ref, cwd, field_option(field_text));
      return o.emit("check-hopf", check_hopf_axioms(*h, depth),
                    Json{{"hopf", h->name()}, {"field", field_name(h->field())}, {"depth", depth}});
    };
  });

  // check-comodule
  std::string file_a, file_b, output_path;
  auto* check_comod = app.add_subcommand("check-comodule", "Check the comodule axioms");
  check_comod->add_option("file", file_a, "Comodule file")->required();
  check_comod->callback([&] {
    action = [&] {
      const auto c = loader.comodule_file(file_a).comodule;
      return o.emit("check-comodule", check_comodule(c), Json{{"dim", c.dim()}});
    };
  });

  // check-morphism
  std::uint32_t morphism_depth = 1;
  auto* check_mor = app.add_subcommand("check-morphism", "Check a comodule or Hopf algebra morphism");
  check_mor->add_option("file", file_a, "Morphism file")->required();
  check_mor->add_option("--depth", morphism_depth, "Derivative depth for Hopf morphisms")->capture_default_str();
  check_mor->callback([&] {
    action = [&] {
      const Json j = parse_json(read_file(file_a), fs::path(file_a).filename().string());
      if (j.is_object() && j.contains("images")) {
        const HopfMorphism f = loader.hopf_morphism_file(file_a);
        return o.emit("check-morphism", check_hopf_morphism(f, morphism_depth), Json{{"kind", "hopf"}});
      }
      return o.emit("check-morphism", verify_intertwiner(loader.morphism_file(file_a)), Json{{"kind", "comodule"}});
    };
  });

  // prolong
  std::uint32_t order = 1;
  auto* prolong_cmd = app.add_subcommand("prolong", "Prolongation V^(p)");
  prolong_cmd->add_option("file", file_a, "Comodule file")->required();
  prolong_cmd->add_option("-p,--order", order, "Prolongation order")->capture_default_str();
  prolong_cmd->add_option("-o,--output", output_path, "Write the prolonged comodule here");
  prolong_cmd->callback([&] {
    action = [&] {
      const auto in = loader.comodule_file(file_a);
      const Comodule c = prolong(in.comodule, order);
      if (!output_path.empty()) write_comodule(output_path, c, in.hopf_ref, file_a);
      return o.emit("prolong", check_comodule(c),
                    Json{{"dim", c.dim()}, {"basis", c.basis}, {"matrix", matrix_to_json(c.matrix)}});
    };
  });

  // combine
  std::string op, morphism_file;
  std::uint32_t power = 2, twist = 1;
  auto* combine_cmd = app.add_subcommand("combine", "Tensor, sum, dual, symmetric power, det twist, pushforward");
  combine_cmd->add_option("--op", op, "tensor | sum | dual | sym | det-twist | pushforward")
      ->required()
      ->check(CLI::IsMember({"tensor", "sum", "dual", "sym", "det-twist", "pushforward"}));
  combine_cmd->add_option("file", file_a, "Comodule file")->required();
  combine_cmd->add_option("second", file_b, "Second comodule file for tensor and sum");
  combine_cmd->add_option("-s,--power", power, "Symmetric power")->capture_default_str();
  combine_cmd->add_option("-r,--twist", twist, "Determinant twist")->capture_default_str();
  combine_cmd->add_option("--morphism", morphism_file, "Hopf morphism file for pushforward");
  combine_cmd->add_option("-o,--output", output_path, "Write the result here");
  combine_cmd->callback([&] {
    action = [&] {
      const auto a = loader.comodule_file(file_a);
      auto second = [&] {
        if (file_b.empty()) throw Error(Errc::InvalidArgument, "--op " + op + " needs a second comodule");
        return loader.comodule_file(file_b).comodule;
      };
      std::string ref = a.hopf_ref;
      Comodule c = a.comodule;
      if (op == "tensor") {
        c = tensor(a.comodule, second());
      } else if (op == "sum") {
        c = direct_sum(a.comodule, second());
      } else if (op == "dual") {
        c = dual(a.comodule);
      } else if (op == "sym") {
        c = sym_power(a.comodule, power);
      } else if (op == "det-twist") {
        c = det_twist(a.comodule, twist);
      } else {
        if (morphism_file.empty()) throw Error(Errc::InvalidArgument, "pushforward needs --morphism");
        const HopfMorphism f = loader.hopf_morphism_file(morphism_file);
        c = pushforward(a.comodule, f);
        const Json mj = parse_json(read_file(morphism_file), morphism_file);
        ref = rebase_ref(mj.at("target").get<std::string>(), fs::path(morphism_file).parent_path(),
                         fs::path(file_a).parent_path());
      }
      if (!output_path.empty()) write_comodule(output_path, c, ref, file_a);
      return o.emit("combine", check_comodule(c),
                    Json{{"op", op}, {"dim", c.dim()}, {"basis", c.basis}, {"matrix", matrix_to_json(c.matrix)}});
    };
  });

  // hom
  auto* hom_cmd = app.add_subcommand("hom", "Basis of Hom(V, W)");
  hom_cmd->add_option("source", file_a, "Comodule V")->required();
  hom_cmd->add_option("target", file_b, "Comodule W")->required();
  hom_cmd->callback([&] {
    action = [&] {
      const auto v = loader.comodule_file(file_a).comodule;
      const auto w = loader.comodule_file(file_b).comodule;
      Report r;
      Json basis = Json::array();
      for (const auto& f : hom_basis(v, w)) {
        r.merge(verify_intertwiner(f));
        basis.push_back(scalar_matrix_to_json(f.matrix));
      }
      return o.emit("hom", r, Json{{"dim", basis.size()}, {"basis", basis}});
    };
  });

  // orbit, coordinate-rep
  std::string hopf_ref, element;
  auto add_element_options = [&](CLI::App* sub) {
    auto* b = sub->add_option("--builtin", builtin_name, "Builtin presentation");
    auto* h = sub->add_option("--hopf", hopf_ref, "Presentation file");
    b->excludes(h);
    sub->add_option("--field", field_text, "Q or Q(t)");
    sub->add_option("--element", element, "Element f of the coordinate ring")->required();
  };
  auto orbit_of = [&] {
    const std::string ref = builtin_name.empty() ? hopf_ref : builtin_name;
    if (ref.empty()) throw Error(Errc::InvalidArgument, "needs --builtin or --hopf");
    const HopfPtr h = loader.hopf(ref, cwd, field_option(field_text));
    return orbit_module(h, parse_expr(element, h->ring()));
  };
  auto* orbit_cmd = app.add_subcommand("orbit", "Orbit module of an element");
  add_element_options(orbit_cmd);
  orbit_cmd->callback([&] {
    action = [&] {
      const OrbitModule om = orbit_of();
      return o.emit("orbit", check_comodule(om.comodule),
                    Json{{"dimension", om.basis.size()},
                         {"basis", strings_of(om.basis)},
                         {"matrix", matrix_to_json(om.comodule.matrix)}});
    };
  });
  auto* coord_cmd = app.add_subcommand("coordinate-rep", "Comodule with f as a matrix coefficient");
  add_element_options(coord_cmd);
  coord_cmd->callback([&] {
    action = [&] {
      const OrbitModule om = orbit_of();
      const CoordinateRep cr = coordinate_rep(om);
      Report r = check_comodule(cr.comodule);
      const Element entry = cr.comodule.matrix[cr.row][cr.col].scaled(cr.scale);
      if (entry != om.f)
        r.fail({"coefficient", "(" + std::to_string(cr.row + 1) + "," + std::to_string(cr.col + 1) + ")", "scale*a = f",
                to_string(entry), to_string(om.f)});
      return o.emit("coordinate-rep", r,
                    Json{{"dimension", cr.comodule.dim()},
                         {"matrix", matrix_to_json(cr.comodule.matrix)},
                         {"conjugation", scalar_matrix_to_json(cr.conjugation)},
                         {"order", cr.order},
                         {"row", cr.row + 1},
                         {"col", cr.col + 1},
                         {"scale", cr.scale.to_string()}});
    };
  });

  // const-split
  std::uint64_t seed = 1;
  auto* split_cmd = app.add_subcommand("const-split", "Constant-matrix splitting of V^(p)");
  split_cmd->add_option("file", file_a, "Comodule file")->required();
  split_cmd->add_option("-p,--order", order, "Prolongation order")->capture_default_str();
  split_cmd->add_option("--seed", seed, "Seed for the sampling search")->capture_default_str();
  split_cmd->callback([&] {
    action = [&] {
      const Comodule v = loader.comodule_file(file_a).comodule;
      const SplitResult s = constant_split_check(v, order, seed);
      Json payload{{"verdict", verdict_name(s.verdict)}, {"hom_dim", s.hom_dim}};
      payload["det_polynomial"] = nullptr;
      if (s.det_polynomial) {
        std::vector<std::string> params;
        for (std::size_t k = 0; k < s.hom_dim; ++k) params.push_back("c" + std::to_string(k + 1));
        const RingPtr pr = Ring::make(Ring::Spec{v.hopf->field(), params, {}, {}});
        payload["det_polynomial"] = to_string(*s.det_polynomial, *pr);
      }
      payload["witness"] = s.witness ? scalar_matrix_to_json(s.witness->matrix) : Json(nullptr);
      return o.emit("const-split", s.report, payload);
    };
  });

  // regular-embed
  auto* embed_cmd = app.add_subcommand("regular-embed", "Embedding of V into copies of the regular comodule");
  embed_cmd->add_option("file", file_a, "Comodule file")->required();
  embed_cmd->callback([&] {
    action = [&] {
      const RegularEmbedding e = regular_embedding(loader.comodule_file(file_a).comodule);
      Json components = Json::array();
      for (const auto& c : e.components) components.push_back(strings_of(c));
      return o.emit("regular-embed", e.report, Json{{"coaction", e.coaction}, {"components", components}});
    };
  });

  // build-L
  std::uint32_t n = 2, r_twist = 0, s_power = 1;
  auto* build_l = app.add_subcommand("build-L", "The space L_{r,s,p} over GL(n)");
  build_l->add_option("-n", n, "Matrix size")->capture_default_str();
  build_l->add_option("-r", r_twist, "Determinant twist")->capture_default_str();
  build_l->add_option("-s", s_power, "Polynomial degree")->capture_default_str();
  build_l->add_option("-p", order, "Derivative order")->capture_default_str();
  build_l->add_option("--field", field_text, "Q or Q(t)");
  build_l->callback([&] {
    action = [&] {
      const LSpace l = linear_comodule_L(n, r_twist, s_power, order,
                                         field_option(field_text).value_or(FieldKind::RationalFunctions));
      Report rep = l.iso_report;
      rep.merge(check_comodule(l.l));
      return o.emit("build-L", rep, Json{{"dim", l.l.dim()}, {"l01p_dim", l.l01p.dim()}, {"basis", l.l.basis}});
    };
  });

  // reconstruct-check
  std::size_t random_elements = 200;
  auto* recon_cmd = app.add_subcommand("reconstruct-check", "Relations, reconstruction and generation on a registry");
  recon_cmd->add_option("manifest", file_a, "Registry manifest")->required();
  recon_cmd->add_option("--random", random_elements, "Random elements checked")->capture_default_str();
  recon_cmd->add_option("--seed", seed, "Seed for the random elements")->capture_default_str();
  recon_cmd->callback([&] {
    action = [&] {
      RegistryManifest m;
      Registry reg = loader.registry_file(file_a, &m);
      Report r = check_relations(reg);
      r.merge(check_reconstruction(reg, random_elements, seed));
      if (!m.targets.empty()) {
        std::vector<GenerationTarget> targets;
        for (const auto& t : m.targets) targets.push_back({parse_expr(t, reg.hopf()->ring()), std::nullopt});
        r.merge(check_generation(reg, targets));
      }
      Json names = Json::array();
      for (std::size_t k = 0; k < reg.size(); ++k) names.push_back(reg.name(k));
      return o.emit("reconstruct-check", r, Json{{"comodules", names}, {"morphisms", reg.morphisms().size()}});
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    out << dump(error_json("UsageError", e.what()));
    err << app.help();
    return 2;
  }
  try {
    return action();
  } catch (const Error& e) {
    out << dump(error_json(errc_name(e.code()), e.what()));
    return 2;
  }
}

}  // namespace diffhopf::cli
