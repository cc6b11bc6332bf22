#pragma once

// JSON file formats. Values are expression strings in the parser grammar.
//
// presentation: name, field, generators, denominators, rewrite, delta,
//               antipode, counit, antipode_overrides
// comodule:     hopf, dim, basis, matrix
// morphism:     source, target, matrix            (comodule morphism)
//               source, target, images            (Hopf morphism)
// registry:     hopf, comodules, morphisms, closure, targets
//
// A "hopf" reference is a builtin name ("gm", "gl2-const", ...) or a path
// ending in .json. Relative paths are resolved against the referring file's
// directory, then against DIFFHOPF_PATH (colon-separated).

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "diffhopf/comodule.hpp"
#include "diffhopf/hopf.hpp"
#include "diffhopf/reconstruct.hpp"
#include "diffhopf/report.hpp"

namespace diffhopf::cli {

using Json = nlohmann::ordered_json;
namespace fs = std::filesystem;

/// Canonical text of a document: two-space indent and a final newline.
std::string dump(const Json& j);
Json parse_json(const std::string& text, const std::string& origin);
std::string read_file(const fs::path& path);

Json presentation_to_json(const HopfAlgebra& h);
HopfPtr presentation_from_json(const Json& j, const std::string& origin);

Json comodule_to_json(const Comodule& c, const std::string& hopf_ref);
Comodule comodule_from_json(const Json& j, const HopfPtr& hopf, const std::string& origin);

Json matrix_to_json(const ElementMatrix& m);
Json scalar_matrix_to_json(const ScalarMatrix& m);
ScalarMatrix scalar_matrix_from_json(const Json& j, FieldKind field, const std::string& origin);

/// Reports: {"command", "pass", <payload fields>, "facts", "witnesses"}.
Json report_to_json(const std::string& command, const Report& r, const Json& payload = Json::object());

struct ComoduleMorphismFile {
  std::string source, target;
  ScalarMatrix matrix;
};

struct HopfMorphismFile {
  std::string source, target;
  std::vector<std::string> images;                  // per source generator
  std::map<std::string, std::string> overrides;     // derived variable -> image
};

struct RegistryManifest {
  struct Member {
    std::string name, file;
  };
  struct Morphism {
    std::string name, file, source, target;  // file, or inline source/target/matrix
    Json matrix;
  };
  std::string hopf;
  std::vector<Member> comodules;
  std::vector<Morphism> morphisms;
  Closure closure;
  bool has_closure = false;
  std::vector<std::string> targets;
};

Json manifest_to_json(const RegistryManifest& m);
RegistryManifest manifest_from_json(const Json& j, const std::string& origin);

/// Resolves references and caches loaded presentations, so that files that
/// name the same presentation share one Hopf algebra.
class Loader {
 public:
  explicit Loader(std::vector<fs::path> search_path = search_path_from_env());
  static std::vector<fs::path> search_path_from_env();

  fs::path resolve(const std::string& ref, const fs::path& base_dir) const;
  HopfPtr hopf(const std::string& ref, const fs::path& base_dir, std::optional<FieldKind> field = std::nullopt);

  struct ComoduleFile {
    Comodule comodule;
    std::string hopf_ref;
  };
  ComoduleFile comodule_file(const fs::path& path);
  ComoduleMorphism morphism_file(const fs::path& path);
  HopfMorphism hopf_morphism_file(const fs::path& path);
  /// Builds the registry of a manifest, applying its closure request.
  Registry registry_file(const fs::path& path, RegistryManifest* manifest = nullptr);

  /// Reads a file and returns its canonical re-serialization.
  std::string reserialize(const fs::path& path);

 private:
  std::vector<fs::path> search_;
  std::map<std::string, HopfPtr> presentations_;  // by canonical path
};

}  // namespace diffhopf::cli
