#pragma once

// Reconstruction of the coordinate algebra from a registry of comodules.
//
// The symbol a_V(j, i) stands for a_V(v_j (x) u_i), u_i the dual basis of
// V*, and Phi sends it to the matrix entry a_ij of V. Equality of
// reconstruction elements is equality of Phi-images.

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "diffhopf/comodule.hpp"
#include "diffhopf/report.hpp"

namespace diffhopf {

struct Symbol {
  static constexpr std::size_t kUnit = static_cast<std::size_t>(-1);
  std::size_t comodule = kUnit;  // registry index; kUnit for the empty product
  std::size_t j = 0, i = 0;      // 0-based; printed 1-based

  static Symbol unit() { return Symbol{}; }
  bool is_unit() const { return comodule == kUnit; }
  friend auto operator<=>(const Symbol&, const Symbol&) = default;
};

/// A K-linear combination of symbols. Products are folded into single
/// symbols of tensor comodules by tilde_product.
class ReconElement {
 public:
  ReconElement() = default;
  static ReconElement of(Symbol s, Scalar c = Scalar(1));
  static ReconElement constant(Scalar c) { return of(Symbol::unit(), std::move(c)); }

  const std::map<Symbol, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  friend ReconElement operator+(const ReconElement& a, const ReconElement& b);
  friend ReconElement operator-(const ReconElement& a, const ReconElement& b);
  ReconElement scaled(const Scalar& c) const;

 private:
  void add(const Symbol& s, const Scalar& c);
  std::map<Symbol, Scalar> terms_;
};

/// Sum of x_k (x) y_k.
using ReconTensor = std::map<std::pair<Symbol, Symbol>, Scalar>;

struct RegistryMorphism {
  std::string name;
  std::size_t source, target;
  ScalarMatrix matrix;  // target.dim x source.dim
};

struct Closure {
  bool dual = false;
  std::uint32_t tensor_factors = 1;  // 2 adds every pairwise tensor product
  std::uint32_t prolong = 0;         // adds V^(1) .. V^(p)
  bool standard_morphisms = false;   // inclusion/projection, evaluation/coevaluation
};

class Registry {
 public:
  explicit Registry(HopfPtr hopf);

  const HopfPtr& hopf() const { return hopf_; }
  std::size_t size() const { return comodules_.size(); }
  const Comodule& comodule(std::size_t k) const { return comodules_.at(k); }
  const std::string& name(std::size_t k) const { return names_.at(k); }
  std::optional<std::size_t> find(const std::string& name) const;
  /// Index of a comodule by name; UnknownComodule otherwise.
  std::size_t require(const std::string& name) const;

  /// Adds a comodule after check_comodule; InvalidArgument if it fails.
  std::size_t add(std::string name, Comodule c);
  /// Morphisms are stored as given; check_relations reports bad ones.
  void add_morphism(std::string name, std::size_t source, std::size_t target, ScalarMatrix matrix);
  const std::vector<RegistryMorphism>& morphisms() const { return morphisms_; }

  // Companions, inserted on first use as "tensor(a,b)", "dual(a)", "prolong(a,p)".
  std::size_t tensor_index(std::size_t a, std::size_t b);
  std::size_t dual_index(std::size_t a);
  std::size_t prolong_index(std::size_t a, std::uint32_t p = 1);
  std::size_t trivial_index();

  void close(const Closure& c);

  /// Every symbol a_V(j, i) of every registered comodule.
  std::vector<Symbol> symbols() const;

 private:
  std::size_t insert(std::string name, Comodule c);

  HopfPtr hopf_;
  std::vector<Comodule> comodules_;
  std::vector<std::string> names_;
  std::map<std::string, std::size_t> index_;
  std::vector<RegistryMorphism> morphisms_;
};

std::string to_string(const Symbol& s, const Registry& reg);
std::string to_string(const ReconElement& x, const Registry& reg);

Element phi(const Registry& reg, const Symbol& s);
Element phi(const Registry& reg, const ReconElement& x);
Element phi(const Registry& reg, const ReconTensor& x);  // in A (x) A

/// a_V(v (x) u) for coordinate vectors v of V and u of V*.
ReconElement pairing(const Registry& reg, std::size_t v, const std::vector<Scalar>& vec,
                     const std::vector<Scalar>& covec);

ReconElement tilde_product(Registry& reg, const ReconElement& x, const ReconElement& y);
ReconElement tilde_derive(Registry& reg, const ReconElement& x);
ReconTensor tilde_delta(const Registry& reg, const ReconElement& x);
ReconElement tilde_antipode(Registry& reg, const ReconElement& x);
Scalar tilde_counit(const ReconElement& x);
/// m (S~ (x) id), the left side of the antipode law.
ReconElement tilde_antipode_contract(Registry& reg, const ReconTensor& t);
/// m (id (x) eps~), the left side of the counit law.
ReconElement tilde_counit_contract(const ReconTensor& t);

/// Delta~(a_V(v (x) u)) computed in the basis given by the columns of p.
ReconTensor tilde_delta_in_basis(const Registry& reg, std::size_t v, const std::vector<Scalar>& vec,
                                 const std::vector<Scalar>& covec, const ScalarMatrix& p);

/// Both relation families under Phi: a_V(v (x) phi*(u)) = a_W(phi(v) (x) u) for
/// registered morphisms, and a_V(v (x) u) = a_{V^(1)}(dv (x) pi*(u)) with
/// pi: V^(1) -> V, v -> 0, dv -> v, for every V whose prolongation is present.
Report check_relations(const Registry& reg);

/// Phi-homomorphism, d-, Delta-, S-, eps-compatibility and the counit and
/// antipode laws on every symbol and on `random_elements` seeded random
/// combinations, plus basis-change independence of Delta~.
Report check_reconstruction(Registry& reg, std::size_t random_elements = 200, std::uint64_t seed = 1);

struct GenerationTarget {
  Element target;
  std::optional<ReconElement> expression;  // checked if given, searched for otherwise
};

/// Membership of each target in the d-K-subalgebra generated by Phi-images:
/// a given expression is checked directly; otherwise the K-span of products
/// of at most `degree` generators (Phi-images of symbols and of their
/// derivatives up to the target's order) is searched. Fails with check
/// "NotGenerated" at the first target that is not found.
Report check_generation(Registry& reg, const std::vector<GenerationTarget>& targets, std::uint32_t degree = 2);

}  // namespace diffhopf
