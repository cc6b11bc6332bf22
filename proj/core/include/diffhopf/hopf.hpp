#pragma once

// Presented differential Hopf algebras.
//
// Delta, S and epsilon are given on generators and extended as differential
// algebra homomorphisms. The composite maps needed by the axiom checker
// ((Delta (x) id), m(S (x) id), ...) are themselves homomorphisms out of
// tensor powers and are built once per algebra.

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "diffhopf/diffpoly.hpp"
#include "diffhopf/report.hpp"
#include "diffhopf/ring_hom.hpp"

namespace diffhopf {

class HopfAlgebra;
using HopfPtr = std::shared_ptr<const HopfAlgebra>;

class HopfAlgebra {
 public:
  struct Spec {
    std::string name;
    RingPtr ring;
    std::vector<Element> delta;     // over tensor_power(ring, 2)
    std::vector<Element> antipode;  // over ring
    std::vector<Scalar> counit;
    std::map<Var, Element> antipode_overrides;
    std::string builtin_id;  // e.g. "gl2-const"; empty for file-defined algebras
  };

  /// Throws NonUnitDenominatorImage if S sends a denominator to a non-unit.
  static HopfPtr make(Spec spec);

  const std::string& name() const { return name_; }
  const std::string& builtin_id() const { return builtin_id_; }
  const std::map<Var, Element>& antipode_overrides() const { return antipode_.overrides(); }
  const RingPtr& ring() const { return ring_; }
  const RingPtr& ring2() const { return ring2_; }
  const RingPtr& ring3() const { return ring3_; }
  FieldKind field() const { return ring_->field(); }

  const RingHom& delta() const { return delta_; }
  const RingHom& antipode() const { return antipode_; }
  const RingHom& counit() const { return counit_; }  // into Ring::scalars
  const std::vector<Element>& delta_images() const { return delta_images_; }
  const std::vector<Scalar>& counit_images() const { return counit_images_; }

  Element apply_delta(const Element& x) const { return delta_.apply(x); }
  Element apply_antipode(const Element& x) const { return antipode_.apply(x); }
  Scalar apply_counit(const Element& x) const { return counit_.apply(x).constant_value(); }

  // Composites out of A (x) A.
  const RingHom& delta_left() const { return *delta_left_; }    // Delta (x) id
  const RingHom& delta_right() const { return *delta_right_; }  // id (x) Delta
  const RingHom& counit_left() const { return *counit_left_; }  // epsilon (x) id, then m
  const RingHom& counit_right() const { return *counit_right_; }
  const RingHom& antipode_left() const { return *antipode_left_; }  // m(S (x) id)
  const RingHom& antipode_right() const { return *antipode_right_; }
  const RingHom& multiply() const { return *multiply_; }
  /// S (x) S on A (x) A, used for the dual of tensor products.
  const RingHom& antipode_both() const { return *antipode_both_; }

 private:
  HopfAlgebra(Spec spec, RingHom delta, RingHom antipode, RingHom counit);

  std::string name_;
  std::string builtin_id_;
  RingPtr ring_, ring2_, ring3_;
  std::vector<Element> delta_images_;
  std::vector<Scalar> counit_images_;
  RingHom delta_, antipode_, counit_;
  std::optional<RingHom> delta_left_, delta_right_, counit_left_, counit_right_, antipode_left_, antipode_right_,
      multiply_, antipode_both_;
};

/// Builtin presentations. `n` is used by the GL variants (1..4).
enum class Builtin { Gm, Ga, GL, GmConstant, GaConstant, GLConstant, Trivial };

HopfPtr builtin(Builtin kind, FieldKind field, std::uint32_t n = 2);
/// Looks up "gm", "ga", "gl2", "gm-const", "gl3-const", "trivial", ...
/// The field defaults to Q for constant variants and Q(t) otherwise.
HopfPtr builtin_by_name(const std::string& name, std::optional<FieldKind> field = std::nullopt);

/// Coassociativity, counit and antipode laws on every generator and every
/// d^k(generator) with k <= depth, plus compatibility of each structure map
/// with the derivation and the rewrite rules.
Report check_hopf_axioms(const HopfAlgebra& h, std::uint32_t depth);

/// A map of presented Hopf algebras given on generators: f: source -> target
/// on coordinate rings (so it goes the opposite way on groups).
class HopfMorphism {
 public:
  HopfMorphism(HopfPtr source, HopfPtr target, std::vector<Element> images, std::map<Var, Element> overrides = {});

  const HopfPtr& source() const { return source_; }
  const HopfPtr& target() const { return target_; }
  const RingHom& map() const { return map_; }
  Element apply(const Element& x) const { return map_.apply(x); }

 private:
  HopfPtr source_, target_;
  RingHom map_;
};

Report check_hopf_morphism(const HopfMorphism& f, std::uint32_t depth = 1);

}  // namespace diffhopf
