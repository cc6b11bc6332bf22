#pragma once

// Finite-dimensional differential comodules given by matrices.
//
// A comodule V with basis v_1..v_n over A has matrix (a_ij) with
// rho(v_j) = sum_i v_i (x) a_ij. The axioms in coordinates are
// Delta(a_ij) = sum_r a_ir (x) a_rj and epsilon(a_ij) = delta_ij.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "diffhopf/hopf.hpp"
#include "diffhopf/linalg.hpp"
#include "diffhopf/report.hpp"

namespace diffhopf {

using ElementMatrix = std::vector<std::vector<Element>>;

struct Comodule {
  HopfPtr hopf;
  ElementMatrix matrix;
  std::vector<std::string> basis;

  /// Validates shape and presentation; labels default to v1..vn.
  static Comodule make(HopfPtr hopf, ElementMatrix matrix, std::vector<std::string> basis = {});
  std::size_t dim() const { return matrix.size(); }
};

struct ComoduleMorphism {
  Comodule source;
  Comodule target;
  ScalarMatrix matrix;  // target.dim x source.dim
};

Report check_comodule(const Comodule& v);
Report verify_intertwiner(const ComoduleMorphism& phi);

/// V^(p) on the basis (v, dv, ..., d^p v). The column of d^s v_j holds
/// C(s,q) d^{s-q} a_ij in the row of d^q v_i for q <= s.
Comodule prolong(const Comodule& v, std::uint32_t p);
/// phi^(p): the same matrix on every derivative block.
ComoduleMorphism prolong_morphism(const ComoduleMorphism& phi, std::uint32_t p);

Comodule tensor(const Comodule& v, const Comodule& w);  // basis v_i (x) w_k at i*dim(w) + k
Comodule direct_sum(const Comodule& v, const Comodule& w);
Comodule dual(const Comodule& v);                       // matrix S(a_ji)
Comodule sym_power(const Comodule& v, std::uint32_t s);  // sorted-multiset basis
/// The 1-dimensional comodule det(A_W), W the presentation's standard rep.
Comodule det_comodule(const HopfPtr& h);
/// V (x) (det*)^r.
Comodule det_twist(const Comodule& v, std::uint32_t r);
Comodule pushforward(const Comodule& v, const HopfMorphism& f);

/// Standard representation of a builtin: X for GL(n), [y] for Gm,
/// [[1, y], [0, 1]] for Ga, the 1-dimensional trivial one otherwise.
Comodule standard_rep(const HopfPtr& h);
Comodule trivial_comodule(const HopfPtr& h);

/// Basis of Hom(V, W) as comodules, from the linear system
/// A_W phi = phi A_V expanded over the monomials of A.
std::vector<ComoduleMorphism> hom_basis(const Comodule& v, const Comodule& w);

struct SplitResult {
  enum class Verdict { Splits, NoSplitting, Inconclusive };
  Verdict verdict = Verdict::Inconclusive;
  std::size_t hom_dim = 0;
  std::optional<Poly> det_polynomial;  // in the combination parameters, when computed
  std::optional<ComoduleMorphism> witness;
  Report report;
};

std::string verdict_name(SplitResult::Verdict v);

/// Looks for an invertible intertwiner V^{(+)(p+1)} -> V^(p) over K.
SplitResult constant_split_check(const Comodule& v, std::uint32_t p, std::uint64_t seed = 1);

/// The comodule spanned by `basis`, which must be K-independent and closed
/// under Delta; throws InvalidArgument otherwise.
Comodule induced_comodule(const HopfPtr& h, const std::vector<Element>& basis);

struct OrbitModule {
  Element f;
  std::vector<Element> basis;  // basis[0] == f
  Comodule comodule;
};

OrbitModule orbit_module(const HopfPtr& h, const Element& f);

struct CoordinateRep {
  Comodule comodule;          // C c C^{-1} on the permuted basis
  ScalarMatrix conjugation;   // C: evaluations in the first row, identity below
  std::vector<std::size_t> order;  // order[k] = original index of permuted basis vector k
  std::size_t row = 0, col = 0;    // f = scale * comodule.matrix[row][col]
  Scalar scale;
};

CoordinateRep coordinate_rep(const OrbitModule& om);

struct RegularEmbedding {
  std::vector<std::vector<Element>> components;  // components[j] = column j of the matrix
  std::vector<std::string> coaction;             // rho(v_j) printed
  Report report;                                 // pass iff (id (x) epsilon) rho = id
};

RegularEmbedding regular_embedding(const Comodule& u);
/// rho(v_j) as "tensor(v1, a_1j) + ...".
std::string coaction_string(const Comodule& v, std::size_t j);

struct LSpace {
  Comodule l01p;          // span of d^q X_ij, basis ordered by (i, q, j)
  Comodule l;             // L_{r,s,p}
  ComoduleMorphism iso;   // (V^(p))^n -> L_{0,1,p}, v_j in copy i -> X_ij
  Report iso_report;
};

/// L_{r,s,p} over GL(n): (det*)^r (x) (polynomials of degree <= s and order <= p).
LSpace linear_comodule_L(std::uint32_t n, std::uint32_t r, std::uint32_t s, std::uint32_t p,
                         FieldKind field = FieldKind::RationalFunctions);

}  // namespace diffhopf
