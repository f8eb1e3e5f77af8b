#pragma once

#include <string>
#include <vector>

#include "relcat/cat/functor.hpp"

namespace relcat {

using Mask = std::vector<bool>;

/// k wide subcategories v_1..v_k and weak equivalences w ⊆ each v_i over an
/// ambient category. k = 0 is a category with all maps weak equivalences;
/// k = 1 is a relative category (v_1 = ambient).
struct KRelStructure {
  CatPtr ambient;
  std::vector<Mask> v;  // v[i] is v_{i+1}
  Mask w;
  /// Declared saturation; only the maximal/minimal sufficient conditions are
  /// ever verified (see saturation_check).
  bool saturated_declared = false;

  int k() const { return static_cast<int>(v.size()); }
  const FinCat& cat() const { return *ambient; }
};

Mask full_mask(const FinCat& c);
Mask identity_mask(const FinCat& c);
Mask mask_from_ids(const FinCat& c, const std::vector<std::string>& ids);
std::vector<std::string> mask_ids(const FinCat& c, const Mask& m);
bool mask_subset(const Mask& a, const Mask& b);

/// Checks that the mask contains all identities and is closed under
/// composition; returns an empty string or a description of the first failure.
std::string subcategory_mask_problem(const FinCat& c, const Mask& m);

/// Structural well-formedness (masks are wide subcategories, w ⊆ v_i, and the
/// k = 0 / k = 1 conventions). Throws InvalidInput with the first problem.
void check_krel_shape(const KRelStructure& s);

/// Cat-hat reading: k = 0, every morphism a weak equivalence.
KRelStructure cat_hat(const CatPtr& c);
/// k = 1 with w = ambient.
KRelStructure maximal(const CatPtr& c);
/// k = 1 with w = identities.
KRelStructure minimal(const CatPtr& c);
/// k-relative structure with every mask full.
KRelStructure all_full(const CatPtr& c, int k);

enum class AxiomStatus { Pass, Fail, InconclusiveAtDepth };

struct AxiomVerdict {
  AxiomStatus status = AxiomStatus::Pass;
  std::string witness;
  int depth = 0;
  std::string to_string() const;
};

struct KRelReport {
  std::vector<std::string> shape_problems;
  AxiomVerdict generation;  // every map is a composite of v_i-maps
  AxiomVerdict relations;   // every relation follows from v_i-internal and mixed squares
  bool ok() const {
    return shape_problems.empty() && generation.status == AxiomStatus::Pass &&
           relations.status == AxiomStatus::Pass;
  }
};

/// Checks the two generation axioms. The relation axiom is decided by a
/// congruence closure over words of non-identity v-maps of length ≤ depth:
/// the rewrite steps are composition inside one v_i (including cancellation to
/// an empty word) and exchanging the two sides of a commutative square whose
/// sides lie in v_i and v_j. The verdict is exact when the graph of
/// non-identity v-maps is acyclic and depth covers its longest path; otherwise
/// a split class is reported as InconclusiveAtDepth, as is a search with no
/// split found.
KRelReport validate_krel(const KRelStructure& s, int depth = 4);

enum class ShapeFlavor { W, V, Minimal };

/// Shapes on the chain [p]: W gives p^w (all masks full); V with index i gives
/// p^{v_i} (v_i full, other masks identities); Minimal gives p^v for k = 1.
/// `i` is 1-based and only used for V.
KRelStructure shape_chain(int p, ShapeFlavor flavor, int k, int i = 1);

struct KRelFunctor {
  KRelStructure source;
  KRelStructure target;
  FinFunctor functor;
};

/// Empty string when the functor maps each v_i into v_i and w into w.
std::string relative_functor_problem(const KRelFunctor& f);

/// Sufficient saturation conditions: maximal (w = all) or minimal with no
/// non-identity isomorphisms. Returns true when one of them holds.
bool saturation_check(const KRelStructure& s);

}  // namespace relcat
