#pragma once

#include "relcat/cat/functor.hpp"
#include "relcat/core/verdict.hpp"
#include "relcat/nerve/homology.hpp"
#include "relcat/rel/krel.hpp"

namespace relcat {

/// A smaller category with inverse homotopy equivalences of nerves:
/// retraction ∘ inclusion = id on the core.
struct Reduction {
  CatPtr core;
  FinFunctor inclusion;   // core → c
  FinFunctor retraction;  // c → core
};

/// Skeleton first; a thin skeleton (a poset) is further cut down by removing
/// beat points.
Reduction reduce_category(const CatPtr& c);

/// π₀ bijectivity, then equal homology and vanishing mapping-cone homology
/// of the induced nerve map in degrees below `bound`. QuotaError becomes
/// Inconclusive.
WEVerdict induced_we_verdict(const FinFunctor& f, int bound = 4);

/// Skeleton of a k-relative category along isomorphisms that lie in w with
/// their inverses; the masks are restricted. Inclusion and retraction are
/// relative functors and inverse homotopy equivalences (the comparison
/// isomorphisms are natural weak equivalences).
struct RelativeReduction {
  KRelStructure core;
  FinFunctor inclusion;
  FinFunctor retraction;
};
RelativeReduction reduce_relative(const KRelStructure& s);

/// Weak-equivalence verdict for a relative functor. k = 0, and w = everything
/// on both sides, is the Cat-hat verdict on the underlying functor; otherwise
/// the same tests run on the diagonal of the k-simplicial nerves of the
/// reduced models, truncated at `bound`. A Rezk equivalence of the nerves is a diagonal equivalence, so
/// refutations are sound.
WEVerdict relative_we_verdict(const KRelFunctor& f, int bound = 3);

/// Homology in degrees below `bound` of the homotopy type used above: the
/// nerve for k = 0, the diagonal of the reduced k-simplicial nerve otherwise.
HomologySignature relative_homology(const KRelStructure& s, int bound = 3);

}  // namespace relcat
