#pragma once

#include <cstdint>
#include <vector>

#include "relcat/cat/functor.hpp"
#include "relcat/cat/validate.hpp"
#include "relcat/nerve/multisset.hpp"
#include "relcat/rel/krel.hpp"
#include "relcat/rel/wstar.hpp"

namespace relcat {

// Direction convention for multisimplicial nerves of a k-relative category:
// direction d < k is the v_{d+1} direction, direction k is the w direction.
// Cell ids are grid ids (see grid_id).

/// Classical nerve truncated at `bound`: d-cells are composable d-chains.
TruncMultiSSet nerve(const FinCat& c, int bound);

/// Cell maps nerve(source) → nerve(target) per degree, induced by f.
std::vector<std::vector<std::uint32_t>> nerve_map(const FinFunctor& f, const TruncMultiSSet& source,
                                                  const TruncMultiSSet& target);

/// Bisimplicial nerve of a relative category, built directly from relative
/// functors p^v × q^w → C (exhaustive functor search; meant for small inputs).
TruncMultiSSet simplicial_nerve(const KRelStructure& c, int bound);

/// (k+1)-simplicial nerve from relative grid functors.
TruncMultiSSet k_simplicial_nerve(const KRelStructure& c, int bound);

/// Cell maps between k-simplicial nerves per level, induced by a relative functor.
std::vector<std::vector<std::uint32_t>> k_simplicial_nerve_map(const KRelFunctor& f, const TruncMultiSSet& source,
                                                            const TruncMultiSSet& target);

/// A diagram of categories over the truncated k-fold simplex grid, with
/// face and degeneracy functors between levels.
struct CatDiagram {
  int arity = 1;
  int bound = 0;
  std::vector<CatPtr> levels;
  std::vector<std::vector<std::vector<FinFunctor>>> faces;         // [level][dir][i]
  std::vector<std::vector<std::vector<FinFunctor>>> degeneracies;  // [level][dir][i]

  std::size_t level_index(const std::vector<int>& degree) const;
  std::vector<int> degree_of(std::size_t level) const;
};

/// Simplicial identities for the functors of a diagram (exact table equality).
ValidationReport check_diagram(const CatDiagram& d);

/// Constant diagram at c.
CatDiagram constant_diagram(const CatPtr& c, int arity, int bound);

/// Applies the nerve in a new trailing direction. Throws InvalidInput when the
/// diagram fails check_diagram.
TruncMultiSSet levelwise_nerve(const CatDiagram& d);

/// The diagram of higher-equivalence categories w_*(C) on the window [0, bound]^k.
/// The level data (grids behind the ids) is returned through `levels`.
CatDiagram w_star_diagram(const KRelStructure& c, int bound, std::vector<WStarLevel>* levels = nullptr);

/// Compares levelwise_nerve(w_star_diagram(C)) with k_simplicial_nerve(C)
/// cell for cell, translating chains of w_* morphisms into grids.
ValidationReport check_levelwise_identity(const KRelStructure& c, int bound);

}  // namespace relcat
