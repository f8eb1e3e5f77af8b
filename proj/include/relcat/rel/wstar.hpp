#pragma once

#include <vector>

#include "relcat/rel/grid.hpp"
#include "relcat/rel/krel.hpp"

namespace relcat {

/// One level of the higher-equivalence functor: objects are relative functors
/// from the grid shape p_k^{v_k} × ... × p_1^{v_1} (direction i in v_i), and
/// morphisms are natural transformations with components in w, stored as grids
/// with one extra trailing direction of length 1.
struct WStarLevel {
  std::vector<int> p;  // p[0] = p_1
  CatPtr cat;
  std::vector<Grid> object_grids;
  std::vector<Grid> morphism_grids;
};

/// Requires k ≥ 1 and p.size() == k.
WStarLevel w_star_at(const KRelStructure& c, const std::vector<int>& p);

/// The functor level(p) → level(p - e_dir) given by the i-th face in direction dir.
FinFunctor w_star_face(const KRelStructure& c, const WStarLevel& from, const WStarLevel& to, int dir, int i);
/// The functor level(p) → level(p + e_dir) given by the i-th degeneracy.
FinFunctor w_star_degeneracy(const KRelStructure& c, const WStarLevel& from, const WStarLevel& to, int dir,
                             int i);
/// The functor induced by a relative functor between k-relative structures.
FinFunctor w_star_map(const KRelFunctor& f, const WStarLevel& from, const WStarLevel& to);

}  // namespace relcat
