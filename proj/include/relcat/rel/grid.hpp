#pragma once

#include <string>
#include <vector>

#include "relcat/cat/functor.hpp"
#include "relcat/rel/krel.hpp"

namespace relcat {

/// A functor [dims[0]] × ... × [dims[r-1]] → C, stored by its values on points
/// and unit edges. Points are numbered row-major with direction 0 slowest.
struct Grid {
  std::vector<int> dims;
  std::vector<ObjIdx> objects;             // per point
  std::vector<std::vector<MorIdx>> edges;  // edges[d][x]: unit edge x → x + e_d, kNone on the far face

  std::size_t num_points() const { return objects.size(); }
  friend bool operator==(const Grid&, const Grid&) = default;
};

std::size_t grid_point_count(const std::vector<int>& dims);
std::vector<int> grid_coords(const std::vector<int>& dims, std::size_t point);
std::size_t grid_point(const std::vector<int>& dims, const std::vector<int>& coords);

/// Every grid functor into c whose direction-d unit edges lie in masks[d]
/// (nullptr = any morphism), in lexicographic order of point assignments.
/// Throws QuotaError beyond `limit` results.
std::vector<Grid> enumerate_grids(const FinCat& c, const std::vector<int>& dims,
                                  const std::vector<const Mask*>& masks, std::size_t limit);

/// Value of the grid on the morphism a → b (a ≤ b coordinatewise).
MorIdx grid_value(const FinCat& c, const Grid& g, const std::vector<int>& a, const std::vector<int>& b);

/// Precomposition with a monotone map alpha: [n] → [dims[dir]] in one direction
/// (alpha has n + 1 entries).
Grid grid_precompose(const FinCat& c, const Grid& g, int dir, const std::vector<int>& alpha);
Grid grid_face(const FinCat& c, const Grid& g, int dir, int i);
Grid grid_degeneracy(const FinCat& c, const Grid& g, int dir, int i);
/// Restriction to the hyperplane coord_dir = index (the direction is removed).
Grid grid_slice(const Grid& g, int dir, int index);
/// Postcomposition with a functor.
Grid grid_apply(const FinFunctor& f, const Grid& g);
/// A grid with one extra trailing direction of length 1 and identity edges.
Grid grid_constant_extension(const FinCat& c, const Grid& g);

/// Canonical id: the object id for a single point, the morphism id for a
/// single unit edge, else "[e,e,...|e,...]" listing unit edges direction by
/// direction in point order.
std::string grid_id(const FinCat& c, const Grid& g);

}  // namespace relcat
