#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "relcat/cat/validate.hpp"

namespace relcat {

/// A (multi)simplicial set with `arity` directions, stored for multidegrees
/// with every entry in [0, bound]. Cells carry canonical string ids; face and
/// degeneracy maps are index tables. Degeneracies that would leave the window
/// are not stored.
struct TruncMultiSSet {
  int arity = 1;
  int bound = 0;
  std::vector<std::vector<std::string>> cells;  // per level
  // faces[level][dir][i][cell] and degeneracies[level][dir][i][cell]
  std::vector<std::vector<std::vector<std::vector<std::uint32_t>>>> faces;
  std::vector<std::vector<std::vector<std::vector<std::uint32_t>>>> degeneracies;

  TruncMultiSSet() = default;
  TruncMultiSSet(int arity, int bound);

  std::size_t num_levels() const { return cells.size(); }
  std::size_t level_index(const std::vector<int>& degree) const;
  std::vector<int> degree_of(std::size_t level) const;
  /// Level reached by moving `delta` in direction dir, or npos outside the window.
  std::size_t neighbor(std::size_t level, int dir, int delta) const;

  const std::vector<std::string>& cells_at(const std::vector<int>& degree) const {
    return cells[level_index(degree)];
  }
  std::size_t count_at(const std::vector<int>& degree) const { return cells_at(degree).size(); }

  /// Cell counts of all levels in level order.
  std::vector<std::size_t> counts() const;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

/// Exhaustive check of the simplicial identities within the window, in every
/// direction and between directions.
ValidationReport check_simplicial_identities(const TruncMultiSSet& s);

/// The arity-1 simplicial set of (d,...,d)-cells with simultaneous faces and
/// degeneracies. Throws InvalidInput for arity < 1.
TruncMultiSSet diagonal(const TruncMultiSSet& s);

/// Cells not in the image of any degeneracy, per level.
std::vector<std::vector<bool>> nondegenerate_cells(const TruncMultiSSet& s);

/// Structural equality: same shape, ids, faces and degeneracies.
bool same_sset(const TruncMultiSSet& a, const TruncMultiSSet& b, std::string* difference = nullptr);

}  // namespace relcat
