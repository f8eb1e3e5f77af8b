#pragma once

#include <vector>

#include "relcat/arrow/path.hpp"
#include "relcat/nerve/nerves.hpp"

namespace relcat {

/// A map of diagrams: one functor per level, natural in faces and degeneracies.
struct DiagramMap {
  CatDiagram source;
  CatDiagram target;
  std::vector<FinFunctor> components;
};
ValidationReport check_diagram_map(const DiagramMap& f);

/// w_*(f) on the window [0, bound]^k; the grids behind the level ids are kept.
/// With `same_target`, its target diagram is reused (for zigzags X → Z ← Y).
struct WStarMap {
  DiagramMap map;
  std::vector<WStarLevel> source_levels;
  std::vector<WStarLevel> target_levels;
};
WStarMap w_star_diagram_map(const KRelFunctor& f, int bound, const WStarMap* same_target = nullptr);

/// Per level, the n-arrow fibers of f_p in Cat-hat, with the faces and
/// degeneracies induced by those of the inputs, and π levelwise.
struct LevelwiseFiber {
  DiagramMap f;
  std::vector<NArrowFiber> levels;
  CatDiagram result;
  DiagramMap pi;
};
/// Throws InvalidInput when f is not a map of diagrams.
LevelwiseFiber levelwise_n_arrow_fiber(const DiagramMap& f, int n);

struct LevelwisePullback {
  LevelwiseFiber fiber;
  DiagramMap g;
  std::vector<NArrowPullback> levels;
  CatDiagram result;
  DiagramMap pi;
};
LevelwisePullback levelwise_n_arrow_pullback(const DiagramMap& f, const DiagramMap& g, int n);

/// Builds, level by level, the comparison functor from w_*(fibers of f) to
/// the levelwise fibers of w_*(f) and checks that it is an isomorphism of
/// diagrams commuting with π (window [0, bound]^k, k ≥ 1).
ValidationReport check_wpicom_fiber(const KRelFunctor& f, int n, int bound);
/// The same for the n-arrow pullback object of f and g.
ValidationReport check_wpicom_pullback(const KRelFunctor& f, const KRelFunctor& g, int n, int bound);

}  // namespace relcat
