#pragma once

#include <string>

#include "relcat/arrow/path.hpp"
#include "relcat/core/verdict.hpp"

namespace relcat {

/// The diagram
///
///   X ×_Z Y --k--> (n-arrow pullback) --π--> Y
///      |                  |                  | g
///      X    --h--> (n-arrow fibers)  --π--> Z
///
/// with h and k sending objects to identity zigzags, plus its checks.
struct ZigzagEmbedding {
  NArrowPullback arrow;
  PullbackResult strict;
  KRelStructure strict_structure;
  FinFunctor h;  // X → fibers
  FinFunctor k;  // X ×_Z Y → pullback object

  bool squares_commute = false;
  bool left_is_pullback = false;
  bool right_is_pullback = false;
  std::string witness;  // first failed check, empty when all hold
  WEVerdict h_verdict;
  WEVerdict k_verdict;

  bool ok() const { return squares_commute && left_is_pullback && right_is_pullback && h_verdict.is_consistent(); }
};

ZigzagEmbedding zigzag_embed(const KRelFunctor& f, const KRelFunctor& g, int n, int bound = 3);

/// One line per check.
std::string embedding_report(const ZigzagEmbedding& e);

}  // namespace relcat
