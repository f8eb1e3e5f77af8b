#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include <boost/container_hash/hash.hpp>

#include "relcat/cat/constructions.hpp"
#include "relcat/rel/krel.hpp"

namespace relcat {

struct IndexVecHash {
  std::size_t operator()(const std::vector<std::uint32_t>& v) const { return boost::hash_range(v.begin(), v.end()); }
};

/// The n-arrow path object Z⌢n⌣Z.
///
/// An object is a zigzag Z_n ... Z_2 ← Z_1 → Z_0 of w-maps: leg i joins Z_i
/// and Z_{i-1}, pointing down (Z_i → Z_{i-1}) for odd i and up for even i.
/// Object id "z[leg_n|...|leg_1]". A morphism is a family of verticals
/// c_i: Z_i → Z'_i making every square commute, with id
/// "v[c_n|...|c_0]@<source id>><target id>". Masks: w and v_i hold the
/// families with every vertical in w resp. v_i; the ambient category holds
/// composites of v_i-families (every commuting family when k ≤ 1).
struct NArrowPath {
  int n = 1;
  KRelStructure z;
  KRelStructure path;
  FinFunctor pi_n;  // restriction to Z_n
  FinFunctor pi_0;  // restriction to Z_0
  FinFunctor j;     // identity zigzags
  std::vector<std::vector<MorIdx>> legs;       // legs[o][i - 1] = leg i
  std::vector<std::vector<MorIdx>> verticals;  // verticals[m][i] = c_i

  ObjIdx node(ObjIdx o, int i) const;
  ObjIdx find_object(const std::vector<MorIdx>& legs) const;
  /// kNone when no such family exists.
  MorIdx find_morphism(ObjIdx src, ObjIdx tgt, const std::vector<MorIdx>& verticals) const;

  std::unordered_map<std::vector<std::uint32_t>, ObjIdx, IndexVecHash> object_index;
  std::unordered_map<std::vector<std::uint32_t>, MorIdx, IndexVecHash> morphism_index;  // [src, tgt, c_0..c_n]
};
using PathPtr = std::shared_ptr<const NArrowPath>;

/// Throws InvalidInput for n < 1, QuotaError beyond the caps.
/// With `ends` (k ≤ 1 only) the path object is cut down to the full
/// subcategory of zigzags whose Z_n lies in the mask; j is then left empty.
PathPtr n_arrow_path(const KRelStructure& z, int n, const std::vector<bool>* ends = nullptr);

std::string zigzag_id(const FinCat& c, const std::vector<MorIdx>& legs);

/// The n-arrow fibers object X ×_Z Z⌢n⌣Z (pullback along π_n) with π = π_0.
struct NArrowFiber {
  PathPtr path;
  KRelFunctor f;
  PullbackResult pullback;  // first: → X, second: → Z⌢n⌣Z
  KRelStructure fiber;
  FinFunctor pi;  // → Z
};
NArrowFiber n_arrow_fiber(const KRelFunctor& f, int n);
NArrowFiber n_arrow_fiber(const KRelFunctor& f, const PathPtr& path);

/// The n-arrow pullback object (fiber) ×_Z Y with π the projection to Y.
struct NArrowPullback {
  NArrowFiber fiber;
  KRelFunctor g;
  PullbackResult pullback;  // first: → fiber, second: → Y
  KRelStructure object;
  FinFunctor pi;  // → Y
};
NArrowPullback n_arrow_pullback(const KRelFunctor& f, const KRelFunctor& g, int n);
NArrowPullback n_arrow_pullback(const NArrowFiber& fiber, const KRelFunctor& g);

/// Relative structure on a strict pullback: a pair lies in a mask when both
/// components do.
KRelStructure pullback_structure(const PullbackResult& pb, const KRelStructure& a, const KRelStructure& b);

/// The Cat-hat reading of a functor (every map a weak equivalence on both sides).
KRelFunctor cat_hat_functor(const FinFunctor& f);

}  // namespace relcat
