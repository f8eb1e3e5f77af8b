#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "relcat/core/caps.hpp"

namespace relcat {

using ObjIdx = std::uint32_t;
using MorIdx = std::uint32_t;
inline constexpr std::uint32_t kNone = 0xffffffffu;

struct MorphismSpec {
  std::string id;
  ObjIdx src = 0;
  ObjIdx tgt = 0;
};

/// A finite category with a total composition table.
///
/// Objects and morphisms are addressed by dense indices; string ids are kept for
/// serialization and canonical comparison. The table is stored per morphism f as
/// a row over the morphisms leaving tgt(f), so compose(g, f) is two loads.
///
/// Construction only checks referential integrity (indices in range, a composite
/// for every composable pair). The category laws are checked by validate_cat, so
/// a FinCat may carry a law-violating table on purpose.
class FinCat {
 public:
  /// Returns g∘f; called once for every pair with tgt(f) == src(g).
  using ComposeFn = std::function<MorIdx(MorIdx g, MorIdx f)>;

  FinCat(std::vector<std::string> objects, std::vector<MorphismSpec> morphisms,
         std::vector<MorIdx> identities, const ComposeFn& compose,
         const Caps& caps = Caps::current());

  std::size_t num_objects() const { return objects_.size(); }
  std::size_t num_morphisms() const { return morphisms_.size(); }

  const std::string& object_id(ObjIdx o) const { return objects_[o]; }
  const std::string& morphism_id(MorIdx m) const { return morphisms_[m].id; }
  ObjIdx src(MorIdx m) const { return morphisms_[m].src; }
  ObjIdx tgt(MorIdx m) const { return morphisms_[m].tgt; }
  MorIdx identity(ObjIdx o) const { return identities_[o]; }
  bool is_identity(MorIdx m) const { return identities_[morphisms_[m].src] == m; }

  /// g∘f; requires tgt(f) == src(g) (checked, throws InvalidInput).
  MorIdx compose(MorIdx g, MorIdx f) const;
  /// g∘f without the composability check.
  MorIdx compose_unchecked(MorIdx g, MorIdx f) const {
    return comp_[comp_offset_[f] + out_pos_[g]];
  }

  /// Morphisms with source o, sorted by (target, index).
  std::span<const MorIdx> out(ObjIdx o) const {
    return {out_list_.data() + out_start_[o], out_list_.data() + out_start_[o + 1]};
  }
  /// Morphisms with target o, sorted by (source, index).
  std::span<const MorIdx> in(ObjIdx o) const {
    return {in_list_.data() + in_start_[o], in_list_.data() + in_start_[o + 1]};
  }
  /// Morphisms a → b, sorted by index.
  std::span<const MorIdx> hom(ObjIdx a, ObjIdx b) const;

  std::optional<ObjIdx> find_object(std::string_view id) const;
  std::optional<MorIdx> find_morphism(std::string_view id) const;
  /// Lookup by id; throws InvalidInput naming the id when absent.
  ObjIdx object_index(std::string_view id) const;
  MorIdx morphism_index(std::string_view id) const;

  const std::vector<std::string>& objects() const { return objects_; }
  const std::vector<MorphismSpec>& morphisms() const { return morphisms_; }

 private:
  std::vector<std::string> objects_;
  std::vector<MorphismSpec> morphisms_;
  std::vector<MorIdx> identities_;
  std::vector<std::uint32_t> out_start_, in_start_;
  std::vector<MorIdx> out_list_, in_list_;
  std::vector<std::uint32_t> out_pos_;
  std::vector<std::uint64_t> comp_offset_;
  std::vector<MorIdx> comp_;
  std::unordered_map<std::string, ObjIdx> object_lookup_;
  std::unordered_map<std::string, MorIdx> morphism_lookup_;
};

using CatPtr = std::shared_ptr<const FinCat>;

/// Builds a category from id-level data. Every composable pair must appear in
/// `compose` as (g, f, g∘f); missing or duplicate entries throw InvalidInput.
CatPtr make_cat_from_table(const std::vector<std::string>& objects,
                           const std::vector<std::array<std::string, 3>>& morphisms,
                           const std::vector<std::pair<std::string, std::string>>& identities,
                           const std::vector<std::array<std::string, 3>>& compose,
                           const Caps& caps = Caps::current());

}  // namespace relcat
