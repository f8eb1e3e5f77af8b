#include "relcat/cat/fincat.hpp"

#include <algorithm>
#include <array>

#include "relcat/core/error.hpp"

namespace relcat {

FinCat::FinCat(std::vector<std::string> objects, std::vector<MorphismSpec> morphisms,
               std::vector<MorIdx> identities, const ComposeFn& compose, const Caps& caps)
    : objects_(std::move(objects)),
      morphisms_(std::move(morphisms)),
      identities_(std::move(identities)) {
  caps.check(objects_.size(), morphisms_.size(), "category");
  const std::size_t n_obj = objects_.size();
  const std::size_t n_mor = morphisms_.size();
  if (identities_.size() != n_obj) {
    throw InvalidInput("category: identity count does not match object count");
  }
  object_lookup_.reserve(n_obj);
  for (ObjIdx o = 0; o < n_obj; ++o) {
    if (!object_lookup_.emplace(objects_[o], o).second) {
      throw InvalidInput("category: duplicate object id '" + objects_[o] + "'");
    }
  }
  morphism_lookup_.reserve(n_mor);
  for (MorIdx m = 0; m < n_mor; ++m) {
    const auto& spec = morphisms_[m];
    if (spec.src >= n_obj || spec.tgt >= n_obj) {
      throw InvalidInput("category: morphism '" + spec.id + "' has an endpoint out of range");
    }
    if (!morphism_lookup_.emplace(spec.id, m).second) {
      throw InvalidInput("category: duplicate morphism id '" + spec.id + "'");
    }
  }
  for (ObjIdx o = 0; o < n_obj; ++o) {
    MorIdx id = identities_[o];
    if (id >= n_mor || morphisms_[id].src != o || morphisms_[id].tgt != o) {
      throw InvalidInput("category: identity of '" + objects_[o] + "' is not an endomorphism of it");
    }
  }

  out_start_.assign(n_obj + 1, 0);
  in_start_.assign(n_obj + 1, 0);
  for (const auto& spec : morphisms_) {
    ++out_start_[spec.src + 1];
    ++in_start_[spec.tgt + 1];
  }
  for (std::size_t o = 0; o < n_obj; ++o) {
    out_start_[o + 1] += out_start_[o];
    in_start_[o + 1] += in_start_[o];
  }
  out_list_.resize(n_mor);
  in_list_.resize(n_mor);
  {
    auto out_fill = out_start_;
    auto in_fill = in_start_;
    for (MorIdx m = 0; m < n_mor; ++m) {
      out_list_[out_fill[morphisms_[m].src]++] = m;
      in_list_[in_fill[morphisms_[m].tgt]++] = m;
    }
  }
  for (ObjIdx o = 0; o < n_obj; ++o) {
    std::stable_sort(out_list_.begin() + out_start_[o], out_list_.begin() + out_start_[o + 1],
                     [&](MorIdx a, MorIdx b) { return morphisms_[a].tgt < morphisms_[b].tgt; });
    std::stable_sort(in_list_.begin() + in_start_[o], in_list_.begin() + in_start_[o + 1],
                     [&](MorIdx a, MorIdx b) { return morphisms_[a].src < morphisms_[b].src; });
  }
  out_pos_.resize(n_mor);
  for (ObjIdx o = 0; o < n_obj; ++o) {
    for (std::uint32_t i = out_start_[o]; i < out_start_[o + 1]; ++i) {
      out_pos_[out_list_[i]] = i - out_start_[o];
    }
  }
  comp_offset_.resize(n_mor + 1, 0);
  for (MorIdx f = 0; f < n_mor; ++f) {
    ObjIdx b = morphisms_[f].tgt;
    comp_offset_[f + 1] = comp_offset_[f] + (out_start_[b + 1] - out_start_[b]);
  }
  comp_.resize(comp_offset_[n_mor]);
  for (MorIdx f = 0; f < n_mor; ++f) {
    ObjIdx b = morphisms_[f].tgt;
    std::uint64_t row = comp_offset_[f];
    for (std::uint32_t i = out_start_[b]; i < out_start_[b + 1]; ++i) {
      MorIdx g = out_list_[i];
      MorIdx h = compose(g, f);
      if (h >= n_mor) {
        throw InvalidInput("category: composite of '" + morphisms_[g].id + "' and '" +
                           morphisms_[f].id + "' is undefined");
      }
      comp_[row + (i - out_start_[b])] = h;
    }
  }
}

MorIdx FinCat::compose(MorIdx g, MorIdx f) const {
  if (f >= morphisms_.size() || g >= morphisms_.size() || morphisms_[f].tgt != morphisms_[g].src) {
    throw InvalidInput("compose: morphisms are not composable");
  }
  return compose_unchecked(g, f);
}

std::span<const MorIdx> FinCat::hom(ObjIdx a, ObjIdx b) const {
  auto range = out(a);
  auto lo = std::lower_bound(range.begin(), range.end(), b,
                             [&](MorIdx m, ObjIdx t) { return morphisms_[m].tgt < t; });
  auto hi = std::upper_bound(lo, range.end(), b,
                             [&](ObjIdx t, MorIdx m) { return t < morphisms_[m].tgt; });
  return {lo, hi};
}

std::optional<ObjIdx> FinCat::find_object(std::string_view id) const {
  auto it = object_lookup_.find(std::string(id));
  if (it == object_lookup_.end()) return std::nullopt;
  return it->second;
}

std::optional<MorIdx> FinCat::find_morphism(std::string_view id) const {
  auto it = morphism_lookup_.find(std::string(id));
  if (it == morphism_lookup_.end()) return std::nullopt;
  return it->second;
}

ObjIdx FinCat::object_index(std::string_view id) const {
  if (auto o = find_object(id)) return *o;
  throw InvalidInput("unknown object id '" + std::string(id) + "'");
}

MorIdx FinCat::morphism_index(std::string_view id) const {
  if (auto m = find_morphism(id)) return *m;
  throw InvalidInput("unknown morphism id '" + std::string(id) + "'");
}

CatPtr make_cat_from_table(const std::vector<std::string>& objects,
                           const std::vector<std::array<std::string, 3>>& morphisms,
                           const std::vector<std::pair<std::string, std::string>>& identities,
                           const std::vector<std::array<std::string, 3>>& compose,
                           const Caps& caps) {
  std::unordered_map<std::string, ObjIdx> obj_index;
  for (ObjIdx o = 0; o < objects.size(); ++o) {
    if (!obj_index.emplace(objects[o], o).second) {
      throw InvalidInput("duplicate object id '" + objects[o] + "'");
    }
  }
  auto lookup_obj = [&](const std::string& id) {
    auto it = obj_index.find(id);
    if (it == obj_index.end()) throw InvalidInput("unknown object id '" + id + "'");
    return it->second;
  };
  std::vector<MorphismSpec> specs;
  std::unordered_map<std::string, MorIdx> mor_index;
  for (const auto& [id, s, t] : morphisms) {
    if (!mor_index.emplace(id, static_cast<MorIdx>(specs.size())).second) {
      throw InvalidInput("duplicate morphism id '" + id + "'");
    }
    specs.push_back({id, lookup_obj(s), lookup_obj(t)});
  }
  auto lookup_mor = [&](const std::string& id) {
    auto it = mor_index.find(id);
    if (it == mor_index.end()) throw InvalidInput("unknown morphism id '" + id + "'");
    return it->second;
  };
  std::vector<MorIdx> ids(objects.size(), kNone);
  for (const auto& [o, m] : identities) {
    ObjIdx oi = lookup_obj(o);
    if (ids[oi] != kNone) throw InvalidInput("duplicate identity for object '" + o + "'");
    ids[oi] = lookup_mor(m);
  }
  for (ObjIdx o = 0; o < objects.size(); ++o) {
    if (ids[o] == kNone) throw InvalidInput("missing identity for object '" + objects[o] + "'");
  }
  std::unordered_map<std::uint64_t, MorIdx> table;
  table.reserve(compose.size());
  for (const auto& [g, f, h] : compose) {
    MorIdx gi = lookup_mor(g), fi = lookup_mor(f), hi = lookup_mor(h);
    if (specs[fi].tgt != specs[gi].src) {
      throw InvalidInput("composite entry for non-composable pair ('" + g + "', '" + f + "')");
    }
    std::uint64_t key = (static_cast<std::uint64_t>(gi) << 32) | fi;
    if (!table.emplace(key, hi).second) {
      throw InvalidInput("duplicate composite entry for ('" + g + "', '" + f + "')");
    }
  }
  std::size_t used = 0;
  auto cat = std::make_shared<const FinCat>(
      objects, std::move(specs), std::move(ids),
      [&](MorIdx g, MorIdx f) -> MorIdx {
        auto it = table.find((static_cast<std::uint64_t>(g) << 32) | f);
        if (it == table.end()) {
          throw InvalidInput("missing composite for ('" + morphisms[g][0] + "', '" +
                             morphisms[f][0] + "')");
        }
        ++used;
        return it->second;
      },
      caps);
  if (used != table.size()) throw InvalidInput("composition table has extra entries");
  return cat;
}

}  // namespace relcat
