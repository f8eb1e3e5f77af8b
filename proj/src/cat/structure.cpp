#include "relcat/cat/structure.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "relcat/cat/constructions.hpp"
#include "relcat/cat/validate.hpp"
#include "relcat/core/error.hpp"

namespace relcat {

Components components(const FinCat& c) {
  const auto n = static_cast<ObjIdx>(c.num_objects());
  std::vector<ObjIdx> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<ObjIdx(ObjIdx)> find = [&](ObjIdx x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (MorIdx m = 0; m < c.num_morphisms(); ++m) {
    ObjIdx a = find(c.src(m)), b = find(c.tgt(m));
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  Components out;
  out.label.assign(n, kNone);
  std::vector<std::uint32_t> root_label(n, kNone);
  for (ObjIdx o = 0; o < n; ++o) {
    ObjIdx r = find(o);
    if (root_label[r] == kNone) root_label[r] = out.count++;
    out.label[o] = root_label[r];
  }
  return out;
}

std::optional<MorIdx> inverse_of(const FinCat& c, MorIdx m) {
  for (MorIdx k : c.hom(c.tgt(m), c.src(m))) {
    if (c.compose_unchecked(k, m) == c.identity(c.src(m)) &&
        c.compose_unchecked(m, k) == c.identity(c.tgt(m))) {
      return k;
    }
  }
  return std::nullopt;
}

bool is_groupoid(const FinCat& c) {
  for (MorIdx m = 0; m < c.num_morphisms(); ++m)
    if (!inverse_of(c, m)) return false;
  return true;
}

bool is_thin(const FinCat& c) {
  for (ObjIdx o = 0; o < c.num_objects(); ++o) {
    auto out = c.out(o);
    for (std::size_t i = 1; i < out.size(); ++i)
      if (c.tgt(out[i]) == c.tgt(out[i - 1])) return false;
  }
  return true;
}

Skeleton skeleton(const CatPtr& c, const std::vector<bool>* allowed) {
  const auto n = static_cast<ObjIdx>(c->num_objects());
  std::vector<ObjIdx> rep(n, kNone);
  std::vector<MorIdx> to_rep(n, kNone), from_rep(n, kNone);
  std::vector<ObjIdx> reps;
  for (ObjIdx x = 0; x < n; ++x) {
    if (rep[x] != kNone) continue;
    rep[x] = x;
    to_rep[x] = from_rep[x] = c->identity(x);
    reps.push_back(x);
    for (MorIdx m : c->out(x)) {
      ObjIdx y = c->tgt(m);
      if (rep[y] != kNone) continue;
      auto inv = inverse_of(*c, m);
      if (inv && allowed && !((*allowed)[m] && (*allowed)[*inv])) continue;
      if (inv) {
        rep[y] = x;
        to_rep[y] = *inv;
        from_rep[y] = m;
      }
    }
  }
  auto sub = full_subcategory(c, reps);
  std::vector<ObjIdx> sub_index(n, kNone);
  for (ObjIdx i = 0; i < reps.size(); ++i) sub_index[reps[i]] = i;
  std::vector<MorIdx> sub_mor(c->num_morphisms(), kNone);
  for (MorIdx i = 0; i < sub.inclusion.on_morphisms.size(); ++i) sub_mor[sub.inclusion.on_morphisms[i]] = i;
  FinFunctor retraction{c, sub.cat, {}, {}};
  for (ObjIdx x = 0; x < n; ++x) retraction.on_objects.push_back(sub_index[rep[x]]);
  for (MorIdx m = 0; m < c->num_morphisms(); ++m) {
    MorIdx v = c->compose_unchecked(m, from_rep[c->src(m)]);
    v = c->compose_unchecked(to_rep[c->tgt(m)], v);
    retraction.on_morphisms.push_back(sub_mor[v]);
  }
  return {sub.cat, sub.inclusion, std::move(retraction)};
}

std::string canonical_encoding(const FinCat& c,
                               const std::function<std::string(const std::string&)>& relabel) {
  auto name = [&](const std::string& id) { return relabel ? relabel(id) : id; };
  std::vector<std::string> objs;
  for (const auto& o : c.objects()) objs.push_back(name(o));
  std::sort(objs.begin(), objs.end());
  std::vector<std::string> mors;
  std::vector<std::string> mname(c.num_morphisms());
  for (MorIdx m = 0; m < c.num_morphisms(); ++m) {
    mname[m] = name(c.morphism_id(m));
    std::string line = mname[m] + " : " + name(c.object_id(c.src(m))) + " -> " + name(c.object_id(c.tgt(m)));
    if (c.is_identity(m)) line += " [id]";
    mors.push_back(std::move(line));
  }
  std::sort(mors.begin(), mors.end());
  std::vector<std::string> table;
  for (MorIdx f = 0; f < c.num_morphisms(); ++f)
    for (MorIdx g : c.out(c.tgt(f)))
      table.push_back(mname[g] + " o " + mname[f] + " = " + mname[c.compose_unchecked(g, f)]);
  std::sort(table.begin(), table.end());
  std::string out = "objects\n";
  for (const auto& s : objs) out += s + "\n";
  out += "morphisms\n";
  for (const auto& s : mors) out += s + "\n";
  out += "compose\n";
  for (const auto& s : table) out += s + "\n";
  return out;
}

std::string canonical_encoding(const FinFunctor& f) {
  std::vector<std::string> lines;
  for (ObjIdx o = 0; o < f.on_objects.size(); ++o)
    lines.push_back("obj " + f.source->object_id(o) + " |-> " + f.target->object_id(f.on_objects[o]));
  for (MorIdx m = 0; m < f.on_morphisms.size(); ++m)
    lines.push_back("mor " + f.source->morphism_id(m) + " |-> " + f.target->morphism_id(f.on_morphisms[m]));
  std::sort(lines.begin(), lines.end());
  std::string out;
  for (const auto& l : lines) out += l + "\n";
  return out;
}

namespace {

// Splits "(x,y,...)" at top-level commas; returns nullopt if id is not a tuple.
std::optional<std::vector<std::string>> split_tuple(const std::string& id) {
  if (id.size() < 2 || id.front() != '(' || id.back() != ')') return std::nullopt;
  std::vector<std::string> parts;
  int depth = 0;
  std::string cur;
  for (std::size_t i = 1; i + 1 < id.size(); ++i) {
    char ch = id[i];
    if (ch == '(' || ch == '[') ++depth;
    if (ch == ')' || ch == ']') --depth;
    if (depth < 0) return std::nullopt;
    if (ch == ',' && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (depth != 0) return std::nullopt;
  parts.push_back(cur);
  if (parts.size() < 2) return std::nullopt;
  return parts;
}

void flatten_into(const std::string& id, std::vector<std::string>& out) {
  if (auto parts = split_tuple(id)) {
    for (const auto& p : *parts) flatten_into(p, out);
  } else {
    out.push_back(id);
  }
}

}  // namespace

std::string flatten_pair_id(const std::string& id) {
  if (!split_tuple(id)) return id;
  std::vector<std::string> parts;
  flatten_into(id, parts);
  std::string out = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? "," : "") + parts[i];
  return out + ")";
}

bool is_isomorphism(const FinFunctor& f) {
  if (f.source->num_objects() != f.target->num_objects() ||
      f.source->num_morphisms() != f.target->num_morphisms()) {
    return false;
  }
  std::vector<bool> seen_o(f.target->num_objects(), false), seen_m(f.target->num_morphisms(), false);
  for (ObjIdx o : f.on_objects) {
    if (seen_o[o]) return false;
    seen_o[o] = true;
  }
  for (MorIdx m : f.on_morphisms) {
    if (seen_m[m]) return false;
    seen_m[m] = true;
  }
  return true;
}

std::vector<FinFunctor> enumerate_functors(const CatPtr& a, const CatPtr& b, std::size_t limit) {
  // Assign morphisms in index order; objects are fixed by the first morphism
  // touching them. Composites are checked as soon as both factors are assigned.
  std::vector<FinFunctor> out;
  const auto na = static_cast<ObjIdx>(a->num_objects());
  const auto ma = static_cast<MorIdx>(a->num_morphisms());
  FinFunctor F{a, b, std::vector<ObjIdx>(na, kNone), std::vector<MorIdx>(ma, kNone)};
  // Objects first, then non-identity morphisms.
  std::vector<MorIdx> order;
  for (MorIdx m = 0; m < ma; ++m)
    if (!a->is_identity(m)) order.push_back(m);
  std::function<bool(MorIdx)> consistent = [&](MorIdx m) {
    for (MorIdx g : a->out(a->tgt(m))) {
      if (F.on_morphisms[g] == kNone) continue;
      MorIdx h = a->compose_unchecked(g, m);
      if (F.on_morphisms[h] != kNone &&
          b->compose_unchecked(F.on_morphisms[g], F.on_morphisms[m]) != F.on_morphisms[h])
        return false;
    }
    for (MorIdx f : a->in(a->src(m))) {
      if (F.on_morphisms[f] == kNone) continue;
      MorIdx h = a->compose_unchecked(m, f);
      if (F.on_morphisms[h] != kNone &&
          b->compose_unchecked(F.on_morphisms[m], F.on_morphisms[f]) != F.on_morphisms[h])
        return false;
    }
    // m as a composite of assigned factors.
    for (MorIdx f : a->out(a->src(m))) {
      if (F.on_morphisms[f] == kNone) continue;
      for (MorIdx g : a->out(a->tgt(f))) {
        if (F.on_morphisms[g] == kNone || a->compose_unchecked(g, f) != m) continue;
        if (b->compose_unchecked(F.on_morphisms[g], F.on_morphisms[f]) != F.on_morphisms[m]) return false;
      }
    }
    return true;
  };
  std::function<void(std::size_t)> assign_mor = [&](std::size_t i) {
    if (out.size() >= limit) return;
    if (i == order.size()) {
      if (validate_functor(F).ok()) out.push_back(F);
      return;
    }
    MorIdx m = order[i];
    for (MorIdx v : b->hom(F.on_objects[a->src(m)], F.on_objects[a->tgt(m)])) {
      F.on_morphisms[m] = v;
      if (consistent(m)) assign_mor(i + 1);
      F.on_morphisms[m] = kNone;
    }
  };
  std::function<void(ObjIdx)> assign_obj = [&](ObjIdx o) {
    if (out.size() >= limit) return;
    if (o == na) {
      assign_mor(0);
      return;
    }
    for (ObjIdx v = 0; v < b->num_objects(); ++v) {
      F.on_objects[o] = v;
      F.on_morphisms[a->identity(o)] = b->identity(v);
      assign_obj(o + 1);
    }
    F.on_objects[o] = kNone;
    F.on_morphisms[a->identity(o)] = kNone;
  };
  assign_obj(0);
  return out;
}

CatPtr relabel(const CatPtr& c, const std::function<std::string(const std::string&)>& object_name,
               const std::function<std::string(const std::string&)>& morphism_name) {
  std::vector<std::string> objs;
  for (const auto& o : c->objects()) objs.push_back(object_name(o));
  std::vector<MorphismSpec> mors = c->morphisms();
  for (auto& m : mors) m.id = morphism_name(m.id);
  std::vector<MorIdx> ids;
  for (ObjIdx o = 0; o < c->num_objects(); ++o) ids.push_back(c->identity(o));
  return std::make_shared<const FinCat>(std::move(objs), std::move(mors), std::move(ids),
                                        [&](MorIdx g, MorIdx f) { return c->compose_unchecked(g, f); });
}

}  // namespace relcat
