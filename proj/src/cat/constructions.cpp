#include "relcat/cat/constructions.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "relcat/core/error.hpp"

namespace relcat {

namespace {

std::string pair_id(const std::string& a, const std::string& b) { return "(" + a + "," + b + ")"; }

}  // namespace

CatPtr empty_cat() {
  return std::make_shared<const FinCat>(std::vector<std::string>{}, std::vector<MorphismSpec>{},
                                        std::vector<MorIdx>{}, [](MorIdx, MorIdx) { return kNone; });
}

CatPtr terminal_cat() { return chain_cat(0); }

CatPtr discrete_cat(const std::vector<std::string>& objects) {
  std::vector<MorphismSpec> mors;
  std::vector<MorIdx> ids;
  for (ObjIdx o = 0; o < objects.size(); ++o) {
    mors.push_back({"id_" + objects[o], o, o});
    ids.push_back(o);
  }
  return std::make_shared<const FinCat>(objects, std::move(mors), std::move(ids),
                                        [](MorIdx g, MorIdx) { return g; });
}

CatPtr chain_cat(int p) {
  if (p < 0) throw InvalidInput("chain: negative length");
  const int n = p + 1;
  std::vector<std::string> objs;
  for (int i = 0; i < n; ++i) objs.push_back(std::to_string(i));
  std::vector<MorphismSpec> mors;
  std::vector<std::vector<MorIdx>> index(n, std::vector<MorIdx>(n, kNone));
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      index[i][j] = static_cast<MorIdx>(mors.size());
      mors.push_back({objs[i] + "->" + objs[j], static_cast<ObjIdx>(i), static_cast<ObjIdx>(j)});
    }
  }
  std::vector<MorIdx> ids;
  for (int i = 0; i < n; ++i) ids.push_back(index[i][i]);
  auto specs = mors;
  return std::make_shared<const FinCat>(
      std::move(objs), std::move(mors), std::move(ids),
      [&](MorIdx g, MorIdx f) { return index[specs[f].src][specs[g].tgt]; });
}

CatPtr group_cat(const std::vector<std::string>& elements,
                 const std::vector<std::vector<int>>& table) {
  const std::size_t n = elements.size();
  if (n == 0 || table.size() != n) throw InvalidInput("group: table size mismatch");
  for (const auto& row : table) {
    if (row.size() != n) throw InvalidInput("group: table size mismatch");
    for (int v : row) {
      if (v < 0 || static_cast<std::size_t>(v) >= n) throw InvalidInput("group: entry out of range");
    }
  }
  std::vector<MorphismSpec> mors;
  for (const auto& e : elements) mors.push_back({e, 0, 0});
  return std::make_shared<const FinCat>(std::vector<std::string>{"*"}, std::move(mors),
                                        std::vector<MorIdx>{0},
                                        [&](MorIdx g, MorIdx f) { return static_cast<MorIdx>(table[g][f]); });
}

CatPtr cyclic_group_cat(int n) {
  if (n < 1) throw InvalidInput("cyclic group: order must be positive");
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back(i == 0 ? "e" : i == 1 ? "g" : "g" + std::to_string(i));
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) table[i][j] = (i + j) % n;
  return group_cat(names, table);
}

CatPtr klein_four_cat() {
  std::vector<std::vector<int>> table(4, std::vector<int>(4));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) table[i][j] = i ^ j;
  return group_cat({"e", "a", "b", "c"}, table);
}

CatPtr symmetric3_cat() {
  using Perm = std::array<int, 3>;
  auto after = [](const Perm& g, const Perm& f) { return Perm{g[f[0]], g[f[1]], g[f[2]]}; };
  const Perm e{0, 1, 2}, r{1, 2, 0}, s{0, 2, 1};
  const Perm r2 = after(r, r);
  const std::vector<Perm> perms{e, r, r2, s, after(s, r), after(s, r2)};
  std::vector<std::vector<int>> table(6, std::vector<int>(6));
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < 6; ++j) {
      Perm p = after(perms[i], perms[j]);
      table[i][j] = static_cast<int>(std::find(perms.begin(), perms.end(), p) - perms.begin());
    }
  }
  return group_cat({"e", "r", "r2", "s", "sr", "sr2"}, table);
}

CatPtr poset_cat(const std::vector<std::string>& elements,
                 const std::vector<std::pair<std::string, std::string>>& relations) {
  const std::size_t n = elements.size();
  std::unordered_map<std::string, std::size_t> pos;
  for (std::size_t i = 0; i < n; ++i) {
    if (!pos.emplace(elements[i], i).second) {
      throw InvalidInput("poset: duplicate element '" + elements[i] + "'");
    }
  }
  std::vector<std::vector<bool>> le(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) le[i][i] = true;
  for (const auto& [a, b] : relations) {
    auto ia = pos.find(a), ib = pos.find(b);
    if (ia == pos.end()) throw InvalidInput("poset: unknown element '" + a + "'");
    if (ib == pos.end()) throw InvalidInput("poset: unknown element '" + b + "'");
    le[ia->second][ib->second] = true;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (le[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (le[k][j]) le[i][j] = true;
  std::vector<MorphismSpec> mors;
  std::vector<std::vector<MorIdx>> index(n, std::vector<MorIdx>(n, kNone));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!le[i][j]) continue;
      index[i][j] = static_cast<MorIdx>(mors.size());
      mors.push_back({elements[i] + "->" + elements[j], static_cast<ObjIdx>(i), static_cast<ObjIdx>(j)});
    }
  }
  std::vector<MorIdx> ids;
  for (std::size_t i = 0; i < n; ++i) ids.push_back(index[i][i]);
  auto specs = mors;
  return std::make_shared<const FinCat>(
      elements, std::move(mors), std::move(ids),
      [&](MorIdx g, MorIdx f) { return index[specs[f].src][specs[g].tgt]; });
}

CatPtr free_category_on_acyclic_graph(const std::vector<std::string>& vertices,
                                      const std::vector<GraphEdge>& edges) {
  const std::size_t n = vertices.size();
  std::unordered_map<std::string, ObjIdx> pos;
  for (ObjIdx i = 0; i < n; ++i) {
    if (!pos.emplace(vertices[i], i).second) {
      throw InvalidInput("graph: duplicate vertex '" + vertices[i] + "'");
    }
  }
  std::vector<std::vector<std::size_t>> out_edges(n);
  std::vector<ObjIdx> esrc, etgt;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    auto s = pos.find(edges[e].src), t = pos.find(edges[e].tgt);
    if (s == pos.end()) throw InvalidInput("graph: unknown vertex '" + edges[e].src + "'");
    if (t == pos.end()) throw InvalidInput("graph: unknown vertex '" + edges[e].tgt + "'");
    esrc.push_back(s->second);
    etgt.push_back(t->second);
    out_edges[s->second].push_back(e);
  }

  // Cycle detection by colored DFS; the grey stack is the witness.
  std::vector<int> color(n, 0);
  std::vector<ObjIdx> stack;
  std::function<void(ObjIdx)> visit = [&](ObjIdx v) {
    color[v] = 1;
    stack.push_back(v);
    for (std::size_t e : out_edges[v]) {
      ObjIdx w = etgt[e];
      if (color[w] == 1) {
        std::string witness;
        auto it = std::find(stack.begin(), stack.end(), w);
        for (; it != stack.end(); ++it) witness += vertices[*it] + " -> ";
        witness += vertices[w];
        throw InvalidInput("graph has a directed cycle: " + witness);
      }
      if (color[w] == 0) visit(w);
    }
    stack.pop_back();
    color[v] = 2;
  };
  for (ObjIdx v = 0; v < n; ++v)
    if (color[v] == 0) visit(v);

  const Caps caps = Caps::current();
  std::vector<MorphismSpec> mors;
  std::vector<std::vector<std::size_t>> paths;
  std::map<std::vector<std::size_t>, MorIdx> path_index;
  std::vector<MorIdx> ids(n);
  for (ObjIdx v = 0; v < n; ++v) {
    ids[v] = static_cast<MorIdx>(mors.size());
    mors.push_back({"id_" + vertices[v], v, v});
    paths.push_back({});
  }
  std::vector<std::size_t> current;
  std::function<void(ObjIdx, ObjIdx)> extend = [&](ObjIdx start, ObjIdx v) {
    for (std::size_t e : out_edges[v]) {
      current.push_back(e);
      std::string id;
      for (auto it = current.rbegin(); it != current.rend(); ++it) {
        if (!id.empty()) id += ".";
        id += edges[*it].id;
      }
      path_index[current] = static_cast<MorIdx>(mors.size());
      mors.push_back({id, start, etgt[e]});
      paths.push_back(current);
      caps.check(n, mors.size(), "free category");
      extend(start, etgt[e]);
      current.pop_back();
    }
  };
  for (ObjIdx v = 0; v < n; ++v) extend(v, v);
  return std::make_shared<const FinCat>(
      vertices, std::move(mors), std::move(ids), [&](MorIdx g, MorIdx f) -> MorIdx {
        if (paths[f].empty()) return g;
        if (paths[g].empty()) return f;
        std::vector<std::size_t> joined = paths[f];
        joined.insert(joined.end(), paths[g].begin(), paths[g].end());
        return path_index.at(joined);
      });
}

ProductResult product(const CatPtr& a, const CatPtr& b) {
  const std::size_t na = a->num_objects(), nb = b->num_objects();
  const std::size_t ma = a->num_morphisms(), mb = b->num_morphisms();
  Caps::current().check(na * nb, ma * mb, "product");
  std::vector<std::string> objs;
  objs.reserve(na * nb);
  for (ObjIdx x = 0; x < na; ++x)
    for (ObjIdx y = 0; y < nb; ++y) objs.push_back(pair_id(a->object_id(x), b->object_id(y)));
  std::vector<MorphismSpec> mors;
  mors.reserve(ma * mb);
  for (MorIdx f = 0; f < ma; ++f)
    for (MorIdx g = 0; g < mb; ++g)
      mors.push_back({pair_id(a->morphism_id(f), b->morphism_id(g)),
                      static_cast<ObjIdx>(a->src(f) * nb + b->src(g)),
                      static_cast<ObjIdx>(a->tgt(f) * nb + b->tgt(g))});
  std::vector<MorIdx> ids;
  for (ObjIdx x = 0; x < na; ++x)
    for (ObjIdx y = 0; y < nb; ++y) ids.push_back(static_cast<MorIdx>(a->identity(x) * mb + b->identity(y)));
  auto cat = std::make_shared<const FinCat>(
      std::move(objs), std::move(mors), std::move(ids), [&](MorIdx g, MorIdx f) {
        return static_cast<MorIdx>(a->compose_unchecked(g / mb, f / mb) * mb +
                                   b->compose_unchecked(g % mb, f % mb));
      });
  ProductResult r{cat, {cat, a, {}, {}}, {cat, b, {}, {}}};
  for (ObjIdx o = 0; o < na * nb; ++o) {
    r.first.on_objects.push_back(static_cast<ObjIdx>(o / nb));
    r.second.on_objects.push_back(static_cast<ObjIdx>(o % nb));
  }
  for (MorIdx m = 0; m < ma * mb; ++m) {
    r.first.on_morphisms.push_back(static_cast<MorIdx>(m / mb));
    r.second.on_morphisms.push_back(static_cast<MorIdx>(m % mb));
  }
  return r;
}

PullbackResult pullback_cat(const FinFunctor& f, const FinFunctor& g) {
  if (f.target != g.target) throw InvalidInput("pullback: functors do not share a target");
  const FinCat& X = *f.source;
  const FinCat& Y = *g.source;
  const FinCat& Z = *f.target;

  // Group the cells of Y by their image; a pair (x, y) then sits at
  // start[x] + position of y among the cells with image f(x).
  std::vector<std::vector<ObjIdx>> obj_fiber(Z.num_objects());
  std::vector<std::uint32_t> obj_pos(Y.num_objects());
  for (ObjIdx y = 0; y < Y.num_objects(); ++y) {
    auto& fib = obj_fiber[g.on_objects[y]];
    obj_pos[y] = static_cast<std::uint32_t>(fib.size());
    fib.push_back(y);
  }
  std::vector<std::vector<MorIdx>> mor_fiber(Z.num_morphisms());
  std::vector<std::uint32_t> mor_pos(Y.num_morphisms());
  for (MorIdx m = 0; m < Y.num_morphisms(); ++m) {
    auto& fib = mor_fiber[g.on_morphisms[m]];
    mor_pos[m] = static_cast<std::uint32_t>(fib.size());
    fib.push_back(m);
  }
  std::vector<std::uint32_t> obj_start(X.num_objects() + 1, 0);
  for (ObjIdx x = 0; x < X.num_objects(); ++x)
    obj_start[x + 1] = obj_start[x] + static_cast<std::uint32_t>(obj_fiber[f.on_objects[x]].size());
  std::vector<std::uint64_t> mor_start(X.num_morphisms() + 1, 0);
  for (MorIdx m = 0; m < X.num_morphisms(); ++m)
    mor_start[m + 1] = mor_start[m] + mor_fiber[f.on_morphisms[m]].size();
  Caps::current().check(obj_start.back(), mor_start.back(), "pullback");

  std::vector<std::string> objs;
  objs.reserve(obj_start.back());
  PullbackResult r;
  r.first = {nullptr, f.source, {}, {}};
  r.second = {nullptr, g.source, {}, {}};
  for (ObjIdx x = 0; x < X.num_objects(); ++x) {
    for (ObjIdx y : obj_fiber[f.on_objects[x]]) {
      objs.push_back(pair_id(X.object_id(x), Y.object_id(y)));
      r.first.on_objects.push_back(x);
      r.second.on_objects.push_back(y);
    }
  }
  std::vector<MorphismSpec> mors;
  mors.reserve(mor_start.back());
  for (MorIdx a = 0; a < X.num_morphisms(); ++a) {
    for (MorIdx b : mor_fiber[f.on_morphisms[a]]) {
      mors.push_back({pair_id(X.morphism_id(a), Y.morphism_id(b)),
                      obj_start[X.src(a)] + obj_pos[Y.src(b)], obj_start[X.tgt(a)] + obj_pos[Y.tgt(b)]});
      r.first.on_morphisms.push_back(a);
      r.second.on_morphisms.push_back(b);
    }
  }
  std::vector<MorIdx> ids;
  ids.reserve(objs.size());
  for (ObjIdx o = 0; o < objs.size(); ++o) {
    ObjIdx x = r.first.on_objects[o], y = r.second.on_objects[o];
    ids.push_back(static_cast<MorIdx>(mor_start[X.identity(x)] + mor_pos[Y.identity(y)]));
  }
  const auto& pa = r.first.on_morphisms;
  const auto& pb = r.second.on_morphisms;
  auto cat = std::make_shared<const FinCat>(
      std::move(objs), std::move(mors), std::move(ids), [&](MorIdx u, MorIdx t) {
        MorIdx a = X.compose_unchecked(pa[u], pa[t]);
        MorIdx b = Y.compose_unchecked(pb[u], pb[t]);
        return static_cast<MorIdx>(mor_start[a] + mor_pos[b]);
      });
  r.cat = cat;
  r.first.source = cat;
  r.second.source = cat;
  r.obj_start = std::move(obj_start);
  r.obj_pos = std::move(obj_pos);
  r.mor_start = std::move(mor_start);
  r.mor_pos = std::move(mor_pos);
  r.x_image = f.on_objects;
  r.y_image = g.on_objects;
  r.a_image = f.on_morphisms;
  r.b_image = g.on_morphisms;
  return r;
}

ObjIdx PullbackResult::object_of(ObjIdx x, ObjIdx y) const {
  if (x_image[x] != y_image[y]) return kNone;
  return obj_start[x] + obj_pos[y];
}

MorIdx PullbackResult::morphism_of(MorIdx a, MorIdx b) const {
  if (a_image[a] != b_image[b]) return kNone;
  return static_cast<MorIdx>(mor_start[a] + mor_pos[b]);
}

CatPtr opposite(const CatPtr& c) {
  std::vector<MorphismSpec> mors = c->morphisms();
  for (auto& m : mors) std::swap(m.src, m.tgt);
  std::vector<MorIdx> ids;
  for (ObjIdx o = 0; o < c->num_objects(); ++o) ids.push_back(c->identity(o));
  return std::make_shared<const FinCat>(c->objects(), std::move(mors), std::move(ids),
                                        [&](MorIdx g, MorIdx f) { return c->compose_unchecked(f, g); });
}

SubcatResult full_subcategory(const CatPtr& c, const std::vector<ObjIdx>& objects) {
  std::vector<ObjIdx> new_index(c->num_objects(), kNone);
  std::vector<std::string> objs;
  for (ObjIdx o : objects) {
    if (o >= c->num_objects()) throw InvalidInput("full subcategory: object out of range");
    if (new_index[o] != kNone) throw InvalidInput("full subcategory: duplicate object");
    new_index[o] = static_cast<ObjIdx>(objs.size());
    objs.push_back(c->object_id(o));
  }
  std::vector<MorphismSpec> mors;
  std::vector<MorIdx> kept;
  std::vector<MorIdx> mor_index(c->num_morphisms(), kNone);
  for (MorIdx m = 0; m < c->num_morphisms(); ++m) {
    if (new_index[c->src(m)] == kNone || new_index[c->tgt(m)] == kNone) continue;
    mor_index[m] = static_cast<MorIdx>(mors.size());
    mors.push_back({c->morphism_id(m), new_index[c->src(m)], new_index[c->tgt(m)]});
    kept.push_back(m);
  }
  std::vector<MorIdx> ids;
  for (ObjIdx o : objects) ids.push_back(mor_index[c->identity(o)]);
  auto cat = std::make_shared<const FinCat>(
      std::move(objs), std::move(mors), std::move(ids),
      [&](MorIdx g, MorIdx f) { return mor_index[c->compose_unchecked(kept[g], kept[f])]; });
  return {cat, {cat, c, objects, kept}};
}

SubcatResult wide_subcategory(const CatPtr& c, const std::vector<bool>& mask) {
  if (mask.size() != c->num_morphisms()) throw InvalidInput("wide subcategory: mask size mismatch");
  for (ObjIdx o = 0; o < c->num_objects(); ++o) {
    if (!mask[c->identity(o)]) {
      throw InvalidInput("wide subcategory: mask misses the identity of '" + c->object_id(o) + "'");
    }
  }
  std::vector<MorphismSpec> mors;
  std::vector<MorIdx> kept;
  std::vector<MorIdx> mor_index(c->num_morphisms(), kNone);
  for (MorIdx m = 0; m < c->num_morphisms(); ++m) {
    if (!mask[m]) continue;
    mor_index[m] = static_cast<MorIdx>(mors.size());
    mors.push_back(c->morphisms()[m]);
    kept.push_back(m);
  }
  std::vector<MorIdx> ids;
  std::vector<ObjIdx> objs;
  for (ObjIdx o = 0; o < c->num_objects(); ++o) {
    ids.push_back(mor_index[c->identity(o)]);
    objs.push_back(o);
  }
  auto cat = std::make_shared<const FinCat>(
      c->objects(), std::move(mors), std::move(ids), [&](MorIdx g, MorIdx f) -> MorIdx {
        MorIdx h = c->compose_unchecked(kept[g], kept[f]);
        if (mor_index[h] == kNone) {
          throw InvalidInput("wide subcategory: mask not closed under composition at (" +
                             c->morphism_id(kept[g]) + ", " + c->morphism_id(kept[f]) + ")");
        }
        return mor_index[h];
      });
  return {cat, {cat, c, objs, kept}};
}

SubcatResult subcategory(const CatPtr& c, const std::vector<bool>& objects, const std::vector<bool>& morphisms) {
  if (objects.size() != c->num_objects() || morphisms.size() != c->num_morphisms())
    throw InvalidInput("subcategory: mask size mismatch");
  std::vector<ObjIdx> obj_index(c->num_objects(), kNone);
  std::vector<std::string> objs;
  std::vector<ObjIdx> kept_objs;
  for (ObjIdx o = 0; o < c->num_objects(); ++o) {
    if (!objects[o]) continue;
    if (!morphisms[c->identity(o)])
      throw InvalidInput("subcategory: mask misses the identity of '" + c->object_id(o) + "'");
    obj_index[o] = static_cast<ObjIdx>(objs.size());
    objs.push_back(c->object_id(o));
    kept_objs.push_back(o);
  }
  std::vector<MorphismSpec> mors;
  std::vector<MorIdx> kept;
  std::vector<MorIdx> mor_index(c->num_morphisms(), kNone);
  for (MorIdx m = 0; m < c->num_morphisms(); ++m) {
    if (!morphisms[m]) continue;
    if (obj_index[c->src(m)] == kNone || obj_index[c->tgt(m)] == kNone)
      throw InvalidInput("subcategory: '" + c->morphism_id(m) + "' leaves the object mask");
    mor_index[m] = static_cast<MorIdx>(mors.size());
    mors.push_back({c->morphism_id(m), obj_index[c->src(m)], obj_index[c->tgt(m)]});
    kept.push_back(m);
  }
  std::vector<MorIdx> ids;
  for (ObjIdx o : kept_objs) ids.push_back(mor_index[c->identity(o)]);
  auto cat = std::make_shared<const FinCat>(std::move(objs), std::move(mors), std::move(ids),
                                            [&](MorIdx g, MorIdx f) -> MorIdx {
                                              MorIdx h = c->compose_unchecked(kept[g], kept[f]);
                                              if (mor_index[h] == kNone)
                                                throw InvalidInput("subcategory: not closed under composition at (" +
                                                                   c->morphism_id(kept[g]) + ", " +
                                                                   c->morphism_id(kept[f]) + ")");
                                              return mor_index[h];
                                            });
  return {cat, {cat, c, kept_objs, kept}};
}

SubcatResult strict_fiber(const FinFunctor& p, ObjIdx b) {
  std::vector<bool> objects(p.source->num_objects()), morphisms(p.source->num_morphisms());
  for (ObjIdx o = 0; o < objects.size(); ++o) objects[o] = p.obj(o) == b;
  const MorIdx idb = p.target->identity(b);
  for (MorIdx m = 0; m < morphisms.size(); ++m) morphisms[m] = p.mor(m) == idb;
  return subcategory(p.source, objects, morphisms);
}

FinFunctor object_inclusion(const CatPtr& c, ObjIdx o) {
  return constant_functor(terminal_cat(), c, o);
}

FinFunctor chain_inclusion(const CatPtr& c, ObjIdx start, const std::vector<MorIdx>& chain) {
  const int p = static_cast<int>(chain.size());
  ObjIdx cur = start;
  for (MorIdx m : chain) {
    if (c->src(m) != cur) throw InvalidInput("chain inclusion: morphisms are not composable");
    cur = c->tgt(m);
  }
  auto shape = chain_cat(p);
  FinFunctor F{shape, c, {}, {}};
  F.on_objects.push_back(start);
  for (MorIdx m : chain) F.on_objects.push_back(c->tgt(m));
  F.on_morphisms.resize(shape->num_morphisms());
  for (MorIdx m = 0; m < shape->num_morphisms(); ++m) {
    ObjIdx i = shape->src(m), j = shape->tgt(m);
    MorIdx v = c->identity(F.on_objects[i]);
    for (ObjIdx s = i; s < j; ++s) v = c->compose_unchecked(chain[s], v);
    F.on_morphisms[m] = v;
  }
  return F;
}

}  // namespace relcat
