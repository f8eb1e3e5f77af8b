#include "relcat/nerve/nerves.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "relcat/cat/constructions.hpp"
#include "relcat/cat/structure.hpp"
#include "relcat/core/caps.hpp"
#include "relcat/core/error.hpp"
#include "relcat/rel/grid.hpp"
#include "relcat/rel/wstar.hpp"

namespace relcat {

namespace {

using IdIndex = std::unordered_map<std::string, std::uint32_t>;

IdIndex index_ids(const std::vector<std::string>& ids) {
  IdIndex out;
  out.reserve(ids.size());
  for (std::uint32_t i = 0; i < ids.size(); ++i) out.emplace(ids[i], i);
  return out;
}

std::uint32_t lookup(const IdIndex& idx, const std::string& id, const char* what) {
  auto it = idx.find(id);
  if (it == idx.end()) throw Error(std::string(what) + ": no cell " + id);
  return it->second;
}

// Cells of one level as grids, sorted by id.
struct GridLevel {
  std::vector<Grid> grids;
  IdIndex index;
};

GridLevel grid_level(const FinCat& c, const std::vector<int>& dims, const std::vector<const Mask*>& masks,
                     std::size_t limit) {
  auto grids = enumerate_grids(c, dims, masks, limit);
  std::vector<std::string> ids;
  ids.reserve(grids.size());
  for (const auto& g : grids) ids.push_back(grid_id(c, g));
  std::vector<std::uint32_t> order(grids.size());
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return ids[a] < ids[b]; });
  GridLevel out;
  out.grids.reserve(grids.size());
  std::vector<std::string> sorted;
  sorted.reserve(grids.size());
  for (auto i : order) {
    out.grids.push_back(std::move(grids[i]));
    sorted.push_back(std::move(ids[i]));
  }
  out.index = index_ids(sorted);
  return out;
}

TruncMultiSSet build_grid_sset(const FinCat& c, const std::vector<const Mask*>& masks, int bound,
                               const char* what) {
  const int arity = static_cast<int>(masks.size());
  TruncMultiSSet s(arity, bound);
  const Caps caps = Caps::current();
  std::vector<GridLevel> levels(s.num_levels());
  std::size_t total = 0;
  for (std::size_t L = 0; L < s.num_levels(); ++L) {
    const std::size_t remaining = caps.max_cells > total ? caps.max_cells - total : 0;
    levels[L] = grid_level(c, s.degree_of(L), masks, remaining);
    total += levels[L].grids.size();
    caps.check_cells(total, what);
    s.cells[L].resize(levels[L].grids.size());
    for (const auto& [id, i] : levels[L].index) s.cells[L][i] = id;
  }
  for (std::size_t L = 0; L < s.num_levels(); ++L) {
    const auto deg = s.degree_of(L);
    s.faces[L].resize(static_cast<std::size_t>(arity));
    s.degeneracies[L].resize(static_cast<std::size_t>(arity));
    for (int a = 0; a < arity; ++a) {
      const int p = deg[static_cast<std::size_t>(a)];
      const std::size_t down = s.neighbor(L, a, -1);
      const std::size_t up = s.neighbor(L, a, +1);
      if (down != TruncMultiSSet::npos) {
        for (int i = 0; i <= p; ++i) {
          std::vector<std::uint32_t> map;
          map.reserve(levels[L].grids.size());
          for (const auto& g : levels[L].grids)
            map.push_back(lookup(levels[down].index, grid_id(c, grid_face(c, g, a, i)), what));
          s.faces[L][a].push_back(std::move(map));
        }
      }
      if (up != TruncMultiSSet::npos) {
        for (int i = 0; i <= p; ++i) {
          std::vector<std::uint32_t> map;
          map.reserve(levels[L].grids.size());
          for (const auto& g : levels[L].grids)
            map.push_back(lookup(levels[up].index, grid_id(c, grid_degeneracy(c, g, a, i)), what));
          s.degeneracies[L][a].push_back(std::move(map));
        }
      }
    }
  }
  return s;
}

std::vector<const Mask*> relative_masks(const KRelStructure& c) {
  std::vector<const Mask*> masks;
  for (const auto& v : c.v) masks.push_back(&v);
  masks.push_back(&c.w);
  return masks;
}

}  // namespace

TruncMultiSSet nerve(const FinCat& c, int bound) { return build_grid_sset(c, {nullptr}, bound, "nerve"); }

std::vector<std::vector<std::uint32_t>> nerve_map(const FinFunctor& f, const TruncMultiSSet& source,
                                                  const TruncMultiSSet& target) {
  if (source.arity != 1 || target.arity != 1 || source.bound != target.bound)
    throw InvalidInput("nerve_map: nerves of equal bound required");
  std::vector<std::vector<std::uint32_t>> out(static_cast<std::size_t>(source.bound + 1));
  for (int d = 0; d <= source.bound; ++d) {
    const auto sidx = index_ids(source.cells[d]);
    const auto tidx = index_ids(target.cells[d]);
    out[d].assign(source.cells[d].size(), 0);
    for (const auto& g : enumerate_grids(*f.source, {d}, {nullptr}, source.cells[d].size())) {
      const auto x = lookup(sidx, grid_id(*f.source, g), "nerve_map");
      out[d][x] = lookup(tidx, grid_id(*f.target, grid_apply(f, g)), "nerve_map");
    }
  }
  return out;
}

TruncMultiSSet simplicial_nerve(const KRelStructure& c, int bound) {
  check_krel_shape(c);
  if (c.k() != 1) throw InvalidInput("simplicial_nerve: a relative category (k = 1) is required");
  const FinCat& amb = *c.ambient;
  const Mask& v = c.v[0];
  const Mask& w = c.w;
  TruncMultiSSet s(2, bound);
  const Caps caps = Caps::current();

  // Cells as functors on [p] × [q], with a lookup from pairs of chain
  // morphisms to product morphisms.
  struct Shape {
    int p = 0, q = 0;
    ProductResult prod;
    std::vector<MorIdx> pair_index;  // [ma * nq + mb]
    std::size_t nq = 0;
    CatPtr cp, cq;
  };
  struct Level {
    Shape shape;
    std::vector<FinFunctor> cells;
    IdIndex index;
  };
  auto chain_mor = [](const FinCat& ch, int a, int b) {
    return *ch.find_morphism(std::to_string(a) + "->" + std::to_string(b));
  };
  // Grid of F∘(alpha × beta) for monotone alpha: [p'] → [p], beta: [q'] → [q].
  auto restrict = [&](const Level& lv, const FinFunctor& F, const std::vector<int>& alpha,
                      const std::vector<int>& beta) {
    const Shape& sh = lv.shape;
    const int p2 = static_cast<int>(alpha.size()) - 1;
    const int q2 = static_cast<int>(beta.size()) - 1;
    Grid g;
    g.dims = {p2, q2};
    g.edges.assign(2, std::vector<MorIdx>(static_cast<std::size_t>((p2 + 1) * (q2 + 1)), kNone));
    auto mor_at = [&](int a0, int a1, int b0, int b1) {
      const MorIdx ma = chain_mor(*sh.cp, a0, a1);
      const MorIdx mb = chain_mor(*sh.cq, b0, b1);
      return F.mor(sh.pair_index[ma * sh.nq + mb]);
    };
    for (int a = 0; a <= p2; ++a)
      for (int b = 0; b <= q2; ++b) {
        const auto x = static_cast<std::size_t>(a * (q2 + 1) + b);
        g.objects.push_back(amb.src(mor_at(alpha[a], alpha[a], beta[b], beta[b])));
        if (a < p2) g.edges[0][x] = mor_at(alpha[a], alpha[a + 1], beta[b], beta[b]);
        if (b < q2) g.edges[1][x] = mor_at(alpha[a], alpha[a], beta[b], beta[b + 1]);
      }
    return g;
  };
  auto identity_map = [](int n) {
    std::vector<int> m(static_cast<std::size_t>(n + 1));
    std::iota(m.begin(), m.end(), 0);
    return m;
  };

  std::vector<Level> levels(s.num_levels());
  std::size_t total = 0;
  for (std::size_t L = 0; L < s.num_levels(); ++L) {
    const auto deg = s.degree_of(L);
    Level& lv = levels[L];
    lv.shape.p = deg[0];
    lv.shape.q = deg[1];
    lv.shape.cp = chain_cat(deg[0]);
    lv.shape.cq = chain_cat(deg[1]);
    lv.shape.prod = product(lv.shape.cp, lv.shape.cq);
    lv.shape.nq = lv.shape.cq->num_morphisms();
    lv.shape.pair_index.assign(lv.shape.cp->num_morphisms() * lv.shape.nq, kNone);
    const auto& P = *lv.shape.prod.cat;
    for (MorIdx m = 0; m < P.num_morphisms(); ++m)
      lv.shape.pair_index[lv.shape.prod.first.mor(m) * lv.shape.nq + lv.shape.prod.second.mor(m)] = m;

    const std::size_t remaining = caps.max_cells > total ? caps.max_cells - total : 0;
    auto all = enumerate_functors(lv.shape.prod.cat, c.ambient, remaining + 1);
    std::vector<std::pair<std::string, std::size_t>> keyed;
    for (std::size_t i = 0; i < all.size(); ++i) {
      bool relative = true;
      for (MorIdx m = 0; m < P.num_morphisms() && relative; ++m) {
        const bool horizontal = lv.shape.cq->is_identity(lv.shape.prod.second.mor(m));
        const bool vertical = lv.shape.cp->is_identity(lv.shape.prod.first.mor(m));
        if (horizontal && !v[all[i].mor(m)]) relative = false;
        if (vertical && !w[all[i].mor(m)]) relative = false;
      }
      if (!relative) continue;
      keyed.emplace_back(grid_id(amb, restrict(lv, all[i], identity_map(deg[0]), identity_map(deg[1]))), i);
    }
    std::sort(keyed.begin(), keyed.end());
    total += keyed.size();
    caps.check_cells(total, "simplicial_nerve");
    for (const auto& [id, i] : keyed) {
      s.cells[L].push_back(id);
      lv.cells.push_back(std::move(all[i]));
    }
    lv.index = index_ids(s.cells[L]);
  }

  auto coface = [](int n, int i) {  // [n-1] → [n] skipping i
    std::vector<int> m;
    for (int j = 0; j <= n; ++j)
      if (j != i) m.push_back(j);
    return m;
  };
  auto codegeneracy = [](int n, int i) {  // [n+1] → [n] hitting i twice
    std::vector<int> m;
    for (int j = 0; j <= n + 1; ++j) m.push_back(j <= i ? j : j - 1);
    return m;
  };
  for (std::size_t L = 0; L < s.num_levels(); ++L) {
    const Level& lv = levels[L];
    const int p = lv.shape.p, q = lv.shape.q;
    s.faces[L].resize(2);
    s.degeneracies[L].resize(2);
    for (int a = 0; a < 2; ++a) {
      const int n = a == 0 ? p : q;
      const std::size_t down = s.neighbor(L, a, -1);
      const std::size_t up = s.neighbor(L, a, +1);
      for (int i = 0; i <= n; ++i) {
        if (down != TruncMultiSSet::npos) {
          std::vector<std::uint32_t> map;
          for (const auto& F : lv.cells) {
            auto alpha = a == 0 ? coface(p, i) : identity_map(p);
            auto beta = a == 1 ? coface(q, i) : identity_map(q);
            map.push_back(lookup(levels[down].index, grid_id(amb, restrict(lv, F, alpha, beta)), "simplicial_nerve"));
          }
          s.faces[L][a].push_back(std::move(map));
        }
        if (up != TruncMultiSSet::npos) {
          std::vector<std::uint32_t> map;
          for (const auto& F : lv.cells) {
            auto alpha = a == 0 ? codegeneracy(p, i) : identity_map(p);
            auto beta = a == 1 ? codegeneracy(q, i) : identity_map(q);
            map.push_back(lookup(levels[up].index, grid_id(amb, restrict(lv, F, alpha, beta)), "simplicial_nerve"));
          }
          s.degeneracies[L][a].push_back(std::move(map));
        }
      }
    }
  }
  return s;
}

TruncMultiSSet k_simplicial_nerve(const KRelStructure& c, int bound) {
  check_krel_shape(c);
  if (c.k() < 1) throw InvalidInput("k_simplicial_nerve: k >= 1 required");
  return build_grid_sset(*c.ambient, relative_masks(c), bound, "k_simplicial_nerve");
}

std::vector<std::vector<std::uint32_t>> k_simplicial_nerve_map(const KRelFunctor& f, const TruncMultiSSet& source,
                                                            const TruncMultiSSet& target) {
  if (source.arity != target.arity || source.bound != target.bound || source.arity != f.source.k() + 1)
    throw InvalidInput("k_simplicial_nerve_map: nerves of equal shape required");
  const auto masks = relative_masks(f.source);
  std::vector<std::vector<std::uint32_t>> out(source.num_levels());
  for (std::size_t L = 0; L < source.num_levels(); ++L) {
    const auto sidx = index_ids(source.cells[L]);
    const auto tidx = index_ids(target.cells[L]);
    out[L].assign(source.cells[L].size(), 0);
    for (const auto& g : enumerate_grids(*f.source.ambient, source.degree_of(L), masks, source.cells[L].size())) {
      const auto x = lookup(sidx, grid_id(*f.source.ambient, g), "k_simplicial_nerve_map");
      out[L][x] = lookup(tidx, grid_id(*f.target.ambient, grid_apply(f.functor, g)), "k_simplicial_nerve_map");
    }
  }
  return out;
}

std::size_t CatDiagram::level_index(const std::vector<int>& degree) const {
  std::size_t idx = 0;
  for (int v : degree) {
    if (v < 0 || v > bound) throw InvalidInput("diagram degree outside the window");
    idx = idx * static_cast<std::size_t>(bound + 1) + static_cast<std::size_t>(v);
  }
  return idx;
}

std::vector<int> CatDiagram::degree_of(std::size_t level) const {
  std::vector<int> d(static_cast<std::size_t>(arity));
  for (int i = arity; i-- > 0;) {
    d[static_cast<std::size_t>(i)] = static_cast<int>(level % static_cast<std::size_t>(bound + 1));
    level /= static_cast<std::size_t>(bound + 1);
  }
  return d;
}

namespace {

// The objects (or morphisms) of a diagram as a multisimplicial set.
TruncMultiSSet diagram_part(const CatDiagram& d, bool morphisms) {
  TruncMultiSSet s(d.arity, d.bound);
  for (std::size_t L = 0; L < s.num_levels(); ++L) {
    const FinCat& c = *d.levels[L];
    if (morphisms)
      for (MorIdx m = 0; m < c.num_morphisms(); ++m) s.cells[L].push_back(c.morphism_id(m));
    else
      for (ObjIdx o = 0; o < c.num_objects(); ++o) s.cells[L].push_back(c.object_id(o));
    auto convert = [&](const std::vector<std::vector<std::vector<FinFunctor>>>& fs, auto& dst) {
      dst[L].resize(static_cast<std::size_t>(d.arity));
      for (int a = 0; a < d.arity && a < static_cast<int>(fs[L].size()); ++a)
        for (const auto& F : fs[L][a]) {
          if (morphisms)
            dst[L][a].push_back(std::vector<std::uint32_t>(F.on_morphisms.begin(), F.on_morphisms.end()));
          else
            dst[L][a].push_back(std::vector<std::uint32_t>(F.on_objects.begin(), F.on_objects.end()));
        }
    };
    convert(d.faces, s.faces);
    convert(d.degeneracies, s.degeneracies);
  }
  return s;
}

std::string diagram_shape_problem(const CatDiagram& d) {
  std::size_t n = 1;
  for (int i = 0; i < d.arity; ++i) n *= static_cast<std::size_t>(d.bound + 1);
  if (d.levels.size() != n || d.faces.size() != n || d.degeneracies.size() != n)
    return "diagram: wrong number of levels";
  for (std::size_t L = 0; L < n; ++L) {
    const auto deg = d.degree_of(L);
    if (d.faces[L].size() != static_cast<std::size_t>(d.arity) ||
        d.degeneracies[L].size() != static_cast<std::size_t>(d.arity))
      return "diagram: face/degeneracy lists need one entry per direction";
    for (int a = 0; a < d.arity; ++a) {
      const int p = deg[static_cast<std::size_t>(a)];
      const std::size_t nf = p > 0 ? static_cast<std::size_t>(p + 1) : 0;
      const std::size_t ns = p < d.bound ? static_cast<std::size_t>(p + 1) : 0;
      if (d.faces[L][a].size() != nf || d.degeneracies[L][a].size() != ns)
        return "diagram: wrong number of face/degeneracy functors";
      auto check = [&](const FinFunctor& F, int delta) {
        auto to = deg;
        to[static_cast<std::size_t>(a)] += delta;
        const auto& expect_src = d.levels[L];
        const auto& expect_tgt = d.levels[d.level_index(to)];
        return F.source.get() == expect_src.get() && F.target.get() == expect_tgt.get() &&
               F.on_objects.size() == expect_src->num_objects() &&
               F.on_morphisms.size() == expect_src->num_morphisms();
      };
      for (const auto& F : d.faces[L][a])
        if (!check(F, -1)) return "diagram: face functor between the wrong levels";
      for (const auto& F : d.degeneracies[L][a])
        if (!check(F, +1)) return "diagram: degeneracy functor between the wrong levels";
    }
  }
  return {};
}

}  // namespace

ValidationReport check_diagram(const CatDiagram& d) {
  ValidationReport report;
  if (auto problem = diagram_shape_problem(d); !problem.empty()) {
    report.violations.push_back({"shape", problem});
    return report;
  }
  for (std::size_t L = 0; L < d.levels.size(); ++L)
    for (const auto& fs : {d.faces[L], d.degeneracies[L]})
      for (const auto& dir : fs)
        for (const auto& F : dir) {
          auto r = validate_functor(F);
          for (auto& v : r.violations) report.violations.push_back({"functor: " + v.axiom, v.witness});
        }
  for (bool morphisms : {false, true}) {
    auto r = check_simplicial_identities(diagram_part(d, morphisms));
    for (auto& v : r.violations)
      report.violations.push_back({v.axiom + (morphisms ? " (on morphisms)" : " (on objects)"), v.witness});
  }
  return report;
}

CatDiagram constant_diagram(const CatPtr& c, int arity, int bound) {
  CatDiagram d;
  d.arity = arity;
  d.bound = bound;
  std::size_t n = 1;
  for (int i = 0; i < arity; ++i) n *= static_cast<std::size_t>(bound + 1);
  d.levels.assign(n, c);
  d.faces.resize(n);
  d.degeneracies.resize(n);
  const auto id = identity_functor(c);
  for (std::size_t L = 0; L < n; ++L) {
    const auto deg = d.degree_of(L);
    d.faces[L].resize(static_cast<std::size_t>(arity));
    d.degeneracies[L].resize(static_cast<std::size_t>(arity));
    for (int a = 0; a < arity; ++a) {
      const int p = deg[static_cast<std::size_t>(a)];
      if (p > 0) d.faces[L][a].assign(static_cast<std::size_t>(p + 1), id);
      if (p < bound) d.degeneracies[L][a].assign(static_cast<std::size_t>(p + 1), id);
    }
  }
  return d;
}

TruncMultiSSet levelwise_nerve(const CatDiagram& d) {
  if (auto r = check_diagram(d); !r.ok()) throw InvalidInput("levelwise_nerve: " + r.summary());
  const int k = d.arity;
  TruncMultiSSet s(k + 1, d.bound);
  const std::size_t nl = d.levels.size();
  std::vector<TruncMultiSSet> nerves;
  std::vector<std::vector<GridLevel>> grids(nl);
  std::size_t total = 0;
  const Caps caps = Caps::current();
  for (std::size_t L = 0; L < nl; ++L) {
    for (int q = 0; q <= d.bound; ++q) {
      const std::size_t remaining = caps.max_cells > total ? caps.max_cells - total : 0;
      grids[L].push_back(grid_level(*d.levels[L], {q}, {nullptr}, remaining));
      total += grids[L].back().grids.size();
      caps.check_cells(total, "levelwise_nerve");
    }
    nerves.push_back(nerve(*d.levels[L], d.bound));
  }
  const auto B = static_cast<std::size_t>(d.bound + 1);
  for (std::size_t L = 0; L < nl; ++L) {
    for (std::size_t q = 0; q < B; ++q) {
      const std::size_t S = L * B + q;
      s.cells[S] = nerves[L].cells[q];
      s.faces[S].resize(static_cast<std::size_t>(k + 1));
      s.degeneracies[S].resize(static_cast<std::size_t>(k + 1));
      for (int a = 0; a < k; ++a) {
        auto apply = [&](const std::vector<FinFunctor>& fs, int delta, auto& dst) {
          auto deg = d.degree_of(L);
          deg[static_cast<std::size_t>(a)] += delta;
          const std::size_t T = fs.empty() ? 0 : d.level_index(deg);
          for (const auto& F : fs) {
            std::vector<std::uint32_t> map(s.cells[S].size());
            for (const auto& g : grids[L][q].grids) {
              const auto x = lookup(grids[L][q].index, grid_id(*d.levels[L], g), "levelwise_nerve");
              map[x] = lookup(grids[T][q].index, grid_id(*d.levels[T], grid_apply(F, g)), "levelwise_nerve");
            }
            dst.push_back(std::move(map));
          }
        };
        apply(d.faces[L][a], -1, s.faces[S][a]);
        apply(d.degeneracies[L][a], +1, s.degeneracies[S][a]);
      }
      s.faces[S][k] = nerves[L].faces[q][0];
      s.degeneracies[S][k] = nerves[L].degeneracies[q][0];
    }
  }
  return s;
}

namespace {

std::vector<WStarLevel> w_star_levels(const KRelStructure& c, int bound, CatDiagram& d) {
  check_krel_shape(c);
  if (c.k() < 1) throw InvalidInput("w_star_diagram: k >= 1 required");
  d.arity = c.k();
  d.bound = bound;
  std::size_t n = 1;
  for (int i = 0; i < d.arity; ++i) n *= static_cast<std::size_t>(bound + 1);
  std::vector<WStarLevel> levels;
  for (std::size_t L = 0; L < n; ++L) {
    levels.push_back(w_star_at(c, d.degree_of(L)));
    d.levels.push_back(levels.back().cat);
  }
  d.faces.resize(n);
  d.degeneracies.resize(n);
  for (std::size_t L = 0; L < n; ++L) {
    const auto deg = d.degree_of(L);
    d.faces[L].resize(static_cast<std::size_t>(d.arity));
    d.degeneracies[L].resize(static_cast<std::size_t>(d.arity));
    for (int a = 0; a < d.arity; ++a) {
      const int p = deg[static_cast<std::size_t>(a)];
      auto shifted = [&](int delta) {
        auto t = deg;
        t[static_cast<std::size_t>(a)] += delta;
        return d.level_index(t);
      };
      for (int i = 0; i <= p && p > 0; ++i)
        d.faces[L][a].push_back(w_star_face(c, levels[L], levels[shifted(-1)], a, i));
      for (int i = 0; i <= p && p < bound; ++i)
        d.degeneracies[L][a].push_back(w_star_degeneracy(c, levels[L], levels[shifted(+1)], a, i));
    }
  }
  return levels;
}

// Stacks a chain of w_* morphisms into one grid of C with a trailing w direction.
Grid stack_chain(const WStarLevel& level, const Grid& chain) {
  const int q = chain.dims[0];
  const auto& pd = level.p;
  const int k = static_cast<int>(pd.size());
  Grid g;
  g.dims = pd;
  g.dims.push_back(q);
  const std::size_t np = grid_point_count(pd);
  const auto Q = static_cast<std::size_t>(q + 1);
  g.objects.assign(np * Q, kNone);
  g.edges.assign(static_cast<std::size_t>(k + 1), std::vector<MorIdx>(np * Q, kNone));
  for (std::size_t t = 0; t < Q; ++t) {
    const Grid& og = level.object_grids[chain.objects[t]];
    for (std::size_t x = 0; x < np; ++x) {
      g.objects[x * Q + t] = og.objects[x];
      for (int a = 0; a < k; ++a) g.edges[static_cast<std::size_t>(a)][x * Q + t] = og.edges[static_cast<std::size_t>(a)][x];
      if (t + 1 < Q) {
        const Grid& mg = level.morphism_grids[chain.edges[0][t]];
        g.edges[static_cast<std::size_t>(k)][x * Q + t] = mg.edges[static_cast<std::size_t>(k)][x * 2];
      }
    }
  }
  return g;
}

}  // namespace

CatDiagram w_star_diagram(const KRelStructure& c, int bound, std::vector<WStarLevel>* levels) {
  CatDiagram d;
  auto built = w_star_levels(c, bound, d);
  if (levels) *levels = std::move(built);
  return d;
}

ValidationReport check_levelwise_identity(const KRelStructure& c, int bound) {
  ValidationReport report;
  CatDiagram d;
  const auto levels = w_star_levels(c, bound, d);
  const auto A = levelwise_nerve(d);
  const auto B = k_simplicial_nerve(c, bound);
  const FinCat& amb = *c.ambient;
  const auto Q = static_cast<std::size_t>(bound + 1);
  // translation[S][x] = index in B of the A cell x at level S
  std::vector<std::vector<std::uint32_t>> tr(A.num_levels());
  for (std::size_t S = 0; S < A.num_levels(); ++S) {
    const std::size_t L = S / Q;
    const int q = static_cast<int>(S % Q);
    const auto bidx = index_ids(B.cells[S]);
    const auto aidx = index_ids(A.cells[S]);
    tr[S].assign(A.cells[S].size(), 0);
    std::vector<bool> hit(B.cells[S].size(), false);
    if (A.cells[S].size() != B.cells[S].size())
      report.violations.push_back({"cell counts", "level " + std::to_string(S) + ": " +
                                                      std::to_string(A.cells[S].size()) + " vs " +
                                                      std::to_string(B.cells[S].size())});
    for (const auto& chain : enumerate_grids(*d.levels[L], {q}, {nullptr}, A.cells[S].size())) {
      const auto x = lookup(aidx, grid_id(*d.levels[L], chain), "check_levelwise_identity");
      const auto id = grid_id(amb, stack_chain(levels[L], chain));
      auto it = bidx.find(id);
      if (it == bidx.end()) {
        report.violations.push_back({"cell missing from the k-simplicial nerve", id});
        continue;
      }
      if (hit[it->second]) report.violations.push_back({"two chains give one grid", id});
      hit[it->second] = true;
      tr[S][x] = it->second;
    }
  }
  if (!report.ok()) return report;
  for (std::size_t S = 0; S < A.num_levels(); ++S)
    for (int a = 0; a < A.arity; ++a) {
      for (std::size_t i = 0; i < A.faces[S][a].size(); ++i) {
        const std::size_t T = A.neighbor(S, a, -1);
        for (std::uint32_t x = 0; x < A.cells[S].size(); ++x)
          if (tr[T][A.faces[S][a][i][x]] != B.faces[S][a][i][tr[S][x]])
            report.violations.push_back({"faces disagree", A.cells[S][x]});
      }
      for (std::size_t i = 0; i < A.degeneracies[S][a].size(); ++i) {
        const std::size_t T = A.neighbor(S, a, +1);
        for (std::uint32_t x = 0; x < A.cells[S].size(); ++x)
          if (tr[T][A.degeneracies[S][a][i][x]] != B.degeneracies[S][a][i][tr[S][x]])
            report.violations.push_back({"degeneracies disagree", A.cells[S][x]});
      }
    }
  return report;
}

}  // namespace relcat
