#include "relcat/arrow/levelwise.hpp"

#include <unordered_map>

#include "relcat/cat/structure.hpp"
#include "relcat/core/error.hpp"

namespace relcat {

namespace {

bool same_tables(const FinFunctor& a, const FinFunctor& b) {
  return a.on_objects == b.on_objects && a.on_morphisms == b.on_morphisms;
}

// Applies `each` to every face and degeneracy slot of the diagram.
void for_each_structure_map(const CatDiagram& d,
                            const std::function<void(std::size_t L, std::size_t to, bool face, int dir, int i)>& each) {
  for (std::size_t L = 0; L < d.levels.size(); ++L) {
    const auto deg = d.degree_of(L);
    for (int a = 0; a < d.arity; ++a) {
      auto shifted = [&](int delta) {
        auto t = deg;
        t[static_cast<std::size_t>(a)] += delta;
        return d.level_index(t);
      };
      const auto ua = static_cast<std::size_t>(a);
      for (int i = 0; i < static_cast<int>(d.faces[L][ua].size()); ++i) each(L, shifted(-1), true, a, i);
      for (int i = 0; i < static_cast<int>(d.degeneracies[L][ua].size()); ++i) each(L, shifted(+1), false, a, i);
    }
  }
}

const FinFunctor& structure_map(const CatDiagram& d, std::size_t L, bool face, int dir, int i) {
  const auto& maps = face ? d.faces[L] : d.degeneracies[L];
  return maps[static_cast<std::size_t>(dir)][static_cast<std::size_t>(i)];
}

CatDiagram empty_like(const CatDiagram& d) {
  CatDiagram out;
  out.arity = d.arity;
  out.bound = d.bound;
  out.faces.resize(d.levels.size());
  out.degeneracies.resize(d.levels.size());
  for (std::size_t L = 0; L < d.levels.size(); ++L) {
    out.faces[L].resize(d.faces[L].size());
    out.degeneracies[L].resize(d.degeneracies[L].size());
  }
  return out;
}

// The functor between n-arrow fibers induced by ax: X → X' and az: Z → Z'.
FinFunctor induced_fiber_map(const NArrowFiber& from, const NArrowFiber& to, const FinFunctor& ax,
                             const FinFunctor& az) {
  const auto& src_path = *from.path;
  const auto& dst_path = *to.path;
  const FinCat& c = from.fiber.cat();
  FinFunctor out{from.fiber.ambient, to.fiber.ambient, {}, {}};
  auto move_object = [&](ObjIdx o) {
    std::vector<MorIdx> legs;
    for (MorIdx l : src_path.legs[from.pullback.second.obj(o)]) legs.push_back(az.mor(l));
    const ObjIdx p = dst_path.find_object(legs);
    if (p == kNone) throw Error("levelwise: image zigzag missing");
    const ObjIdx r = to.pullback.object_of(ax.obj(from.pullback.first.obj(o)), p);
    if (r == kNone) throw Error("levelwise: image object missing");
    return r;
  };
  for (ObjIdx o = 0; o < c.num_objects(); ++o) out.on_objects.push_back(move_object(o));
  for (MorIdx m = 0; m < c.num_morphisms(); ++m) {
    std::vector<MorIdx> verts;
    for (MorIdx v : src_path.verticals[from.pullback.second.mor(m)]) verts.push_back(az.mor(v));
    const ObjIdx s = out.obj(c.src(m)), t = out.obj(c.tgt(m));
    const MorIdx q =
        dst_path.find_morphism(to.pullback.second.obj(s), to.pullback.second.obj(t), verts);
    const MorIdx r = q == kNone ? kNone : to.pullback.morphism_of(ax.mor(from.pullback.first.mor(m)), q);
    if (r == kNone) throw Error("levelwise: image morphism missing");
    out.on_morphisms.push_back(r);
  }
  return out;
}

FinFunctor induced_pullback_map(const NArrowPullback& from, const NArrowPullback& to, const FinFunctor& on_fiber,
                                const FinFunctor& ay) {
  const FinCat& c = from.object.cat();
  FinFunctor out{from.object.ambient, to.object.ambient, {}, {}};
  for (ObjIdx o = 0; o < c.num_objects(); ++o)
    out.on_objects.push_back(
        to.pullback.object_of(on_fiber.obj(from.pullback.first.obj(o)), ay.obj(from.pullback.second.obj(o))));
  for (MorIdx m = 0; m < c.num_morphisms(); ++m)
    out.on_morphisms.push_back(
        to.pullback.morphism_of(on_fiber.mor(from.pullback.first.mor(m)), ay.mor(from.pullback.second.mor(m))));
  return out;
}

}  // namespace

ValidationReport check_diagram_map(const DiagramMap& f) {
  ValidationReport r;
  auto bad = [&](const std::string& axiom, const std::string& what) { r.violations.push_back({axiom, what}); };
  if (f.source.arity != f.target.arity || f.source.bound != f.target.bound ||
      f.source.levels.size() != f.target.levels.size() || f.components.size() != f.source.levels.size()) {
    bad("shape", "diagrams of different shape");
    return r;
  }
  for (std::size_t L = 0; L < f.components.size(); ++L) {
    const auto& c = f.components[L];
    if (c.source != f.source.levels[L] || c.target != f.target.levels[L]) {
      bad("shape", "component " + std::to_string(L) + " has the wrong endpoints");
      return r;
    }
    auto v = validate_functor(c);
    if (!v.ok()) bad("functor", "component " + std::to_string(L) + ": " + v.summary());
  }
  for_each_structure_map(f.source, [&](std::size_t L, std::size_t to, bool face, int dir, int i) {
    const auto& ts = f.target.faces[L];
    if ((face ? ts : f.target.degeneracies[L])[static_cast<std::size_t>(dir)].size() <= static_cast<std::size_t>(i)) {
      bad("shape", "target misses a structure map");
      return;
    }
    const auto lhs = compose_functors(f.components[to], structure_map(f.source, L, face, dir, i));
    const auto rhs = compose_functors(structure_map(f.target, L, face, dir, i), f.components[L]);
    if (!same_tables(lhs, rhs))
      bad("naturality", std::string(face ? "face" : "degeneracy") + " " + std::to_string(i) + " in direction " +
                            std::to_string(dir) + " at level " + std::to_string(L));
  });
  return r;
}

WStarMap w_star_diagram_map(const KRelFunctor& f, int bound, const WStarMap* same_target) {
  WStarMap out;
  out.map.source = w_star_diagram(f.source, bound, &out.source_levels);
  if (same_target) {
    if (same_target->map.target.bound != bound) throw InvalidInput("w_star_diagram_map: shared target of another bound");
    out.map.target = same_target->map.target;
    out.target_levels = same_target->target_levels;
  } else {
    out.map.target = w_star_diagram(f.target, bound, &out.target_levels);
  }
  for (std::size_t L = 0; L < out.source_levels.size(); ++L)
    out.map.components.push_back(w_star_map(f, out.source_levels[L], out.target_levels[L]));
  return out;
}

LevelwiseFiber levelwise_n_arrow_fiber(const DiagramMap& f, int n) {
  require_valid(check_diagram_map(f), "levelwise n-arrow fibers");
  LevelwiseFiber out;
  out.f = f;
  out.result = empty_like(f.source);
  out.pi.target = f.target;
  for (std::size_t L = 0; L < f.components.size(); ++L) {
    out.levels.push_back(n_arrow_fiber(cat_hat_functor(f.components[L]), n));
    out.result.levels.push_back(out.levels.back().fiber.ambient);
    out.pi.components.push_back(out.levels.back().pi);
  }
  for_each_structure_map(f.source, [&](std::size_t L, std::size_t to, bool face, int dir, int i) {
    auto& slot = (face ? out.result.faces[L] : out.result.degeneracies[L])[static_cast<std::size_t>(dir)];
    slot.push_back(induced_fiber_map(out.levels[L], out.levels[to], structure_map(f.source, L, face, dir, i),
                                     structure_map(f.target, L, face, dir, i)));
  });
  out.pi.source = out.result;
  require_valid(check_diagram(out.result), "levelwise n-arrow fibers");
  return out;
}

LevelwisePullback levelwise_n_arrow_pullback(const DiagramMap& f, const DiagramMap& g, int n) {
  require_valid(check_diagram_map(g), "levelwise n-arrow pullback");
  LevelwisePullback out;
  out.fiber = levelwise_n_arrow_fiber(f, n);
  out.g = g;
  out.result = empty_like(g.source);
  out.pi.target = g.source;
  for (std::size_t L = 0; L < g.components.size(); ++L) {
    out.levels.push_back(n_arrow_pullback(out.fiber.levels[L], cat_hat_functor(g.components[L])));
    out.result.levels.push_back(out.levels.back().object.ambient);
    out.pi.components.push_back(out.levels.back().pi);
  }
  for_each_structure_map(g.source, [&](std::size_t L, std::size_t to, bool face, int dir, int i) {
    auto& slot = (face ? out.result.faces[L] : out.result.degeneracies[L])[static_cast<std::size_t>(dir)];
    slot.push_back(induced_pullback_map(out.levels[L], out.levels[to],
                                        structure_map(out.fiber.result, L, face, dir, i),
                                        structure_map(g.source, L, face, dir, i)));
  });
  out.pi.source = out.result;
  require_valid(check_diagram(out.result), "levelwise n-arrow pullback");
  return out;
}

namespace {

using IdIndex = std::unordered_map<std::string, std::uint32_t>;

IdIndex object_ids(const FinCat& c) {
  IdIndex out;
  for (ObjIdx o = 0; o < c.num_objects(); ++o) out.emplace(c.object_id(o), o);
  return out;
}
IdIndex morphism_ids(const FinCat& c) {
  IdIndex out;
  for (MorIdx m = 0; m < c.num_morphisms(); ++m) out.emplace(c.morphism_id(m), m);
  return out;
}
std::uint32_t at(const IdIndex& idx, const std::string& id) {
  auto it = idx.find(id);
  return it == idx.end() ? kNone : it->second;
}

// Node i of a grid in the path object: the grid of i-th nodes and verticals.
Grid node_grid(const NArrowPath& path, const FinFunctor& to_path, const Grid& g, int i) {
  Grid out = g;
  for (auto& o : out.objects) o = path.node(to_path.obj(o), i);
  for (auto& dir : out.edges)
    for (auto& m : dir)
      if (m != kNone) m = path.verticals[to_path.mor(m)][static_cast<std::size_t>(i)];
  return out;
}

// The transformation between the node grids i and i - 1 given by leg i.
Grid leg_grid(const NArrowPath& path, const FinFunctor& to_path, const Grid& g, int i) {
  const Grid lower = node_grid(path, to_path, g, i - 1);
  const Grid upper = node_grid(path, to_path, g, i);
  const bool down = i % 2 == 1;
  const Grid& from = down ? upper : lower;
  const Grid& to = down ? lower : upper;
  auto dims = g.dims;
  dims.push_back(1);
  Grid out;
  out.dims = dims;
  const std::size_t points = g.num_points();
  out.objects.resize(points * 2);
  out.edges.assign(dims.size(), std::vector<MorIdx>(points * 2, kNone));
  for (std::size_t x = 0; x < points; ++x) {
    out.objects[x * 2] = from.objects[x];
    out.objects[x * 2 + 1] = to.objects[x];
    for (std::size_t d = 0; d < g.dims.size(); ++d) {
      out.edges[d][x * 2] = from.edges[d][x];
      out.edges[d][x * 2 + 1] = to.edges[d][x];
    }
    out.edges[g.dims.size()][x * 2] =
        path.legs[to_path.obj(g.objects[x])][static_cast<std::size_t>(i - 1)];
  }
  return out;
}

// Comparison functor from w_p(fibers of f) to the n-arrow fibers of w_p f.
FinFunctor fiber_comparison(const NArrowFiber& rel, const WStarLevel& lhs, const NArrowFiber& lev,
                            const WStarLevel& xl, const WStarLevel& zl) {
  const FinCat& xc = rel.f.source.cat();
  const FinCat& zc = rel.f.target.cat();
  const auto& path = *rel.path;
  const auto& lpath = *lev.path;
  const auto xo = object_ids(*xl.cat), xm = morphism_ids(*xl.cat);
  const auto zo = object_ids(*zl.cat), zm = morphism_ids(*zl.cat);
  const int n = path.n;
  FinFunctor out{lhs.cat, lev.fiber.ambient, {}, {}};
  for (const auto& g : lhs.object_grids) {
    const auto x = at(xo, grid_id(xc, grid_apply(rel.pullback.first, g)));
    std::vector<MorIdx> legs;
    for (int i = 1; i <= n; ++i) legs.push_back(at(zm, grid_id(zc, leg_grid(path, rel.pullback.second, g, i))));
    const ObjIdx p = lpath.find_object(legs);
    out.on_objects.push_back(x == kNone || p == kNone ? kNone : lev.pullback.object_of(x, p));
  }
  for (std::size_t m = 0; m < lhs.morphism_grids.size(); ++m) {
    const auto& g = lhs.morphism_grids[m];
    const auto x = at(xm, grid_id(xc, grid_apply(rel.pullback.first, g)));
    std::vector<MorIdx> verts;
    for (int i = 0; i <= n; ++i) verts.push_back(at(zm, grid_id(zc, node_grid(path, rel.pullback.second, g, i))));
    const ObjIdx s = out.obj(lhs.cat->src(static_cast<MorIdx>(m)));
    const ObjIdx t = out.obj(lhs.cat->tgt(static_cast<MorIdx>(m)));
    MorIdx r = kNone;
    if (x != kNone && s != kNone && t != kNone) {
      const MorIdx q = lpath.find_morphism(lev.pullback.second.obj(s), lev.pullback.second.obj(t), verts);
      if (q != kNone) r = lev.pullback.morphism_of(x, q);
    }
    out.on_morphisms.push_back(r);
  }
  return out;
}

void check_comparison(ValidationReport& r, const FinFunctor& phi, const FinFunctor& lhs_pi, const FinFunctor& rhs_pi,
                      std::size_t L) {
  const auto where = " at level " + std::to_string(L);
  for (auto o : phi.on_objects)
    if (o == kNone) {
      r.violations.push_back({"comparison", "undefined on an object" + where});
      return;
    }
  for (auto m : phi.on_morphisms)
    if (m == kNone) {
      r.violations.push_back({"comparison", "undefined on a morphism" + where});
      return;
    }
  auto v = validate_functor(phi);
  if (!v.ok()) r.violations.push_back({"comparison", "not a functor" + where + ": " + v.summary()});
  if (!is_isomorphism(phi)) r.violations.push_back({"comparison", "not an isomorphism" + where});
  if (!same_tables(compose_functors(rhs_pi, phi), lhs_pi))
    r.violations.push_back({"comparison", "projections differ" + where});
}

}  // namespace

ValidationReport check_wpicom_fiber(const KRelFunctor& f, int n, int bound) {
  ValidationReport r;
  const auto rel = n_arrow_fiber(f, n);
  std::vector<WStarLevel> lhs_levels;
  const auto lhs = w_star_diagram(rel.fiber, bound, &lhs_levels);
  const auto wf = w_star_diagram_map(f, bound);
  const auto lev = levelwise_n_arrow_fiber(wf.map, n);
  const KRelFunctor pi{rel.fiber, f.target, rel.pi};
  std::vector<FinFunctor> phis;
  for (std::size_t L = 0; L < lhs_levels.size(); ++L) {
    phis.push_back(fiber_comparison(rel, lhs_levels[L], lev.levels[L], wf.source_levels[L], wf.target_levels[L]));
    check_comparison(r, phis.back(), w_star_map(pi, lhs_levels[L], wf.target_levels[L]), lev.pi.components[L], L);
  }
  if (r.ok()) {
    auto nat = check_diagram_map(DiagramMap{lhs, lev.result, phis});
    for (auto& v : nat.violations) r.violations.push_back(v);
  }
  return r;
}

ValidationReport check_wpicom_pullback(const KRelFunctor& f, const KRelFunctor& g, int n, int bound) {
  ValidationReport r;
  const auto rel = n_arrow_pullback(f, g, n);
  const auto& relf = rel.fiber;
  std::vector<WStarLevel> fiber_levels, lhs_levels;
  w_star_diagram(relf.fiber, bound, &fiber_levels);
  const auto lhs = w_star_diagram(rel.object, bound, &lhs_levels);
  const auto wf = w_star_diagram_map(f, bound);
  const auto wg = w_star_diagram_map(g, bound, &wf);
  const auto lev = levelwise_n_arrow_pullback(wf.map, wg.map, n);
  const KRelFunctor to_fiber{rel.object, relf.fiber, rel.pullback.first};
  const KRelFunctor to_y{rel.object, g.source, rel.pi};
  std::vector<FinFunctor> phis;
  for (std::size_t L = 0; L < lhs_levels.size(); ++L) {
    const auto on_fiber =
        fiber_comparison(relf, fiber_levels[L], lev.fiber.levels[L], wf.source_levels[L], wf.target_levels[L]);
    const auto a = compose_functors(on_fiber, w_star_map(to_fiber, lhs_levels[L], fiber_levels[L]));
    const auto b = w_star_map(to_y, lhs_levels[L], wg.source_levels[L]);
    const auto& q = lev.levels[L].pullback;
    FinFunctor phi{lhs_levels[L].cat, lev.result.levels[L], {}, {}};
    for (ObjIdx o = 0; o < a.on_objects.size(); ++o)
      phi.on_objects.push_back(a.obj(o) == kNone ? kNone : q.object_of(a.obj(o), b.obj(o)));
    for (MorIdx m = 0; m < a.on_morphisms.size(); ++m)
      phi.on_morphisms.push_back(a.mor(m) == kNone ? kNone : q.morphism_of(a.mor(m), b.mor(m)));
    phis.push_back(phi);
    check_comparison(r, phi, b, lev.pi.components[L], L);
  }
  if (r.ok()) {
    auto nat = check_diagram_map(DiagramMap{lhs, lev.result, phis});
    for (auto& v : nat.violations) r.violations.push_back(v);
  }
  return r;
}

}  // namespace relcat
