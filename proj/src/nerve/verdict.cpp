#include "relcat/nerve/verdict.hpp"

#include <algorithm>

#include "relcat/cat/constructions.hpp"
#include "relcat/cat/structure.hpp"
#include "relcat/core/error.hpp"
#include "relcat/nerve/homology.hpp"
#include "relcat/nerve/nerves.hpp"

namespace relcat {

namespace {

// Removes beat points of a finite poset; returns the retraction target of
// every element (itself when it survives).
std::vector<ObjIdx> beat_point_retraction(const FinCat& p) {
  const ObjIdx n = static_cast<ObjIdx>(p.num_objects());
  std::vector<bool> alive(n, true);
  std::vector<ObjIdx> ret(n);
  for (ObjIdx x = 0; x < n; ++x) ret[x] = x;
  auto leq = [&](ObjIdx a, ObjIdx b) { return !p.hom(a, b).empty(); };
  auto extreme = [&](ObjIdx x, bool below) -> ObjIdx {
    std::vector<ObjIdx> side;
    if (below) {
      for (MorIdx m : p.in(x))
        if (p.src(m) != x && alive[p.src(m)]) side.push_back(p.src(m));
    } else {
      for (MorIdx m : p.out(x))
        if (p.tgt(m) != x && alive[p.tgt(m)]) side.push_back(p.tgt(m));
    }
    if (side.empty()) return kNone;
    for (ObjIdx m : side) {
      bool top = true;
      for (ObjIdx y : side)
        if (below ? !leq(y, m) : !leq(m, y)) {
          top = false;
          break;
        }
      if (top) return m;
    }
    return kNone;
  };
  for (bool changed = true; changed;) {
    changed = false;
    for (ObjIdx x = 0; x < n; ++x) {
      if (!alive[x]) continue;
      ObjIdx m = extreme(x, true);
      if (m == kNone) m = extreme(x, false);
      if (m == kNone) continue;
      alive[x] = false;
      ret[x] = m;
      changed = true;
    }
  }
  for (ObjIdx x = 0; x < n; ++x) {
    ObjIdx y = x;
    while (!alive[y]) y = ret[y];
    ret[x] = y;
  }
  return ret;
}

}  // namespace

Reduction reduce_category(const CatPtr& c) {
  auto sk = skeleton(c);
  if (!is_thin(*sk.cat)) return {sk.cat, sk.inclusion, sk.retraction};
  const FinCat& p = *sk.cat;
  const auto ret = beat_point_retraction(p);
  std::vector<ObjIdx> keep;
  for (ObjIdx x = 0; x < p.num_objects(); ++x)
    if (ret[x] == x) keep.push_back(x);
  if (keep.size() == p.num_objects()) return {sk.cat, sk.inclusion, sk.retraction};
  auto sub = full_subcategory(sk.cat, keep);
  std::vector<ObjIdx> pos(p.num_objects(), kNone);
  for (ObjIdx i = 0; i < keep.size(); ++i) pos[keep[i]] = i;
  FinFunctor r{sk.cat, sub.cat, {}, {}};
  for (ObjIdx x = 0; x < p.num_objects(); ++x) r.on_objects.push_back(pos[ret[x]]);
  for (MorIdx m = 0; m < p.num_morphisms(); ++m) {
    auto h = sub.cat->hom(r.on_objects[p.src(m)], r.on_objects[p.tgt(m)]);
    if (h.empty()) throw Error("reduce_category: beat-point retraction is not monotone");
    r.on_morphisms.push_back(h.front());
  }
  return {sub.cat, compose_functors(sk.inclusion, sub.inclusion), compose_functors(r, sk.retraction)};
}

WEVerdict induced_we_verdict(const FinFunctor& f, int bound) {
  if (bound < 1) throw InvalidInput("induced_we_verdict: bound must be positive");
  try {
    const auto X = reduce_category(f.source);
    const auto Y = reduce_category(f.target);
    const auto g = compose_functors(Y.retraction, compose_functors(f, X.inclusion));

    const auto cx = components(*X.core);
    const auto cy = components(*Y.core);
    if (cx.count != cy.count)
      return WEVerdict::refuted(0, "pi0: " + std::to_string(cx.count) + " vs " + std::to_string(cy.count) +
                                       " components");
    std::vector<std::uint32_t> image(cx.count, kNone);
    std::vector<bool> hit(cy.count, false);
    for (ObjIdx o = 0; o < X.core->num_objects(); ++o) {
      const auto t = cy.label[g.obj(o)];
      image[cx.label[o]] = t;
      hit[t] = true;
    }
    for (ObjIdx o = 0; o < Y.core->num_objects(); ++o)
      if (!hit[cy.label[o]])
        return WEVerdict::refuted(0, "pi0: component of " + Y.core->object_id(o) + " is not hit");

    CategoryChains chx(*X.core, bound);
    CategoryChains chy(*Y.core, bound);
    const auto hx = complex_homology(chx.complex(), bound - 1);
    const auto hy = complex_homology(chy.complex(), bound - 1);
    for (int d = 0; d < bound; ++d) {
      const auto i = static_cast<std::size_t>(d);
      if (!(hx.groups[i] == hy.groups[i]))
        return WEVerdict::refuted(d, "H" + std::to_string(d) + ": " + hx.groups[i].to_string() + " vs " +
                                         hy.groups[i].to_string());
    }
    const auto cone = mapping_cone(g, chx, chy);
    const auto hc = complex_homology(cone, bound - 1);
    for (int d = 0; d < bound; ++d) {
      const auto& h = hc.groups[static_cast<std::size_t>(d)];
      if (!h.is_zero())
        return WEVerdict::refuted(d, "mapping cone H" + std::to_string(d) + " = " + h.to_string() +
                                         ", the induced map is not a homology isomorphism");
    }
    return WEVerdict::consistent(bound - 1);
  } catch (const QuotaError& e) {
    return WEVerdict::inconclusive(std::string("quota: ") + e.what());
  }
}

namespace {

std::vector<std::vector<std::uint32_t>> normalized_index(const TruncMultiSSet& s) {
  const auto nd = nondegenerate_cells(s);
  std::vector<std::vector<std::uint32_t>> index(s.num_levels());
  for (std::size_t d = 0; d < s.num_levels(); ++d) {
    std::uint32_t n = 0;
    for (bool b : nd[d]) index[d].push_back(b ? n++ : kNone);
  }
  return index;
}

// cone_d = Y_d ⊕ X_{d-1}, ∂(y, x) = (∂y + f x, -∂x)
ChainComplex sset_cone(const ChainComplex& x, const ChainComplex& y, const std::vector<SparseMatrix>& f) {
  ChainComplex out;
  const int top = std::min(y.top(), x.top() + 1);
  for (int d = 0; d <= top; ++d) {
    const auto i = static_cast<std::size_t>(d);
    const std::size_t xd = d ? x.dims[i - 1] : 0;
    out.dims.push_back(y.dims[i] + xd);
    SparseMatrix m;
    m.rows = d ? out.dims[i - 1] : 0;
    m.cols = y.boundary[i].cols;
    if (d > 0) {
      const std::size_t yprev = y.dims[i - 1];
      for (std::size_t c = 0; c < xd; ++c) {
        auto col = f[i - 1].cols[c];
        if (d > 1)
          for (const auto& [r, v] : x.boundary[i - 1].cols[c]) col.emplace_back(static_cast<std::uint32_t>(yprev + r), -v);
        m.cols.push_back(std::move(col));
      }
    }
    out.boundary.push_back(std::move(m));
  }
  return out;
}

// With every map a weak equivalence each column of the multisimplicial nerve
// is the nerve of a functor category on a grid with an initial object, and
// evaluation there is right adjoint to the constant functor. The diagonal is
// then equivalent to the nerve of the ambient category.
bool all_weak(const KRelStructure& s) {
  return std::all_of(s.w.begin(), s.w.end(), [](bool b) { return b; });
}

}  // namespace

RelativeReduction reduce_relative(const KRelStructure& s) {
  auto sk = skeleton(s.ambient, &s.w);
  auto restrict = [&](const Mask& m) {
    Mask out;
    for (MorIdx x : sk.inclusion.on_morphisms) out.push_back(m[x]);
    return out;
  };
  KRelStructure core{sk.cat, {}, restrict(s.w), s.saturated_declared};
  for (const auto& v : s.v) core.v.push_back(restrict(v));
  return {core, sk.inclusion, sk.retraction};
}

WEVerdict relative_we_verdict(const KRelFunctor& f, int bound) {
  if (f.source.k() != f.target.k()) throw InvalidInput("relative_we_verdict: k differs");
  if (f.source.k() == 0 || (all_weak(f.source) && all_weak(f.target))) return induced_we_verdict(f.functor, bound);
  if (bound < 1) throw InvalidInput("relative_we_verdict: bound must be positive");
  try {
    const auto rx = reduce_relative(f.source);
    const auto ry = reduce_relative(f.target);
    const KRelFunctor g{rx.core, ry.core,
                        compose_functors(ry.retraction, compose_functors(f.functor, rx.inclusion))};
    const auto nx = k_simplicial_nerve(g.source, bound);
    const auto ny = k_simplicial_nerve(g.target, bound);
    const auto maps = k_simplicial_nerve_map(g, nx, ny);
    const auto dx = diagonal(nx);
    const auto dy = diagonal(ny);
    const auto cx = normalized_chains(dx);
    const auto cy = normalized_chains(dy);
    const auto ix = normalized_index(dx);
    const auto iy = normalized_index(dy);
    std::vector<SparseMatrix> fm;
    for (int d = 0; d <= bound; ++d) {
      const auto i = static_cast<std::size_t>(d);
      const auto& level = maps[nx.level_index(std::vector<int>(static_cast<std::size_t>(nx.arity), d))];
      SparseMatrix m;
      m.rows = cy.dims[i];
      m.cols.resize(cx.dims[i]);
      for (std::size_t c = 0; c < level.size(); ++c) {
        if (ix[i][c] == kNone) continue;
        const auto r = iy[i][level[c]];
        if (r != kNone) m.cols[ix[i][c]].emplace_back(r, 1);
      }
      fm.push_back(std::move(m));
    }
    const auto hx = complex_homology(cx, bound - 1);
    const auto hy = complex_homology(cy, bound - 1);
    if (hx.groups[0].betti != hy.groups[0].betti)
      return WEVerdict::refuted(0, "pi0: " + std::to_string(hx.groups[0].betti) + " vs " +
                                       std::to_string(hy.groups[0].betti) + " components");
    for (int d = 0; d < bound; ++d) {
      const auto i = static_cast<std::size_t>(d);
      if (!(hx.groups[i] == hy.groups[i]))
        return WEVerdict::refuted(d, "H" + std::to_string(d) + ": " + hx.groups[i].to_string() + " vs " +
                                         hy.groups[i].to_string());
    }
    const auto hc = complex_homology(sset_cone(cx, cy, fm), bound - 1);
    for (int d = 0; d < bound; ++d) {
      const auto& h = hc.groups[static_cast<std::size_t>(d)];
      if (!h.is_zero())
        return WEVerdict::refuted(d, "mapping cone H" + std::to_string(d) + " = " + h.to_string() +
                                         ", the induced map is not a homology isomorphism");
    }
    return WEVerdict::consistent(bound - 1);
  } catch (const QuotaError& e) {
    return WEVerdict::inconclusive(std::string("quota: ") + e.what());
  }
}

HomologySignature relative_homology(const KRelStructure& s, int bound) {
  if (s.k() == 0 || all_weak(s)) return category_homology(s.ambient, bound);
  if (bound < 1) throw InvalidInput("relative_homology: bound must be positive");
  const auto r = reduce_relative(s);
  return homology(diagonal(k_simplicial_nerve(r.core, bound)), bound - 1);
}

}  // namespace relcat
