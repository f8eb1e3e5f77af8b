#include "relcat/arrow/path.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <tuple>

#include "relcat/core/caps.hpp"
#include "relcat/core/error.hpp"

namespace relcat {

std::string zigzag_id(const FinCat& c, const std::vector<MorIdx>& legs) {
  std::string out = "z[";
  for (std::size_t i = legs.size(); i-- > 0;) {
    out += c.morphism_id(legs[i]);
    if (i) out += "|";
  }
  return out + "]";
}

ObjIdx NArrowPath::node(ObjIdx o, int i) const {
  const FinCat& c = z.cat();
  if (i == 0) return c.tgt(legs[o][0]);
  const MorIdx leg = legs[o][static_cast<std::size_t>(i - 1)];
  return i % 2 == 1 ? c.src(leg) : c.tgt(leg);
}

ObjIdx NArrowPath::find_object(const std::vector<MorIdx>& l) const {
  auto it = object_index.find(l);
  return it == object_index.end() ? kNone : it->second;
}

MorIdx NArrowPath::find_morphism(ObjIdx src, ObjIdx tgt, const std::vector<MorIdx>& c) const {
  std::vector<std::uint32_t> key{src, tgt};
  key.insert(key.end(), c.begin(), c.end());
  auto it = morphism_index.find(key);
  return it == morphism_index.end() ? kNone : it->second;
}

PathPtr n_arrow_path(const KRelStructure& z, int n, const std::vector<bool>* ends) {
  check_krel_shape(z);
  if (n < 1) throw InvalidInput("n-arrow path: n must be at least 1");
  if (ends && z.k() >= 2) throw InvalidInput("n-arrow path: restricted ends need k <= 1");
  if (ends && ends->size() != z.cat().num_objects()) throw InvalidInput("n-arrow path: ends mask has the wrong size");
  const FinCat& c = z.cat();
  const Caps caps = Caps::current();
  auto out = std::make_shared<NArrowPath>();
  out->n = n;
  out->z = z;

  // objects
  std::vector<MorIdx> cur(static_cast<std::size_t>(n));
  std::function<void(int, ObjIdx)> grow = [&](int i, ObjIdx prev) {
    if (i > n) {
      if (ends && !(*ends)[prev]) return;
      out->object_index.emplace(cur, static_cast<ObjIdx>(out->legs.size()));
      out->legs.push_back(cur);
      caps.check(out->legs.size(), 0, "n-arrow path");
      return;
    }
    auto candidates = (i % 2 == 1) ? c.in(prev) : c.out(prev);
    for (MorIdx m : candidates) {
      if (!z.w[m]) continue;
      cur[static_cast<std::size_t>(i - 1)] = m;
      grow(i + 1, i % 2 == 1 ? c.src(m) : c.tgt(m));
    }
  };
  for (MorIdx m = 0; m < c.num_morphisms(); ++m) {
    if (!z.w[m]) continue;
    cur[0] = m;
    grow(2, c.src(m));
  }
  const auto nobj = static_cast<ObjIdx>(out->legs.size());

  // commuting vertical families, by depth-first search from each source
  std::vector<MorIdx> vert(static_cast<std::size_t>(n + 1));
  std::vector<MorIdx> tlegs(static_cast<std::size_t>(n));
  std::vector<std::vector<MorIdx>> fam;
  std::vector<ObjIdx> fsrc, ftgt;
  for (ObjIdx s = 0; s < nobj; ++s) {
    const auto& sl = out->legs[s];
    std::function<void(int)> step = [&](int i) {
      if (i > n) {
        const ObjIdx t = out->find_object(tlegs);
        if (t == kNone) return;
        fam.push_back(vert);
        fsrc.push_back(s);
        ftgt.push_back(t);
        caps.check(nobj, fam.size(), "n-arrow path");
        return;
      }
      const ObjIdx si = out->node(s, i);
      const ObjIdx tprev = c.tgt(vert[static_cast<std::size_t>(i - 1)]);
      const MorIdx sleg = sl[static_cast<std::size_t>(i - 1)];
      for (MorIdx ci : c.out(si)) {
        vert[static_cast<std::size_t>(i)] = ci;
        const ObjIdx ti = c.tgt(ci);
        if (i % 2 == 1) {
          const MorIdx want = c.compose_unchecked(vert[static_cast<std::size_t>(i - 1)], sleg);
          for (MorIdx leg : c.hom(ti, tprev))
            if (z.w[leg] && c.compose_unchecked(leg, ci) == want) {
              tlegs[static_cast<std::size_t>(i - 1)] = leg;
              step(i + 1);
            }
        } else {
          const MorIdx want = c.compose_unchecked(ci, sleg);
          for (MorIdx leg : c.hom(tprev, ti))
            if (z.w[leg] && c.compose_unchecked(leg, vert[static_cast<std::size_t>(i - 1)]) == want) {
              tlegs[static_cast<std::size_t>(i - 1)] = leg;
              step(i + 1);
            }
        }
      }
    };
    for (MorIdx c0 : c.out(out->node(s, 0))) {
      vert[0] = c0;
      step(1);
    }
  }

  auto in_mask = [&](const std::vector<MorIdx>& f, const Mask& m) {
    for (MorIdx x : f)
      if (!m[x]) return false;
    return true;
  };
  // generated families for k >= 2
  std::vector<bool> keep(fam.size(), true);
  if (z.k() >= 2) {
    std::unordered_map<std::vector<std::uint32_t>, std::size_t, IndexVecHash> all;
    for (std::size_t i = 0; i < fam.size(); ++i) {
      std::vector<std::uint32_t> key{fsrc[i], ftgt[i]};
      key.insert(key.end(), fam[i].begin(), fam[i].end());
      all.emplace(std::move(key), i);
    }
    std::vector<std::size_t> gens;
    for (std::size_t i = 0; i < fam.size(); ++i) {
      bool g = false;
      for (const auto& v : z.v) g = g || in_mask(fam[i], v);
      if (g) gens.push_back(i);
    }
    std::vector<std::vector<std::size_t>> gens_from(nobj);
    for (auto g : gens) gens_from[fsrc[g]].push_back(g);
    std::vector<bool> reached(fam.size(), false);
    std::vector<std::size_t> queue;
    for (auto g : gens) {
      reached[g] = true;
      queue.push_back(g);
    }
    while (!queue.empty()) {
      const auto a = queue.back();
      queue.pop_back();
      for (auto g : gens_from[ftgt[a]]) {
        std::vector<std::uint32_t> key{fsrc[a], ftgt[g]};
        for (int i = 0; i <= n; ++i)
          key.push_back(c.compose_unchecked(fam[g][static_cast<std::size_t>(i)], fam[a][static_cast<std::size_t>(i)]));
        auto it = all.find(key);
        if (it == all.end()) throw Error("n-arrow path: composite family not found");
        if (!reached[it->second]) {
          reached[it->second] = true;
          queue.push_back(it->second);
        }
      }
    }
    keep = reached;
  }

  std::vector<std::string> objs;
  for (const auto& l : out->legs) objs.push_back(zigzag_id(c, l));
  std::vector<MorphismSpec> mors;
  for (std::size_t i = 0; i < fam.size(); ++i) {
    if (!keep[i]) continue;
    std::string id = "v[";
    for (int t = n; t >= 0; --t) {
      id += c.morphism_id(fam[i][static_cast<std::size_t>(t)]);
      if (t) id += "|";
    }
    id += "]@" + objs[fsrc[i]] + ">" + objs[ftgt[i]];
    const auto m = static_cast<MorIdx>(mors.size());
    mors.push_back({std::move(id), fsrc[i], ftgt[i]});
    std::vector<std::uint32_t> key{fsrc[i], ftgt[i]};
    key.insert(key.end(), fam[i].begin(), fam[i].end());
    out->morphism_index.emplace(std::move(key), m);
    out->verticals.push_back(std::move(fam[i]));
  }
  std::vector<MorIdx> ids;
  for (ObjIdx o = 0; o < nobj; ++o) {
    std::vector<MorIdx> v;
    for (int i = 0; i <= n; ++i) v.push_back(c.identity(out->node(o, i)));
    const MorIdx m = out->find_morphism(o, o, v);
    if (m == kNone) throw Error("n-arrow path: identity family missing");
    ids.push_back(m);
  }
  const NArrowPath& p = *out;
  // Composites are found by scanning the (src, tgt) block of a copy of the
  // morphisms sorted by endpoints, with the verticals stored flat.
  const auto width = static_cast<std::size_t>(n + 1);
  std::vector<MorIdx> flat(mors.size() * width);
  for (std::size_t m = 0; m < mors.size(); ++m)
    std::copy(out->verticals[m].begin(), out->verticals[m].end(), flat.begin() + static_cast<std::ptrdiff_t>(m * width));
  std::vector<MorIdx> by_ends(mors.size());
  std::iota(by_ends.begin(), by_ends.end(), 0u);
  std::sort(by_ends.begin(), by_ends.end(), [&](MorIdx a, MorIdx b) {
    return std::tie(mors[a].src, mors[a].tgt, a) < std::tie(mors[b].src, mors[b].tgt, b);
  });
  std::vector<ObjIdx> ends_tgt(mors.size());
  std::vector<MorIdx> sorted_flat(flat.size());
  for (std::size_t i = 0; i < mors.size(); ++i) {
    ends_tgt[i] = mors[by_ends[i]].tgt;
    std::copy_n(&flat[by_ends[i] * width], width, &sorted_flat[i * width]);
  }
  std::vector<std::size_t> src_start(nobj + 1, 0);
  for (const auto& m : mors) ++src_start[m.src + 1];
  std::partial_sum(src_start.begin(), src_start.end(), src_start.begin());
  std::vector<MorIdx> comp(width);
  ObjIdx last_s = kNone, last_t = kNone;
  std::size_t block_lo = 0, block_hi = 0;
  auto cat = std::make_shared<const FinCat>(objs, mors, ids, [&](MorIdx g, MorIdx f) {
    const MorIdx* vg = &flat[g * width];
    const MorIdx* vf = &flat[f * width];
    for (std::size_t i = 0; i < width; ++i) comp[i] = c.compose_unchecked(vg[i], vf[i]);
    const ObjIdx s = mors[f].src, t = mors[g].tgt;
    if (s != last_s || t != last_t) {
      const auto lo = ends_tgt.begin() + static_cast<std::ptrdiff_t>(src_start[s]);
      const auto hi = ends_tgt.begin() + static_cast<std::ptrdiff_t>(src_start[s + 1]);
      block_lo = static_cast<std::size_t>(std::lower_bound(lo, hi, t) - ends_tgt.begin());
      block_hi = static_cast<std::size_t>(std::upper_bound(lo, hi, t) - ends_tgt.begin());
      last_s = s;
      last_t = t;
    }
    for (std::size_t i = block_lo; i < block_hi; ++i) {
      const MorIdx* v = &sorted_flat[i * width];
      std::size_t k = 0;
      while (k < width && v[k] == comp[k]) ++k;
      if (k == width) return by_ends[i];
    }
    return kNone;
  });

  KRelStructure path{cat, {}, Mask(cat->num_morphisms()), z.saturated_declared};
  for (MorIdx m = 0; m < cat->num_morphisms(); ++m) path.w[m] = in_mask(p.verticals[m], z.w);
  for (const auto& v : z.v) {
    Mask pm(cat->num_morphisms());
    for (MorIdx m = 0; m < cat->num_morphisms(); ++m) pm[m] = in_mask(p.verticals[m], v);
    path.v.push_back(std::move(pm));
  }
  out->path = path;

  out->pi_n = {cat, z.ambient, {}, {}};
  out->pi_0 = {cat, z.ambient, {}, {}};
  for (ObjIdx o = 0; o < nobj; ++o) {
    out->pi_n.on_objects.push_back(out->node(o, n));
    out->pi_0.on_objects.push_back(out->node(o, 0));
  }
  for (MorIdx m = 0; m < cat->num_morphisms(); ++m) {
    out->pi_n.on_morphisms.push_back(p.verticals[m][static_cast<std::size_t>(n)]);
    out->pi_0.on_morphisms.push_back(p.verticals[m][0]);
  }
  out->j = {z.ambient, cat, {}, {}};
  if (ends) return out;
  for (ObjIdx o = 0; o < c.num_objects(); ++o)
    out->j.on_objects.push_back(out->find_object(std::vector<MorIdx>(static_cast<std::size_t>(n), c.identity(o))));
  for (MorIdx m = 0; m < c.num_morphisms(); ++m) {
    const MorIdx jm = out->find_morphism(out->j.on_objects[c.src(m)], out->j.on_objects[c.tgt(m)],
                                         std::vector<MorIdx>(static_cast<std::size_t>(n + 1), m));
    if (jm == kNone) throw Error("n-arrow path: " + c.morphism_id(m) + " is not a composite of v-maps");
    out->j.on_morphisms.push_back(jm);
  }
  return out;
}

KRelStructure pullback_structure(const PullbackResult& pb, const KRelStructure& a, const KRelStructure& b) {
  if (a.k() != b.k()) throw InvalidInput("pullback structure: k differs");
  const FinCat& c = *pb.cat;
  KRelStructure out{pb.cat, {}, Mask(c.num_morphisms()), false};
  for (MorIdx m = 0; m < c.num_morphisms(); ++m) out.w[m] = a.w[pb.first.mor(m)] && b.w[pb.second.mor(m)];
  for (int i = 0; i < a.k(); ++i) {
    Mask v(c.num_morphisms());
    for (MorIdx m = 0; m < c.num_morphisms(); ++m) v[m] = a.v[i][pb.first.mor(m)] && b.v[i][pb.second.mor(m)];
    out.v.push_back(std::move(v));
  }
  return out;
}

KRelFunctor cat_hat_functor(const FinFunctor& f) { return {cat_hat(f.source), cat_hat(f.target), f}; }

NArrowFiber n_arrow_fiber(const KRelFunctor& f, int n) { return n_arrow_fiber(f, n_arrow_path(f.target, n)); }

NArrowFiber n_arrow_fiber(const KRelFunctor& f, const PathPtr& path) {
  if (f.functor.target != path->z.ambient) throw InvalidInput("n-arrow fiber: the path object is over another category");
  if (auto problem = relative_functor_problem(f); !problem.empty())
    throw InvalidInput("n-arrow fiber: " + problem);
  NArrowFiber out;
  out.path = path;
  out.f = f;
  out.pullback = pullback_cat(f.functor, path->pi_n);
  out.fiber = pullback_structure(out.pullback, f.source, path->path);
  out.pi = compose_functors(path->pi_0, out.pullback.second);
  return out;
}

NArrowPullback n_arrow_pullback(const KRelFunctor& f, const KRelFunctor& g, int n) {
  if (f.functor.target != g.functor.target) throw InvalidInput("n-arrow pullback: f and g need a shared target");
  return n_arrow_pullback(n_arrow_fiber(f, n), g);
}

NArrowPullback n_arrow_pullback(const NArrowFiber& fiber, const KRelFunctor& g) {
  if (auto problem = relative_functor_problem(g); !problem.empty())
    throw InvalidInput("n-arrow pullback: " + problem);
  NArrowPullback out;
  out.fiber = fiber;
  out.g = g;
  out.pullback = pullback_cat(fiber.pi, g.functor);
  out.object = pullback_structure(out.pullback, fiber.fiber, g.source);
  out.pi = out.pullback.second;
  return out;
}

}  // namespace relcat
