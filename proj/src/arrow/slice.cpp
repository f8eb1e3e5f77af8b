#include "relcat/arrow/slice.hpp"

#include "relcat/cat/structure.hpp"
#include "relcat/core/error.hpp"

namespace relcat {

namespace {

std::vector<std::uint32_t> inverse_of_inclusion(const std::vector<std::uint32_t>& inc, std::size_t size) {
  std::vector<std::uint32_t> out(size, kNone);
  for (std::uint32_t i = 0; i < inc.size(); ++i) out[inc[i]] = i;
  return out;
}

// Moves an object of the fibers to new path legs, keeping the X component.
ObjIdx with_legs(const NArrowFiber& fib, ObjIdx o, const std::vector<MorIdx>& legs) {
  const ObjIdx p = fib.path->find_object(legs);
  if (p == kNone) throw Error("slice: zigzag missing from the path object");
  const ObjIdx out = fib.pullback.object_of(fib.pullback.first.obj(o), p);
  if (out == kNone) throw Error("slice: moved zigzag leaves the fibers");
  return out;
}

MorIdx with_verticals(const NArrowFiber& fib, MorIdx x, ObjIdx src, ObjIdx tgt, const std::vector<MorIdx>& verticals) {
  const auto& second = fib.pullback.second;
  const MorIdx q = fib.path->find_morphism(second.obj(src), second.obj(tgt), verticals);
  if (q == kNone) return kNone;
  return fib.pullback.morphism_of(x, q);
}

GrIdentityReport compare(const GrothendieckResult& gr, const FinFunctor& phi, const FinFunctor& proj) {
  GrIdentityReport r;
  for (auto o : phi.on_objects)
    if (o == kNone) r.witness = "comparison undefined on an object";
  for (auto m : phi.on_morphisms)
    if (m == kNone) r.witness = "comparison undefined on a morphism";
  if (!r.witness.empty()) return r;
  const auto fr = validate_functor(phi);
  r.functor = fr.ok();
  if (!r.functor) r.witness = fr.summary();
  r.isomorphism = is_isomorphism(phi);
  if (!r.isomorphism && r.witness.empty()) r.witness = "comparison is not bijective";
  const auto composed = compose_functors(proj, phi);
  r.projections = composed.on_objects == gr.pi.on_objects && composed.on_morphisms == gr.pi.on_morphisms;
  if (!r.projections && r.witness.empty()) r.witness = "projections differ";
  if (r.isomorphism) {
    std::unordered_map<std::string, std::string> rename;
    for (ObjIdx o = 0; o < gr.cat->num_objects(); ++o)
      rename[gr.cat->object_id(o)] = phi.target->object_id(phi.obj(o));
    for (MorIdx m = 0; m < gr.cat->num_morphisms(); ++m)
      rename[gr.cat->morphism_id(m)] = phi.target->morphism_id(phi.mor(m));
    r.encodings = canonical_encoding(*gr.cat, [&](const std::string& id) { return rename.at(id); }) ==
                  canonical_encoding(*phi.target);
    if (!r.encodings && r.witness.empty()) r.witness = "canonical encodings differ";
  }
  return r;
}

}  // namespace

SliceFunctor slice_functor(const FinFunctor& f, int n) {
  std::vector<bool> ends(f.target->num_objects(), false);
  for (ObjIdx o : f.on_objects) ends[o] = true;
  return slice_functor(f, n_arrow_path(cat_hat(f.target), n, &ends));
}

SliceFunctor slice_functor(const FinFunctor& f, const PathPtr& path_ptr) {
  SliceFunctor s;
  s.fiber = n_arrow_fiber(cat_hat_functor(f), path_ptr);
  const auto& fib = s.fiber;
  const FinCat& z = *f.target;
  const FinCat& full = fib.fiber.cat();
  std::vector<std::vector<std::uint32_t>> obj_back, mor_back;
  for (ObjIdx o = 0; o < z.num_objects(); ++o) {
    s.parts.push_back(strict_fiber(fib.pi, o));
    obj_back.push_back(inverse_of_inclusion(s.parts[o].inclusion.on_objects, full.num_objects()));
    mor_back.push_back(inverse_of_inclusion(s.parts[o].inclusion.on_morphisms, full.num_morphisms()));
  }
  s.input.base = f.target;
  for (const auto& p : s.parts) s.input.fibers.push_back(p.cat);
  const auto& second = fib.pullback.second;
  const auto& path = *fib.path;
  for (MorIdx zm = 0; zm < z.num_morphisms(); ++zm) {
    const ObjIdx a = z.src(zm), b = z.tgt(zm);
    const auto& part = s.parts[a];
    std::vector<ObjIdx> objs;
    for (ObjIdx o : part.inclusion.on_objects) {
      auto legs = path.legs[second.obj(o)];
      legs[0] = z.compose_unchecked(zm, legs[0]);
      objs.push_back(obj_back[b][with_legs(fib, o, legs)]);
    }
    std::vector<MorIdx> mors;
    for (MorIdx m = 0; m < part.cat->num_morphisms(); ++m) {
      const MorIdx full_m = part.inclusion.mor(m);
      auto verts = path.verticals[second.mor(full_m)];
      verts[0] = z.identity(b);
      const ObjIdx src = s.parts[b].inclusion.obj(objs[part.cat->src(m)]);
      const ObjIdx tgt = s.parts[b].inclusion.obj(objs[part.cat->tgt(m)]);
      const MorIdx moved = with_verticals(fib, fib.pullback.first.mor(full_m), src, tgt, verts);
      if (moved == kNone) throw Error("slice: moved map leaves the fibers");
      mors.push_back(mor_back[b][moved]);
    }
    s.input.actions.push_back(FinFunctor{part.cat, s.parts[b].cat, objs, mors});
  }
  return s;
}

GrIdentityReport check_slice_identity(const SliceFunctor& s) {
  const auto gr = grothendieck(s.input);
  const auto& fib = s.fiber;
  const auto& second = fib.pullback.second;
  FinFunctor phi{gr.cat, fib.fiber.ambient, {}, {}};
  for (ObjIdx o = 0; o < gr.cat->num_objects(); ++o)
    phi.on_objects.push_back(s.parts[gr.object_base[o]].inclusion.obj(gr.object_fiber[o]));
  for (MorIdx m = 0; m < gr.cat->num_morphisms(); ++m) {
    const MorIdx z = gr.morphism_base[m];
    const MorIdx a = s.parts[fib.f.functor.target->tgt(z)].inclusion.mor(gr.morphism_fiber[m]);
    auto verts = fib.path->verticals[second.mor(a)];
    verts[0] = z;
    phi.on_morphisms.push_back(with_verticals(fib, fib.pullback.first.mor(a), phi.obj(gr.cat->src(m)),
                                              phi.obj(gr.cat->tgt(m)), verts));
  }
  return compare(gr, phi, fib.pi);
}

CoSliceFunctor co_slice_functor(const FinFunctor& f, int n, ObjIdx z0) {
  CoSliceFunctor s;
  s.fiber = n_arrow_fiber(cat_hat_functor(f), n);
  s.end = z0;
  const auto& fib = s.fiber;
  const FinCat& x = *f.source;
  const FinCat& full = fib.fiber.cat();
  const auto& first = fib.pullback.first;
  const auto& second = fib.pullback.second;
  const auto& path = *fib.path;
  const auto leg = static_cast<std::size_t>(n - 1);
  s.whole = strict_fiber(fib.pi, z0);

  std::vector<std::vector<std::uint32_t>> obj_back, mor_back;
  for (ObjIdx xo = 0; xo < x.num_objects(); ++xo) {
    std::vector<bool> objs(full.num_objects()), mors(full.num_morphisms());
    for (ObjIdx o = 0; o < full.num_objects(); ++o) objs[o] = first.obj(o) == xo && fib.pi.obj(o) == z0;
    for (MorIdx m = 0; m < full.num_morphisms(); ++m)
      mors[m] = first.mor(m) == x.identity(xo) && fib.pi.mor(m) == f.target->identity(z0);
    s.parts.push_back(subcategory(fib.fiber.ambient, objs, mors));
    obj_back.push_back(inverse_of_inclusion(s.parts[xo].inclusion.on_objects, full.num_objects()));
    mor_back.push_back(inverse_of_inclusion(s.parts[xo].inclusion.on_morphisms, full.num_morphisms()));
  }
  s.input.base = f.source;
  s.input.contravariant = n % 2 == 1;
  for (const auto& p : s.parts) s.input.fibers.push_back(p.cat);
  for (MorIdx xm = 0; xm < x.num_morphisms(); ++xm) {
    const MorIdx fx = f.mor(xm);
    const ObjIdx from = s.input.contravariant ? x.tgt(xm) : x.src(xm);
    const ObjIdx to = s.input.contravariant ? x.src(xm) : x.tgt(xm);
    const auto& part = s.parts[from];
    std::vector<ObjIdx> objs;
    for (ObjIdx o : part.inclusion.on_objects) {
      auto legs = path.legs[second.obj(o)];
      legs[leg] = s.input.contravariant ? f.target->compose_unchecked(legs[leg], fx)
                                        : f.target->compose_unchecked(fx, legs[leg]);
      const ObjIdx p = path.find_object(legs);
      if (p == kNone) throw Error("co-slice: zigzag missing from the path object");
      const ObjIdx moved = fib.pullback.object_of(to, p);
      if (moved == kNone) throw Error("co-slice: moved zigzag leaves the fibers");
      objs.push_back(obj_back[to][moved]);
    }
    std::vector<MorIdx> mors;
    for (MorIdx m = 0; m < part.cat->num_morphisms(); ++m) {
      const MorIdx full_m = part.inclusion.mor(m);
      const ObjIdx src = s.parts[to].inclusion.obj(objs[part.cat->src(m)]);
      const ObjIdx tgt = s.parts[to].inclusion.obj(objs[part.cat->tgt(m)]);
      auto verts = path.verticals[second.mor(full_m)];
      verts[leg + 1] = f.target->identity(f.obj(to));
      const MorIdx moved = with_verticals(fib, x.identity(to), src, tgt, verts);
      if (moved == kNone) throw Error("co-slice: moved map leaves the fibers");
      mors.push_back(mor_back[to][moved]);
    }
    s.input.actions.push_back(FinFunctor{part.cat, s.parts[to].cat, objs, mors});
  }
  return s;
}

GrIdentityReport check_co_slice_identity(const CoSliceFunctor& s) {
  const auto gr = grothendieck(s.input);
  const auto& fib = s.fiber;
  const auto& second = fib.pullback.second;
  const auto& whole = s.whole;
  const FinCat& full = fib.fiber.cat();
  const auto obj_back = inverse_of_inclusion(whole.inclusion.on_objects, full.num_objects());
  const auto mor_back = inverse_of_inclusion(whole.inclusion.on_morphisms, full.num_morphisms());
  const auto n = static_cast<std::size_t>(fib.path->n);
  FinFunctor phi{gr.cat, whole.cat, {}, {}};
  for (ObjIdx o = 0; o < gr.cat->num_objects(); ++o)
    phi.on_objects.push_back(obj_back[s.parts[gr.object_base[o]].inclusion.obj(gr.object_fiber[o])]);
  const FinCat& x = *s.input.base;
  for (MorIdx m = 0; m < gr.cat->num_morphisms(); ++m) {
    const MorIdx xm = gr.morphism_base[m];
    const ObjIdx home = s.input.contravariant ? x.src(xm) : x.tgt(xm);
    const MorIdx a = s.parts[home].inclusion.mor(gr.morphism_fiber[m]);
    auto verts = fib.path->verticals[second.mor(a)];
    verts[n] = fib.f.functor.mor(xm);
    const MorIdx full_m = with_verticals(fib, xm, whole.inclusion.obj(phi.obj(gr.cat->src(m))),
                                         whole.inclusion.obj(phi.obj(gr.cat->tgt(m))), verts);
    phi.on_morphisms.push_back(full_m == kNone ? kNone : mor_back[full_m]);
  }
  const auto proj = compose_functors(fib.pullback.first, whole.inclusion);
  return compare(gr, phi, proj);
}

}  // namespace relcat
