#include "relcat/arrow/grothendieck.hpp"

#include "relcat/core/caps.hpp"
#include "relcat/core/error.hpp"

namespace relcat {

namespace {

std::array<std::uint32_t, 3> morphism_key(MorIdx d, MorIdx a, ObjIdx anchor) { return {d, a, anchor}; }

bool same_tables(const FinFunctor& a, const FinFunctor& b) {
  return a.on_objects == b.on_objects && a.on_morphisms == b.on_morphisms;
}

}  // namespace

ValidationReport validate_grothendieck_input(const GrothendieckInput& in) {
  ValidationReport r;
  const FinCat& d = *in.base;
  auto bad = [&](const std::string& what) { r.violations.push_back({"grothendieck input", what}); };
  if (in.fibers.size() != d.num_objects() || in.actions.size() != d.num_morphisms()) {
    bad("one fiber per base object and one action per base morphism required");
    return r;
  }
  for (MorIdx m = 0; m < d.num_morphisms(); ++m) {
    const auto& a = in.actions[m];
    const auto from = in.contravariant ? d.tgt(m) : d.src(m);
    const auto to = in.contravariant ? d.src(m) : d.tgt(m);
    if (a.source != in.fibers[from] || a.target != in.fibers[to]) {
      bad("action of " + d.morphism_id(m) + " has the wrong endpoints");
      continue;
    }
    auto fr = validate_functor(a);
    if (!fr.ok()) bad("action of " + d.morphism_id(m) + " is not a functor: " + fr.summary());
  }
  if (!r.ok()) return r;
  for (ObjIdx o = 0; o < d.num_objects(); ++o)
    if (!same_tables(in.actions[d.identity(o)], identity_functor(in.fibers[o])))
      bad("identity of " + d.object_id(o) + " does not act as the identity");
  for (MorIdx f = 0; f < d.num_morphisms(); ++f)
    for (MorIdx g : d.out(d.tgt(f))) {
      const auto gf = d.compose_unchecked(g, f);
      const auto expect = in.contravariant ? compose_functors(in.actions[f], in.actions[g])
                                           : compose_functors(in.actions[g], in.actions[f]);
      if (!same_tables(in.actions[gf], expect))
        bad("action of " + d.morphism_id(g) + " o " + d.morphism_id(f) + " is not the composite of the actions");
    }
  return r;
}

ObjIdx GrothendieckResult::object_of(ObjIdx d, ObjIdx a) const { return object_start[d] + a; }

MorIdx GrothendieckResult::morphism_of(MorIdx d, MorIdx a, ObjIdx anchor) const {
  auto it = morphism_lookup.find(morphism_key(d, a, anchor));
  return it == morphism_lookup.end() ? kNone : it->second;
}

GrothendieckResult grothendieck(const GrothendieckInput& in) {
  require_valid(validate_grothendieck_input(in), "grothendieck");
  const FinCat& d = *in.base;
  const Caps caps = Caps::current();
  GrothendieckResult r;
  std::vector<std::string> objs;
  for (ObjIdx o = 0; o < d.num_objects(); ++o) {
    r.object_start.push_back(static_cast<std::uint32_t>(objs.size()));
    const FinCat& fo = *in.fibers[o];
    for (ObjIdx a = 0; a < fo.num_objects(); ++a) {
      objs.push_back("(" + d.object_id(o) + "," + fo.object_id(a) + ")");
      r.object_base.push_back(o);
      r.object_fiber.push_back(a);
    }
    caps.check(objs.size(), 0, "grothendieck");
  }
  std::vector<MorphismSpec> mors;
  std::vector<ObjIdx> anchor_of;
  for (MorIdx m = 0; m < d.num_morphisms(); ++m) {
    const ObjIdx d1 = d.src(m), d2 = d.tgt(m);
    const auto& act = in.actions[m];
    const FinCat& f1 = *in.fibers[d1];
    const FinCat& f2 = *in.fibers[d2];
    if (!in.contravariant) {
      for (ObjIdx a1 = 0; a1 < f1.num_objects(); ++a1)
        for (MorIdx a : f2.out(act.obj(a1))) {
          r.morphism_lookup.emplace(morphism_key(m, a, a1), static_cast<MorIdx>(mors.size()));
          mors.push_back({"(" + d.morphism_id(m) + "," + f2.morphism_id(a) + ")@" + f1.object_id(a1),
                          r.object_of(d1, a1), r.object_of(d2, f2.tgt(a))});
          r.morphism_base.push_back(m);
          r.morphism_fiber.push_back(a);
          anchor_of.push_back(a1);
        }
    } else {
      for (ObjIdx a2 = 0; a2 < f2.num_objects(); ++a2)
        for (MorIdx a : f1.in(act.obj(a2))) {
          r.morphism_lookup.emplace(morphism_key(m, a, a2), static_cast<MorIdx>(mors.size()));
          mors.push_back({"(" + d.morphism_id(m) + "," + f1.morphism_id(a) + ")@" + f2.object_id(a2),
                          r.object_of(d1, f1.src(a)), r.object_of(d2, a2)});
          r.morphism_base.push_back(m);
          r.morphism_fiber.push_back(a);
          anchor_of.push_back(a2);
        }
    }
    caps.check(objs.size(), mors.size(), "grothendieck");
  }
  std::vector<MorIdx> ids;
  for (ObjIdx o = 0; o < objs.size(); ++o) {
    const ObjIdx base = r.object_base[o], a = r.object_fiber[o];
    ids.push_back(r.morphism_of(d.identity(base), in.fibers[base]->identity(a), a));
  }
  auto cat = std::make_shared<const FinCat>(objs, mors, ids, [&](MorIdx g, MorIdx f) -> MorIdx {
    const MorIdx dg = r.morphism_base[g], df = r.morphism_base[f];
    const MorIdx ag = r.morphism_fiber[g], af = r.morphism_fiber[f];
    const MorIdx base = d.compose_unchecked(dg, df);
    if (!in.contravariant) {
      const FinCat& f3 = *in.fibers[d.tgt(dg)];
      return r.morphism_of(base, f3.compose_unchecked(ag, in.actions[dg].mor(af)), anchor_of[f]);
    }
    const FinCat& f1 = *in.fibers[d.src(df)];
    return r.morphism_of(base, f1.compose_unchecked(in.actions[df].mor(ag), af), anchor_of[g]);
  });
  r.cat = cat;
  r.pi = {cat, in.base, r.object_base, r.morphism_base};
  return r;
}

FinFunctor gr_map(const GrothendieckInput& f1, const GrothendieckResult& g1, const GrothendieckInput& f2,
                  const GrothendieckResult& g2, const std::vector<FinFunctor>& eta) {
  if (f1.base != f2.base || f1.contravariant != f2.contravariant)
    throw InvalidInput("gr_map: functors over different bases or of different variance");
  const FinCat& d = *f1.base;
  if (eta.size() != d.num_objects()) throw InvalidInput("gr_map: one component per base object required");
  for (ObjIdx o = 0; o < d.num_objects(); ++o)
    if (eta[o].source != f1.fibers[o] || eta[o].target != f2.fibers[o])
      throw InvalidInput("gr_map: component at " + d.object_id(o) + " has the wrong endpoints");
  for (MorIdx m = 0; m < d.num_morphisms(); ++m) {
    const ObjIdx from = f1.contravariant ? d.tgt(m) : d.src(m);
    const ObjIdx to = f1.contravariant ? d.src(m) : d.tgt(m);
    if (!same_tables(compose_functors(f2.actions[m], eta[from]), compose_functors(eta[to], f1.actions[m])))
      throw InvalidInput("gr_map: components are not natural at " + d.morphism_id(m));
  }
  FinFunctor out{g1.cat, g2.cat, {}, {}};
  for (ObjIdx o = 0; o < g1.cat->num_objects(); ++o) {
    const ObjIdx base = g1.object_base[o];
    out.on_objects.push_back(g2.object_of(base, eta[base].obj(g1.object_fiber[o])));
  }
  for (MorIdx m = 0; m < g1.cat->num_morphisms(); ++m) {
    const MorIdx base = g1.morphism_base[m];
    const ObjIdx home = f1.contravariant ? d.src(base) : d.tgt(base);
    const ObjIdx anchor_obj =
        f1.contravariant ? g1.object_fiber[g1.cat->tgt(m)] : g1.object_fiber[g1.cat->src(m)];
    const ObjIdx anchor_base = f1.contravariant ? d.tgt(base) : d.src(base);
    out.on_morphisms.push_back(
        g2.morphism_of(base, eta[home].mor(g1.morphism_fiber[m]), eta[anchor_base].obj(anchor_obj)));
  }
  return out;
}

}  // namespace relcat
