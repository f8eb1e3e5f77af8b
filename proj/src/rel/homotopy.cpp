#include "relcat/rel/homotopy.hpp"

#include "relcat/cat/validate.hpp"
#include "relcat/core/error.hpp"

namespace relcat {

WeOracle mask_oracle(const Mask& w) {
  return [w](MorIdx m) {
    return w[m] ? WEVerdict::consistent(0) : WEVerdict::refuted(0, "component is not in w");
  };
}

HomotopyReport check_strict_homotopy(const FinFunctor& h, const FinFunctor& f, const FinFunctor& g,
                                     const WeOracle& we) {
  HomotopyReport report;
  const FinCat& C = *f.source;
  const FinCat& P = *h.source;
  const FinCat& D = *h.target;
  require_valid(validate_functor(h), "homotopy");
  if (f.source != g.source || f.target != g.target || f.target != h.target) {
    throw InvalidInput("homotopy: endpoint functors do not share source and target");
  }
  auto obj_at = [&](ObjIdx c, int end) { return P.object_index("(" + C.object_id(c) + "," + std::to_string(end) + ")"); };
  auto mor_at = [&](MorIdx m, int end) {
    const std::string e = std::to_string(end);
    return P.morphism_index("(" + C.morphism_id(m) + "," + e + "->" + e + ")");
  };
  for (int end = 0; end <= 1 && report.endpoints_ok; ++end) {
    const FinFunctor& F = end == 0 ? f : g;
    for (ObjIdx c = 0; c < C.num_objects(); ++c) {
      if (h.on_objects[obj_at(c, end)] != F.on_objects[c]) {
        report.endpoints_ok = false;
        report.endpoint_witness = "h(" + C.object_id(c) + "," + std::to_string(end) + ") = " +
                                  D.object_id(h.on_objects[obj_at(c, end)]) + " but expected " +
                                  D.object_id(F.on_objects[c]);
        break;
      }
    }
    for (MorIdx m = 0; m < C.num_morphisms() && report.endpoints_ok; ++m) {
      if (h.on_morphisms[mor_at(m, end)] != F.on_morphisms[m]) {
        report.endpoints_ok = false;
        report.endpoint_witness = "h(" + C.morphism_id(m) + "," + std::to_string(end) + ") differs";
      }
    }
  }
  int degree = 1 << 20;
  for (ObjIdx c = 0; c < C.num_objects(); ++c) {
    MorIdx comp = h.on_morphisms[P.morphism_index("(" + C.morphism_id(C.identity(c)) + ",0->1)")];
    WEVerdict v = we(comp);
    if (v.is_refuted() || (v.is_inconclusive() && !report.components.is_refuted())) {
      report.components = v;
      report.component_witness = "component at " + C.object_id(c) + " = " + D.morphism_id(comp);
      if (v.is_refuted()) break;
    } else if (v.is_consistent()) {
      degree = std::min(degree, v.degree);
    }
  }
  if (report.components.is_consistent()) {
    report.components = WEVerdict::consistent(C.num_objects() == 0 ? 0 : degree);
  }
  return report;
}

FinFunctor homotopy_from_transformation(const CatPtr& product_cat, const NatTransformation& t) {
  require_valid(validate_nat(t), "transformation");
  const FinCat& C = *t.from.source;
  const FinCat& D = *t.from.target;
  const FinCat& P = *product_cat;
  FinFunctor h{product_cat, t.from.target, std::vector<ObjIdx>(P.num_objects(), kNone),
               std::vector<MorIdx>(P.num_morphisms(), kNone)};
  for (ObjIdx c = 0; c < C.num_objects(); ++c) {
    h.on_objects[P.object_index("(" + C.object_id(c) + ",0)")] = t.from.on_objects[c];
    h.on_objects[P.object_index("(" + C.object_id(c) + ",1)")] = t.to.on_objects[c];
  }
  for (MorIdx m = 0; m < C.num_morphisms(); ++m) {
    const std::string id = C.morphism_id(m);
    h.on_morphisms[P.morphism_index("(" + id + ",0->0)")] = t.from.on_morphisms[m];
    h.on_morphisms[P.morphism_index("(" + id + ",1->1)")] = t.to.on_morphisms[m];
    h.on_morphisms[P.morphism_index("(" + id + ",0->1)")] =
        D.compose_unchecked(t.to.on_morphisms[m], t.components[C.src(m)]);
  }
  return h;
}

}  // namespace relcat
