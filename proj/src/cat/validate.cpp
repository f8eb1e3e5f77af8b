#include "relcat/cat/validate.hpp"

#include "relcat/core/error.hpp"

namespace relcat {

std::string ValidationReport::summary() const {
  if (ok()) return "valid";
  std::string out = std::to_string(violations.size()) + " violation(s)";
  for (const auto& v : violations) out += "\n  " + v.axiom + ": " + v.witness;
  return out;
}

ValidationReport validate_cat(const FinCat& c) {
  ValidationReport report;
  auto add = [&](std::string axiom, std::string witness) {
    report.violations.push_back({std::move(axiom), std::move(witness)});
  };
  const auto n = static_cast<MorIdx>(c.num_morphisms());
  for (MorIdx f = 0; f < n; ++f) {
    if (c.compose_unchecked(c.identity(c.tgt(f)), f) != f) {
      add("identity", "id_" + c.object_id(c.tgt(f)) + " o " + c.morphism_id(f) + " != " +
                          c.morphism_id(f));
    }
    if (c.compose_unchecked(f, c.identity(c.src(f))) != f) {
      add("identity", c.morphism_id(f) + " o id_" + c.object_id(c.src(f)) + " != " +
                          c.morphism_id(f));
    }
  }
  for (MorIdx f = 0; f < n; ++f) {
    for (MorIdx g : c.out(c.tgt(f))) {
      MorIdx h = c.compose_unchecked(g, f);
      if (c.src(h) != c.src(f) || c.tgt(h) != c.tgt(g)) {
        add("src-tgt", c.morphism_id(g) + " o " + c.morphism_id(f) + " = " + c.morphism_id(h));
      }
    }
  }
  if (!report.ok()) {
    // Associativity is only meaningful once composites land in the right hom-sets.
    for (const auto& v : report.violations) {
      if (v.axiom == "src-tgt") return report;
    }
  }
  for (MorIdx f = 0; f < n; ++f) {
    for (MorIdx g : c.out(c.tgt(f))) {
      MorIdx gf = c.compose_unchecked(g, f);
      for (MorIdx h : c.out(c.tgt(g))) {
        MorIdx hg = c.compose_unchecked(h, g);
        if (c.compose_unchecked(h, gf) != c.compose_unchecked(hg, f)) {
          add("associativity", "(" + c.morphism_id(h) + ", " + c.morphism_id(g) + ", " +
                                   c.morphism_id(f) + ")");
        }
      }
    }
  }
  return report;
}

ValidationReport validate_functor(const FinFunctor& F) {
  ValidationReport report;
  const FinCat& a = *F.source;
  const FinCat& b = *F.target;
  if (F.on_objects.size() != a.num_objects() || F.on_morphisms.size() != a.num_morphisms()) {
    report.violations.push_back({"shape", "object or morphism map has the wrong size"});
    return report;
  }
  for (ObjIdx o = 0; o < a.num_objects(); ++o) {
    if (F.on_objects[o] >= b.num_objects()) {
      report.violations.push_back({"shape", "object '" + a.object_id(o) + "' maps out of range"});
      return report;
    }
  }
  for (MorIdx m = 0; m < a.num_morphisms(); ++m) {
    if (F.on_morphisms[m] >= b.num_morphisms()) {
      report.violations.push_back({"shape", "morphism '" + a.morphism_id(m) + "' maps out of range"});
      return report;
    }
  }
  for (MorIdx m = 0; m < a.num_morphisms(); ++m) {
    MorIdx fm = F.on_morphisms[m];
    if (b.src(fm) != F.on_objects[a.src(m)] || b.tgt(fm) != F.on_objects[a.tgt(m)]) {
      report.violations.push_back({"src-tgt", a.morphism_id(m) + " -> " + b.morphism_id(fm)});
    }
  }
  if (!report.ok()) return report;
  for (ObjIdx o = 0; o < a.num_objects(); ++o) {
    if (F.on_morphisms[a.identity(o)] != b.identity(F.on_objects[o])) {
      report.violations.push_back({"identity", "id_" + a.object_id(o)});
    }
  }
  for (MorIdx f = 0; f < a.num_morphisms(); ++f) {
    for (MorIdx g : a.out(a.tgt(f))) {
      if (F.on_morphisms[a.compose_unchecked(g, f)] !=
          b.compose_unchecked(F.on_morphisms[g], F.on_morphisms[f])) {
        report.violations.push_back(
            {"composition", "(" + a.morphism_id(g) + ", " + a.morphism_id(f) + ")"});
      }
    }
  }
  return report;
}

ValidationReport validate_nat(const NatTransformation& t) {
  ValidationReport report;
  const FinFunctor& F = t.from;
  const FinFunctor& G = t.to;
  if (F.source != G.source || F.target != G.target) {
    report.violations.push_back({"shape", "functors do not share source and target"});
    return report;
  }
  const FinCat& a = *F.source;
  const FinCat& b = *F.target;
  if (t.components.size() != a.num_objects()) {
    report.violations.push_back({"shape", "component count does not match source objects"});
    return report;
  }
  for (ObjIdx o = 0; o < a.num_objects(); ++o) {
    MorIdx c = t.components[o];
    if (c >= b.num_morphisms() || b.src(c) != F.on_objects[o] || b.tgt(c) != G.on_objects[o]) {
      report.violations.push_back({"component", "component at '" + a.object_id(o) + "'"});
    }
  }
  if (!report.ok()) return report;
  for (MorIdx m = 0; m < a.num_morphisms(); ++m) {
    MorIdx lhs = b.compose_unchecked(G.on_morphisms[m], t.components[a.src(m)]);
    MorIdx rhs = b.compose_unchecked(t.components[a.tgt(m)], F.on_morphisms[m]);
    if (lhs != rhs) report.violations.push_back({"naturality", a.morphism_id(m)});
  }
  return report;
}

void require_valid(const ValidationReport& report, const std::string& what) {
  if (!report.ok()) {
    throw InvalidInput(what + ": " + report.violations.front().axiom + " violated at " +
                       report.violations.front().witness);
  }
}

}  // namespace relcat
