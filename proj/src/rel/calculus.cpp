#include "relcat/rel/calculus.hpp"

#include "relcat/cat/constructions.hpp"
#include "relcat/core/error.hpp"

namespace relcat {

std::vector<std::pair<MorIdx, MorIdx>> pushouts(const FinCat& c, const Mask& mask, MorIdx f, MorIdx g) {
  const ObjIdx B = c.tgt(f), C = c.tgt(g);
  struct Cocone {
    ObjIdx q;
    MorIdx b, c;
  };
  std::vector<Cocone> cocones;
  for (ObjIdx q = 0; q < c.num_objects(); ++q)
    for (MorIdx b : c.hom(B, q))
      if (mask[b])
        for (MorIdx cm : c.hom(C, q))
          if (mask[cm] && c.compose_unchecked(b, f) == c.compose_unchecked(cm, g)) cocones.push_back({q, b, cm});
  std::vector<std::pair<MorIdx, MorIdx>> out;
  for (const auto& p : cocones) {
    bool universal = true;
    for (const auto& q : cocones) {
      int count = 0;
      for (MorIdx t : c.hom(p.q, q.q))
        if (mask[t] && c.compose_unchecked(t, p.b) == q.b && c.compose_unchecked(t, p.c) == q.c) ++count;
      if (count != 1) {
        universal = false;
        break;
      }
    }
    if (universal) out.emplace_back(p.b, p.c);
  }
  return out;
}

std::vector<std::pair<MorIdx, MorIdx>> pullbacks(const FinCat& c, const Mask& mask, MorIdx f, MorIdx g) {
  const ObjIdx B = c.src(f), C = c.src(g);
  struct Cone {
    ObjIdx q;
    MorIdx b, c;
  };
  std::vector<Cone> cones;
  for (ObjIdx q = 0; q < c.num_objects(); ++q)
    for (MorIdx b : c.hom(q, B))
      if (mask[b])
        for (MorIdx cm : c.hom(q, C))
          if (mask[cm] && c.compose_unchecked(f, b) == c.compose_unchecked(g, cm)) cones.push_back({q, b, cm});
  std::vector<std::pair<MorIdx, MorIdx>> out;
  for (const auto& p : cones) {
    bool universal = true;
    for (const auto& q : cones) {
      int count = 0;
      for (MorIdx t : c.hom(q.q, p.q))
        if (mask[t] && c.compose_unchecked(p.b, t) == q.b && c.compose_unchecked(p.c, t) == q.c) ++count;
      if (count != 1) {
        universal = false;
        break;
      }
    }
    if (universal) out.emplace_back(p.b, p.c);
  }
  return out;
}

std::vector<ArrowSquare> w_squares(const KRelStructure& z) {
  const FinCat& c = *z.ambient;
  std::vector<ArrowSquare> out;
  for (MorIdx w = 0; w < c.num_morphisms(); ++w) {
    if (!z.w[w]) continue;
    for (MorIdx a : c.out(c.src(w))) {
      if (!z.w[a]) continue;
      for (MorIdx w2 : c.out(c.tgt(a))) {
        if (!z.w[w2]) continue;
        for (MorIdx b : c.hom(c.tgt(w), c.tgt(w2))) {
          if (z.w[b] && c.compose_unchecked(w2, a) == c.compose_unchecked(b, w)) out.push_back({w, w2, a, b});
        }
      }
    }
  }
  return out;
}

namespace {

std::vector<MorIdx> connecting_candidates(const KRelStructure& z, const ThreeArrowCalculus& cal,
                                          const ArrowSquare& sq) {
  const FinCat& c = *z.ambient;
  auto f1 = cal.factor.find(sq.w);
  auto f2 = cal.factor.find(sq.w2);
  if (f1 == cal.factor.end() || f2 == cal.factor.end()) return {};
  auto [u1, v1] = f1->second;
  auto [u2, v2] = f2->second;
  std::vector<MorIdx> out;
  for (MorIdx m : c.hom(c.tgt(u1), c.tgt(u2))) {
    if (z.w[m] && c.compose_unchecked(m, u1) == c.compose_unchecked(u2, sq.a) &&
        c.compose_unchecked(v2, m) == c.compose_unchecked(sq.b, v1))
      out.push_back(m);
  }
  return out;
}

std::string ids(const FinCat& c, std::initializer_list<MorIdx> ms) {
  std::string out;
  for (MorIdx m : ms) out += (out.empty() ? "" : ", ") + c.morphism_id(m);
  return out;
}

// (i) and (ii) of the calculus inside the subcategory `ambient`.
void check_stability(const KRelStructure& z, const ThreeArrowCalculus& cal, const Mask& ambient,
                     const std::string& where, CalculusReport& report) {
  const FinCat& c = *z.ambient;
  CalculusCheck push{"(i) pushouts of U-maps in " + where, true, {}};
  for (MorIdx u = 0; u < c.num_morphisms() && push.pass; ++u) {
    if (!cal.u[u]) continue;
    for (MorIdx f : c.out(c.src(u))) {
      if (!ambient[f]) continue;
      bool found = false;
      for (auto [b, leg] : pushouts(c, ambient, u, f)) {
        (void)b;
        if (cal.u[leg]) found = true;
      }
      if (!found) {
        push.pass = false;
        push.witness = "pushout of " + c.morphism_id(u) + " along " + c.morphism_id(f) + " missing or leg not in U";
        break;
      }
    }
  }
  report.checks.push_back(push);
  CalculusCheck pull{"(ii) pullbacks of V-maps in " + where, true, {}};
  for (MorIdx v = 0; v < c.num_morphisms() && pull.pass; ++v) {
    if (!cal.v[v]) continue;
    for (MorIdx g : c.in(c.tgt(v))) {
      if (!ambient[g]) continue;
      bool found = false;
      for (auto [b, leg] : pullbacks(c, ambient, v, g)) {
        (void)b;
        if (cal.v[leg]) found = true;
      }
      if (!found) {
        pull.pass = false;
        pull.witness = "pullback of " + c.morphism_id(v) + " along " + c.morphism_id(g) + " missing or leg not in V";
        break;
      }
    }
  }
  report.checks.push_back(pull);
}

void check_strict_extras(const KRelStructure& z, const ThreeArrowCalculus& cal, CalculusReport& report) {
  const FinCat& c = *z.ambient;
  const Mask all = full_mask(c);
  CalculusCheck push{"(i)' pushouts of w-maps along U-maps stay in w", true, {}};
  for (MorIdx u = 0; u < c.num_morphisms() && push.pass; ++u) {
    if (!cal.u[u]) continue;
    for (MorIdx f : c.out(c.src(u))) {
      if (!z.w[f]) continue;
      bool found = false;
      for (auto [other, leg] : pushouts(c, all, f, u)) {
        (void)other;
        if (z.w[leg]) found = true;
      }
      if (!found) {
        push.pass = false;
        push.witness = "pushout of " + c.morphism_id(f) + " along " + c.morphism_id(u) + " missing or leg not in w";
        break;
      }
    }
  }
  report.checks.push_back(push);
  CalculusCheck pull{"(ii)' pullbacks of w-maps along V-maps stay in w", true, {}};
  for (MorIdx v = 0; v < c.num_morphisms() && pull.pass; ++v) {
    if (!cal.v[v]) continue;
    for (MorIdx g : c.in(c.tgt(v))) {
      if (!z.w[g]) continue;
      bool found = false;
      for (auto [other, leg] : pullbacks(c, all, g, v)) {
        (void)other;
        if (z.w[leg]) found = true;
      }
      if (!found) {
        pull.pass = false;
        pull.witness = "pullback of " + c.morphism_id(g) + " along " + c.morphism_id(v) + " missing or leg not in w";
        break;
      }
    }
  }
  report.checks.push_back(pull);
}

void check_factorization(const KRelStructure& z, const ThreeArrowCalculus& cal, CalculusReport& report) {
  const FinCat& c = *z.ambient;
  CalculusCheck fac{"(iii) factorization w = v u", true, {}};
  for (MorIdx w = 0; w < c.num_morphisms() && fac.pass; ++w) {
    if (!z.w[w]) continue;
    auto it = cal.factor.find(w);
    if (it == cal.factor.end()) {
      fac = {fac.condition, false, "no factorization for " + c.morphism_id(w)};
      break;
    }
    auto [u, v] = it->second;
    if (!cal.u[u] || !cal.v[v] || c.tgt(u) != c.src(v) || c.compose_unchecked(v, u) != w) {
      fac = {fac.condition, false, "bad factorization of " + c.morphism_id(w) + ": " + ids(c, {u, v})};
    }
  }
  report.checks.push_back(fac);
  if (!fac.pass) return;

  CalculusCheck fun{"(iii) functoriality of the factorization", true, {}};
  auto squares = w_squares(z);
  auto witness = [&](const ArrowSquare& sq) -> MorIdx {
    auto it = cal.witnesses.find(sq);
    return it == cal.witnesses.end() ? kNone : it->second;
  };
  for (const auto& sq : squares) {
    MorIdx m = witness(sq);
    if (m == kNone) {
      fun = {fun.condition, false, "no witness for square " + ids(c, {sq.w, sq.w2, sq.a, sq.b})};
      break;
    }
    auto [u1, v1] = cal.factor.at(sq.w);
    auto [u2, v2] = cal.factor.at(sq.w2);
    if (c.src(m) != c.tgt(u1) || c.tgt(m) != c.tgt(u2) || !z.w[m] ||
        c.compose_unchecked(m, u1) != c.compose_unchecked(u2, sq.a) ||
        c.compose_unchecked(v2, m) != c.compose_unchecked(sq.b, v1)) {
      fun = {fun.condition, false, "witness " + c.morphism_id(m) + " does not fill square " +
                                       ids(c, {sq.w, sq.w2, sq.a, sq.b})};
      break;
    }
    if (sq.w == sq.w2 && c.is_identity(sq.a) && c.is_identity(sq.b) && !c.is_identity(m)) {
      fun = {fun.condition, false, "identity square of " + c.morphism_id(sq.w) + " has a non-identity witness"};
      break;
    }
  }
  if (fun.pass) {
    // Composable pairs of squares must have composed witnesses.
    for (const auto& s1 : squares) {
      for (const auto& s2 : squares) {
        if (s2.w != s1.w2) continue;
        ArrowSquare comp{s1.w, s2.w2, c.compose_unchecked(s2.a, s1.a), c.compose_unchecked(s2.b, s1.b)};
        if (witness(comp) != c.compose_unchecked(witness(s2), witness(s1))) {
          fun = {fun.condition, false, "witnesses do not compose for squares " + ids(c, {s1.a, s1.b}) + " then " +
                                           ids(c, {s2.a, s2.b})};
          break;
        }
      }
      if (!fun.pass) break;
    }
  }
  report.checks.push_back(fun);
}

}  // namespace

void derive_unique_witnesses(const KRelStructure& z, ThreeArrowCalculus& cal) {
  for (const auto& sq : w_squares(z)) {
    auto cands = connecting_candidates(z, cal, sq);
    if (cands.size() == 1) cal.witnesses[sq] = cands.front();
  }
}

CalculusReport check_three_arrow_calculus(const KRelStructure& z, const ThreeArrowCalculus& cal, bool strict) {
  check_krel_shape(z);
  const FinCat& c = *z.ambient;
  CalculusReport report;
  report.strict = strict;
  CalculusCheck masks{"U and V are subcategories of w", true, {}};
  for (const auto* m : {&cal.u, &cal.v}) {
    auto problem = subcategory_mask_problem(c, *m);
    if (problem.empty() && !mask_subset(*m, z.w)) problem = "not contained in w";
    if (!problem.empty()) {
      masks = {masks.condition, false, std::string(m == &cal.u ? "U: " : "V: ") + problem};
      break;
    }
  }
  report.checks.push_back(masks);
  if (!masks.pass) return report;

  check_stability(z, cal, full_mask(c), "(aC,wC)", report);
  check_factorization(z, cal, report);
  if (strict) {
    check_strict_extras(z, cal, report);
    check_stability(z, cal, z.w, "(wC,wC)", report);
    for (int i = 0; i < z.k(); ++i) {
      check_stability(z, cal, z.v[i], "(v" + std::to_string(i + 1) + "C,wC)", report);
    }
  }
  return report;
}

}  // namespace relcat
