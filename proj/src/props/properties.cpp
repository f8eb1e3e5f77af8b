#include "relcat/props/properties.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "relcat/arrow/slice.hpp"
#include "relcat/cat/constructions.hpp"
#include "relcat/cat/structure.hpp"
#include "relcat/core/error.hpp"
#include "relcat/nerve/verdict.hpp"

namespace relcat {

std::string to_string(Overall o) {
  switch (o) {
    case Overall::Pass:
      return "Pass";
    case Overall::Refuted:
      return "Refuted";
    case Overall::Inconclusive:
      return "Inconclusive";
  }
  return "?";
}

Overall PropertyCase::status() const {
  if (const auto* v = std::get_if<WEVerdict>(&outcome)) {
    if (v->is_refuted()) return Overall::Refuted;
    if (v->is_inconclusive()) return Overall::Inconclusive;
    return Overall::Pass;
  }
  return std::get<bool>(outcome) ? Overall::Pass : Overall::Refuted;
}

std::string PropertyCase::outcome_string() const {
  if (const auto* v = std::get_if<WEVerdict>(&outcome)) return v->to_string();
  return std::get<bool>(outcome) ? "pass" : "fail";
}

Overall PropertyReport::overall() const {
  bool inconclusive = false;
  for (const auto& c : cases) {
    const auto s = c.status();
    if (s == Overall::Refuted) return Overall::Refuted;
    if (s == Overall::Inconclusive) inconclusive = true;
  }
  return inconclusive ? Overall::Inconclusive : Overall::Pass;
}

void PropertyReport::add(std::string id, std::variant<WEVerdict, bool> outcome, std::string note) {
  cases.push_back({std::move(id), std::move(outcome), std::move(note)});
}

void PropertyReport::merge(const PropertyReport& other, const std::string& prefix) {
  for (const auto& c : other.cases) cases.push_back({prefix + c.id, c.outcome, c.note});
  for (const auto& n : other.notes) notes.push_back(prefix + n);
}

void PropertyReport::sort_cases() {
  std::stable_sort(cases.begin(), cases.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
}

const PropertyCase* PropertyReport::first_problem() const {
  const PropertyCase* open = nullptr;
  for (const auto& c : cases) {
    const auto s = c.status();
    if (s == Overall::Refuted) return &c;
    if (s == Overall::Inconclusive && !open) open = &c;
  }
  return open;
}

std::string PropertyReport::to_string() const {
  std::ostringstream out;
  out << name << ": " << relcat::to_string(overall()) << " (" << cases.size() << " cases)\n";
  for (const auto& c : cases) {
    out << "  " << c.id << ": " << c.outcome_string();
    if (!c.note.empty()) out << " [" << c.note << "]";
    out << "\n";
  }
  for (const auto& n : notes) out << "  note: " << n << "\n";
  return out.str();
}

PropertyReport check_relative_functor(const GrothendieckInput& in, int bound) {
  require_valid(validate_grothendieck_input(in), "relative functor check");
  PropertyReport r;
  r.name = "relative-functor";
  const FinCat& d = *in.base;
  for (MorIdx m = 0; m < d.num_morphisms(); ++m) {
    if (d.is_identity(m)) continue;
    r.add(d.morphism_id(m), induced_we_verdict(in.actions[m], bound));
  }
  r.sort_cases();
  return r;
}

namespace {

std::string degree_label(const std::vector<int>& degree) {
  std::string s = "[";
  for (std::size_t i = degree.size(); i-- > 0;) {
    s += std::to_string(degree[i]);
    if (i) s += ",";
  }
  return s + "]";
}

}  // namespace

PropertyReport check_Bn(const FinFunctor& f, const PathPtr& path, int bound) {
  const auto s = slice_functor(f, path);
  auto r = check_relative_functor(s.input, bound);
  r.name = "B_n";
  r.notes.push_back("n = " + std::to_string(path->n));
  return r;
}

PropertyReport check_Bn(const FinFunctor& f, int n, int bound) {
  std::vector<bool> ends(f.target->num_objects(), false);
  for (ObjIdx o : f.on_objects) ends[o] = true;
  return check_Bn(f, n_arrow_path(cat_hat(f.target), n, &ends), bound);
}

PropertyReport check_Bn(const DiagramMap& f, int n, int bound) {
  require_valid(check_diagram_map(f), "B_n");
  PropertyReport r;
  r.name = "B_n";
  r.notes.push_back("n = " + std::to_string(n) + ", levelwise");
  for (std::size_t l = 0; l < f.components.size(); ++l) {
    auto level = check_Bn(f.components[l], n, bound);
    level.notes.clear();
    r.merge(level, degree_label(f.source.degree_of(l)) + "/");
  }
  return r;
}

PropertyReport check_Bn(const KRelFunctor& f, int n, int bound, int window) {
  if (f.source.k() != f.target.k()) throw InvalidInput("B_n: k differs");
  if (auto problem = relative_functor_problem(f); !problem.empty()) throw InvalidInput("B_n: " + problem);
  if (f.source.k() == 0) return check_Bn(f.functor, n, bound);
  auto r = check_Bn(w_star_diagram_map(f, window).map, n, bound);
  r.notes.push_back("through w_* on the window [0," + std::to_string(window) + "]^" +
                    std::to_string(f.source.k()));
  return r;
}

PropertyReport check_Cn(const CatPtr& z, int n, int bound) {
  PropertyReport r;
  r.name = "C_n";
  r.notes.push_back("n = " + std::to_string(n));
  for (ObjIdx o = 0; o < z->num_objects(); ++o) {
    std::vector<bool> ends(z->num_objects(), false);
    ends[o] = true;
    auto b = check_Bn(object_inclusion(z, o), n_arrow_path(cat_hat(z), n, &ends), bound);
    b.notes.clear();
    r.merge(b, z->object_id(o) + "/");
  }
  return r;
}

PropertyReport check_Cn(const CatDiagram& z, int n, int bound) {
  require_valid(check_diagram(z), "C_n");
  PropertyReport r;
  r.name = "C_n";
  r.notes.push_back("n = " + std::to_string(n) + ", levelwise");
  for (std::size_t l = 0; l < z.levels.size(); ++l) {
    auto level = check_Cn(z.levels[l], n, bound);
    level.notes.clear();
    r.merge(level, degree_label(z.degree_of(l)) + "/");
  }
  return r;
}

PropertyReport check_Cn(const KRelStructure& z, int n, int bound, int window) {
  check_krel_shape(z);
  if (z.k() == 0) return check_Cn(z.ambient, n, bound);
  auto r = check_Cn(w_star_diagram(z, window), n, bound);
  r.notes.push_back("through w_* on the window [0," + std::to_string(window) + "]^" + std::to_string(z.k()));
  return r;
}

namespace {

bool same_category(const CatPtr& a, const CatPtr& b) {
  if (a == b) return true;
  if (a->objects() != b->objects() || a->num_morphisms() != b->num_morphisms()) return false;
  for (MorIdx m = 0; m < a->num_morphisms(); ++m)
    if (a->morphism_id(m) != b->morphism_id(m)) return false;
  return true;
}

bool is_identity_functor(const FinFunctor& f) {
  if (!same_category(f.source, f.target)) return false;
  for (ObjIdx o = 0; o < f.on_objects.size(); ++o)
    if (f.on_objects[o] != o) return false;
  for (MorIdx m = 0; m < f.on_morphisms.size(); ++m)
    if (f.on_morphisms[m] != m) return false;
  return true;
}

using Probe = SimplexProbe;

}  // namespace

std::vector<SimplexProbe> simplex_probes(const CatPtr& b, int max_dim) {
  const FinCat& c = *b;
  std::vector<Probe> out;
  auto push = [&](ObjIdx start, std::vector<MorIdx> chain) {
    Probe p;
    p.start = start;
    p.chain = std::move(chain);
    if (p.chain.empty()) {
      p.key = {c.object_id(start)};
      p.name = "<" + c.object_id(start) + ">";
    } else {
      p.name = "<";
      for (std::size_t i = 0; i < p.chain.size(); ++i) {
        p.key.push_back(c.morphism_id(p.chain[i]));
        p.name += (i ? "," : "") + c.morphism_id(p.chain[i]);
      }
      p.name += ">";
    }
    p.sigma = chain_inclusion(b, start, p.chain);
    out.push_back(std::move(p));
  };
  for (ObjIdx o = 0; o < c.num_objects(); ++o) push(o, {});
  std::vector<std::vector<MorIdx>> chains{{}};
  for (int d = 1; d <= max_dim; ++d) {
    std::vector<std::vector<MorIdx>> next;
    for (const auto& ch : chains) {
      if (ch.empty()) {
        for (MorIdx m = 0; m < c.num_morphisms(); ++m) next.push_back({m});
      } else {
        for (MorIdx m : c.out(c.tgt(ch.back()))) {
          next.push_back(ch);
          next.back().push_back(m);
        }
      }
    }
    for (const auto& ch : next) push(c.src(ch.front()), ch);
    chains = std::move(next);
  }
  std::stable_sort(out.begin(), out.end(), [](const Probe& x, const Probe& y) {
    if (x.chain.size() != y.chain.size()) return x.chain.size() < y.chain.size();
    return x.key < y.key;
  });
  return out;
}

namespace {

// τ = σ∘δ_i and δ_i: [p-1] → [p], the face missing vertex i.
std::pair<FinFunctor, FinFunctor> face_of(const CatPtr& b, const Probe& s, int i) {
  const int p = static_cast<int>(s.chain.size());
  const FinCat& c = *b;
  ObjIdx start = s.start;
  std::vector<MorIdx> chain;
  if (i == 0) {
    start = c.tgt(s.chain[0]);
    chain.assign(s.chain.begin() + 1, s.chain.end());
  } else if (i == p) {
    chain.assign(s.chain.begin(), s.chain.end() - 1);
  } else {
    for (int k = 0; k < p; ++k) {
      if (k == i - 1) {
        chain.push_back(c.compose_unchecked(s.chain[k + 1], s.chain[k]));
        ++k;
      } else {
        chain.push_back(s.chain[k]);
      }
    }
  }
  auto tau = chain_inclusion(b, start, chain);
  const FinCat& from = *tau.source;
  const FinCat& to = *s.sigma.source;
  auto shift = [&](ObjIdx x) { return static_cast<ObjIdx>(static_cast<int>(x) < i ? x : x + 1); };
  FinFunctor delta{tau.source, s.sigma.source, {}, {}};
  for (ObjIdx o = 0; o < from.num_objects(); ++o) delta.on_objects.push_back(shift(o));
  for (MorIdx m = 0; m < from.num_morphisms(); ++m)
    delta.on_morphisms.push_back(
        to.morphism_index(std::to_string(shift(from.src(m))) + "->" + std::to_string(shift(from.tgt(m)))));
  return {std::move(tau), std::move(delta)};
}

FinFunctor induced_pullback_functor(const PullbackResult& from, const PullbackResult& to, const FinFunctor& i) {
  FinFunctor j{from.cat, to.cat, {}, {}};
  for (ObjIdx o = 0; o < from.cat->num_objects(); ++o) {
    const ObjIdx x = to.object_of(i.obj(from.first.obj(o)), from.second.obj(o));
    if (x == kNone) throw Error("fibrillation: induced map leaves the pullback");
    j.on_objects.push_back(x);
  }
  for (MorIdx m = 0; m < from.cat->num_morphisms(); ++m) {
    const MorIdx x = to.morphism_of(i.mor(from.first.mor(m)), from.second.mor(m));
    if (x == kNone) throw Error("fibrillation: induced map leaves the pullback");
    j.on_morphisms.push_back(x);
  }
  return j;
}

}  // namespace

void check_cospan(const Cospan& c) {
  if (!same_category(c.first.target, c.second.target)) throw InvalidInput("cospan: feet do not share a base");
  const auto composite = compose_functors(c.second, c.i);
  if (composite.on_objects != c.first.on_objects || composite.on_morphisms != c.first.on_morphisms)
    throw InvalidInput("cospan " + c.label + ": second foot after i is not the first foot");
}

std::vector<Cospan> default_cospan_family(const CatPtr& b, int bound) {
  const auto ps = simplex_probes(b);
  std::vector<Cospan> out;
  const auto id = identity_functor(b);
  for (const auto& p : ps)
    if (induced_we_verdict(p.sigma, bound).is_consistent()) out.push_back({p.sigma, id, p.sigma, "(" + p.name + ", id)"});
  for (const auto& p : ps) {
    const int dim = static_cast<int>(p.chain.size());
    for (int i = 0; dim >= 1 && i <= dim; ++i) {
      auto [tau, delta] = face_of(b, p, i);
      std::string name;
      for (const auto& q : ps)
        if (q.chain.size() + 1 == p.chain.size() && q.sigma.on_morphisms == tau.on_morphisms &&
            q.sigma.on_objects == tau.on_objects)
          name = q.name;
      out.push_back({std::move(tau), p.sigma, std::move(delta),
                     "(" + name + ", " + p.name + ") d" + std::to_string(i)});
    }
  }
  return out;
}

PropertyReport check_fibrillation(const FinFunctor& p, const std::vector<Cospan>& family, int bound) {
  PropertyReport r;
  r.name = "family-fibrillation";
  r.notes.push_back("tested against a declared family of " + std::to_string(family.size()) +
                    " cospans, not universally");
  for (auto c : family) {
    check_cospan(c);
    if (!same_category(c.second.target, p.target)) throw InvalidInput("fibrillation: cospan over another base");
    c.first.target = c.second.target = p.target;
    const auto vi = induced_we_verdict(c.i, bound);
    if (!vi.is_consistent()) {
      r.add(c.label, WEVerdict::inconclusive("precondition: i is " + vi.to_string()));
      continue;
    }
    try {
      const auto a = pullback_cat(c.first, p);
      const auto b = pullback_cat(c.second, p);
      r.add(c.label, induced_we_verdict(induced_pullback_functor(a, b, c.i), bound));
    } catch (const QuotaError& e) {
      r.add(c.label, WEVerdict::inconclusive(std::string("quota: ") + e.what()));
    }
  }
  r.sort_cases();
  return r;
}

PropertyReport fibrillation_stability(const FinFunctor& p, const std::vector<Cospan>& family, int bound) {
  PropertyReport r;
  r.name = "family-fibrillation stability";
  r.merge(check_fibrillation(p, family, bound), "base/");
  std::set<std::string> seen;
  for (auto c : family) {
    c.second.target = p.target;
    if (is_identity_functor(c.second)) continue;
    if (!seen.insert(canonical_encoding(c.second)).second) continue;
    const auto pb = pullback_cat(c.second, p);
    const auto sub = check_fibrillation(pb.first, default_cospan_family(c.second.source, bound), bound);
    r.merge(sub, "i/" + c.label + "/");
  }
  for (auto c : family) {
    c.second.target = p.target;
    if (!induced_we_verdict(c.i, bound).is_consistent()) continue;
    try {
      const auto e = pullback_cat(c.second, p);
      const auto q = pullback_cat(c.i, e.first);
      r.add("ii/" + c.label, induced_we_verdict(q.second, bound));
    } catch (const QuotaError& e) {
      r.add("ii/" + c.label, WEVerdict::inconclusive(std::string("quota: ") + e.what()));
    }
  }
  r.sort_cases();
  return r;
}

bool QuillenReport::agree() const {
  const auto a = relative.overall();
  return a != Overall::Inconclusive && a == fibrillation.overall();
}

std::string QuillenReport::to_string() const {
  return std::string(agree() ? "agree" : "disagree") + ": relative functor " + relcat::to_string(relative.overall()) +
         ", family-fibrillation " + relcat::to_string(fibrillation.overall()) + "\n" + relative.to_string() +
         fibrillation.to_string();
}

QuillenReport quillen_lemma_harness(const GrothendieckInput& in, int bound) {
  QuillenReport q;
  q.relative = check_relative_functor(in, bound);
  const auto gr = grothendieck(in);
  q.fibrillation = check_fibrillation(gr.pi, default_cospan_family(in.base, bound), bound);
  return q;
}

std::string GroupoidPresentation::problem() const {
  for (const auto& c : components) {
    const std::size_t n = c.elements.size();
    if (n == 0 || c.table.size() != n) return c.id + ": table size";
    for (const auto& row : c.table) {
      if (row.size() != n) return c.id + ": table size";
      for (int x : row)
        if (x < 0 || static_cast<std::size_t>(x) >= n) return c.id + ": entry out of range";
    }
    for (std::size_t a = 0; a < n; ++a) {
      if (c.table[0][a] != static_cast<int>(a) || c.table[a][0] != static_cast<int>(a)) return c.id + ": unit";
      bool inverse = false;
      for (std::size_t b = 0; b < n; ++b) {
        if (c.table[a][b] == 0) inverse = true;
        for (std::size_t d = 0; d < n; ++d) {
          const auto ab = static_cast<std::size_t>(c.table[a][b]);
          const auto bd = static_cast<std::size_t>(c.table[b][d]);
          if (c.table[ab][d] != c.table[a][bd]) return c.id + ": associativity";
        }
      }
      if (!inverse) return c.id + ": inverse of " + c.elements[a];
    }
  }
  return {};
}

namespace {

struct GroupoidData {
  Components comps;
  std::vector<ObjIdx> rep;                 // per component, smallest id
  std::vector<MorIdx> to_rep;              // per object, a chosen iso into its representative
  std::vector<std::vector<MorIdx>> group;  // per component, Aut(rep) with the unit first
};

GroupoidData groupoid_data(const FinCat& c) {
  GroupoidData d;
  d.comps = components(c);
  d.rep.assign(d.comps.count, kNone);
  for (ObjIdx o = 0; o < c.num_objects(); ++o) {
    auto& r = d.rep[d.comps.label[o]];
    if (r == kNone || c.object_id(o) < c.object_id(r)) r = o;
  }
  for (ObjIdx o = 0; o < c.num_objects(); ++o) {
    const auto h = c.hom(o, d.rep[d.comps.label[o]]);
    if (h.empty()) throw InvalidInput("groupoid oracle: component without isomorphisms to its representative");
    d.to_rep.push_back(h.front());
  }
  for (ObjIdx r : d.rep) {
    std::vector<MorIdx> g{c.identity(r)};
    for (MorIdx m : c.hom(r, r))
      if (m != c.identity(r)) g.push_back(m);
    d.group.push_back(std::move(g));
  }
  return d;
}

MorIdx inverse(const FinCat& c, MorIdx m) {
  auto inv = inverse_of(c, m);
  if (!inv) throw InvalidInput("groupoid oracle: " + c.morphism_id(m) + " is not invertible");
  return *inv;
}

}  // namespace

GroupoidPresentation groupoid_pullback_oracle(const FinFunctor& f, const FinFunctor& g) {
  if (!same_category(f.target, g.target)) throw InvalidInput("groupoid oracle: functors do not share a target");
  for (const auto* c : {f.source.get(), f.target.get(), g.source.get()})
    if (!is_groupoid(*c)) throw InvalidInput("groupoid oracle: not a groupoid");
  const FinCat& x = *f.source;
  const FinCat& y = *g.source;
  const FinCat& z = *f.target;
  const auto dx = groupoid_data(x);
  const auto dy = groupoid_data(y);
  const auto dz = groupoid_data(z);
  std::vector<std::uint32_t> xorder(dx.comps.count), yorder(dy.comps.count);
  for (std::uint32_t i = 0; i < dx.comps.count; ++i) xorder[i] = i;
  for (std::uint32_t i = 0; i < dy.comps.count; ++i) yorder[i] = i;
  std::sort(xorder.begin(), xorder.end(),
            [&](auto a, auto b) { return x.object_id(dx.rep[a]) < x.object_id(dx.rep[b]); });
  std::sort(yorder.begin(), yorder.end(),
            [&](auto a, auto b) { return y.object_id(dy.rep[a]) < y.object_id(dy.rep[b]); });

  GroupoidPresentation out;
  for (auto cx : xorder) {
    for (auto cy : yorder) {
      const ObjIdx xo = dx.rep[cx], yo = dy.rep[cy];
      const ObjIdx fx = f.obj(xo), gy = g.obj(yo);
      const auto cz = dz.comps.label[fx];
      if (cz != dz.comps.label[gy]) continue;
      const auto& h = dz.group[cz];
      std::map<MorIdx, std::size_t> pos;
      for (std::size_t i = 0; i < h.size(); ++i) pos[h[i]] = i;
      const MorIdx px = dz.to_rep[fx], py = dz.to_rep[gy];
      const MorIdx px_inv = inverse(z, px), py_inv = inverse(z, py);
      std::vector<MorIdx> phi, psi;  // transported into Aut(rep)
      for (MorIdx a : dx.group[cx]) phi.push_back(z.compose_unchecked(px, z.compose_unchecked(f.mor(a), px_inv)));
      for (MorIdx b : dy.group[cy]) psi.push_back(z.compose_unchecked(py, z.compose_unchecked(g.mor(b), py_inv)));
      std::vector<bool> seen(h.size(), false);
      for (std::size_t gi = 0; gi < h.size(); ++gi) {
        if (seen[gi]) continue;
        const MorIdx gamma = h[gi];
        for (MorIdx a : phi)
          for (MorIdx b : psi) seen[pos.at(z.compose_unchecked(b, z.compose_unchecked(gamma, inverse(z, a))))] = true;
        GroupoidComponent comp;
        const MorIdx gamma0 = z.compose_unchecked(py_inv, z.compose_unchecked(gamma, px));
        comp.id = "(" + x.object_id(xo) + "," + y.object_id(yo) + "," + z.morphism_id(gamma0) + ")";
        std::vector<std::pair<std::size_t, std::size_t>> pairs;
        for (std::size_t a = 0; a < phi.size(); ++a)
          for (std::size_t b = 0; b < psi.size(); ++b)
            if (z.compose_unchecked(psi[b], gamma) == z.compose_unchecked(gamma, phi[a])) pairs.emplace_back(a, b);
        std::map<std::pair<std::size_t, std::size_t>, int> index;
        for (std::size_t i = 0; i < pairs.size(); ++i) {
          index[pairs[i]] = static_cast<int>(i);
          comp.elements.push_back("(" + x.morphism_id(dx.group[cx][pairs[i].first]) + "," +
                                  y.morphism_id(dy.group[cy][pairs[i].second]) + ")");
        }
        const auto& gx = dx.group[cx];
        const auto& gy2 = dy.group[cy];
        auto position = [](const std::vector<MorIdx>& v, MorIdx m) {
          return static_cast<std::size_t>(std::find(v.begin(), v.end(), m) - v.begin());
        };
        for (const auto& p : pairs) {
          std::vector<int> row;
          for (const auto& q : pairs)
            row.push_back(index.at({position(gx, x.compose_unchecked(gx[p.first], gx[q.first])),
                                    position(gy2, y.compose_unchecked(gy2[p.second], gy2[q.second]))}));
          comp.table.push_back(std::move(row));
        }
        out.components.push_back(std::move(comp));
      }
    }
  }
  return out;
}

std::vector<HomologySignature> presentation_homology(const GroupoidPresentation& p, int bound) {
  std::vector<HomologySignature> out;
  for (const auto& c : p.components) out.push_back(category_homology(group_cat(c.elements, c.table), bound));
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.to_string() < b.to_string(); });
  return out;
}

std::vector<HomologySignature> component_homology(const KRelStructure& s, int bound) {
  const auto comps = components(s.cat());
  std::vector<std::vector<ObjIdx>> members(comps.count);
  for (ObjIdx o = 0; o < s.cat().num_objects(); ++o) members[comps.label[o]].push_back(o);
  std::vector<HomologySignature> out;
  for (const auto& objs : members) {
    const auto sub = full_subcategory(s.ambient, objs);
    auto restrict = [&](const Mask& m) {
      Mask r;
      for (MorIdx x : sub.inclusion.on_morphisms) r.push_back(m[x]);
      return r;
    };
    KRelStructure part{sub.cat, {}, restrict(s.w), s.saturated_declared};
    for (const auto& v : s.v) part.v.push_back(restrict(v));
    out.push_back(relative_homology(part, bound));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.to_string() < b.to_string(); });
  return out;
}

OracleComparison compare_with_oracle(const NArrowPullback& pb, int bound) {
  OracleComparison c;
  c.oracle = presentation_homology(groupoid_pullback_oracle(pb.fiber.f.functor, pb.g.functor), bound);
  c.construction = component_homology(pb.object, bound);
  c.match = c.oracle == c.construction;
  if (!c.match) {
    if (c.oracle.size() != c.construction.size()) {
      c.witness = "pi0: " + std::to_string(c.construction.size()) + " vs oracle " + std::to_string(c.oracle.size());
    } else {
      for (std::size_t i = 0; i < c.oracle.size(); ++i)
        if (!(c.oracle[i] == c.construction[i])) {
          c.witness = "component " + std::to_string(i) + ": " + c.construction[i].to_string() + " vs oracle " +
                      c.oracle[i].to_string();
          break;
        }
    }
  }
  return c;
}

bool TheoremReport::ok() const {
  switch (mode) {
    case Mode::Skipped:
      return true;
    case Mode::Groupoid:
      return embedding_ok && comparison && comparison->match;
    case Mode::EmbedOnly:
      return embedding_ok;
  }
  return false;
}

std::string TheoremReport::to_string() const {
  std::ostringstream out;
  const char* names[] = {"skipped", "groupoid", "embed-only"};
  out << "mode: " << names[static_cast<int>(mode)] << "\n";
  out << "hypothesis B_n: " << relcat::to_string(hypothesis.overall()) << "\n";
  if (mode != Mode::Skipped) {
    out << "embedding: " << (embedding_ok ? "ok" : "failed") << ", h " << h_verdict.to_string() << ", k "
        << k_verdict.to_string() << "\n";
    out << "n-arrow pullback homology: " << object_homology.to_string() << "\n";
  }
  if (comparison) {
    out << "oracle components: " << comparison->oracle.size() << ", construction components: "
        << comparison->construction.size() << "\n";
    out << "homology match: " << (comparison->match ? "yes" : "no: " + comparison->witness) << "\n";
  }
  for (const auto& n : notes) out << "note: " << n << "\n";
  return out.str();
}

namespace {

bool groupoid_like(const KRelStructure& s) {
  if (!is_groupoid(s.cat())) return false;
  return s.k() == 0 || std::all_of(s.w.begin(), s.w.end(), [](bool b) { return b; });
}

}  // namespace

TheoremReport verify_theorem_Bn(const KRelFunctor& f, const KRelFunctor& g, int n, int bound, int window) {
  TheoremReport r;
  r.hypothesis = check_Bn(f, n, bound, window);
  if (r.hypothesis.overall() != Overall::Pass) {
    r.mode = TheoremReport::Mode::Skipped;
    r.notes.push_back("B_n does not hold for f, nothing to verify");
    return r;
  }
  const auto e = zigzag_embed(f, g, n, bound);
  r.embedding_ok = e.ok();
  r.h_verdict = e.h_verdict;
  r.k_verdict = e.k_verdict;
  r.object_homology = relative_homology(e.arrow.object, bound);
  if (!e.witness.empty()) r.notes.push_back("embedding: " + e.witness);
  if (groupoid_like(f.source) && groupoid_like(f.target) && groupoid_like(g.source)) {
    r.mode = TheoremReport::Mode::Groupoid;
    r.oracle = groupoid_pullback_oracle(f.functor, g.functor);
    r.comparison = compare_with_oracle(e.arrow, bound);
  } else {
    r.mode = TheoremReport::Mode::EmbedOnly;
    r.notes.push_back("not a groupoid zigzag, the homotopy pullback oracle does not apply: embed-only mode");
  }
  if (e.k_verdict.is_refuted()) r.notes.push_back("the strict pullback is not a homotopy pullback");
  return r;
}

}  // namespace relcat
