#include "relcat/rel/krel.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "relcat/cat/constructions.hpp"
#include "relcat/cat/structure.hpp"
#include "relcat/core/error.hpp"

namespace relcat {

Mask full_mask(const FinCat& c) { return Mask(c.num_morphisms(), true); }

Mask identity_mask(const FinCat& c) {
  Mask m(c.num_morphisms(), false);
  for (ObjIdx o = 0; o < c.num_objects(); ++o) m[c.identity(o)] = true;
  return m;
}

Mask mask_from_ids(const FinCat& c, const std::vector<std::string>& ids) {
  Mask m(c.num_morphisms(), false);
  for (const auto& id : ids) m[c.morphism_index(id)] = true;
  return m;
}

std::vector<std::string> mask_ids(const FinCat& c, const Mask& m) {
  std::vector<std::string> out;
  for (MorIdx i = 0; i < m.size(); ++i)
    if (m[i]) out.push_back(c.morphism_id(i));
  std::sort(out.begin(), out.end());
  return out;
}

bool mask_subset(const Mask& a, const Mask& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] && !b[i]) return false;
  return true;
}

std::string subcategory_mask_problem(const FinCat& c, const Mask& m) {
  if (m.size() != c.num_morphisms()) return "mask size does not match the morphism count";
  for (ObjIdx o = 0; o < c.num_objects(); ++o)
    if (!m[c.identity(o)]) return "missing identity of '" + c.object_id(o) + "'";
  for (MorIdx f = 0; f < c.num_morphisms(); ++f) {
    if (!m[f]) continue;
    for (MorIdx g : c.out(c.tgt(f))) {
      if (m[g] && !m[c.compose_unchecked(g, f)]) {
        return "not closed under composition: " + c.morphism_id(g) + " o " + c.morphism_id(f);
      }
    }
  }
  return {};
}

namespace {

std::vector<std::string> shape_problems(const KRelStructure& s) {
  std::vector<std::string> problems;
  if (!s.ambient) return {"no ambient category"};
  const FinCat& c = *s.ambient;
  if (auto p = subcategory_mask_problem(c, s.w); !p.empty()) problems.push_back("w: " + p);
  for (int i = 0; i < s.k(); ++i) {
    const std::string name = "v" + std::to_string(i + 1);
    if (auto p = subcategory_mask_problem(c, s.v[i]); !p.empty()) {
      problems.push_back(name + ": " + p);
      continue;
    }
    if (s.w.size() == s.v[i].size() && !mask_subset(s.w, s.v[i])) {
      problems.push_back("w is not contained in " + name);
    }
  }
  if (!problems.empty()) return problems;
  if (s.k() == 0 && s.w != full_mask(c)) problems.push_back("k = 0 requires w = all morphisms");
  if (s.k() == 1 && s.v[0] != full_mask(c)) problems.push_back("k = 1 requires v1 = all morphisms");
  return problems;
}

AxiomVerdict check_generation(const KRelStructure& s) {
  const FinCat& c = *s.ambient;
  if (s.k() <= 1) return {};
  Mask reach(c.num_morphisms(), false);
  std::vector<MorIdx> work;
  for (MorIdx m = 0; m < c.num_morphisms(); ++m) {
    for (const auto& v : s.v) {
      if (v[m]) {
        reach[m] = true;
        work.push_back(m);
        break;
      }
    }
  }
  // Saturate: each newly reached map is composed with reached maps on both sides.
  while (!work.empty()) {
    MorIdx f = work.back();
    work.pop_back();
    for (MorIdx g : c.out(c.tgt(f))) {
      if (!reach[g]) continue;
      MorIdx h = c.compose_unchecked(g, f);
      if (!reach[h]) {
        reach[h] = true;
        work.push_back(h);
      }
    }
    for (MorIdx e : c.in(c.src(f))) {
      if (!reach[e]) continue;
      MorIdx h = c.compose_unchecked(f, e);
      if (!reach[h]) {
        reach[h] = true;
        work.push_back(h);
      }
    }
  }
  for (MorIdx m = 0; m < c.num_morphisms(); ++m) {
    if (!reach[m]) {
      return {AxiomStatus::Fail, "'" + c.morphism_id(m) + "' is not a composite of v-maps", 0};
    }
  }
  return {};
}

struct WordSearch {
  const KRelStructure& s;
  const FinCat& c;
  int depth;
  std::size_t max_words = 400000;
  std::vector<MorIdx> letters;  // non-identity maps in some v_i
  std::map<std::vector<std::uint32_t>, std::uint32_t> index;  // [start, letters...] → word id
  std::vector<std::vector<std::uint32_t>> words;
  std::vector<std::uint32_t> parent;

  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  bool in_v(int i, MorIdx m) const { return s.v[i][m]; }

  MorIdx composite(const std::vector<std::uint32_t>& w) const {
    MorIdx m = c.identity(w[0]);
    for (std::size_t p = 1; p < w.size(); ++p) m = c.compose_unchecked(w[p], m);
    return m;
  }

  bool enumerate() {
    std::vector<bool> is_letter(c.num_morphisms(), false);
    for (MorIdx m : letters) is_letter[m] = true;
    std::vector<std::uint32_t> cur;
    std::function<bool(ObjIdx)> grow = [&](ObjIdx at) {
      if (words.size() >= max_words) return false;
      index.emplace(cur, static_cast<std::uint32_t>(words.size()));
      words.push_back(cur);
      if (static_cast<int>(cur.size()) - 1 >= depth) return true;
      for (MorIdx m : c.out(at)) {
        if (!is_letter[m]) continue;
        cur.push_back(m);
        bool ok = grow(c.tgt(m));
        cur.pop_back();
        if (!ok) return false;
      }
      return true;
    };
    for (ObjIdx o = 0; o < c.num_objects(); ++o) {
      cur = {o};
      if (!grow(o)) return false;
    }
    parent.resize(words.size());
    std::iota(parent.begin(), parent.end(), 0);
    return true;
  }

  void link(std::uint32_t id, const std::vector<std::uint32_t>& w, std::size_t pos, std::size_t len,
            std::initializer_list<MorIdx> replacement) {
    std::vector<std::uint32_t> next(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
    for (MorIdx r : replacement)
      if (!c.is_identity(r)) next.push_back(r);
    next.insert(next.end(), w.begin() + static_cast<std::ptrdiff_t>(pos + len), w.end());
    if (static_cast<int>(next.size()) - 1 > depth) return;
    auto it = index.find(next);
    if (it != index.end()) unite(id, it->second);
  }

  // All factorizations m = d∘c with c ∈ v_j and d ∈ v_i.
  template <class F>
  void factorizations(MorIdx m, int i, int j, F&& visit) const {
    for (MorIdx cm : c.out(c.src(m))) {
      if (!in_v(j, cm)) continue;
      for (MorIdx dm : c.hom(c.tgt(cm), c.tgt(m))) {
        if (in_v(i, dm) && c.compose_unchecked(dm, cm) == m) visit(cm, dm);
      }
    }
  }

  void close() {
    const int k = s.k();
    for (std::uint32_t id = 0; id < words.size(); ++id) {
      const auto w = words[id];
      const std::size_t n = w.size() - 1;
      for (std::size_t p = 1; p <= n; ++p) {
        MorIdx x = w[p];
        for (int i = 0; i < k; ++i) {
          if (!in_v(i, x)) continue;
          for (int j = 0; j < k; ++j) {
            if (j == i) continue;
            factorizations(x, i, j, [&](MorIdx cm, MorIdx dm) { link(id, w, p, 1, {cm, dm}); });
          }
        }
        if (p + 1 > n) continue;
        MorIdx y = w[p + 1];
        MorIdx m = c.compose_unchecked(y, x);
        for (int i = 0; i < k; ++i) {
          if (in_v(i, x) && in_v(i, y)) link(id, w, p, 2, {m});
        }
        for (int i = 0; i < k; ++i) {
          if (!in_v(i, x)) continue;
          for (int j = 0; j < k; ++j) {
            if (j == i || !in_v(j, y)) continue;
            factorizations(m, i, j, [&](MorIdx cm, MorIdx dm) { link(id, w, p, 2, {cm, dm}); });
          }
        }
      }
    }
  }

  std::string render(const std::vector<std::uint32_t>& w) const {
    if (w.size() == 1) return "[] at " + c.object_id(w[0]);
    std::string out = "[";
    for (std::size_t p = 1; p < w.size(); ++p) out += (p > 1 ? ", " : "") + c.morphism_id(w[p]);
    return out + "]";
  }
};

// Longest path in the graph of letters, or -1 if it has a cycle.
int longest_letter_path(const FinCat& c, const std::vector<MorIdx>& letters) {
  const auto n = c.num_objects();
  std::vector<std::vector<ObjIdx>> adj(n);
  std::vector<int> indeg(n, 0);
  for (MorIdx m : letters) {
    adj[c.src(m)].push_back(c.tgt(m));
    ++indeg[c.tgt(m)];
  }
  std::vector<ObjIdx> order;
  for (ObjIdx o = 0; o < n; ++o)
    if (indeg[o] == 0) order.push_back(o);
  std::vector<int> dist(n, 0);
  for (std::size_t q = 0; q < order.size(); ++q) {
    ObjIdx o = order[q];
    for (ObjIdx t : adj[o]) {
      dist[t] = std::max(dist[t], dist[o] + 1);
      if (--indeg[t] == 0) order.push_back(t);
    }
  }
  if (order.size() != n) return -1;
  int best = 0;
  for (int d : dist) best = std::max(best, d);
  return best;
}

AxiomVerdict check_relations(const KRelStructure& s, int depth) {
  if (s.k() <= 1) return {};
  const FinCat& c = *s.ambient;
  WordSearch search{s, c, depth, 400000, {}, {}, {}, {}};
  for (MorIdx m = 0; m < c.num_morphisms(); ++m) {
    if (c.is_identity(m)) continue;
    for (const auto& v : s.v) {
      if (v[m]) {
        search.letters.push_back(m);
        break;
      }
    }
  }
  const int longest = longest_letter_path(c, search.letters);
  const bool exact = longest >= 0 && depth >= longest;
  if (!search.enumerate()) {
    return {AxiomStatus::InconclusiveAtDepth, "word enumeration exceeded its limit", depth};
  }
  search.close();
  std::map<MorIdx, std::uint32_t> first_word;
  for (std::uint32_t id = 0; id < search.words.size(); ++id) {
    MorIdx m = search.composite(search.words[id]);
    auto [it, fresh] = first_word.emplace(m, id);
    if (fresh) continue;
    if (search.find(id) != search.find(it->second)) {
      std::string witness = search.render(search.words[it->second]) + " vs " +
                            search.render(search.words[id]) + " (both compose to " + c.morphism_id(m) + ")";
      return {exact ? AxiomStatus::Fail : AxiomStatus::InconclusiveAtDepth, witness, depth};
    }
  }
  if (exact) return {AxiomStatus::Pass, {}, depth};
  return {AxiomStatus::InconclusiveAtDepth, "no split class up to the search depth", depth};
}

}  // namespace

std::string AxiomVerdict::to_string() const {
  switch (status) {
    case AxiomStatus::Pass:
      return "Pass";
    case AxiomStatus::Fail:
      return "Fail(" + witness + ")";
    case AxiomStatus::InconclusiveAtDepth:
      return "InconclusiveAtDepth(" + std::to_string(depth) + ": " + witness + ")";
  }
  return "?";
}

void check_krel_shape(const KRelStructure& s) {
  auto problems = shape_problems(s);
  if (!problems.empty()) throw InvalidInput("k-relative structure: " + problems.front());
}

KRelStructure cat_hat(const CatPtr& c) { return {c, {}, full_mask(*c), false}; }
KRelStructure maximal(const CatPtr& c) { return {c, {full_mask(*c)}, full_mask(*c), false}; }
KRelStructure minimal(const CatPtr& c) { return {c, {full_mask(*c)}, identity_mask(*c), false}; }
KRelStructure all_full(const CatPtr& c, int k) {
  return {c, std::vector<Mask>(static_cast<std::size_t>(k), full_mask(*c)), full_mask(*c), false};
}

KRelReport validate_krel(const KRelStructure& s, int depth) {
  KRelReport report;
  report.shape_problems = shape_problems(s);
  if (!report.shape_problems.empty()) {
    report.generation = {AxiomStatus::Fail, "malformed structure", 0};
    report.relations = {AxiomStatus::Fail, "malformed structure", 0};
    return report;
  }
  report.generation = check_generation(s);
  report.relations = check_relations(s, depth);
  return report;
}

KRelStructure shape_chain(int p, ShapeFlavor flavor, int k, int i) {
  if (k < 0) throw InvalidInput("shape_chain: negative k");
  auto c = chain_cat(p);
  switch (flavor) {
    case ShapeFlavor::W:
      return all_full(c, k);
    case ShapeFlavor::V: {
      if (i < 1 || i > k) {
        throw InvalidInput("shape_chain: index " + std::to_string(i) + " out of range 1.." + std::to_string(k));
      }
      KRelStructure s{c, std::vector<Mask>(static_cast<std::size_t>(k), identity_mask(*c)), identity_mask(*c), false};
      s.v[static_cast<std::size_t>(i - 1)] = full_mask(*c);
      return s;
    }
    case ShapeFlavor::Minimal:
      if (k != 1) throw InvalidInput("shape_chain: the minimal flavor needs k = 1");
      return minimal(c);
  }
  throw InvalidInput("shape_chain: unknown flavor");
}

std::string relative_functor_problem(const KRelFunctor& f) {
  const auto& F = f.functor;
  if (f.source.k() != f.target.k()) return "arity mismatch";
  if (F.source != f.source.ambient || F.target != f.target.ambient) {
    if (F.source->num_morphisms() != f.source.ambient->num_morphisms() ||
        F.target->num_morphisms() != f.target.ambient->num_morphisms())
      return "functor does not match the structures";
  }
  for (MorIdx m = 0; m < F.on_morphisms.size(); ++m) {
    MorIdx t = F.on_morphisms[m];
    if (f.source.w[m] && !f.target.w[t]) {
      return "w-map '" + F.source->morphism_id(m) + "' goes to '" + F.target->morphism_id(t) + "' outside w";
    }
    for (int i = 0; i < f.source.k(); ++i) {
      if (f.source.v[i][m] && !f.target.v[i][t]) {
        return "v" + std::to_string(i + 1) + "-map '" + F.source->morphism_id(m) + "' leaves v" +
               std::to_string(i + 1);
      }
    }
  }
  return {};
}

bool saturation_check(const KRelStructure& s) {
  const FinCat& c = *s.ambient;
  if (s.w == full_mask(c)) return true;
  if (s.w == identity_mask(c)) {
    for (MorIdx m = 0; m < c.num_morphisms(); ++m)
      if (!c.is_identity(m) && inverse_of(c, m)) return false;
    return true;
  }
  return false;
}

}  // namespace relcat
