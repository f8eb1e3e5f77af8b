#include "relcat/io/document.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"

#include "relcat/cat/constructions.hpp"

namespace relcat {

namespace {

using json = nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw ParseError("at " + (path.empty() ? std::string("/") : path) + ": " + what);
}

std::string sub(const std::string& path, const std::string& key) { return path + "/" + key; }
std::string sub(const std::string& path, std::size_t i) { return path + "/" + std::to_string(i); }

void require_fields(const json& j, const std::string& path, std::initializer_list<const char*> required,
                    std::initializer_list<const char*> optional = {}) {
  if (!j.is_object()) fail(path, "expected an object");
  std::set<std::string> known;
  for (const char* r : required) known.insert(r);
  for (const char* o : optional) known.insert(o);
  for (const auto& item : j.items())
    if (!known.count(item.key())) fail(path, "unknown field '" + item.key() + "'");
  for (const char* r : required)
    if (!j.contains(r)) fail(path, std::string("missing field '") + r + "'");
}

std::string as_string(const json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a string");
  return j.get<std::string>();
}

int as_int(const json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  return j.get<int>();
}

bool as_bool(const json& j, const std::string& path) {
  if (!j.is_boolean()) fail(path, "expected true or false");
  return j.get<bool>();
}

const json& as_array(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array");
  return j;
}

std::vector<std::string> string_array(const json& j, const std::string& path) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < as_array(j, path).size(); ++i) out.push_back(as_string(j[i], sub(path, i)));
  return out;
}

std::vector<std::pair<std::string, std::string>> string_map(const json& j, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& item : j.items()) out.emplace_back(item.key(), as_string(item.value(), sub(path, item.key())));
  return out;
}

// Runs a library call and rethrows its InvalidInput at `path`.
template <class F>
auto at_path(const std::string& path, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const ParseError&) {
    throw;
  } catch (const QuotaError&) {
    throw;
  } catch (const InvalidInput& e) {
    fail(path, e.what());
  }
}

// ---- categories ----

json category_json(const FinCat& c) {
  json j;
  j["objects"] = c.objects();
  json mors = json::array();
  for (const auto& m : c.morphisms())
    mors.push_back({{"id", m.id}, {"src", c.object_id(m.src)}, {"tgt", c.object_id(m.tgt)}});
  j["morphisms"] = std::move(mors);
  json ids = json::object();
  for (ObjIdx o = 0; o < c.num_objects(); ++o) ids[c.object_id(o)] = c.morphism_id(c.identity(o));
  j["identities"] = std::move(ids);
  json table = json::array();
  for (MorIdx f = 0; f < c.num_morphisms(); ++f)
    for (MorIdx g : c.out(c.tgt(f)))
      table.push_back({c.morphism_id(g), c.morphism_id(f), c.morphism_id(c.compose_unchecked(g, f))});
  j["compose"] = std::move(table);
  return j;
}

CatPtr category_from(const json& j, const std::string& path) {
  require_fields(j, path, {"objects", "morphisms", "identities", "compose"});
  auto objects = string_array(j["objects"], sub(path, "objects"));
  std::set<std::string> object_set(objects.begin(), objects.end());
  std::vector<std::array<std::string, 3>> morphisms;
  const auto mpath = sub(path, "morphisms");
  for (std::size_t i = 0; i < as_array(j["morphisms"], mpath).size(); ++i) {
    const auto p = sub(mpath, i);
    const auto& m = j["morphisms"][i];
    require_fields(m, p, {"id", "src", "tgt"});
    std::array<std::string, 3> spec{as_string(m["id"], sub(p, "id")), as_string(m["src"], sub(p, "src")),
                                    as_string(m["tgt"], sub(p, "tgt"))};
    for (int e = 1; e < 3; ++e)
      if (!object_set.count(spec[e]))
        fail(sub(p, e == 1 ? "src" : "tgt"), "unknown object '" + spec[e] + "'");
    morphisms.push_back(std::move(spec));
  }
  auto identities = string_map(j["identities"], sub(path, "identities"));
  std::vector<std::array<std::string, 3>> compose;
  const auto cpath = sub(path, "compose");
  for (std::size_t i = 0; i < as_array(j["compose"], cpath).size(); ++i) {
    auto row = string_array(j["compose"][i], sub(cpath, i));
    if (row.size() != 3) fail(sub(cpath, i), "expected [g, f, g o f]");
    compose.push_back({row[0], row[1], row[2]});
  }
  return at_path(path, [&] { return make_cat_from_table(objects, morphisms, identities, compose); });
}

// ---- k-relative structures ----

json krel_json(const KRelStructure& s) {
  json j;
  j["category"] = category_json(s.cat());
  j["k"] = s.k();
  json v = json::array();
  for (const auto& m : s.v) v.push_back(mask_ids(s.cat(), m));
  j["v"] = std::move(v);
  j["w"] = mask_ids(s.cat(), s.w);
  j["saturated"] = s.saturated_declared;
  return j;
}

Mask mask_at(const FinCat& c, const json& j, const std::string& path) {
  auto ids = string_array(j, path);
  for (std::size_t i = 0; i < ids.size(); ++i)
    if (!c.find_morphism(ids[i])) fail(sub(path, i), "unknown morphism '" + ids[i] + "'");
  return mask_from_ids(c, ids);
}

KRelStructure krel_from(const json& j, const std::string& path) {
  require_fields(j, path, {"category", "k", "v", "w"}, {"saturated"});
  KRelStructure s;
  s.ambient = category_from(j["category"], sub(path, "category"));
  const int k = as_int(j["k"], sub(path, "k"));
  const auto vpath = sub(path, "v");
  for (std::size_t i = 0; i < as_array(j["v"], vpath).size(); ++i) s.v.push_back(mask_at(s.cat(), j["v"][i], sub(vpath, i)));
  if (k != s.k()) fail(sub(path, "k"), "k = " + std::to_string(k) + " but " + std::to_string(s.k()) + " masks in v");
  s.w = mask_at(s.cat(), j["w"], sub(path, "w"));
  if (j.contains("saturated")) s.saturated_declared = as_bool(j["saturated"], sub(path, "saturated"));
  at_path(path, [&] { check_krel_shape(s); });
  return s;
}

// ---- functors ----

json maps_json(const FinFunctor& f) {
  json obj = json::object(), mor = json::object();
  for (ObjIdx o = 0; o < f.source->num_objects(); ++o) obj[f.source->object_id(o)] = f.target->object_id(f.obj(o));
  for (MorIdx m = 0; m < f.source->num_morphisms(); ++m)
    mor[f.source->morphism_id(m)] = f.target->morphism_id(f.mor(m));
  return {{"on_objects", obj}, {"on_morphisms", mor}};
}

FinFunctor functor_at(const CatPtr& source, const CatPtr& target, const json& j, const std::string& path,
                      std::initializer_list<const char*> extra = {}) {
  std::vector<const char*> keys{"on_objects", "on_morphisms"};
  for (const char* e : extra) keys.push_back(e);
  if (!j.is_object()) fail(path, "expected an object");
  for (const auto& item : j.items()) {
    bool known = false;
    for (const char* k : keys) known = known || item.key() == k;
    if (!known) fail(path, "unknown field '" + item.key() + "'");
  }
  for (const char* k : {"on_objects", "on_morphisms"})
    if (!j.contains(k)) fail(path, std::string("missing field '") + k + "'");
  auto objects = string_map(j["on_objects"], sub(path, "on_objects"));
  auto morphisms = string_map(j["on_morphisms"], sub(path, "on_morphisms"));
  for (const auto& [a, b] : objects) {
    if (!source->find_object(a)) fail(sub(path, "on_objects"), "unknown source object '" + a + "'");
    if (!target->find_object(b)) fail(sub(sub(path, "on_objects"), a), "unknown target object '" + b + "'");
  }
  for (const auto& [a, b] : morphisms) {
    if (!source->find_morphism(a)) fail(sub(path, "on_morphisms"), "unknown source morphism '" + a + "'");
    if (!target->find_morphism(b)) fail(sub(sub(path, "on_morphisms"), a), "unknown target morphism '" + b + "'");
  }
  auto f = at_path(path, [&] { return functor_from_ids(source, target, objects, morphisms); });
  for (MorIdx m = 0; m < source->num_morphisms(); ++m)
    if (target->src(f.mor(m)) != f.obj(source->src(m)) || target->tgt(f.mor(m)) != f.obj(source->tgt(m)))
      fail(sub(sub(path, "on_morphisms"), source->morphism_id(m)), "image does not match the object map");
  return f;
}

json endpoint_json(const CatPtr& c, const std::optional<KRelStructure>& s) {
  return s ? krel_json(*s) : category_json(*c);
}

std::pair<CatPtr, std::optional<KRelStructure>> endpoint_from(const json& j, const std::string& path) {
  if (j.is_object() && j.contains("category")) {
    auto s = krel_from(j, path);
    return {s.ambient, s};
  }
  return {category_from(j, path), std::nullopt};
}

json functor_json(const FunctorDoc& f) {
  json j = maps_json(f.functor);
  j["source"] = endpoint_json(f.functor.source, f.source_structure);
  j["target"] = endpoint_json(f.functor.target, f.target_structure);
  return j;
}

FunctorDoc functor_from(const json& j, const std::string& path) {
  require_fields(j, path, {"source", "target", "on_objects", "on_morphisms"});
  auto [src, src_s] = endpoint_from(j["source"], sub(path, "source"));
  auto [tgt, tgt_s] = endpoint_from(j["target"], sub(path, "target"));
  FunctorDoc f;
  f.functor = functor_at(src, tgt, j, path, {"source", "target"});
  f.source_structure = src_s;
  f.target_structure = tgt_s;
  if (src_s.has_value() != tgt_s.has_value())
    fail(path, "source and target must both be categories or both k-relative categories");
  if (src_s) {
    auto problem = relative_functor_problem(f.relative());
    if (!problem.empty()) fail(path, problem);
  }
  return f;
}

// ---- zigzags ----

json zigzag_json(const ZigzagDoc& z) { return {{"f", functor_json(z.f)}, {"g", functor_json(z.g)}}; }

ZigzagDoc zigzag_from(const json& j, const std::string& path) {
  require_fields(j, path, {"f", "g"});
  ZigzagDoc z{functor_from(j["f"], sub(path, "f")), functor_from(j["g"], sub(path, "g"))};
  if (endpoint_json(z.f.functor.target, z.f.target_structure) != endpoint_json(z.g.functor.target, z.g.target_structure))
    fail(sub(sub(path, "g"), "target"), "differs from /f/target");
  z.g.functor.target = z.f.functor.target;
  z.g.target_structure = z.f.target_structure;
  return z;
}

// ---- diagrams ----

json diagram_json(const CatDiagram& d) {
  json levels = json::array(), faces = json::array(), degs = json::array();
  for (std::size_t L = 0; L < d.levels.size(); ++L) {
    levels.push_back(category_json(*d.levels[L]));
    json fl = json::array(), dl = json::array();
    for (std::size_t a = 0; a < d.faces[L].size(); ++a) {
      json fa = json::array(), da = json::array();
      for (const auto& f : d.faces[L][a]) fa.push_back(maps_json(f));
      for (const auto& f : d.degeneracies[L][a]) da.push_back(maps_json(f));
      fl.push_back(std::move(fa));
      dl.push_back(std::move(da));
    }
    faces.push_back(std::move(fl));
    degs.push_back(std::move(dl));
  }
  return {{"arity", d.arity}, {"bound", d.bound}, {"levels", levels}, {"faces", faces}, {"degeneracies", degs}};
}

CatDiagram diagram_from(const json& j, const std::string& path) {
  require_fields(j, path, {"arity", "bound", "levels", "faces", "degeneracies"});
  CatDiagram d;
  d.arity = as_int(j["arity"], sub(path, "arity"));
  d.bound = as_int(j["bound"], sub(path, "bound"));
  if (d.arity < 1 || d.bound < 0) fail(path, "arity must be positive and bound non-negative");
  std::size_t n = 1;
  for (int i = 0; i < d.arity; ++i) n *= static_cast<std::size_t>(d.bound + 1);
  const auto lpath = sub(path, "levels");
  if (as_array(j["levels"], lpath).size() != n) fail(lpath, "expected " + std::to_string(n) + " levels");
  for (std::size_t L = 0; L < n; ++L) d.levels.push_back(category_from(j["levels"][L], sub(lpath, L)));
  d.faces.resize(n);
  d.degeneracies.resize(n);
  for (const char* key : {"faces", "degeneracies"}) {
    const bool face = std::string(key) == "faces";
    const auto kpath = sub(path, key);
    if (as_array(j[key], kpath).size() != n) fail(kpath, "expected " + std::to_string(n) + " levels");
    for (std::size_t L = 0; L < n; ++L) {
      const auto deg = d.degree_of(L);
      const auto& lj = as_array(j[key][L], sub(kpath, L));
      if (lj.size() != static_cast<std::size_t>(d.arity)) fail(sub(kpath, L), "expected one entry per direction");
      auto& out = face ? d.faces[L] : d.degeneracies[L];
      out.resize(static_cast<std::size_t>(d.arity));
      for (int a = 0; a < d.arity; ++a) {
        const int p = deg[static_cast<std::size_t>(a)];
        const bool present = face ? p > 0 : p < d.bound;
        const auto apath = sub(sub(kpath, L), static_cast<std::size_t>(a));
        const auto& aj = as_array(lj[static_cast<std::size_t>(a)], apath);
        const std::size_t expected = present ? static_cast<std::size_t>(p + 1) : 0;
        if (aj.size() != expected) fail(apath, "expected " + std::to_string(expected) + " maps");
        auto other = deg;
        other[static_cast<std::size_t>(a)] += face ? -1 : 1;
        for (std::size_t i = 0; i < expected; ++i)
          out[static_cast<std::size_t>(a)].push_back(
              functor_at(d.levels[L], d.levels[d.level_index(other)], aj[i], sub(apath, i)));
      }
    }
  }
  return d;
}

// ---- calculi ----

json calculus_json(const CalculusDoc& c) {
  const auto& cat = c.structure.cat();
  json factor = json::object();
  for (const auto& [w, uv] : c.calculus.factor)
    factor[cat.morphism_id(w)] = {cat.morphism_id(uv.first), cat.morphism_id(uv.second)};
  json witnesses = json::array();
  for (const auto& [sq, m] : c.calculus.witnesses)
    witnesses.push_back({cat.morphism_id(sq.w), cat.morphism_id(sq.w2), cat.morphism_id(sq.a), cat.morphism_id(sq.b),
                         cat.morphism_id(m)});
  return {{"structure", krel_json(c.structure)},
          {"u", mask_ids(cat, c.calculus.u)},
          {"v", mask_ids(cat, c.calculus.v)},
          {"factor", factor},
          {"witnesses", witnesses}};
}

CalculusDoc calculus_from(const json& j, const std::string& path) {
  require_fields(j, path, {"structure", "u", "v", "factor", "witnesses"});
  CalculusDoc c;
  c.structure = krel_from(j["structure"], sub(path, "structure"));
  const auto& cat = c.structure.cat();
  c.calculus.u = mask_at(cat, j["u"], sub(path, "u"));
  c.calculus.v = mask_at(cat, j["v"], sub(path, "v"));
  auto morphism = [&](const std::string& id, const std::string& p) {
    auto m = cat.find_morphism(id);
    if (!m) fail(p, "unknown morphism '" + id + "'");
    return *m;
  };
  const auto fpath = sub(path, "factor");
  if (!j["factor"].is_object()) fail(fpath, "expected an object");
  for (const auto& item : j["factor"].items()) {
    const auto p = sub(fpath, item.key());
    auto uv = string_array(item.value(), p);
    if (uv.size() != 2) fail(p, "expected [u, v]");
    c.calculus.factor[morphism(item.key(), fpath)] = {morphism(uv[0], sub(p, 0)), morphism(uv[1], sub(p, 1))};
  }
  const auto wpath = sub(path, "witnesses");
  for (std::size_t i = 0; i < as_array(j["witnesses"], wpath).size(); ++i) {
    const auto p = sub(wpath, i);
    auto row = string_array(j["witnesses"][i], p);
    if (row.size() != 5) fail(p, "expected [w, w2, a, b, m]");
    std::array<MorIdx, 5> m{};
    for (std::size_t x = 0; x < 5; ++x) m[x] = morphism(row[x], sub(p, x));
    c.calculus.witnesses[ArrowSquare{m[0], m[1], m[2], m[3]}] = m[4];
  }
  return c;
}

// ---- Grothendieck inputs ----

json grothendieck_json(const GrothendieckInput& in) {
  json fibers = json::object(), actions = json::object();
  for (ObjIdx o = 0; o < in.base->num_objects(); ++o) fibers[in.base->object_id(o)] = category_json(*in.fibers[o]);
  for (MorIdx m = 0; m < in.base->num_morphisms(); ++m) actions[in.base->morphism_id(m)] = maps_json(in.actions[m]);
  return {{"base", category_json(*in.base)},
          {"contravariant", in.contravariant},
          {"fibers", fibers},
          {"actions", actions}};
}

GrothendieckInput grothendieck_from(const json& j, const std::string& path) {
  require_fields(j, path, {"base", "contravariant", "fibers", "actions"});
  GrothendieckInput in;
  in.base = category_from(j["base"], sub(path, "base"));
  in.contravariant = as_bool(j["contravariant"], sub(path, "contravariant"));
  const auto& base = *in.base;
  const auto fpath = sub(path, "fibers");
  if (!j["fibers"].is_object()) fail(fpath, "expected an object");
  std::map<std::string, CatPtr> shared;
  in.fibers.assign(base.num_objects(), nullptr);
  for (const auto& item : j["fibers"].items()) {
    auto o = base.find_object(item.key());
    if (!o) fail(fpath, "unknown base object '" + item.key() + "'");
    const auto text = item.value().dump();
    auto it = shared.find(text);
    if (it == shared.end()) it = shared.emplace(text, category_from(item.value(), sub(fpath, item.key()))).first;
    in.fibers[*o] = it->second;
  }
  for (ObjIdx o = 0; o < base.num_objects(); ++o)
    if (!in.fibers[o]) fail(fpath, "no fiber for base object '" + base.object_id(o) + "'");
  const auto apath = sub(path, "actions");
  if (!j["actions"].is_object()) fail(apath, "expected an object");
  std::vector<bool> seen(base.num_morphisms(), false);
  in.actions.resize(base.num_morphisms());
  for (const auto& item : j["actions"].items()) {
    auto m = base.find_morphism(item.key());
    if (!m) fail(apath, "unknown base morphism '" + item.key() + "'");
    ObjIdx from = base.src(*m), to = base.tgt(*m);
    if (in.contravariant) std::swap(from, to);
    in.actions[*m] = functor_at(in.fibers[from], in.fibers[to], item.value(), sub(apath, item.key()));
    seen[*m] = true;
  }
  for (MorIdx m = 0; m < base.num_morphisms(); ++m)
    if (!seen[m]) fail(apath, "no action for base morphism '" + base.morphism_id(m) + "'");
  return in;
}

// ---- reports ----

json report_json(const ReportDoc& r) {
  json cases = json::array();
  for (const auto& c : r.cases) {
    json x = {{"id", c.id}, {"verdict", c.verdict}};
    if (!c.witness.empty()) x["witness"] = c.witness;
    cases.push_back(std::move(x));
  }
  return {{"name", r.name},
          {"overall", r.overall},
          {"cases", cases},
          {"notes", r.notes},
          {"env", {{"version", r.version}, {"bound", r.bound}, {"caps", r.caps}, {"family", r.family}}}};
}

ReportDoc report_from(const json& j, const std::string& path) {
  require_fields(j, path, {"name", "overall", "cases", "notes", "env"});
  ReportDoc r;
  r.name = as_string(j["name"], sub(path, "name"));
  r.overall = as_string(j["overall"], sub(path, "overall"));
  const auto cpath = sub(path, "cases");
  for (std::size_t i = 0; i < as_array(j["cases"], cpath).size(); ++i) {
    const auto p = sub(cpath, i);
    const auto& c = j["cases"][i];
    require_fields(c, p, {"id", "verdict"}, {"witness"});
    ReportCaseDoc rc{as_string(c["id"], sub(p, "id")), as_string(c["verdict"], sub(p, "verdict")), {}};
    if (c.contains("witness")) rc.witness = as_string(c["witness"], sub(p, "witness"));
    r.cases.push_back(std::move(rc));
  }
  r.notes = string_array(j["notes"], sub(path, "notes"));
  const auto epath = sub(path, "env");
  const auto& env = j["env"];
  require_fields(env, epath, {"version", "bound", "caps", "family"});
  r.version = as_string(env["version"], sub(epath, "version"));
  r.bound = as_int(env["bound"], sub(epath, "bound"));
  r.caps = as_string(env["caps"], sub(epath, "caps"));
  r.family = as_string(env["family"], sub(epath, "family"));
  return r;
}

std::string lower_status(Overall o) {
  switch (o) {
    case Overall::Pass:
      return "pass";
    case Overall::Refuted:
      return "refuted";
    case Overall::Inconclusive:
      return "inconclusive";
  }
  return "?";
}

json payload_json(const Document& doc) {
  return std::visit(
      [](const auto& p) -> json {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, CatPtr>) return category_json(*p);
        if constexpr (std::is_same_v<T, KRelStructure>) return krel_json(p);
        if constexpr (std::is_same_v<T, FunctorDoc>) return functor_json(p);
        if constexpr (std::is_same_v<T, CatDiagram>) return diagram_json(p);
        if constexpr (std::is_same_v<T, ZigzagDoc>) return zigzag_json(p);
        if constexpr (std::is_same_v<T, CalculusDoc>) return calculus_json(p);
        if constexpr (std::is_same_v<T, GrothendieckInput>) return grothendieck_json(p);
        if constexpr (std::is_same_v<T, ReportDoc>) return report_json(p);
      },
      doc.payload);
}

std::string position_of(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

}  // namespace

std::string to_string(DocKind k) {
  switch (k) {
    case DocKind::Category:
      return "category";
    case DocKind::KRel:
      return "krel";
    case DocKind::Functor:
      return "functor";
    case DocKind::Diagram:
      return "diagram";
    case DocKind::Zigzag:
      return "zigzag";
    case DocKind::Calculus:
      return "calculus";
    case DocKind::Grothendieck:
      return "grothendieck";
    case DocKind::Report:
      return "report";
  }
  return "?";
}

KRelFunctor FunctorDoc::relative() const {
  return {source_structure ? *source_structure : cat_hat(functor.source),
          target_structure ? *target_structure : cat_hat(functor.target), functor};
}

ReportDoc report_doc(const PropertyReport& r, int bound, const std::string& family) {
  ReportDoc d;
  d.name = r.name;
  d.overall = lower_status(r.overall());
  for (const auto& c : r.cases) {
    auto witness = c.outcome_string();
    if (!c.note.empty()) witness += "; " + c.note;
    d.cases.push_back({c.id, lower_status(c.status()), witness});
  }
  d.notes = r.notes;
  d.bound = bound;
  d.caps = Caps::current().to_string();
  d.family = family;
  return d;
}

DocKind Document::kind() const { return static_cast<DocKind>(payload.index()); }

Document parse_document(std::string_view text) {
  json j;
  try {
    j = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    std::string what = e.what();
    if (auto p = what.find("syntax error"); p != std::string::npos) what = what.substr(p);
    throw ParseError(position_of(text, e.byte) + ": " + what);
  }
  if (!j.is_object()) fail("", "expected an object");
  if (!j.contains("format_version")) fail("", "missing field 'format_version'");
  if (!j.contains("kind")) fail("", "missing field 'kind'");
  const int version = as_int(j["format_version"], "/format_version");
  if (version != kFormatVersion)
    fail("/format_version", "unsupported version " + std::to_string(version) + " (expected " +
                                std::to_string(kFormatVersion) + ")");
  const auto kind = as_string(j["kind"], "/kind");
  j.erase("format_version");
  j.erase("kind");
  if (kind == "category") return {category_from(j, "")};
  if (kind == "krel") return {krel_from(j, "")};
  if (kind == "functor") return {functor_from(j, "")};
  if (kind == "diagram") return {diagram_from(j, "")};
  if (kind == "zigzag") return {zigzag_from(j, "")};
  if (kind == "calculus") return {calculus_from(j, "")};
  if (kind == "grothendieck") return {grothendieck_from(j, "")};
  if (kind == "report") return {report_from(j, "")};
  fail("/kind", "unknown kind '" + kind + "'");
}

std::string serialize(const Document& doc) {
  json j = payload_json(doc);
  j["format_version"] = kFormatVersion;
  j["kind"] = to_string(doc.kind());
  return j.dump(2) + "\n";
}

Document read_document(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    return parse_document(ss.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void write_document(const std::string& path, const Document& doc) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot write '" + path + "'");
  out << serialize(doc);
  if (!out) throw InvalidInput("write failed for '" + path + "'");
}

}  // namespace relcat
