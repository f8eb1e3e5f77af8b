#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "relcat/arrow/embed.hpp"
#include "relcat/arrow/path.hpp"
#include "relcat/cat/validate.hpp"
#include "relcat/core/caps.hpp"
#include "relcat/io/corpus.hpp"
#include "relcat/io/document.hpp"
#include "relcat/nerve/chains.hpp"
#include "relcat/nerve/verdict.hpp"
#include "relcat/props/properties.hpp"
#include "relcat/rel/wstar.hpp"

namespace relcat {

namespace {

struct Options {
  std::string in;
  std::string out;
  int bound = 4;
  int n = 1;
  int k = 0;
  int depth = 4;
  int window = -1;
  std::string caps;
  std::string format = "text";
  std::uint64_t seed = 1;
  bool strict = false;
  bool stability = false;
  bool quillen = false;
};

struct Result {
  PropertyReport report;
  std::vector<std::string> details;
  std::string family;
  std::optional<Document> product;
};

std::string size_of(const FinCat& c) {
  return std::to_string(c.num_objects()) + " objects, " + std::to_string(c.num_morphisms()) + " morphisms";
}

std::variant<WEVerdict, bool> axiom_outcome(const AxiomVerdict& v) {
  if (v.status == AxiomStatus::InconclusiveAtDepth) return WEVerdict::inconclusive(v.to_string());
  return v.status == AxiomStatus::Pass;
}

void add_validation(PropertyReport& r, const std::string& id, const ValidationReport& v) {
  r.add(id, v.ok(), v.ok() ? std::string() : v.summary());
}

bool is_identity_on(const FinFunctor& f, const FinCat& c) {
  if (f.on_objects.size() != c.num_objects() || f.on_morphisms.size() != c.num_morphisms()) return false;
  for (ObjIdx o = 0; o < c.num_objects(); ++o)
    if (f.obj(o) != o) return false;
  for (MorIdx m = 0; m < c.num_morphisms(); ++m)
    if (f.mor(m) != m) return false;
  return true;
}

// A category input read as a k-relative category: Cat-hat for k = 0,
// every mask full otherwise.
KRelStructure structure_of(const Document& d, int k) {
  if (const auto* s = std::get_if<KRelStructure>(&d.payload)) return *s;
  if (const auto* c = std::get_if<CatPtr>(&d.payload)) return k == 0 ? cat_hat(*c) : all_full(*c, k);
  throw InvalidInput("expected a category or krel document, got " + to_string(d.kind()));
}

template <class T>
const T& expect(const Document& d, DocKind kind) {
  if (d.kind() != kind) throw InvalidInput("expected a " + to_string(kind) + " document, got " + to_string(d.kind()));
  return std::get<T>(d.payload);
}

void add_homology(Result& res, const HomologySignature& h) {
  for (std::size_t d = 0; d < h.groups.size(); ++d) {
    res.details.push_back("H_" + std::to_string(d) + " = " + h.groups[d].to_string());
    res.report.add("H" + std::to_string(d), true, h.groups[d].to_string());
  }
  res.details.push_back("exact through degree " + std::to_string(h.exact_through));
}

Result cmd_validate(const Options& o) {
  const auto doc = read_document(o.in);
  Result res;
  res.report.name = "validate " + to_string(doc.kind());
  auto& r = res.report;
  switch (doc.kind()) {
    case DocKind::Category:
      add_validation(r, "category-laws", validate_cat(*std::get<CatPtr>(doc.payload)));
      break;
    case DocKind::KRel: {
      const auto& s = std::get<KRelStructure>(doc.payload);
      add_validation(r, "category-laws", validate_cat(s.cat()));
      const auto v = validate_krel(s, o.depth);
      r.add("generation", axiom_outcome(v.generation), v.generation.witness);
      r.add("relations", axiom_outcome(v.relations), v.relations.witness);
      break;
    }
    case DocKind::Functor: {
      const auto& f = std::get<FunctorDoc>(doc.payload);
      add_validation(r, "source-laws", validate_cat(*f.functor.source));
      add_validation(r, "target-laws", validate_cat(*f.functor.target));
      add_validation(r, "functor", validate_functor(f.functor));
      break;
    }
    case DocKind::Zigzag: {
      const auto& z = std::get<ZigzagDoc>(doc.payload);
      add_validation(r, "target-laws", validate_cat(*z.f.functor.target));
      add_validation(r, "f", validate_functor(z.f.functor));
      add_validation(r, "g", validate_functor(z.g.functor));
      break;
    }
    case DocKind::Diagram:
      add_validation(r, "simplicial-identities", check_diagram(std::get<CatDiagram>(doc.payload)));
      break;
    case DocKind::Calculus: {
      const auto& c = std::get<CalculusDoc>(doc.payload);
      const auto& cat = c.structure.cat();
      for (const auto& [name, mask] : {std::pair{"u", &c.calculus.u}, std::pair{"v", &c.calculus.v}}) {
        auto problem = subcategory_mask_problem(cat, *mask);
        r.add(std::string(name) + "-subcategory", problem.empty(), problem);
        r.add(std::string(name) + "-in-w", mask_subset(*mask, c.structure.w));
      }
      std::string bad;
      for (MorIdx w = 0; w < cat.num_morphisms(); ++w) {
        if (!c.structure.w[w]) continue;
        auto it = c.calculus.factor.find(w);
        if (it == c.calculus.factor.end()) {
          bad = "no factorization of " + cat.morphism_id(w);
          break;
        }
        const auto [u, v] = it->second;
        if (cat.tgt(u) != cat.src(v) || cat.compose(v, u) != w) {
          bad = cat.morphism_id(v) + " o " + cat.morphism_id(u) + " is not " + cat.morphism_id(w);
          break;
        }
      }
      r.add("factorization", bad.empty(), bad);
      break;
    }
    case DocKind::Grothendieck:
      add_validation(r, "input", validate_grothendieck_input(std::get<GrothendieckInput>(doc.payload)));
      break;
    case DocKind::Report:
      r.add("schema", true);
      break;
  }
  return res;
}

Result cmd_nerve(const Options& o) {
  const auto s = structure_of(read_document(o.in), o.k);
  Result res;
  res.report.name = "nerve";
  if (s.k() == 0) {
    const auto nv = nerve(s.cat(), o.bound);
    for (int d = 0; d <= o.bound; ++d) {
      const auto count = nv.cells[static_cast<std::size_t>(d)].size();
      res.details.push_back("N_" + std::to_string(d) + ": " + std::to_string(count) + " cells");
    }
    add_validation(res.report, "simplicial-identities", check_simplicial_identities(nv));
    const auto chains = normalized_chains(nv);
    const int bad = first_nonzero_square(chains);
    res.report.add("boundary-squared", bad < 0, bad < 0 ? std::string() : "degree " + std::to_string(bad));
    return res;
  }
  const auto nv = k_simplicial_nerve(s, o.bound);
  for (std::size_t L = 0; L < nv.num_levels(); ++L) {
    std::string deg;
    for (int x : nv.degree_of(L)) deg += (deg.empty() ? "" : ",") + std::to_string(x);
    res.details.push_back("N_(" + deg + "): " + std::to_string(nv.cells[L].size()) + " cells");
  }
  add_validation(res.report, "simplicial-identities", check_simplicial_identities(nv));
  return res;
}

Result cmd_homology(const Options& o) {
  const auto doc = read_document(o.in);
  Result res;
  res.report.name = "homology";
  if (const auto* c = std::get_if<CatPtr>(&doc.payload); c && o.k == 0)
    add_homology(res, category_homology(*c, o.bound));
  else
    add_homology(res, relative_homology(structure_of(doc, o.k), o.bound));
  return res;
}

Result cmd_w_star(const Options& o) {
  const auto s = structure_of(read_document(o.in), std::max(o.k, 1));
  if (s.k() == 0) throw InvalidInput("w-star needs k >= 1");
  const int window = o.window < 0 ? 1 : o.window;
  std::vector<WStarLevel> levels;
  auto d = w_star_diagram(s, window, &levels);
  Result res;
  res.report.name = "w-star";
  for (const auto& level : levels) {
    std::string deg;
    for (int x : level.p) deg += (deg.empty() ? "" : ",") + std::to_string(x);
    res.details.push_back("level (" + deg + "): " + size_of(*level.cat));
  }
  add_validation(res.report, "simplicial-identities", check_diagram(d));
  res.product = Document{std::move(d)};
  return res;
}

Result cmd_grothendieck(const Options& o) {
  const auto doc = read_document(o.in);
  const auto& in = expect<GrothendieckInput>(doc, DocKind::Grothendieck);
  Result res;
  res.report.name = "grothendieck";
  add_validation(res.report, "input", validate_grothendieck_input(in));
  if (res.report.overall() != Overall::Pass) return res;
  const auto gr = grothendieck(in);
  res.details.push_back("Gr F: " + size_of(*gr.cat));
  add_validation(res.report, "category-laws", validate_cat(*gr.cat));
  add_validation(res.report, "projection", validate_functor(gr.pi));
  res.product = Document{gr.cat};
  return res;
}

Result cmd_path(const Options& o) {
  const auto z = structure_of(read_document(o.in), o.k);
  const auto path = n_arrow_path(z, o.n);
  Result res;
  res.report.name = "n-arrow path";
  res.details.push_back("path object: " + size_of(path->path.cat()));
  const auto& c = z.cat();
  res.report.add("pi_n o j = id", is_identity_on(compose_functors(path->pi_n, path->j), c));
  res.report.add("pi_0 o j = id", is_identity_on(compose_functors(path->pi_0, path->j), c));
  res.report.add("j", relative_we_verdict(KRelFunctor{z, path->path, path->j}, o.bound));
  res.product = Document{path->path};
  return res;
}

Result cmd_fiber(const Options& o) {
  const auto doc = read_document(o.in);
  const auto& f = expect<FunctorDoc>(doc, DocKind::Functor);
  const auto fib = n_arrow_fiber(f.relative(), o.n);
  Result res;
  res.report.name = "n-arrow fiber";
  res.details.push_back("fibers: " + size_of(fib.fiber.cat()));
  add_validation(res.report, "pi", validate_functor(fib.pi));
  res.product = Document{fib.fiber};
  return res;
}

Result cmd_pullback(const Options& o) {
  const auto doc = read_document(o.in);
  const auto& z = expect<ZigzagDoc>(doc, DocKind::Zigzag);
  const auto pb = n_arrow_pullback(z.f.relative(), z.g.relative(), o.n);
  Result res;
  res.report.name = "n-arrow pullback";
  res.details.push_back("pullback object: " + size_of(pb.object.cat()));
  add_validation(res.report, "pi", validate_functor(pb.pi));
  add_homology(res, relative_homology(pb.object, o.bound));
  res.product = Document{pb.object};
  return res;
}

Result cmd_embed(const Options& o) {
  const auto doc = read_document(o.in);
  const auto& z = expect<ZigzagDoc>(doc, DocKind::Zigzag);
  const auto e = zigzag_embed(z.f.relative(), z.g.relative(), o.n, o.bound);
  Result res;
  res.report.name = "embed";
  res.report.add("squares-commute", e.squares_commute);
  res.report.add("left-pullback", e.left_is_pullback);
  res.report.add("right-pullback", e.right_is_pullback);
  res.report.add("h", e.h_verdict);
  res.report.notes.push_back("k: " + e.k_verdict.to_string());
  std::istringstream lines(embedding_report(e));
  for (std::string line; std::getline(lines, line);) res.details.push_back(line);
  return res;
}

Result cmd_check_bn(const Options& o) {
  const auto doc = read_document(o.in);
  const auto& f = expect<FunctorDoc>(doc, DocKind::Functor);
  Result res;
  if (f.source_structure && f.source_structure->k() > 0)
    res.report = check_Bn(f.relative(), o.n, o.bound, o.window < 0 ? 1 : o.window);
  else
    res.report = check_Bn(f.functor, o.n, o.bound);
  return res;
}

Result cmd_check_cn(const Options& o) {
  const auto doc = read_document(o.in);
  Result res;
  if (const auto* d = std::get_if<CatDiagram>(&doc.payload))
    res.report = check_Cn(*d, o.n, o.bound);
  else if (const auto* c = std::get_if<CatPtr>(&doc.payload); c && o.k == 0)
    res.report = check_Cn(*c, o.n, o.bound);
  else
    res.report = check_Cn(structure_of(doc, o.k), o.n, o.bound, o.window < 0 ? 1 : o.window);
  return res;
}

Result cmd_check_calculus(const Options& o) {
  const auto doc = read_document(o.in);
  const auto& c = expect<CalculusDoc>(doc, DocKind::Calculus);
  const auto cr = check_three_arrow_calculus(c.structure, c.calculus, o.strict);
  Result res;
  res.report.name = o.strict ? "strict 3-arrow calculus" : "3-arrow calculus";
  for (const auto& ch : cr.checks) res.report.add(ch.condition, ch.pass, ch.witness);
  return res;
}

Result cmd_check_relative(const Options& o) {
  const auto doc = read_document(o.in);
  const auto& in = expect<GrothendieckInput>(doc, DocKind::Grothendieck);
  Result res;
  if (!o.quillen) {
    res.report = check_relative_functor(in, o.bound);
    return res;
  }
  const auto q = quillen_lemma_harness(in, o.bound);
  res.report.name = "quillen-lemma";
  res.report.merge(q.relative, "relative/");
  res.report.merge(q.fibrillation, "fibrillation/");
  res.report.add("agree", q.agree(), "relative " + to_string(q.relative.overall()) + ", fibrillation " +
                                         to_string(q.fibrillation.overall()));
  res.family = "default simplex probes of dimension <= 2 over the base";
  return res;
}

Result cmd_check_fibrillation(const Options& o) {
  const auto doc = read_document(o.in);
  FinFunctor p;
  if (const auto* in = std::get_if<GrothendieckInput>(&doc.payload))
    p = grothendieck(*in).pi;
  else
    p = expect<FunctorDoc>(doc, DocKind::Functor).functor;
  const auto family = default_cospan_family(p.target, o.bound);
  Result res;
  res.report = check_fibrillation(p, family, o.bound);
  if (o.stability) res.report.merge(fibrillation_stability(p, family, o.bound), "stability/");
  res.family = "default simplex probes of dimension <= 2, " + std::to_string(family.size()) + " cospans";
  return res;
}

Result cmd_oracle(const Options& o) {
  const auto doc = read_document(o.in);
  const auto& z = expect<ZigzagDoc>(doc, DocKind::Zigzag);
  const auto p = groupoid_pullback_oracle(z.f.functor, z.g.functor);
  const auto h = presentation_homology(p, o.bound);
  Result res;
  res.report.name = "groupoid-oracle";
  const auto problem = p.problem();
  res.report.add("group-axioms", problem.empty(), problem);
  for (std::size_t i = 0; i < p.components.size(); ++i) {
    const auto& c = p.components[i];
    res.details.push_back("component " + c.id + ": isotropy of order " + std::to_string(c.elements.size()) +
                          ", homology " + h[i].to_string());
  }
  res.details.push_back(std::to_string(p.components.size()) + " components");
  return res;
}

Result cmd_verify(const Options& o) {
  const auto doc = read_document(o.in);
  const auto& z = expect<ZigzagDoc>(doc, DocKind::Zigzag);
  const auto t = verify_theorem_Bn(z.f.relative(), z.g.relative(), o.n, o.bound, o.window < 0 ? 0 : o.window);
  Result res;
  auto& r = res.report;
  r.name = "theorem B_n";
  if (t.mode == TheoremReport::Mode::Skipped) {
    const auto* bad = t.hypothesis.first_problem();
    r.add("hypothesis", WEVerdict::inconclusive("B_n does not hold"),
          bad ? bad->id + ": " + bad->outcome_string() : std::string());
  } else {
    r.add("hypothesis", true, std::to_string(t.hypothesis.cases.size()) + " cases");
    r.add("embedding", t.embedding_ok);
    if (t.comparison) r.add("oracle-homology", t.comparison->match, t.comparison->witness);
    r.notes.push_back("k: " + t.k_verdict.to_string());
  }
  r.notes.insert(r.notes.end(), t.notes.begin(), t.notes.end());
  std::istringstream lines(t.to_string());
  for (std::string line; std::getline(lines, line);) res.details.push_back(line);
  return res;
}

int exit_code(Overall o) {
  switch (o) {
    case Overall::Pass:
      return 0;
    case Overall::Refuted:
      return 2;
    case Overall::Inconclusive:
      return 3;
  }
  return 1;
}

void print(const Result& res, const Options& o, std::ostream& out) {
  if (o.format == "machine") {
    out << serialize(Document{report_doc(res.report, o.bound, res.family)});
    return;
  }
  out << res.report.name << "\n";
  for (const auto& d : res.details) out << "  " << d << "\n";
  for (const auto& c : res.report.cases) {
    out << "  [" << relcat::to_string(c.status()) << "] " << c.id << ": " << c.outcome_string();
    if (!c.note.empty()) out << " (" << c.note << ")";
    out << "\n";
  }
  for (const auto& n : res.report.notes) out << "  note: " << n << "\n";
  out << "caps " << Caps::current().to_string() << ", bound " << o.bound;
  if (!res.family.empty()) out << ", family: " << res.family;
  out << "\noverall: " << relcat::to_string(res.report.overall()) << "\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Finite relative categories: nerves, n-arrow objects and property checks", "relcat"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  auto common = [&](CLI::App* s, bool needs_input = true) {
    auto* in = s->add_option("--in", o.in, "input document");
    if (needs_input) in->required()->check(CLI::ExistingFile);
    s->add_option("--out", o.out, "output path");
    s->add_option("--bound", o.bound, "truncation bound")->capture_default_str()->check(CLI::Range(1, 64));
    s->add_option("--n", o.n, "number of arrows")->capture_default_str()->check(CLI::Range(1, 16));
    s->add_option("--k", o.k, "k-relative reading of a plain category")->capture_default_str()->check(CLI::Range(0, 8));
    s->add_option("--depth", o.depth, "search depth for the relation axiom")->capture_default_str();
    s->add_option("--window", o.window, "w_* window [0, window]^k");
    s->add_option("--caps", o.caps, "objects=N,morphisms=M,cells=K");
    s->add_option("--format", o.format, "text or machine")->capture_default_str()->check(
        CLI::IsMember({"text", "machine"}));
  };

  std::vector<std::pair<CLI::App*, std::function<Result(const Options&)>>> commands;
  auto command = [&](CLI::App* parent, const std::string& name, const std::string& help,
                     std::function<Result(const Options&)> run) {
    auto* s = parent->add_subcommand(name, help);
    common(s);
    commands.emplace_back(s, std::move(run));
    return s;
  };

  command(&app, "validate", "check the axioms behind a document", cmd_validate);
  command(&app, "nerve", "truncated nerve cell counts and identities", cmd_nerve);
  command(&app, "homology", "integral homology below the bound", cmd_homology);
  command(&app, "w-star", "higher equivalence diagram on a window", cmd_w_star);
  command(&app, "grothendieck", "Grothendieck construction of a functor into Cat", cmd_grothendieck);
  auto* arrow = app.add_subcommand("n-arrow", "n-arrow constructions");
  arrow->require_subcommand(1);
  command(arrow, "path", "n-arrow path object", cmd_path);
  command(arrow, "fiber", "n-arrow fibers of a functor", cmd_fiber);
  command(arrow, "pullback", "n-arrow pullback object of a zigzag", cmd_pullback);
  command(&app, "embed", "embedding of the strict pullback", cmd_embed);
  auto* check = app.add_subcommand("check", "property checks");
  check->require_subcommand(1);
  command(check, "bn", "property B_n of a functor", cmd_check_bn);
  command(check, "cn", "property C_n of an object", cmd_check_cn);
  command(check, "calculus", "3-arrow calculus conditions", cmd_check_calculus)
      ->add_flag("--strict", o.strict, "also check the strict conditions");
  command(check, "relative", "whether a functor into Cat is relative", cmd_check_relative)
      ->add_flag("--quillen", o.quillen, "compare with the fibrillation test of the projection");
  command(check, "fibrillation", "fibrillation test on the default cospan family", cmd_check_fibrillation)
      ->add_flag("--stability", o.stability, "also check stability under pullback");
  command(&app, "oracle", "groupoid homotopy pullback by double cosets", cmd_oracle);
  command(&app, "verify-theorem", "theorem B_n on a zigzag", cmd_verify);
  auto* corpus = app.add_subcommand("corpus", "write the example corpus");
  common(corpus, false);
  corpus->add_option("--seed", o.seed, "seed for the random entries")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? 0 : 1;
  }

  try {
    Caps caps = Caps::current();
    if (const char* env = std::getenv("RELCAT_CAPS"); env && *env) caps = Caps::parse(env);
    if (!o.caps.empty()) caps = Caps::parse(o.caps);
    ScopedCaps scoped(caps);

    if (*corpus) {
      if (o.out.empty()) throw InvalidInput("corpus needs --out <directory>");
      const auto count = write_corpus(o.out, o.seed);
      out << "wrote " << count << " documents to " << o.out << "\n";
      return 0;
    }
    for (const auto& [sub, run] : commands) {
      if (!*sub) continue;
      Result res;
      try {
        res = run(o);
      } catch (const QuotaError& e) {
        res.report.name = sub->get_name();
        res.report.add("quota", WEVerdict::inconclusive(e.what()));
      }
      if (res.product && !o.out.empty()) write_document(o.out, *res.product);
      print(res, o, out);
      return exit_code(res.report.overall());
    }
    err << app.help();
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace relcat
