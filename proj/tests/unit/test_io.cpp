#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "relcat/cat/constructions.hpp"
#include "relcat/io/corpus.hpp"
#include "relcat/io/document.hpp"

using namespace relcat;

namespace {

const std::string kCorpusDir = std::string(RELCAT_TEST_DATA_DIR) + "/corpus";

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string parse_error_of(const std::string& text) {
  try {
    parse_document(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return {};
}

const std::string kTinyCategory = R"({
  "format_version": 1,
  "kind": "category",
  "objects": ["a", "b"],
  "morphisms": [{"id": "1a", "src": "a", "tgt": "a"}, {"id": "1b", "src": "b", "tgt": "b"},
                {"id": "f", "src": "a", "tgt": "q"}],
  "identities": {"a": "1a", "b": "1b"},
  "compose": []
})";

}  // namespace

TEST_CASE("every corpus document round-trips") {
  for (const auto& e : generate_corpus()) {
    CAPTURE(e.name);
    const auto text = serialize(e.doc);
    const auto again = parse_document(text);
    CHECK(again.kind() == e.doc.kind());
    CHECK(serialize(again) == text);
  }
}

TEST_CASE("golden corpus files are canonical and regenerate byte for byte") {
  const auto corpus = generate_corpus(1);
  std::size_t files = 0;
  for (const auto& entry : std::filesystem::directory_iterator(kCorpusDir)) {
    (void)entry;
    ++files;
  }
  CHECK(files == corpus.size());
  for (const auto& e : corpus) {
    CAPTURE(e.name);
    const auto bytes = slurp(kCorpusDir + "/" + e.name + ".json");
    CHECK(serialize(e.doc) == bytes);
    CHECK(serialize(parse_document(bytes)) == bytes);
  }
}

TEST_CASE("BC2 document") {
  const auto doc = read_document(kCorpusDir + "/bc2.json");
  REQUIRE(doc.kind() == DocKind::Category);
  const auto& c = std::get<CatPtr>(doc.payload);
  CHECK(c->num_objects() == 1);
  CHECK(c->num_morphisms() == 2);
  CHECK(c->compose(c->morphism_index("g"), c->morphism_index("g")) == c->morphism_index("e"));
}

TEST_CASE("corpus generation is deterministic") {
  auto text = [](const std::vector<CorpusEntry>& c) {
    std::string s;
    for (const auto& e : c) s += e.name + "\n" + serialize(e.doc);
    return s;
  };
  CHECK(text(generate_corpus(7)) == text(generate_corpus(7)));
  const auto a = generate_corpus(1), b = generate_corpus(2);
  REQUIRE(a.size() == b.size());
  std::vector<std::string> differing;
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].name == b[i].name);
    if (serialize(a[i].doc) != serialize(b[i].doc)) differing.push_back(a[i].name);
  }
  for (const auto& name : differing) CHECK(name.find("random") != std::string::npos);
}

TEST_CASE("corpus contents") {
  const auto corpus = generate_corpus();
  auto find = [&](const std::string& name) -> const Document& {
    for (const auto& e : corpus)
      if (e.name == name) return e.doc;
    FAIL("missing corpus entry " << name);
    throw;
  };
  const auto& zz = std::get<ZigzagDoc>(find("zz_delta1").payload);
  CHECK(zz.f.functor.target == zz.g.functor.target);
  CHECK(zz.f.functor.target->num_objects() == 2);
  CHECK(zz.f.functor.target->object_id(zz.f.functor.obj(0)) == "0");
  CHECK(zz.g.functor.target->object_id(zz.g.functor.obj(0)) == "1");
  CHECK(std::get<KRelStructure>(find("chain3_w").payload).cat().num_objects() == 4);
  CHECK(std::get<CatPtr>(find("bs3").payload)->num_morphisms() == 6);
  CHECK(std::get<GrothendieckInput>(find("gr_empty_to_point").payload).fibers[0]->num_objects() == 0);
  CHECK(std::get<KRelStructure>(find("square_k2").payload).k() == 2);
  for (auto kind : {DocKind::Category, DocKind::KRel, DocKind::Functor, DocKind::Diagram, DocKind::Zigzag,
                    DocKind::Calculus, DocKind::Grothendieck})
    CHECK_FALSE(entries_of_kind(corpus, kind).empty());
}

TEST_CASE("parse errors") {
  SUBCASE("unknown object is named with its location") {
    const auto msg = parse_error_of(kTinyCategory);
    CHECK(msg.find("/morphisms/2/tgt") != std::string::npos);
    CHECK(msg.find("'q'") != std::string::npos);
  }
  SUBCASE("syntax errors carry line and column") {
    const auto msg = parse_error_of("{\n  \"format_version\": 1,\n  \"kind\": ]\n}");
    CHECK(msg.find("line 3, column 11") != std::string::npos);
  }
  SUBCASE("unknown fields are rejected") {
    auto text = kTinyCategory;
    text.replace(text.find("\"compose\""), 9, "\"extra\": 1, \"compose\"");
    CHECK(parse_error_of(text).find("unknown field 'extra'") != std::string::npos);
  }
  SUBCASE("format version") {
    auto text = serialize(Document{terminal_cat()});
    text.replace(text.find("\"format_version\": 1"), 19, "\"format_version\": 2");
    CHECK(parse_error_of(text).find("unsupported version 2") != std::string::npos);
  }
  SUBCASE("missing composite") {
    auto j = nlohmann::json::parse(serialize(Document{cyclic_group_cat(2)}));
    j["compose"].erase(3);
    CHECK(parse_error_of(j.dump()).find("missing composite") != std::string::npos);
  }
  SUBCASE("w must lie in every v_i") {
    auto j = nlohmann::json::parse(serialize(Document{shape_chain(1, ShapeFlavor::V, 2, 2)}));
    j["w"].push_back("0->1");
    CHECK(parse_error_of(j.dump()).find("w is not contained in v1") != std::string::npos);
  }
  SUBCASE("zigzag feet must share the target") {
    auto bc2 = maximal(cyclic_group_cat(2));
    auto bc3 = maximal(cyclic_group_cat(3));
    auto pt = terminal_cat();
    auto into = [&](const KRelStructure& z) {
      return FunctorDoc{object_inclusion(z.ambient, 0), maximal(pt), z};
    };
    auto f = into(bc2), g = into(bc3);
    f.functor.source = f.source_structure->ambient;
    g.functor.source = g.source_structure->ambient;
    const auto msg = parse_error_of(serialize(Document{ZigzagDoc{f, g}}));
    CHECK(msg.find("/g/target") != std::string::npos);
  }
  SUBCASE("functor images must match endpoints") {
    auto j = nlohmann::json::parse(serialize(Document{FunctorDoc{object_inclusion(chain_cat(1), 0), std::nullopt, std::nullopt}}));
    j["on_morphisms"]["0->0"] = "1->1";
    CHECK(parse_error_of(j.dump()).find("does not match") != std::string::npos);
  }
}

TEST_CASE("report documents") {
  PropertyReport r;
  r.name = "B_n";
  r.add("a", WEVerdict::consistent(3));
  r.add("b", WEVerdict::refuted(0, "pi0: 0 vs 1"), "over 0->1");
  r.notes.push_back("n = 1");
  const auto doc = report_doc(r, 4, "none");
  CHECK(doc.overall == "refuted");
  CHECK(doc.cases[1].verdict == "refuted");
  CHECK(doc.cases[1].witness == "Refuted(0: pi0: 0 vs 1); over 0->1");
  CHECK(doc.version == kToolVersion);
  const auto text = serialize(Document{doc});
  CHECK(serialize(parse_document(text)) == text);
}
