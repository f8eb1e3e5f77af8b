#include <map>
#include <set>

#include "doctest.h"
#include "relcat/cat/constructions.hpp"
#include "relcat/cat/structure.hpp"
#include "relcat/cat/validate.hpp"
#include "relcat/core/error.hpp"

using namespace relcat;

namespace {

CatPtr broken_one_object() {
  // g∘g = id but id∘g = id as well: the left identity law fails at g.
  return make_cat_from_table({"*"}, {{"id", "*", "*"}, {"g", "*", "*"}}, {{"*", "id"}},
                             {{"id", "id", "id"}, {"id", "g", "id"}, {"g", "id", "g"}, {"g", "g", "id"}});
}

std::vector<CatPtr> small_corpus() {
  return {empty_cat(),
          terminal_cat(),
          chain_cat(1),
          chain_cat(2),
          chain_cat(3),
          cyclic_group_cat(2),
          cyclic_group_cat(3),
          cyclic_group_cat(4),
          klein_four_cat(),
          symmetric3_cat(),
          discrete_cat({"a", "b"}),
          poset_cat({"a", "b", "c", "d"}, {{"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"}}),
          free_category_on_acyclic_graph({"a", "b"}, {{"f", "a", "b"}, {"g", "a", "b"}})};
}

std::string strip_terminal_component(const std::string& id) {
  // "(x,0)" or "(x,0->0)" → "x"
  for (const char* suffix : {",0)", ",0->0)"}) {
    std::string s(suffix);
    if (id.size() > s.size() + 1 && id.front() == '(' && id.compare(id.size() - s.size(), s.size(), s) == 0)
      return id.substr(1, id.size() - s.size() - 1);
  }
  return id;
}

}  // namespace

TEST_CASE("terminal category is valid") {
  auto t = terminal_cat();
  CHECK(t->num_objects() == 1);
  CHECK(t->num_morphisms() == 1);
  CHECK(validate_cat(*t).ok());
}

TEST_CASE("identity-law violation is reported with its witness") {
  auto c = broken_one_object();
  auto report = validate_cat(*c);
  REQUIRE_FALSE(report.ok());
  bool found = false;
  for (const auto& v : report.violations)
    if (v.axiom == "identity" && v.witness.find("g") != std::string::npos) found = true;
  CHECK(found);
}

TEST_CASE("BC2 satisfies the category axioms") {
  auto c = cyclic_group_cat(2);
  CHECK(c->num_objects() == 1);
  CHECK(c->num_morphisms() == 2);
  // Independent brute force over the 2x2 table: identity and associativity.
  const MorIdx e = c->morphism_index("e"), g = c->morphism_index("g");
  CHECK(c->compose(g, g) == e);
  for (MorIdx x : {e, g}) {
    CHECK(c->compose(e, x) == x);
    CHECK(c->compose(x, e) == x);
    for (MorIdx y : {e, g})
      for (MorIdx z : {e, g}) CHECK(c->compose(x, c->compose(y, z)) == c->compose(c->compose(x, y), z));
  }
  CHECK(validate_cat(*c).ok());
}

TEST_CASE("every library constructor yields a valid category") {
  for (const auto& c : small_corpus()) CHECK_MESSAGE(validate_cat(*c).ok(), validate_cat(*c).summary());
}

TEST_CASE("missing composite entries are rejected at construction") {
  CHECK_THROWS_AS(make_cat_from_table({"*"}, {{"id", "*", "*"}, {"g", "*", "*"}}, {{"*", "id"}},
                                      {{"id", "id", "id"}, {"id", "g", "g"}, {"g", "id", "g"}}),
                  InvalidInput);
  CHECK_THROWS_AS(make_cat_from_table({"a"}, {{"id", "a", "b"}}, {{"a", "id"}}, {}), InvalidInput);
}

TEST_CASE("product") {
  SUBCASE("C x terminal is C after dropping the terminal component") {
    for (const auto& c : small_corpus()) {
      auto p = product(c, terminal_cat());
      CHECK(canonical_encoding(*p.cat, strip_terminal_component) == canonical_encoding(*c));
      CHECK(validate_functor(p.first).ok());
      CHECK(validate_functor(p.second).ok());
    }
  }
  SUBCASE("[2] x [1] has 6 objects and 18 morphisms") {
    auto p = product(chain_cat(2), chain_cat(1));
    CHECK(p.cat->num_objects() == 6);
    CHECK(p.cat->num_morphisms() == 18);
    CHECK(validate_cat(*p.cat).ok());
  }
  SUBCASE("BC2 x BC2 is the Klein four group") {
    auto p = product(cyclic_group_cat(2), cyclic_group_cat(2));
    CHECK(p.cat->num_objects() == 1);
    CHECK(p.cat->num_morphisms() == 4);
    auto v4 = klein_four_cat();
    const std::map<std::string, std::string> rename{{"(e,e)", "e"}, {"(g,e)", "a"}, {"(e,g)", "b"}, {"(g,g)", "c"}};
    auto as_v4 = [&](const std::string& id) {
      auto it = rename.find(id);
      return it == rename.end() ? std::string("*") : it->second;
    };
    CHECK(canonical_encoding(*p.cat, as_v4) == canonical_encoding(*v4));
  }
  SUBCASE("associative under pair flattening") {
    auto a = chain_cat(1);
    auto b = cyclic_group_cat(2);
    auto c = poset_cat({"x", "y"}, {{"x", "y"}});
    auto left = product(product(a, b).cat, c).cat;
    auto right = product(a, product(b, c).cat).cat;
    CHECK(canonical_encoding(*left, flatten_pair_id) == canonical_encoding(*right, flatten_pair_id));
    CHECK(canonical_encoding(*left) != canonical_encoding(*right));
  }
}

TEST_CASE("pullback") {
  SUBCASE("along identities it is the diagonal") {
    for (const auto& c : small_corpus()) {
      auto id = identity_functor(c);
      auto pb = pullback_cat(id, id);
      CHECK(pb.cat->num_objects() == c->num_objects());
      CHECK(pb.cat->num_morphisms() == c->num_morphisms());
      CHECK(is_isomorphism(pb.first));
      CHECK(validate_cat(*pb.cat).ok());
    }
  }
  SUBCASE("{0} -> [1] <- {1} is empty") {
    auto d1 = chain_cat(1);
    auto pb = pullback_cat(object_inclusion(d1, 0), object_inclusion(d1, 1));
    CHECK(pb.cat->num_objects() == 0);
    CHECK(pb.cat->num_morphisms() == 0);
  }
  SUBCASE("BC2 x_BC2 BC2 along identities is BC2") {
    auto c2 = cyclic_group_cat(2);
    auto pb = pullback_cat(identity_functor(c2), identity_functor(c2));
    CHECK(pb.cat->num_morphisms() == 2);
    CHECK(is_isomorphism(pb.second));
  }
  SUBCASE("strict universal property against small cones") {
    // Cospans into [1] and BC2; cones from every corpus category with at most
    // 4 objects. Exactly one factorization through the pullback must exist.
    auto d1 = chain_cat(1);
    auto c2 = cyclic_group_cat(2);
    std::vector<std::pair<FinFunctor, FinFunctor>> cospans{
        {identity_functor(d1), object_inclusion(d1, 1)},
        {identity_functor(d1), identity_functor(d1)},
        {object_inclusion(c2, 0), identity_functor(c2)}};
    std::vector<CatPtr> sources{terminal_cat(), chain_cat(1), discrete_cat({"a", "b"}), cyclic_group_cat(2),
                                poset_cat({"a", "b", "c"}, {{"a", "c"}, {"b", "c"}})};
    int cones = 0;
    for (const auto& [f, g] : cospans) {
      auto pb = pullback_cat(f, g);
      for (const auto& w : sources) {
        for (const auto& a : enumerate_functors(w, f.source)) {
          for (const auto& b : enumerate_functors(w, g.source)) {
            if (canonical_encoding(compose_functors(f, a)) != canonical_encoding(compose_functors(g, b))) continue;
            ++cones;
            int factorizations = 0;
            for (const auto& u : enumerate_functors(w, pb.cat)) {
              if (canonical_encoding(compose_functors(pb.first, u)) == canonical_encoding(a) &&
                  canonical_encoding(compose_functors(pb.second, u)) == canonical_encoding(b))
                ++factorizations;
            }
            CHECK(factorizations == 1);
          }
        }
      }
    }
    CHECK(cones > 10);
  }
}

TEST_CASE("opposite") {
  auto d1 = chain_cat(1);
  auto op = opposite(d1);
  auto m = op->morphism_index("0->1");
  CHECK(op->object_id(op->src(m)) == "1");
  CHECK(op->object_id(op->tgt(m)) == "0");
  for (const auto& c : small_corpus()) {
    CHECK(validate_cat(*opposite(c)).ok());
    CHECK(canonical_encoding(*opposite(opposite(c))) == canonical_encoding(*c));
  }
  // Inversion is an isomorphism BC2 → BC2^op.
  auto c2 = cyclic_group_cat(2);
  auto c2op = opposite(c2);
  FinFunctor inv{c2, c2op, {0}, {}};
  for (MorIdx x = 0; x < c2->num_morphisms(); ++x) inv.on_morphisms.push_back(*inverse_of(*c2, x));
  CHECK(validate_functor(inv).ok());
  CHECK(is_isomorphism(inv));
}

TEST_CASE("free category on an acyclic graph") {
  auto single = free_category_on_acyclic_graph({"a", "b"}, {{"e", "a", "b"}});
  CHECK(single->num_objects() == 2);
  CHECK(single->num_morphisms() == 3);
  auto rename = [](const std::string& id) {
    if (id == "a" || id == "id_a") return std::string(id == "a" ? "0" : "0->0");
    if (id == "b" || id == "id_b") return std::string(id == "b" ? "1" : "1->1");
    return std::string("0->1");
  };
  CHECK(canonical_encoding(*single, rename) == canonical_encoding(*chain_cat(1)));

  auto parallel = free_category_on_acyclic_graph({"a", "b"}, {{"f", "a", "b"}, {"g", "a", "b"}});
  CHECK(parallel->num_objects() == 2);
  CHECK(parallel->num_morphisms() == 4);

  auto path = free_category_on_acyclic_graph({"a", "b", "c"}, {{"f", "a", "b"}, {"g", "b", "c"}});
  CHECK(path->num_morphisms() == 6);
  CHECK(path->morphism_id(path->compose(path->morphism_index("g"), path->morphism_index("f"))) == "g.f");

  try {
    free_category_on_acyclic_graph({"a", "b", "c"}, {{"x", "a", "b"}, {"y", "b", "c"}, {"z", "c", "a"}});
    FAIL("cycle not detected");
  } catch (const InvalidInput& e) {
    std::string msg = e.what();
    CHECK(msg.find("cycle") != std::string::npos);
    CHECK(msg.find("a -> b -> c -> a") != std::string::npos);
  }
}

TEST_CASE("functors and natural transformations") {
  auto d2 = chain_cat(2);
  auto id = identity_functor(d2);
  CHECK(validate_functor(id).ok());
  auto bad = id;
  bad.on_morphisms[d2->morphism_index("0->2")] = d2->morphism_index("0->1");
  CHECK_FALSE(validate_functor(bad).ok());

  // Two constant functors [1] → [1] and the transformation 0 ⇒ 1.
  auto d1 = chain_cat(1);
  NatTransformation t{constant_functor(d1, d1, 0), constant_functor(d1, d1, 1),
                      {d1->morphism_index("0->1"), d1->morphism_index("0->1")}};
  CHECK(validate_nat(t).ok());
  // The reverse direction has no components.
  NatTransformation back{constant_functor(d1, d1, 1), constant_functor(d1, d1, 0),
                         {d1->morphism_index("0->1"), d1->morphism_index("0->1")}};
  CHECK_FALSE(validate_nat(back).ok());

  // Non-natural: identity functor to constant 1 with components 0->1, 1->1 is
  // natural; swap in a wrong component on a group to break naturality.
  auto c3 = cyclic_group_cat(3);
  auto s3 = symmetric3_cat();
  auto r = s3->morphism_index("r");
  auto s = s3->morphism_index("s");
  FinFunctor rot{c3, s3, {0}, {s3->morphism_index("e"), r, s3->morphism_index("r2")}};
  REQUIRE(validate_functor(rot).ok());
  CHECK(validate_nat({rot, rot, {s3->morphism_index("e")}}).ok());
  CHECK_FALSE(validate_nat({rot, rot, {s}}).ok());
}

TEST_CASE("structure helpers") {
  auto circle = poset_cat({"a", "b", "c", "d"}, {{"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"}});
  CHECK(components(*circle).count == 1);
  CHECK(components(*discrete_cat({"x", "y", "z"})).count == 3);
  CHECK(components(*empty_cat()).count == 0);
  CHECK(is_groupoid(*symmetric3_cat()));
  CHECK_FALSE(is_groupoid(*chain_cat(1)));
  CHECK(is_thin(*circle));
  CHECK_FALSE(is_thin(*cyclic_group_cat(2)));

  // The codiscrete groupoid on three objects has a one-object skeleton.
  std::vector<std::pair<std::string, std::string>> all;
  for (auto a : {"x", "y", "z"})
    for (auto b : {"x", "y", "z"}) all.emplace_back(a, b);
  auto codiscrete = poset_cat({"x", "y", "z"}, all);
  auto sk = skeleton(codiscrete);
  CHECK(sk.cat->num_objects() == 1);
  CHECK(sk.cat->num_morphisms() == 1);
  CHECK(validate_functor(sk.retraction).ok());
  CHECK(validate_functor(sk.inclusion).ok());
  auto ri = compose_functors(sk.retraction, sk.inclusion);
  CHECK(canonical_encoding(ri) == canonical_encoding(identity_functor(sk.cat)));

  // Skeleton of the C2 translation-style groupoid (two isomorphic objects with
  // trivial automorphisms) plus a group: retraction is still a functor.
  auto pb = product(codiscrete, cyclic_group_cat(2)).cat;
  auto sk2 = skeleton(pb);
  CHECK(sk2.cat->num_objects() == 1);
  CHECK(sk2.cat->num_morphisms() == 2);
  CHECK(validate_functor(sk2.retraction).ok());
}

TEST_CASE("caps abort oversized constructions") {
  ScopedCaps guard(Caps{.max_objects = 10, .max_morphisms = 20});
  CHECK_NOTHROW(chain_cat(3));
  CHECK_THROWS_AS(chain_cat(10), QuotaError);
  CHECK_THROWS_AS(product(chain_cat(3), chain_cat(3)), QuotaError);
}

TEST_CASE("caps parsing") {
  auto caps = Caps::parse("objects=5,morphisms=7");
  CHECK(caps.max_objects == 5);
  CHECK(caps.max_morphisms == 7);
  CHECK(Caps::parse(caps.to_string()) == caps);
  CHECK_THROWS_AS(Caps::parse("objects=x"), InvalidInput);
  CHECK_THROWS_AS(Caps::parse("widgets=3"), InvalidInput);
}

TEST_CASE("functor enumeration counts") {
  // Functors [1] → [1]: monotone maps on objects, 3 of them.
  CHECK(enumerate_functors(chain_cat(1), chain_cat(1)).size() == 3);
  // Homomorphisms C2 → C4: 2; C4 → C2: 2; V4 → V4: 16.
  CHECK(enumerate_functors(cyclic_group_cat(2), cyclic_group_cat(4)).size() == 2);
  CHECK(enumerate_functors(cyclic_group_cat(4), cyclic_group_cat(2)).size() == 2);
  CHECK(enumerate_functors(klein_four_cat(), klein_four_cat()).size() == 16);
  CHECK(enumerate_functors(cyclic_group_cat(3), symmetric3_cat()).size() == 3);
}
