#include "doctest.h"
#include "relcat/cat/constructions.hpp"
#include "relcat/cat/structure.hpp"
#include "relcat/core/error.hpp"
#include "relcat/nerve/verdict.hpp"
#include "relcat/props/properties.hpp"
#include "relcat/rel/calculus.hpp"

using namespace relcat;

namespace {

KRelFunctor point_into(const KRelStructure& z, const std::string& object) {
  auto pt = terminal_cat();
  return {maximal(pt), z, object_inclusion(z.ambient, z.cat().object_index(object))};
}

GrothendieckInput constant_input(const CatPtr& base, const CatPtr& fiber) {
  GrothendieckInput in{base, {}, {}, false};
  for (ObjIdx o = 0; o < base->num_objects(); ++o) in.fibers.push_back(fiber);
  for (MorIdx m = 0; m < base->num_morphisms(); ++m) in.actions.push_back(identity_functor(fiber));
  return in;
}

GrothendieckInput swap_input() {
  auto bc2 = cyclic_group_cat(2);
  auto two = discrete_cat({"a", "b"});
  GrothendieckInput in{bc2, {two}, {}, false};
  for (MorIdx m = 0; m < bc2->num_morphisms(); ++m) {
    if (bc2->is_identity(m))
      in.actions.push_back(identity_functor(two));
    else
      in.actions.push_back(functor_from_ids(two, two, {{"a", "b"}, {"b", "a"}}, {{"id_a", "id_b"}, {"id_b", "id_a"}}));
  }
  return in;
}

// F(0) = ∅, F(1) = terminal over Δ¹; contravariantly F(0) = terminal, F(1) = ∅.
GrothendieckInput empty_to_point(bool contravariant = false) {
  auto d1 = chain_cat(1);
  auto e = empty_cat();
  auto pt = terminal_cat();
  GrothendieckInput in{d1, {e, pt}, {}, contravariant};
  if (contravariant) in.fibers = {pt, e};
  for (MorIdx m = 0; m < d1->num_morphisms(); ++m) {
    const auto& id = d1->morphism_id(m);
    if (id == "0->0") in.actions.push_back(identity_functor(in.fibers[0]));
    if (id == "1->1") in.actions.push_back(identity_functor(in.fibers[1]));
    if (id == "0->1") in.actions.push_back(FinFunctor{e, pt, {}, {}});
  }
  return in;
}

// Δ¹ acting by the inclusion {0} → [1].
GrothendieckInput point_to_chain() {
  auto d1 = chain_cat(1);
  auto inc = object_inclusion(d1, 0);
  auto pt = inc.source;
  GrothendieckInput in{d1, {pt, d1}, {}, false};
  for (MorIdx m = 0; m < d1->num_morphisms(); ++m) {
    const auto& id = d1->morphism_id(m);
    if (id == "0->0") in.actions.push_back(identity_functor(pt));
    if (id == "1->1") in.actions.push_back(identity_functor(d1));
    if (id == "0->1") in.actions.push_back(inc);
  }
  return in;
}

std::vector<GrothendieckInput> grothendieck_corpus() {
  return {constant_input(chain_cat(1), chain_cat(1)), constant_input(cyclic_group_cat(2), discrete_cat({"a", "b"})),
          swap_input(), empty_to_point(), point_to_chain(),
          constant_input(poset_cat({"x", "m", "y"}, {{"x", "m"}, {"y", "m"}}), cyclic_group_cat(2))};
}

ThreeArrowCalculus identity_u_calculus(const KRelStructure& z) {
  ThreeArrowCalculus cal{identity_mask(*z.ambient), z.w, {}, {}};
  for (MorIdx w = 0; w < z.ambient->num_morphisms(); ++w)
    if (z.w[w]) cal.factor[w] = {z.ambient->identity(z.ambient->src(w)), w};
  derive_unique_witnesses(z, cal);
  return cal;
}

ThreeArrowCalculus iso_calculus(const KRelStructure& z) {
  ThreeArrowCalculus cal{z.w, z.w, {}, {}};
  for (MorIdx w = 0; w < z.ambient->num_morphisms(); ++w)
    cal.factor[w] = {z.ambient->identity(z.ambient->src(w)), w};
  derive_unique_witnesses(z, cal);
  return cal;
}

const PropertyCase* find_case(const PropertyReport& r, const std::string& id) {
  for (const auto& c : r.cases)
    if (c.id == id) return &c;
  return nullptr;
}

}  // namespace

TEST_CASE("report aggregation") {
  PropertyReport r;
  CHECK(r.overall() == Overall::Pass);
  r.add("a", WEVerdict::consistent(2));
  r.add("b", true);
  CHECK(r.overall() == Overall::Pass);
  r.add("c", WEVerdict::inconclusive("quota"));
  CHECK(r.overall() == Overall::Inconclusive);
  r.add("d", false);
  CHECK(r.overall() == Overall::Refuted);
  CHECK(r.first_problem()->id == "d");
}

TEST_CASE("check_relative_functor") {
  CHECK(check_relative_functor(constant_input(chain_cat(2), cyclic_group_cat(2))).overall() == Overall::Pass);
  auto bad = check_relative_functor(empty_to_point());
  REQUIRE(bad.overall() == Overall::Refuted);
  const auto& v = std::get<WEVerdict>(bad.cases.at(0).outcome);
  CHECK(v.degree == 0);
  CHECK(v.detail.find("0 vs 1") != std::string::npos);
  CHECK(check_relative_functor(swap_input()).overall() == Overall::Pass);
  CHECK(check_relative_functor(point_to_chain()).overall() == Overall::Pass);
}

TEST_CASE("property B_n in Cat-hat") {
  for (const auto& g : {cyclic_group_cat(2), symmetric3_cat()})
    for (int n = 1; n <= (g->num_morphisms() > 2 ? 2 : 3); ++n) {
      CAPTURE(n);
      CHECK(check_Bn(object_inclusion(g, 0), n).overall() == Overall::Pass);
      CHECK(check_Bn(identity_functor(g), n).overall() == Overall::Pass);
    }
  auto d1 = chain_cat(1);
  CHECK(check_Bn(object_inclusion(d1, 0), 1).overall() == Overall::Pass);

  SUBCASE("identity of Δ¹, n = 1") {
    auto r = check_Bn(identity_functor(d1), 1);
    CHECK(r.overall() == Overall::Pass);
    REQUIRE(r.cases.size() == 1);
    CHECK(r.cases[0].id == "0->1");
  }
  SUBCASE("{1} into Δ¹ fails: the fiber over 0 is empty") {
    auto r = check_Bn(object_inclusion(d1, 1), 1);
    REQUIRE(r.overall() == Overall::Refuted);
    CHECK(std::get<WEVerdict>(r.cases[0].outcome).detail.find("0 vs 1") != std::string::npos);
  }
}

TEST_CASE("property B_n for relative functors") {
  auto bc2 = maximal(cyclic_group_cat(2));
  auto r = check_Bn(point_into(bc2, "*"), 2);
  CHECK(r.overall() == Overall::Pass);
  CHECK(find_case(r, "[0]/g") != nullptr);
  CHECK(check_Bn(point_into(maximal(chain_cat(1)), "0"), 1).overall() == Overall::Pass);
  auto d1 = cat_hat(chain_cat(1));
  auto inc = object_inclusion(d1.ambient, 1);
  KRelFunctor k0{cat_hat(inc.source), d1, inc};
  CHECK(check_Bn(k0, 1).overall() == Overall::Refuted);
}

TEST_CASE("property C_n") {
  for (const auto& g : {cyclic_group_cat(2), cyclic_group_cat(3)})
    for (int n = 1; n <= 3; ++n) CHECK(check_Cn(g, n).overall() == Overall::Pass);
  CHECK(check_Cn(maximal(cyclic_group_cat(2)), 3).overall() == Overall::Pass);

  SUBCASE("Δ¹ in Cat-hat is the failure control") {
    auto r = check_Cn(chain_cat(1), 1);
    CHECK(r.overall() == Overall::Refuted);
    REQUIRE(find_case(r, "0/0->1") != nullptr);
    REQUIRE(find_case(r, "1/0->1") != nullptr);
    CHECK(find_case(r, "0/0->1")->status() == Overall::Pass);
    CHECK(find_case(r, "1/0->1")->status() == Overall::Refuted);
  }
  SUBCASE("Δ¹ minimal through w_* has discrete levels") {
    CHECK(check_Cn(minimal(chain_cat(1)), 1).overall() == Overall::Pass);
  }
  SUBCASE("chains with all maps weak equivalences") {
    for (int p = 0; p <= 2; ++p) {
      auto z = shape_chain(p, ShapeFlavor::W, 1);
      CHECK(check_three_arrow_calculus(z, identity_u_calculus(z), true).ok());
      CHECK_MESSAGE(check_Cn(z, 3).overall() == Overall::Pass, "p = " << p);
    }
  }
}

TEST_CASE("C_n implies B_n on small examples") {
  std::vector<CatPtr> targets{cyclic_group_cat(2), chain_cat(1), chain_cat(2),
                              poset_cat({"x", "m", "y"}, {{"x", "m"}, {"y", "m"}})};
  for (const auto& z : targets) {
    const bool cn = check_Cn(z, 2).overall() == Overall::Pass;
    std::vector<FinFunctor> maps{identity_functor(z)};
    for (ObjIdx o = 0; o < z->num_objects(); ++o) maps.push_back(object_inclusion(z, o));
    maps.push_back(constant_functor(chain_cat(1), z, 0));
    for (const auto& f : maps)
      if (cn) CHECK(check_Bn(f, 2).overall() != Overall::Refuted);
  }
}

TEST_CASE("default cospan family") {
  auto pt = default_cospan_family(terminal_cat());
  CHECK(pt.size() == 8);
  CHECK(pt.front().label == "(<0>, id)");

  auto bc2 = cyclic_group_cat(2);
  std::size_t by_dim[3] = {0, 0, 0};
  for (const auto& p : simplex_probes(bc2)) ++by_dim[p.chain.size()];
  CHECK(by_dim[0] == 1);
  CHECK(by_dim[1] == 2);
  CHECK(by_dim[2] == 4);
  // No probe of BC2 is a weak equivalence, so only the face pairs remain.
  auto fam = default_cospan_family(bc2);
  for (const auto& c : fam) check_cospan(c);
  CHECK(fam.size() == 2 * 2 + 4 * 3);

  auto d1 = default_cospan_family(chain_cat(1));
  CHECK(d1.size() == (2 + 3 + 4) + 3 * 2 + 4 * 3);
  auto again = default_cospan_family(chain_cat(1));
  for (std::size_t i = 0; i < d1.size(); ++i) CHECK(d1[i].label == again[i].label);
}

TEST_CASE("check_fibrillation") {
  auto bc2 = cyclic_group_cat(2);
  auto fam = default_cospan_family(bc2);
  CHECK(check_fibrillation(identity_functor(bc2), fam).overall() == Overall::Pass);
  CHECK(check_fibrillation(grothendieck(swap_input()).pi, fam).overall() == Overall::Pass);

  auto d1 = chain_cat(1);
  auto bad = grothendieck(empty_to_point());
  Cospan c{object_inclusion(d1, 0), identity_functor(d1), object_inclusion(d1, 0), "({0}, id)"};
  auto r = check_fibrillation(bad.pi, {c});
  REQUIRE(r.cases.size() == 1);
  CHECK(r.overall() == Overall::Refuted);
  CHECK(std::get<WEVerdict>(r.cases[0].outcome).detail.find("0 vs 1") != std::string::npos);

  SUBCASE("a cospan whose i is not a weak equivalence is skipped") {
    auto two = discrete_cat({"a", "b"});
    auto i = functor_from_ids(two, d1, {{"a", "0"}, {"b", "1"}}, {{"id_a", "0->0"}, {"id_b", "1->1"}});
    auto s = check_fibrillation(identity_functor(d1), {Cospan{i, identity_functor(d1), i, "ends"}});
    CHECK(s.overall() == Overall::Inconclusive);
  }
}

TEST_CASE("fibrillation stability") {
  auto bc2 = cyclic_group_cat(2);
  CHECK(fibrillation_stability(identity_functor(bc2), default_cospan_family(bc2)).overall() == Overall::Pass);
  auto gr = grothendieck(swap_input());
  auto r = fibrillation_stability(gr.pi, default_cospan_family(bc2));
  CHECK(r.overall() == Overall::Pass);
  auto over_point = pullback_cat(object_inclusion(gr.pi.target, 0), gr.pi);
  CHECK(over_point.cat->num_objects() == 2);
  CHECK(over_point.cat->num_morphisms() == 2);

  auto d1 = chain_cat(1);
  auto chain_gr = grothendieck(point_to_chain());
  auto s = fibrillation_stability(chain_gr.pi, default_cospan_family(d1));
  CHECK(s.overall() == Overall::Pass);
  const auto* ii = find_case(s, "ii/(<0>, <0->1>) d1");
  REQUIRE(ii != nullptr);
  CHECK(ii->status() == Overall::Pass);
}

TEST_CASE("Quillen lemma harness agrees") {
  for (const auto& in : grothendieck_corpus()) {
    auto q = quillen_lemma_harness(in);
    CHECK_MESSAGE(q.agree(), q.to_string());
  }
  CHECK(quillen_lemma_harness(empty_to_point()).relative.overall() == Overall::Refuted);
  CHECK(quillen_lemma_harness(swap_input()).fibrillation.overall() == Overall::Pass);
  auto contra = quillen_lemma_harness(empty_to_point(true));
  CHECK(contra.agree());
  CHECK(contra.relative.overall() == Overall::Refuted);
}

TEST_CASE("groupoid pullback oracle") {
  auto pt = terminal_cat();
  for (int n : {2, 3, 4}) {
    auto g = cyclic_group_cat(n);
    auto p = groupoid_pullback_oracle(object_inclusion(g, 0), object_inclusion(g, 0));
    CHECK(p.problem().empty());
    CHECK(p.components.size() == static_cast<std::size_t>(n));
    for (const auto& c : p.components) CHECK(c.elements.size() == 1);

    auto diag = groupoid_pullback_oracle(identity_functor(g), identity_functor(g));
    REQUIRE(diag.components.size() == 1);
    CHECK(diag.components[0].elements.size() == static_cast<std::size_t>(n));
    CHECK(diag.problem().empty());
  }
  auto bc2 = cyclic_group_cat(2);
  auto one = groupoid_pullback_oracle(object_inclusion(bc2, 0), identity_functor(bc2));
  REQUIRE(one.components.size() == 1);
  CHECK(one.components[0].elements.size() == 1);

  auto s3 = symmetric3_cat();
  auto diag = groupoid_pullback_oracle(identity_functor(s3), identity_functor(s3));
  CHECK(diag.problem().empty());
  auto h = presentation_homology(diag, 3);
  CHECK(h[0].groups[1].to_string() == "Z/2");

  CHECK_THROWS_AS(groupoid_pullback_oracle(object_inclusion(chain_cat(1), 0), object_inclusion(chain_cat(1), 1)),
                  InvalidInput);
}

TEST_CASE("oracle agrees with the strict pullback of a covering") {
  // Gr of the free transitive C2 action covers BC2; the strict pullback along
  // the base point is already a homotopy pullback.
  auto gr = grothendieck(swap_input());
  auto f = object_inclusion(gr.pi.target, 0);
  auto strict = pullback_cat(f, gr.pi);
  auto oracle = presentation_homology(groupoid_pullback_oracle(f, gr.pi), 3);
  auto direct = component_homology(cat_hat(strict.cat), 3);
  CHECK(oracle == direct);
}

TEST_CASE("verify_theorem_Bn") {
  SUBCASE("based loops of BC2") {
    auto bc2 = maximal(cyclic_group_cat(2));
    auto r = verify_theorem_Bn(point_into(bc2, "*"), point_into(bc2, "*"), 3, 4);
    REQUIRE(r.mode == TheoremReport::Mode::Groupoid);
    REQUIRE(r.comparison);
    CHECK(r.comparison->match);
    CHECK(r.comparison->construction.size() == 2);
    CHECK(r.ok());
  }
  SUBCASE("{0} -> Δ¹ <- {1} is embed-only") {
    auto d1 = maximal(chain_cat(1));
    auto r = verify_theorem_Bn(point_into(d1, "0"), point_into(d1, "1"), 1, 3);
    CHECK(r.mode == TheoremReport::Mode::EmbedOnly);
    CHECK(r.h_verdict.is_consistent());
    CHECK(r.k_verdict.is_refuted());
    CHECK(r.object_homology.groups[0].betti == 1);
    CHECK(r.object_homology.groups[1].is_zero());
    CHECK(r.ok());
  }
  SUBCASE("identities of BC3") {
    auto bc3 = maximal(cyclic_group_cat(3));
    auto id = KRelFunctor{bc3, bc3, identity_functor(bc3.ambient)};
    auto r = verify_theorem_Bn(id, id, 1, 4);
    REQUIRE(r.comparison);
    CHECK(r.comparison->match);
    REQUIRE(r.comparison->oracle.size() == 1);
    CHECK(r.comparison->oracle[0].groups[1].to_string() == "Z/3");
    CHECK(r.comparison->oracle[0].groups[3].to_string() == "Z/3");
  }
  SUBCASE("a refuted hypothesis skips") {
    auto d1 = cat_hat(chain_cat(1));
    auto inc = object_inclusion(d1.ambient, 1);
    KRelFunctor f{cat_hat(inc.source), d1, inc};
    auto r = verify_theorem_Bn(f, f, 1, 3);
    CHECK(r.mode == TheoremReport::Mode::Skipped);
  }
}
