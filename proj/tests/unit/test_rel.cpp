#include <map>

#include "doctest.h"
#include "relcat/cat/constructions.hpp"
#include "relcat/cat/structure.hpp"
#include "relcat/cat/validate.hpp"
#include "relcat/core/error.hpp"
#include "relcat/rel/calculus.hpp"
#include "relcat/rel/grid.hpp"
#include "relcat/rel/homotopy.hpp"
#include "relcat/rel/krel.hpp"
#include "relcat/rel/wstar.hpp"

using namespace relcat;

namespace {

// The commuting square 00 → 10 → 11, 00 → 01 → 11 as a poset; v1 horizontal
// (first coordinate changes), v2 vertical.
KRelStructure square_k2() {
  auto sq = poset_cat({"00", "01", "10", "11"}, {{"00", "01"}, {"00", "10"}, {"01", "11"}, {"10", "11"}});
  KRelStructure s{sq, {identity_mask(*sq), identity_mask(*sq)}, identity_mask(*sq), false};
  s.v[0][sq->morphism_index("00->10")] = true;
  s.v[0][sq->morphism_index("01->11")] = true;
  s.v[1][sq->morphism_index("00->01")] = true;
  s.v[1][sq->morphism_index("10->11")] = true;
  return s;
}

// Free category on a hexagon A → B → C → D and A → E → F → D with the two
// length-3 paths identified. Both paths alternate between v1 and v2 letters,
// so no square or internal relation connects them.
KRelStructure hexagon_k2() {
  auto free = free_category_on_acyclic_graph(
      {"A", "B", "C", "D", "E", "F"},
      {{"h1", "A", "B"}, {"x1", "B", "C"}, {"h2", "C", "D"}, {"y1", "A", "E"}, {"k1", "E", "F"}, {"y2", "F", "D"}});
  const MorIdx left = free->morphism_index("h2.x1.h1");
  const MorIdx right = free->morphism_index("y2.k1.y1");
  std::vector<MorphismSpec> mors;
  std::vector<MorIdx> to_new(free->num_morphisms());
  for (MorIdx m = 0; m < free->num_morphisms(); ++m) {
    if (m == right) continue;
    to_new[m] = static_cast<MorIdx>(mors.size());
    auto spec = free->morphisms()[m];
    if (m == left) spec.id = "diag";
    mors.push_back(spec);
  }
  to_new[right] = to_new[left];
  std::vector<MorIdx> back;
  for (MorIdx m = 0; m < free->num_morphisms(); ++m)
    if (m != right) back.push_back(m);
  std::vector<MorIdx> ids;
  for (ObjIdx o = 0; o < free->num_objects(); ++o) ids.push_back(to_new[free->identity(o)]);
  auto c = std::make_shared<const FinCat>(free->objects(), mors, ids, [&](MorIdx g, MorIdx f) {
    return to_new[free->compose_unchecked(back[g], back[f])];
  });
  KRelStructure s{c, {identity_mask(*c), identity_mask(*c)}, identity_mask(*c), false};
  for (auto id : {"h1", "h2", "k1"}) s.v[0][c->morphism_index(id)] = true;
  for (auto id : {"x1", "y1", "y2"}) s.v[1][c->morphism_index(id)] = true;
  return s;
}

ThreeArrowCalculus identity_u_calculus(const KRelStructure& z) {
  ThreeArrowCalculus cal{identity_mask(*z.ambient), z.w, {}, {}};
  for (MorIdx w = 0; w < z.ambient->num_morphisms(); ++w)
    if (z.w[w]) cal.factor[w] = {z.ambient->identity(z.ambient->src(w)), w};
  derive_unique_witnesses(z, cal);
  return cal;
}

}  // namespace

TEST_CASE("validate_krel on relative categories") {
  for (const auto& s : {maximal(chain_cat(2)), minimal(chain_cat(2)), maximal(cyclic_group_cat(3))}) {
    auto r = validate_krel(s, 4);
    CHECK(r.shape_problems.empty());
    CHECK(r.generation.status == AxiomStatus::Pass);
    CHECK(r.relations.status == AxiomStatus::Pass);
  }
}

TEST_CASE("validate_krel on chain shapes") {
  for (int p = 0; p <= 3; ++p) {
    for (int i = 1; i <= 2; ++i) {
      auto r = validate_krel(shape_chain(p, ShapeFlavor::V, 2, i), 4);
      CHECK(r.ok());
    }
    CHECK(validate_krel(shape_chain(p, ShapeFlavor::W, 2), 4).ok());
  }
}

TEST_CASE("validate_krel on the k = 2 square") {
  auto s = square_k2();
  auto r = validate_krel(s, 4);
  CHECK(r.generation.status == AxiomStatus::Pass);
  CHECK(r.relations.status == AxiomStatus::Pass);

  auto hex = hexagon_k2();
  auto rh = validate_krel(hex, 4);
  CHECK(rh.generation.status == AxiomStatus::Pass);
  REQUIRE(rh.relations.status == AxiomStatus::Fail);
  CHECK(rh.relations.witness.find("[h1, x1, h2]") != std::string::npos);
  CHECK(rh.relations.witness.find("[y1, k1, y2]") != std::string::npos);
  // Below the longest path the split cannot be seen.
  CHECK(validate_krel(hex, 2).relations.status == AxiomStatus::InconclusiveAtDepth);
}

TEST_CASE("validate_krel generation failure and cyclic inconclusive") {
  auto d1 = chain_cat(1);
  KRelStructure ids_only{d1, {identity_mask(*d1), identity_mask(*d1)}, identity_mask(*d1), false};
  auto r = validate_krel(ids_only, 4);
  CHECK(r.generation.status == AxiomStatus::Fail);
  CHECK(r.generation.witness.find("0->1") != std::string::npos);

  auto c2 = cyclic_group_cat(2);
  KRelStructure cyc{c2, {full_mask(*c2), identity_mask(*c2)}, identity_mask(*c2), false};
  auto rc = validate_krel(cyc, 3);
  CHECK(rc.generation.status == AxiomStatus::Pass);
  CHECK(rc.relations.status == AxiomStatus::InconclusiveAtDepth);
}

TEST_CASE("validate_krel reports malformed masks") {
  auto d1 = chain_cat(1);
  KRelStructure bad{d1, {identity_mask(*d1)}, full_mask(*d1), false};
  auto r = validate_krel(bad, 2);
  CHECK_FALSE(r.shape_problems.empty());
  CHECK_THROWS_AS(check_krel_shape(bad), InvalidInput);
  KRelStructure k0{d1, {}, identity_mask(*d1), false};
  CHECK_FALSE(validate_krel(k0).shape_problems.empty());
}

TEST_CASE("shape_chain") {
  auto zero = shape_chain(0, ShapeFlavor::W, 3);
  CHECK(zero.ambient->num_objects() == 1);
  CHECK(zero.ambient->num_morphisms() == 1);
  for (const auto& v : zero.v) CHECK(v == Mask{true});
  CHECK(zero.w == Mask{true});

  auto one = shape_chain(1, ShapeFlavor::W, 1);
  auto arrow = one.ambient->morphism_index("0->1");
  CHECK(one.v[0][arrow]);
  CHECK(one.w[arrow]);

  auto two = shape_chain(2, ShapeFlavor::V, 2, 1);
  CHECK(two.v[0] == full_mask(*two.ambient));
  CHECK(two.v[1] == identity_mask(*two.ambient));
  CHECK(two.w == identity_mask(*two.ambient));

  CHECK(shape_chain(1, ShapeFlavor::Minimal, 1).w == identity_mask(*chain_cat(1)));
  CHECK_THROWS_AS(shape_chain(2, ShapeFlavor::V, 2, 3), InvalidInput);
  CHECK_THROWS_AS(shape_chain(2, ShapeFlavor::V, 2, 0), InvalidInput);
  CHECK_THROWS_AS(shape_chain(2, ShapeFlavor::Minimal, 2), InvalidInput);
}

TEST_CASE("saturation conditions") {
  CHECK(saturation_check(maximal(cyclic_group_cat(2))));
  CHECK(saturation_check(minimal(chain_cat(2))));
  CHECK_FALSE(saturation_check(minimal(cyclic_group_cat(2))));
}

TEST_CASE("grid faces and degeneracies satisfy the simplicial identities") {
  auto c = chain_cat(3);
  auto grids = enumerate_grids(*c, {3, 2}, {nullptr, nullptr}, 100000);
  REQUIRE(!grids.empty());
  int checked = 0;
  for (std::size_t t = 0; t < grids.size(); t += 7) {
    const Grid& g = grids[t];
    for (int dir = 0; dir < 2; ++dir) {
      const int p = g.dims[dir];
      for (int j = 0; j <= p; ++j)
        for (int i = 0; i < j; ++i)
          CHECK(grid_face(*c, grid_face(*c, g, dir, j), dir, i) == grid_face(*c, grid_face(*c, g, dir, i), dir, j - 1));
      for (int i = 0; i <= p; ++i) {
        CHECK(grid_face(*c, grid_degeneracy(*c, g, dir, i), dir, i) == g);
        CHECK(grid_face(*c, grid_degeneracy(*c, g, dir, i), dir, i + 1) == g);
      }
      // Faces in different directions commute.
      if (g.dims[0] > 0 && g.dims[1] > 0)
        CHECK(grid_face(*c, grid_face(*c, g, 0, 0), 1, 1) == grid_face(*c, grid_face(*c, g, 1, 1), 0, 0));
      ++checked;
    }
  }
  CHECK(checked > 0);
}

TEST_CASE("grid enumeration against brute force") {
  // Functors [1] x [1] → [1]: all 4-tuples of objects, monotone in both
  // directions (thin target, so squares commute automatically).
  int brute = 0;
  for (int a = 0; a <= 1; ++a)
    for (int b = a; b <= 1; ++b)
      for (int c2 = a; c2 <= 1; ++c2)
        for (int d = std::max(b, c2); d <= 1; ++d) ++brute;
  CHECK(enumerate_grids(*chain_cat(1), {1, 1}, {nullptr, nullptr}, 1000).size() == static_cast<std::size_t>(brute));
  // Squares in BC2: 2^3 edge choices for three edges, the fourth forced.
  CHECK(enumerate_grids(*cyclic_group_cat(2), {1, 1}, {nullptr, nullptr}, 1000).size() == 8);
}

TEST_CASE("w_star_at") {
  SUBCASE("at multidimension 0 the level is wC") {
    auto d2 = chain_cat(2);
    KRelStructure s{d2, {full_mask(*d2)}, identity_mask(*d2), false};
    s.w[d2->morphism_index("0->1")] = true;
    auto level = w_star_at(s, {0});
    CHECK(level.cat->objects() == d2->objects());
    CHECK(mask_ids(*level.cat, full_mask(*level.cat)) == mask_ids(*d2, s.w));
  }
  SUBCASE("Delta1 maximal at p = 1") {
    auto d1 = chain_cat(1);
    auto level = w_star_at(maximal(d1), {1});
    CHECK(level.cat->num_objects() == 3);
    // Brute force: commuting squares a → b over two arrows of [1] with
    // arbitrary verticals; [1] is thin, so count monotone 2x2 grids.
    int squares = 0;
    for (MorIdx top = 0; top < 3; ++top)
      for (MorIdx bottom = 0; bottom < 3; ++bottom)
        if (d1->src(top) <= d1->src(bottom) && d1->tgt(top) <= d1->tgt(bottom)) ++squares;
    CHECK(level.cat->num_morphisms() == static_cast<std::size_t>(squares));
    CHECK(squares == 6);
    CHECK(validate_cat(*level.cat).ok());
  }
  SUBCASE("Delta1 minimal at p = 1 is discrete on the morphisms") {
    auto level = w_star_at(minimal(chain_cat(1)), {1});
    CHECK(level.cat->num_objects() == 3);
    CHECK(level.cat->num_morphisms() == 3);
  }
  SUBCASE("k = 0 and wrong arity are rejected") {
    CHECK_THROWS_AS(w_star_at(cat_hat(chain_cat(1)), {}), InvalidInput);
    CHECK_THROWS_AS(w_star_at(maximal(chain_cat(1)), {1, 1}), InvalidInput);
  }
  SUBCASE("face functors and induced maps are functors") {
    auto s = maximal(cyclic_group_cat(2));
    auto l1 = w_star_at(s, {1});
    auto l0 = w_star_at(s, {0});
    for (int i = 0; i <= 1; ++i) CHECK(validate_functor(w_star_face(s, l1, l0, 0, i)).ok());
    CHECK(validate_functor(w_star_degeneracy(s, l0, l1, 0, 0)).ok());
  }
  SUBCASE("functorial in relative functors") {
    auto d1 = chain_cat(1);
    auto d2 = chain_cat(2);
    auto t = terminal_cat();
    KRelStructure sd1 = maximal(d1), sd2 = maximal(d2), st = maximal(t);
    FinFunctor F = functor_from_ids(d1, d2, {{"0", "0"}, {"1", "2"}}, {{"0->0", "0->0"}, {"1->1", "2->2"}, {"0->1", "0->2"}});
    FinFunctor G = constant_functor(d2, t, 0);
    for (std::vector<int> p : {std::vector<int>{0}, {1}, {2}}) {
      auto a = w_star_at(sd1, p), b = w_star_at(sd2, p), c = w_star_at(st, p);
      auto wf = w_star_map({sd1, sd2, F}, a, b);
      auto wg = w_star_map({sd2, st, G}, b, c);
      auto wgf = w_star_map({sd1, st, compose_functors(G, F)}, a, c);
      CHECK(validate_functor(wf).ok());
      CHECK(canonical_encoding(compose_functors(wg, wf)) == canonical_encoding(wgf));
    }
    // A non-relative functor is rejected.
    KRelStructure d2min = minimal(d2);
    CHECK_THROWS_AS(w_star_map({sd1, d2min, F}, w_star_at(sd1, {0}), w_star_at(d2min, {0})), InvalidInput);
  }
  SUBCASE("k = 2 square") {
    auto s = square_k2();
    auto level = w_star_at(s, {1, 1});
    // Brute force over corner objects: direction-1 edges in v1, direction-2 in v2.
    const FinCat& c = *s.ambient;
    auto edge = [&](int i, ObjIdx a, ObjIdx b) {
      auto h = c.hom(a, b);
      return !h.empty() && s.v[i][h[0]];
    };
    int grids = 0, nondegenerate = 0;
    for (ObjIdx a = 0; a < 4; ++a)
      for (ObjIdx b = 0; b < 4; ++b)
        for (ObjIdx x = 0; x < 4; ++x)
          for (ObjIdx d = 0; d < 4; ++d)
            if (edge(0, a, b) && edge(1, a, x) && edge(1, b, d) && edge(0, x, d)) {
              ++grids;
              if (a != b && a != x && b != d && x != d) ++nondegenerate;
            }
    CHECK(level.cat->num_objects() == static_cast<std::size_t>(grids));
    CHECK(nondegenerate == 1);
    CHECK(validate_cat(*level.cat).ok());
  }
}

TEST_CASE("strict homotopy") {
  auto d2 = chain_cat(2);
  auto c = chain_cat(1);
  auto prod = product(c, chain_cat(1));
  FinFunctor f = functor_from_ids(c, d2, {{"0", "0"}, {"1", "1"}}, {{"0->0", "0->0"}, {"1->1", "1->1"}, {"0->1", "0->1"}});
  auto h = compose_functors(f, prod.first);
  auto rep = check_strict_homotopy(h, f, f, mask_oracle(full_mask(*d2)));
  CHECK(rep.ok());

  FinFunctor g = functor_from_ids(c, d2, {{"0", "1"}, {"1", "2"}}, {{"0->0", "1->1"}, {"1->1", "2->2"}, {"0->1", "1->2"}});
  NatTransformation t{f, g, {d2->morphism_index("0->1"), d2->morphism_index("1->2")}};
  auto hfg = homotopy_from_transformation(prod.cat, t);
  CHECK(validate_functor(hfg).ok());
  CHECK(check_strict_homotopy(hfg, f, g, mask_oracle(full_mask(*d2))).ok());
  auto strict_w = check_strict_homotopy(hfg, f, g, mask_oracle(identity_mask(*d2)));
  CHECK(strict_w.endpoints_ok);
  CHECK(strict_w.components.is_refuted());

  auto wrong = check_strict_homotopy(hfg, g, g, mask_oracle(full_mask(*d2)));
  CHECK_FALSE(wrong.endpoints_ok);
  CHECK(wrong.endpoint_witness.find("(0,0)") != std::string::npos);
}

TEST_CASE("three-arrow calculus") {
  SUBCASE("chains with U = identities, V = w are strict calculi") {
    for (int p = 0; p <= 3; ++p) {
      auto z = shape_chain(p, ShapeFlavor::W, 1);
      auto rep = check_three_arrow_calculus(z, identity_u_calculus(z), true);
      CHECK_MESSAGE(rep.ok(), "p = " << p);
    }
  }
  SUBCASE("minimal structures with U = V = identities") {
    for (const auto& c : {chain_cat(2), poset_cat({"a", "b", "c"}, {{"a", "c"}, {"b", "c"}})}) {
      auto z = minimal(c);
      ThreeArrowCalculus cal{z.w, z.w, {}, {}};
      for (ObjIdx o = 0; o < c->num_objects(); ++o) cal.factor[c->identity(o)] = {c->identity(o), c->identity(o)};
      derive_unique_witnesses(z, cal);
      CHECK(check_three_arrow_calculus(z, cal, true).ok());
    }
  }
  SUBCASE("groupoids with U = V = all maps") {
    auto z = maximal(symmetric3_cat());
    ThreeArrowCalculus cal{z.w, z.w, {}, {}};
    for (MorIdx w = 0; w < z.ambient->num_morphisms(); ++w) cal.factor[w] = {z.ambient->identity(0), w};
    derive_unique_witnesses(z, cal);
    CHECK(check_three_arrow_calculus(z, cal, true).ok());
  }
  SUBCASE("cospan poset has no pullback of a -> c along b -> c") {
    auto c = poset_cat({"a", "b", "c"}, {{"a", "c"}, {"b", "c"}});
    KRelStructure z{c, {full_mask(*c)}, identity_mask(*c), false};
    z.w[c->morphism_index("a->c")] = true;
    auto cal = identity_u_calculus(z);
    auto rep = check_three_arrow_calculus(z, cal, false);
    CHECK_FALSE(rep.ok());
    bool saw = false;
    for (const auto& chk : rep.checks) {
      if (chk.condition.rfind("(ii)", 0) == 0 && !chk.pass) {
        saw = true;
        CHECK(chk.witness.find("a->c") != std::string::npos);
        CHECK(chk.witness.find("b->c") != std::string::npos);
      }
    }
    CHECK(saw);
  }
  SUBCASE("bad factorization and missing witnesses are reported") {
    auto z = shape_chain(2, ShapeFlavor::W, 1);
    auto cal = identity_u_calculus(z);
    auto broken = cal;
    broken.factor[z.ambient->morphism_index("0->2")] = {z.ambient->identity(0), z.ambient->morphism_index("0->1")};
    CHECK_FALSE(check_three_arrow_calculus(z, broken, false).ok());
    auto no_wit = cal;
    no_wit.witnesses.clear();
    CHECK_FALSE(check_three_arrow_calculus(z, no_wit, false).ok());
    auto bad_u = cal;
    bad_u.u[z.ambient->morphism_index("0->1")] = true;
    bad_u.u[z.ambient->morphism_index("1->2")] = true;
    CHECK(check_three_arrow_calculus(z, bad_u, false).checks.front().pass == false);
  }
}

TEST_CASE("pushout search") {
  auto c = poset_cat({"a", "b", "c", "d"}, {{"a", "b"}, {"a", "c"}, {"b", "d"}, {"c", "d"}});
  auto all = full_mask(*c);
  auto po = pushouts(*c, all, c->morphism_index("a->b"), c->morphism_index("a->c"));
  REQUIRE(po.size() == 1);
  CHECK(c->morphism_id(po[0].first) == "b->d");
  auto pb = pullbacks(*c, all, c->morphism_index("b->d"), c->morphism_index("c->d"));
  REQUIRE(pb.size() == 1);
  CHECK(c->morphism_id(pb[0].first) == "a->b");
}
