#include <fstream>
#include <random>

#include "doctest.h"
#include "json.hpp"
#include "relcat/cat/constructions.hpp"
#include "relcat/cat/structure.hpp"
#include "relcat/core/caps.hpp"
#include "relcat/core/error.hpp"
#include "relcat/nerve/chains.hpp"
#include "relcat/nerve/homology.hpp"
#include "relcat/nerve/nerves.hpp"
#include "relcat/nerve/smith.hpp"
#include "relcat/nerve/verdict.hpp"
#include "relcat/rel/grid.hpp"

using namespace relcat;
using nlohmann::json;

namespace {

json oracle() {
  std::ifstream in(std::string(RELCAT_TEST_DATA_DIR) + "/homology_oracle.json");
  REQUIRE(in.good());
  return json::parse(in);
}

HomologySignature from_oracle(const json& groups) {
  HomologySignature sig;
  for (const auto& g : groups) {
    DegreeHomology h;
    h.betti = g["betti"].get<std::size_t>();
    for (const auto& t : g["torsion"]) h.torsion.push_back(BigInt(t.get<int>()));
    sig.groups.push_back(h);
  }
  sig.exact_through = static_cast<int>(sig.groups.size()) - 1;
  return sig;
}

CatPtr pseudo_circle() {
  return poset_cat({"a", "b", "c", "d"}, {{"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"}});
}

std::vector<std::size_t> nondegenerate_counts(const TruncMultiSSet& s) {
  std::vector<std::size_t> out;
  for (const auto& level : nondegenerate_cells(s)) {
    std::size_t n = 0;
    for (bool b : level) n += b;
    out.push_back(n);
  }
  return out;
}

std::vector<KRelStructure> relative_corpus() {
  auto square = poset_cat({"00", "01", "10", "11"}, {{"00", "01"}, {"00", "10"}, {"01", "11"}, {"10", "11"}});
  return {shape_chain(0, ShapeFlavor::W, 1), shape_chain(1, ShapeFlavor::W, 1),
          minimal(chain_cat(1)),            maximal(chain_cat(1)),
          maximal(chain_cat(2)),            maximal(cyclic_group_cat(2)),
          minimal(cyclic_group_cat(2)),     maximal(square)};
}

}  // namespace

TEST_CASE("nerve: nondegenerate simplices of BC2 and of an arrow") {
  auto bc2 = nerve(*cyclic_group_cat(2), 4);
  CHECK(nondegenerate_counts(bc2) == std::vector<std::size_t>{1, 1, 1, 1, 1});
  CHECK(bc2.counts() == std::vector<std::size_t>{1, 2, 4, 8, 16});
  auto arrow = nerve(*chain_cat(1), 2);
  CHECK(nondegenerate_counts(arrow) == std::vector<std::size_t>{2, 1, 0});
  CHECK(arrow.counts() == std::vector<std::size_t>{2, 3, 4});
}

TEST_CASE("simplicial identities hold for every constructed nerve") {
  for (const auto& c : {chain_cat(2), cyclic_group_cat(3), klein_four_cat(), pseudo_circle(), empty_cat()}) {
    auto r = check_simplicial_identities(nerve(*c, 4));
    CHECK_MESSAGE(r.ok(), r.summary());
  }
  for (const auto& s : relative_corpus()) {
    auto a = check_simplicial_identities(k_simplicial_nerve(s, 3));
    CHECK_MESSAGE(a.ok(), a.summary());
    auto b = check_simplicial_identities(simplicial_nerve(s, 2));
    CHECK_MESSAGE(b.ok(), b.summary());
  }
}

TEST_CASE("simplicial identity checker catches a wrong face") {
  auto s = nerve(*chain_cat(1), 2);
  std::swap(s.faces[1][0][0], s.faces[1][0][1]);
  CHECK_FALSE(check_simplicial_identities(s).ok());
}

TEST_CASE("simplicial_nerve: small shapes") {
  auto point = simplicial_nerve(shape_chain(0, ShapeFlavor::W, 1), 3);
  for (auto n : point.counts()) CHECK(n == 1);

  auto arrow_min = simplicial_nerve(minimal(chain_cat(1)), 3);
  for (int p = 0; p <= 3; ++p)
    for (int q = 0; q <= 3; ++q) CHECK(arrow_min.count_at({p, q}) == static_cast<std::size_t>(p + 2));

  // (1,1)-cells of 1^w: every commuting square in [1], counted directly.
  auto s = shape_chain(1, ShapeFlavor::W, 1);
  const FinCat& c = *s.ambient;
  std::size_t squares = 0;
  for (MorIdx top = 0; top < c.num_morphisms(); ++top)
    for (MorIdx bottom = 0; bottom < c.num_morphisms(); ++bottom)
      for (MorIdx left = 0; left < c.num_morphisms(); ++left)
        for (MorIdx right = 0; right < c.num_morphisms(); ++right) {
          if (!s.v[0][top] || !s.v[0][bottom] || !s.w[left] || !s.w[right]) continue;
          if (c.src(top) != c.src(left) || c.tgt(top) != c.src(right) || c.tgt(left) != c.src(bottom) ||
              c.tgt(bottom) != c.tgt(right))
            continue;
          if (c.compose(right, top) == c.compose(bottom, left)) ++squares;
        }
  CHECK(squares == 6);
  CHECK(simplicial_nerve(s, 2).count_at({1, 1}) == squares);
}

TEST_CASE("k_simplicial_nerve agrees with simplicial_nerve at k = 1") {
  for (const auto& s : relative_corpus()) {
    std::string why;
    CHECK_MESSAGE(same_sset(k_simplicial_nerve(s, 2), simplicial_nerve(s, 2), &why), why);
  }
}

TEST_CASE("k_simplicial_nerve at k = 2") {
  auto point = k_simplicial_nerve(all_full(terminal_cat(), 2), 2);
  for (auto n : point.counts()) CHECK(n == 1);

  auto sq = poset_cat({"00", "01", "10", "11"}, {{"00", "01"}, {"00", "10"}, {"01", "11"}, {"10", "11"}});
  KRelStructure s{sq, {identity_mask(*sq), identity_mask(*sq)}, identity_mask(*sq), false};
  s.v[0][sq->morphism_index("00->10")] = s.v[0][sq->morphism_index("01->11")] = true;
  s.v[1][sq->morphism_index("00->01")] = s.v[1][sq->morphism_index("10->11")] = true;
  auto n = k_simplicial_nerve(s, 2);
  // brute force: assignments of the four corners with edges in the masks
  std::size_t count = 0;
  for (ObjIdx a = 0; a < 4; ++a)
    for (ObjIdx b = 0; b < 4; ++b)
      for (ObjIdx c = 0; c < 4; ++c)
        for (ObjIdx d = 0; d < 4; ++d) {
          auto h = [&](ObjIdx x, ObjIdx y, const Mask& m) {
            auto hs = sq->hom(x, y);
            return !hs.empty() && m[hs[0]];
          };
          // a=(0,0), b=(0,1), c=(1,0), d=(1,1): direction 0 is v1, direction 1 is v2
          if (h(a, c, s.v[0]) && h(b, d, s.v[0]) && h(a, b, s.v[1]) && h(c, d, s.v[1])) ++count;
        }
  CHECK(n.count_at({1, 1, 0}) == count);
  CHECK(check_simplicial_identities(n).ok());
  std::size_t nondeg = 0;
  auto nd = nondegenerate_cells(n);
  for (bool b : nd[n.level_index({1, 1, 0})]) nondeg += b;
  CHECK(nondeg == 1);
}

TEST_CASE("levelwise_nerve: constant diagrams") {
  auto t = levelwise_nerve(constant_diagram(terminal_cat(), 1, 3));
  for (auto n : t.counts()) CHECK(n == 1);
  auto bc2 = cyclic_group_cat(2);
  auto l = levelwise_nerve(constant_diagram(bc2, 1, 3));
  auto plain = nerve(*bc2, 3);
  for (int p = 0; p <= 3; ++p)
    for (int q = 0; q <= 3; ++q) CHECK(l.count_at({p, q}) == plain.cells[q].size());
  CHECK(check_simplicial_identities(l).ok());
}

TEST_CASE("levelwise_nerve rejects a non-functorial diagram") {
  auto d = constant_diagram(chain_cat(1), 1, 2);
  d.faces[1][0][0] = constant_functor(chain_cat(1), d.levels[0], 0);
  CHECK_FALSE(check_diagram(d).ok());
  CHECK_THROWS_AS(levelwise_nerve(d), InvalidInput);
}

TEST_CASE("levelwise nerve of w_* equals the k-simplicial nerve") {
  for (const auto& s : relative_corpus()) {
    auto r = check_levelwise_identity(s, 2);
    CHECK_MESSAGE(r.ok(), r.summary());
  }
  auto r3 = check_levelwise_identity(maximal(chain_cat(1)), 3);
  CHECK_MESSAGE(r3.ok(), r3.summary());
  auto sq = poset_cat({"00", "01", "10", "11"}, {{"00", "01"}, {"00", "10"}, {"01", "11"}, {"10", "11"}});
  auto r2 = check_levelwise_identity(all_full(sq, 2), 1);
  CHECK_MESSAGE(r2.ok(), r2.summary());
}

TEST_CASE("diagonal") {
  auto point = diagonal(simplicial_nerve(shape_chain(0, ShapeFlavor::W, 1), 3));
  for (auto n : point.counts()) CHECK(n == 1);

  auto s = maximal(cyclic_group_cat(2));
  auto d = diagonal(simplicial_nerve(s, 3));
  for (int k = 0; k <= 3; ++k)
    CHECK(d.cells[k].size() == enumerate_grids(*s.ambient, {k, k}, {&s.v[0], &s.w}, 1000000).size());
  CHECK(check_simplicial_identities(d).ok());

  // constant in the second direction: the diagonal is the first direction's nerve
  auto c = cyclic_group_cat(3);
  auto l = levelwise_nerve(constant_diagram(c, 1, 3));
  auto dl = diagonal(l);
  auto plain = nerve(*c, 3);
  CHECK(dl.counts() == plain.counts());
  CHECK(homology(dl, 2) == homology(plain, 2));
}

TEST_CASE("boundary squares to zero on every corpus complex") {
  for (const auto& c : {chain_cat(3), cyclic_group_cat(4), symmetric3_cat(), pseudo_circle(), klein_four_cat()}) {
    CHECK(first_nonzero_square(normalized_chains(nerve(*c, 4))) == -1);
    CHECK(first_nonzero_square(CategoryChains(*c, 4).complex()) == -1);
  }
  for (const auto& s : relative_corpus())
    CHECK(first_nonzero_square(normalized_chains(diagonal(k_simplicial_nerve(s, 3)))) == -1);
}

TEST_CASE("homology against the bar-resolution oracle") {
  const auto o = oracle();
  const std::map<std::string, CatPtr> groups = {{"C2", cyclic_group_cat(2)},
                                                {"C3", cyclic_group_cat(3)},
                                                {"C4", cyclic_group_cat(4)},
                                                {"V4", klein_four_cat()},
                                                {"S3", symmetric3_cat()}};
  for (const auto& [name, g] : groups) {
    const auto expect = from_oracle(o["groups"][name]);
    const auto direct = category_homology(g, 4);
    CHECK_MESSAGE(direct == expect, name << ": " << direct.to_string());
    CHECK(homology(nerve(*g, 4), 3) == expect);
  }
  auto bc2 = homology(nerve(*cyclic_group_cat(2), 4), 3);
  CHECK(bc2.to_string() == "H0=Z, H1=Z/2, H2=0, H3=Z/2 (exact through 3)");

  const auto circle = from_oracle(o["posets"]["pseudo_circle"]);
  CHECK(category_homology(pseudo_circle(), 4) == circle);
  CHECK(homology(nerve(*pseudo_circle(), 4), 3) == circle);
  CHECK(circle.groups[1].to_string() == "Z");

  auto empty = homology(nerve(*empty_cat(), 3), 2);
  for (const auto& g : empty.groups) CHECK(g.is_zero());
}

TEST_CASE("homology is invariant under equivalence") {
  // the translation groupoid of C2 acting on itself is equivalent to a point
  auto indiscrete = make_cat_from_table({"x", "y"}, {{"id_x", "x", "x"}, {"id_y", "y", "y"}, {"f", "x", "y"}, {"g", "y", "x"}},
                                        {{"x", "id_x"}, {"y", "id_y"}},
                                        {{"id_x", "id_x", "id_x"}, {"id_y", "id_y", "id_y"}, {"f", "id_x", "f"},
                                         {"id_y", "f", "f"}, {"g", "id_y", "g"}, {"id_x", "g", "g"},
                                         {"g", "f", "id_x"}, {"f", "g", "id_y"}});
  CHECK(category_homology(indiscrete, 4) == category_homology(terminal_cat(), 4));
  auto prod = product(cyclic_group_cat(2), indiscrete).cat;
  CHECK(category_homology(prod, 4) == category_homology(cyclic_group_cat(2), 4));
  // unreduced and reduced computations agree
  CategoryChains raw(*prod, 4);
  CHECK(complex_homology(raw.complex(), 3) == category_homology(prod, 4));
}

TEST_CASE("smith normal form") {
  IntMatrix id3 = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  CHECK(smith_normal_form(id3).D == id3);
  IntMatrix m = {{2, 0}, {0, 3}};
  auto r = smith_normal_form(m);
  CHECK(r.D == IntMatrix{{1, 0}, {0, 6}});
  IntMatrix z = {{0, 0}, {0, 0}, {0, 0}};
  CHECK(smith_normal_form(z).D == z);
  CHECK(smith_normal_form(z).factors.empty());
  CHECK(determinant({{2, 1}, {7, 4}}) == 1);

  std::mt19937 rng(7);
  std::uniform_int_distribution<int> val(-3, 3), dim(1, 6);
  for (int t = 0; t < 200; ++t) {
    const int rows = dim(rng), cols = dim(rng);
    IntMatrix a(rows, std::vector<BigInt>(cols));
    SparseMatrix sp;
    sp.rows = static_cast<std::size_t>(rows);
    sp.cols.resize(static_cast<std::size_t>(cols));
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) {
        const int v = val(rng) * (rng() % 3 == 0 ? 4 : 1);
        a[i][j] = v;
        if (v) sp.cols[j].emplace_back(static_cast<std::uint32_t>(i), v);
      }
    auto s = smith_normal_form(a);  // verifies itself
    auto rt = rank_and_torsion(sp);
    CHECK(rt.rank == s.factors.size());
    std::vector<BigInt> tor;
    for (const auto& f : s.factors)
      if (f > 1) tor.push_back(f);
    CHECK(rt.torsion == tor);
  }
}

TEST_CASE("rank_and_torsion falls back to big integers on overflow") {
  SparseMatrix m;
  m.rows = 2;
  const std::int64_t big = std::int64_t(1) << 62;
  m.cols = {{{0, 1}, {1, big}}, {{0, 1}, {1, -big}}};
  auto rt = rank_and_torsion(m);
  CHECK(rt.rank == 2);
  REQUIRE(rt.torsion.size() == 1);
  CHECK(rt.torsion[0] == BigInt(2) * BigInt(big));
}

TEST_CASE("nerve functoriality") {
  auto a = chain_cat(1);
  auto b = chain_cat(2);
  auto c = cyclic_group_cat(2);
  auto f = functor_from_ids(a, b, {{"0", "0"}, {"1", "2"}}, {{"0->0", "0->0"}, {"1->1", "2->2"}, {"0->1", "0->2"}});
  auto g = constant_functor(b, c, 0);
  const int B = 3;
  auto na = nerve(*a, B), nb = nerve(*b, B), nc = nerve(*c, B);
  auto mf = nerve_map(f, na, nb);
  auto mg = nerve_map(g, nb, nc);
  auto mgf = nerve_map(compose_functors(g, f), na, nc);
  for (int d = 0; d <= B; ++d)
    for (std::size_t x = 0; x < na.cells[d].size(); ++x) CHECK(mgf[d][x] == mg[d][mf[d][x]]);
}

TEST_CASE("induced_we_verdict") {
  auto arrow = chain_cat(1);
  CHECK(induced_we_verdict(identity_functor(arrow)).is_consistent());
  CHECK(induced_we_verdict(identity_functor(cyclic_group_cat(3))).degree == 3);
  CHECK(induced_we_verdict(object_inclusion(arrow, 0)).is_consistent());

  auto two = discrete_cat({"0", "1"});
  auto incl = functor_from_ids(two, arrow, {{"0", "0"}, {"1", "1"}}, {{"id_0", "0->0"}, {"id_1", "1->1"}});
  auto v = induced_we_verdict(incl);
  CHECK(v.is_refuted());
  CHECK(v.degree == 0);
  CHECK(v.detail == "pi0: 2 vs 1 components");

  auto bc2 = cyclic_group_cat(2);
  auto to_point = constant_functor(bc2, terminal_cat(), 0);
  auto vp = induced_we_verdict(to_point);
  CHECK(vp.is_refuted());
  CHECK(vp.degree == 1);

  // same homology, but the map kills H1: only the mapping cone notices
  auto circle = pseudo_circle();
  auto collapse = constant_functor(circle, circle, 0);
  auto vc = induced_we_verdict(collapse);
  CHECK(vc.is_refuted());
  CHECK(vc.degree == 1);

  // an automorphism of the circle is fine
  auto swap = functor_from_ids(circle, circle, {{"a", "b"}, {"b", "a"}, {"c", "c"}, {"d", "d"}},
                               {{"a->a", "b->b"}, {"b->b", "a->a"}, {"c->c", "c->c"}, {"d->d", "d->d"},
                                {"a->c", "b->c"}, {"a->d", "b->d"}, {"b->c", "a->c"}, {"b->d", "a->d"}});
  CHECK(induced_we_verdict(swap).is_consistent());

  // the squaring map on C3 is an automorphism, on C4 it is not
  auto c4 = cyclic_group_cat(4);
  auto sq4 = functor_from_ids(c4, c4, {{"*", "*"}}, {{"e", "e"}, {"g", "g2"}, {"g2", "e"}, {"g3", "g2"}});
  CHECK(induced_we_verdict(sq4).is_refuted());

  ScopedCaps tight(Caps::parse("cells=10"));
  CHECK(induced_we_verdict(identity_functor(symmetric3_cat())).is_inconclusive());
}
