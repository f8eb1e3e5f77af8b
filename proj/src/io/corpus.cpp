#include "relcat/io/corpus.hpp"

#include <filesystem>
#include <random>

#include "relcat/cat/constructions.hpp"

namespace relcat {

namespace {

KRelStructure square_k2() {
  auto sq = poset_cat({"00", "01", "10", "11"}, {{"00", "01"}, {"00", "10"}, {"01", "11"}, {"10", "11"}});
  KRelStructure s{sq, {identity_mask(*sq), identity_mask(*sq)}, identity_mask(*sq), false};
  s.v[0][sq->morphism_index("00->10")] = true;
  s.v[0][sq->morphism_index("01->11")] = true;
  s.v[1][sq->morphism_index("00->01")] = true;
  s.v[1][sq->morphism_index("10->11")] = true;
  return s;
}

CatPtr pseudo_circle() {
  return poset_cat({"a", "b", "c", "d"}, {{"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"}});
}

CatPtr cospan_poset() { return poset_cat({"x", "m", "y"}, {{"x", "m"}, {"y", "m"}}); }

CatPtr random_poset(std::mt19937_64& rng, int size) {
  std::vector<std::string> elements;
  for (int i = 0; i < size; ++i) elements.push_back("p" + std::to_string(i));
  std::vector<std::pair<std::string, std::string>> relations;
  for (int i = 0; i < size; ++i)
    for (int j = i + 1; j < size; ++j)
      if (rng() % 3 == 0) relations.emplace_back(elements[i], elements[j]);
  return poset_cat(elements, relations);
}

FunctorDoc plain(const FinFunctor& f) { return {f, std::nullopt, std::nullopt}; }

FunctorDoc relative(const KRelStructure& s, const KRelStructure& t, const FinFunctor& f) { return {f, s, t}; }

// {o} → Z with the point read like Z (maximal for k = 1).
FunctorDoc point_into(const KRelStructure& z, const std::string& object) {
  auto inc = object_inclusion(z.ambient, z.cat().object_index(object));
  return relative(z.k() == 0 ? cat_hat(inc.source) : all_full(inc.source, z.k()), z, inc);
}

FunctorDoc identity_on(const KRelStructure& z) { return relative(z, z, identity_functor(z.ambient)); }

ZigzagDoc zigzag(FunctorDoc f, FunctorDoc g) {
  g.functor.target = f.functor.target;
  g.target_structure = f.target_structure;
  return {std::move(f), std::move(g)};
}

GrothendieckInput constant_input(const CatPtr& base, const CatPtr& fiber) {
  GrothendieckInput in{base, {}, {}, false};
  for (ObjIdx o = 0; o < base->num_objects(); ++o) in.fibers.push_back(fiber);
  for (MorIdx m = 0; m < base->num_morphisms(); ++m) in.actions.push_back(identity_functor(fiber));
  return in;
}

GrothendieckInput swap_input(bool contravariant) {
  auto bc2 = cyclic_group_cat(2);
  auto two = discrete_cat({"a", "b"});
  GrothendieckInput in{bc2, {two}, {}, contravariant};
  for (MorIdx m = 0; m < bc2->num_morphisms(); ++m) {
    if (bc2->is_identity(m))
      in.actions.push_back(identity_functor(two));
    else
      in.actions.push_back(functor_from_ids(two, two, {{"a", "b"}, {"b", "a"}}, {{"id_a", "id_b"}, {"id_b", "id_a"}}));
  }
  return in;
}

// F(0) = ∅, F(1) = terminal; contravariantly F(0) = terminal, F(1) = ∅.
GrothendieckInput empty_to_point(bool contravariant) {
  auto d1 = chain_cat(1);
  auto e = empty_cat();
  auto pt = terminal_cat();
  GrothendieckInput in{d1, {e, pt}, {}, contravariant};
  if (contravariant) in.fibers = {pt, e};
  for (MorIdx m = 0; m < d1->num_morphisms(); ++m) {
    if (d1->is_identity(m))
      in.actions.push_back(identity_functor(in.fibers[d1->src(m)]));
    else
      in.actions.push_back(FinFunctor{e, pt, {}, {}});
  }
  return in;
}

GrothendieckInput point_to_chain() {
  auto d1 = chain_cat(1);
  auto inc = object_inclusion(d1, 0);
  GrothendieckInput in{d1, {inc.source, d1}, {}, false};
  for (MorIdx m = 0; m < d1->num_morphisms(); ++m)
    in.actions.push_back(d1->is_identity(m) ? identity_functor(in.fibers[d1->src(m)]) : inc);
  return in;
}

}  // namespace

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
    if (z.w[w]) cal.factor[w] = {z.ambient->identity(z.ambient->src(w)), w};
  derive_unique_witnesses(z, cal);
  return cal;
}

std::vector<CorpusEntry> generate_corpus(std::uint64_t seed) {
  std::vector<CorpusEntry> out;
  auto add = [&](std::string name, Payload p) { out.push_back({std::move(name), Document{std::move(p)}}); };

  const auto bc2 = cyclic_group_cat(2), bc3 = cyclic_group_cat(3), bc4 = cyclic_group_cat(4);
  const auto bs3 = symmetric3_cat(), v4 = klein_four_cat();
  const auto d1 = chain_cat(1), circle = pseudo_circle();
  std::mt19937_64 rng(seed);
  const auto rp0 = random_poset(rng, 4), rp1 = random_poset(rng, 5);

  add("empty", empty_cat());
  add("terminal", terminal_cat());
  add("delta1", d1);
  add("chain2", chain_cat(2));
  add("chain3", chain_cat(3));
  add("bc2", bc2);
  add("bc3", bc3);
  add("bc4", bc4);
  add("bs3", bs3);
  add("v4", v4);
  add("pseudo_circle", circle);
  add("cospan", cospan_poset());
  add("random_poset_0", rp0);
  add("random_poset_1", rp1);

  for (int p = 0; p <= 3; ++p) {
    add("chain" + std::to_string(p) + "_v", shape_chain(p, ShapeFlavor::Minimal, 1));
    add("chain" + std::to_string(p) + "_w", shape_chain(p, ShapeFlavor::W, 1));
  }
  const auto d1_max = maximal(d1), d1_min = minimal(d1);
  add("delta1_max", d1_max);
  add("delta1_min", d1_min);
  add("delta1_hat", cat_hat(d1));
  const auto bc2_max = maximal(bc2), bc3_max = maximal(bc3);
  add("bc2_max", bc2_max);
  add("bc3_max", bc3_max);
  add("bs3_max", maximal(bs3));
  const auto circle_max = maximal(circle);
  add("pseudo_circle_max", circle_max);
  add("square_k2", square_k2());
  add("square_full_k2", all_full(square_k2().ambient, 2));
  add("chain2_v1_k2", shape_chain(2, ShapeFlavor::V, 2, 1));
  add("chain1_w_k2", shape_chain(1, ShapeFlavor::W, 2));

  add("f_delta_min", identity_on(d1_min));
  add("f_delta1_0", plain(object_inclusion(d1, 0)));
  add("f_delta1_1", plain(object_inclusion(d1, 1)));
  add("f_point_bc2", plain(object_inclusion(bc2, 0)));
  add("f_point_bs3", plain(object_inclusion(bs3, 0)));
  add("f_id_bc2", plain(identity_functor(bc2)));
  add("f_bc4_bc2", plain(functor_from_ids(bc4, bc2, {{"*", "*"}}, {{"e", "e"}, {"g", "g"}, {"g2", "e"}, {"g3", "g"}})));
  const auto chain2_w = shape_chain(2, ShapeFlavor::W, 1);
  add("f_chain2_end", point_into(chain2_w, "2"));
  add("f_pseudo_circle_a", point_into(circle_max, "a"));
  add("f_random_point", plain(object_inclusion(rp0, static_cast<ObjIdx>(rng() % rp0->num_objects()))));

  add("zz_bc2", zigzag(point_into(bc2_max, "*"), point_into(bc2_max, "*")));
  add("zz_bc3", zigzag(point_into(bc3_max, "*"), point_into(bc3_max, "*")));
  add("zz_bc2_id", zigzag(identity_on(bc2_max), identity_on(bc2_max)));
  add("zz_bc3_id", zigzag(identity_on(bc3_max), identity_on(bc3_max)));
  add("zz_bc2_point_id", zigzag(point_into(bc2_max, "*"), identity_on(bc2_max)));
  add("zz_delta1", zigzag(point_into(d1_max, "0"), point_into(d1_max, "1")));
  add("zz_delta1_00", zigzag(point_into(d1_max, "0"), point_into(d1_max, "0")));
  add("zz_chain2", zigzag(point_into(chain2_w, "0"), point_into(chain2_w, "2")));
  add("zz_pseudo_circle", zigzag(point_into(circle_max, "a"), point_into(circle_max, "b")));

  add("gr_constant_delta1", constant_input(d1, d1));
  add("gr_constant_bc2", constant_input(bc2, discrete_cat({"a", "b"})));
  add("gr_constant_cospan", constant_input(cospan_poset(), bc2));
  add("gr_swap_bc2", swap_input(false));
  add("gr_swap_bc2_op", swap_input(true));
  add("gr_empty_to_point", empty_to_point(false));
  add("gr_empty_to_point_op", empty_to_point(true));
  add("gr_point_to_chain", point_to_chain());

  for (int p = 0; p <= 3; ++p) {
    auto w = shape_chain(p, ShapeFlavor::W, 1);
    add("cal_chain" + std::to_string(p) + "_w", CalculusDoc{w, identity_u_calculus(w)});
  }
  for (int p = 1; p <= 2; ++p) {
    auto v = shape_chain(p, ShapeFlavor::Minimal, 1);
    add("cal_chain" + std::to_string(p) + "_v", CalculusDoc{v, iso_calculus(v)});
  }
  add("cal_bc2_iso", CalculusDoc{bc2_max, iso_calculus(bc2_max)});
  add("cal_bc3_iso", CalculusDoc{bc3_max, iso_calculus(bc3_max)});

  add("diag_wstar_delta1", w_star_diagram(d1_max, 1));
  add("diag_const_bc2", constant_diagram(bc2, 1, 2));
  return out;
}

std::size_t write_corpus(const std::string& dir, std::uint64_t seed) {
  std::filesystem::create_directories(dir);
  auto corpus = generate_corpus(seed);
  for (const auto& e : corpus) write_document((std::filesystem::path(dir) / (e.name + ".json")).string(), e.doc);
  return corpus.size();
}

std::vector<const CorpusEntry*> entries_of_kind(const std::vector<CorpusEntry>& corpus, DocKind kind) {
  std::vector<const CorpusEntry*> out;
  for (const auto& e : corpus)
    if (e.doc.kind() == kind) out.push_back(&e);
  return out;
}

}  // namespace relcat
