#pragma once

#include <string>
#include <utility>
#include <vector>

#include "relcat/cat/functor.hpp"

namespace relcat {

CatPtr empty_cat();
/// The chain [0]: object "0", morphism "0->0".
CatPtr terminal_cat();
CatPtr discrete_cat(const std::vector<std::string>& objects);
/// [p] = 0 -> 1 -> ... -> p with objects "0".."p" and morphisms "i->j" for i <= j.
CatPtr chain_cat(int p);

/// One-object category "*" on a group given by its multiplication table:
/// table[a][b] = a*b, composition g∘f = g*f. Element 0 must be the unit.
CatPtr group_cat(const std::vector<std::string>& elements,
                 const std::vector<std::vector<int>>& table);
/// C_n with elements "e", "g", "g2", ..., "g{n-1}".
CatPtr cyclic_group_cat(int n);
/// Klein four group with elements "e", "a", "b", "c".
CatPtr klein_four_cat();
/// S_3 with elements "e", "r", "r2", "s", "sr", "sr2" (r^3 = s^2 = e, s r = r^2 s).
CatPtr symmetric3_cat();

/// The thin category on the reflexive-transitive closure of `relations`
/// (pairs x <= y); morphisms are "x->y".
CatPtr poset_cat(const std::vector<std::string>& elements,
                 const std::vector<std::pair<std::string, std::string>>& relations);

struct GraphEdge {
  std::string id;
  std::string src;
  std::string tgt;
};
/// Paths in an acyclic graph: identities "id_v", an edge keeps its id, longer
/// paths are "e_k.….e_1" (last edge first). A directed cycle throws InvalidInput
/// listing its vertices.
CatPtr free_category_on_acyclic_graph(const std::vector<std::string>& vertices,
                                      const std::vector<GraphEdge>& edges);

struct ProductResult {
  CatPtr cat;
  FinFunctor first;
  FinFunctor second;
};
/// Objects and morphisms "(a,b)", componentwise composition.
ProductResult product(const CatPtr& a, const CatPtr& b);

struct PullbackResult {
  CatPtr cat;
  FinFunctor first;
  FinFunctor second;

  /// Index of the pair (x, y) / (a, b); kNone unless both sides have the same image.
  ObjIdx object_of(ObjIdx x, ObjIdx y) const;
  MorIdx morphism_of(MorIdx a, MorIdx b) const;

  std::vector<std::uint32_t> obj_start, obj_pos;
  std::vector<std::uint64_t> mor_start;
  std::vector<std::uint32_t> mor_pos;
  std::vector<ObjIdx> x_image, y_image;  // f on objects, g on objects
  std::vector<MorIdx> a_image, b_image;  // f on morphisms, g on morphisms
};
/// Strict pullback of f: X → Z and g: Y → Z with ids "(x,y)".
PullbackResult pullback_cat(const FinFunctor& f, const FinFunctor& g);

/// Same ids, reversed arrows.
CatPtr opposite(const CatPtr& c);

struct SubcatResult {
  CatPtr cat;
  FinFunctor inclusion;
};
SubcatResult full_subcategory(const CatPtr& c, const std::vector<ObjIdx>& objects);
/// All objects, the morphisms selected by `mask`; throws InvalidInput if the
/// mask misses an identity or is not closed under composition.
SubcatResult wide_subcategory(const CatPtr& c, const std::vector<bool>& mask);

/// The objects and morphisms selected by the masks; throws InvalidInput unless
/// they form a subcategory.
SubcatResult subcategory(const CatPtr& c, const std::vector<bool>& objects, const std::vector<bool>& morphisms);
/// Objects over b and morphisms over its identity.
SubcatResult strict_fiber(const FinFunctor& p, ObjIdx b);

/// Functor from the terminal category picking out `o`.
FinFunctor object_inclusion(const CatPtr& c, ObjIdx o);
/// The functor [p] → c starting at `start` and sending i->i+1 to chain[i]
/// (p = chain.size()); throws InvalidInput unless the chain is composable.
FinFunctor chain_inclusion(const CatPtr& c, ObjIdx start, const std::vector<MorIdx>& chain);

}  // namespace relcat
