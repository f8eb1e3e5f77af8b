#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "relcat/cat/functor.hpp"

namespace relcat {

struct Components {
  std::vector<std::uint32_t> label;  // per object, numbered by first occurrence
  std::uint32_t count = 0;
};
/// Connected components of the underlying undirected graph.
Components components(const FinCat& c);

std::optional<MorIdx> inverse_of(const FinCat& c, MorIdx m);
bool is_groupoid(const FinCat& c);
/// At most one morphism between any two objects.
bool is_thin(const FinCat& c);

/// A skeleton: the full subcategory on the first object of each isomorphism
/// class, with its inclusion and a retraction r (r∘i = id) built from chosen
/// isomorphisms x ≅ rep(x). Both functors are equivalences. With `allowed`,
/// only isomorphisms that lie in it together with their inverses are used.
struct Skeleton {
  CatPtr cat;
  FinFunctor inclusion;
  FinFunctor retraction;
};
Skeleton skeleton(const CatPtr& c, const std::vector<bool>* allowed = nullptr);

/// Line-oriented canonical text of a category: objects, morphisms and the
/// composition table sorted by (relabeled) id. Equal strings mean equal
/// categories up to reindexing.
std::string canonical_encoding(const FinCat& c,
                               const std::function<std::string(const std::string&)>& relabel = {});
/// Canonical text of a functor (source and target ids plus both maps).
std::string canonical_encoding(const FinFunctor& f);

/// Rewrites nested pair ids "((a,b),c)" and "(a,(b,c))" to "(a,b,c)".
std::string flatten_pair_id(const std::string& id);

/// True when the functor is bijective on objects and morphisms (an
/// isomorphism of categories, given that it is a functor).
bool is_isomorphism(const FinFunctor& f);

/// All functors a → b, stopping after `limit` results. Exhaustive search meant
/// for small categories.
std::vector<FinFunctor> enumerate_functors(const CatPtr& a, const CatPtr& b, std::size_t limit = 100000);

/// Same structure, ids renamed.
CatPtr relabel(const CatPtr& c, const std::function<std::string(const std::string&)>& object_name,
               const std::function<std::string(const std::string&)>& morphism_name);

}  // namespace relcat
