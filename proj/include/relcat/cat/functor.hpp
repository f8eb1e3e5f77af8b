#pragma once

#include <vector>

#include "relcat/cat/fincat.hpp"

namespace relcat {

struct FinFunctor {
  CatPtr source;
  CatPtr target;
  std::vector<ObjIdx> on_objects;
  std::vector<MorIdx> on_morphisms;

  ObjIdx obj(ObjIdx o) const { return on_objects[o]; }
  MorIdx mor(MorIdx m) const { return on_morphisms[m]; }
};

struct NatTransformation {
  FinFunctor from;
  FinFunctor to;
  std::vector<MorIdx> components;  // indexed by source object
};

FinFunctor identity_functor(const CatPtr& c);
/// g∘f; requires f.target and g.source to be the same category (pointer or
/// canonical equality).
FinFunctor compose_functors(const FinFunctor& g, const FinFunctor& f);
/// The constant functor at object `o` of `target`.
FinFunctor constant_functor(const CatPtr& source, const CatPtr& target, ObjIdx o);
/// Builds a functor from id-level maps; throws InvalidInput on unknown ids or
/// missing entries.
FinFunctor functor_from_ids(const CatPtr& source, const CatPtr& target,
                            const std::vector<std::pair<std::string, std::string>>& on_objects,
                            const std::vector<std::pair<std::string, std::string>>& on_morphisms);

}  // namespace relcat
