#include "relcat/cat/functor.hpp"

#include <unordered_map>

#include "relcat/core/error.hpp"

namespace relcat {

FinFunctor identity_functor(const CatPtr& c) {
  FinFunctor f{c, c, {}, {}};
  f.on_objects.resize(c->num_objects());
  f.on_morphisms.resize(c->num_morphisms());
  for (ObjIdx o = 0; o < c->num_objects(); ++o) f.on_objects[o] = o;
  for (MorIdx m = 0; m < c->num_morphisms(); ++m) f.on_morphisms[m] = m;
  return f;
}

FinFunctor compose_functors(const FinFunctor& g, const FinFunctor& f) {
  if (f.target != g.source) {
    const FinCat& a = *f.target;
    const FinCat& b = *g.source;
    if (a.objects() != b.objects() || a.num_morphisms() != b.num_morphisms()) {
      throw InvalidInput("compose_functors: functors are not composable");
    }
    for (MorIdx m = 0; m < a.num_morphisms(); ++m) {
      if (a.morphism_id(m) != b.morphism_id(m)) {
        throw InvalidInput("compose_functors: functors are not composable");
      }
    }
  }
  FinFunctor h{f.source, g.target, {}, {}};
  h.on_objects.reserve(f.on_objects.size());
  for (ObjIdx o : f.on_objects) h.on_objects.push_back(g.on_objects[o]);
  h.on_morphisms.reserve(f.on_morphisms.size());
  for (MorIdx m : f.on_morphisms) h.on_morphisms.push_back(g.on_morphisms[m]);
  return h;
}

FinFunctor constant_functor(const CatPtr& source, const CatPtr& target, ObjIdx o) {
  FinFunctor f{source, target, {}, {}};
  f.on_objects.assign(source->num_objects(), o);
  f.on_morphisms.assign(source->num_morphisms(), target->identity(o));
  return f;
}

FinFunctor functor_from_ids(const CatPtr& source, const CatPtr& target,
                            const std::vector<std::pair<std::string, std::string>>& on_objects,
                            const std::vector<std::pair<std::string, std::string>>& on_morphisms) {
  FinFunctor f{source, target, {}, {}};
  f.on_objects.assign(source->num_objects(), kNone);
  f.on_morphisms.assign(source->num_morphisms(), kNone);
  for (const auto& [a, b] : on_objects) {
    ObjIdx s = source->object_index(a);
    if (f.on_objects[s] != kNone) throw InvalidInput("functor: duplicate entry for object '" + a + "'");
    f.on_objects[s] = target->object_index(b);
  }
  for (const auto& [a, b] : on_morphisms) {
    MorIdx s = source->morphism_index(a);
    if (f.on_morphisms[s] != kNone) {
      throw InvalidInput("functor: duplicate entry for morphism '" + a + "'");
    }
    f.on_morphisms[s] = target->morphism_index(b);
  }
  for (ObjIdx o = 0; o < source->num_objects(); ++o) {
    if (f.on_objects[o] == kNone) {
      throw InvalidInput("functor: no image for object '" + source->object_id(o) + "'");
    }
  }
  for (MorIdx m = 0; m < source->num_morphisms(); ++m) {
    if (f.on_morphisms[m] == kNone) {
      throw InvalidInput("functor: no image for morphism '" + source->morphism_id(m) + "'");
    }
  }
  return f;
}

}  // namespace relcat
