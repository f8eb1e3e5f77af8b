#pragma once

#include <array>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include <boost/container_hash/hash.hpp>

#include "relcat/cat/functor.hpp"
#include "relcat/cat/validate.hpp"

namespace relcat {

/// A functor F: D → Cat-hat given by its values, or F: D^op → Cat-hat when
/// `contravariant` (then actions[d] goes F(tgt d) → F(src d)).
struct GrothendieckInput {
  CatPtr base;
  std::vector<CatPtr> fibers;       // per base object
  std::vector<FinFunctor> actions;  // per base morphism
  bool contravariant = false;
};

/// Endpoints, identities to identity functors and composites to composed
/// functors (exact table equality), plus each action being a functor.
ValidationReport validate_grothendieck_input(const GrothendieckInput& in);

/// Objects (D,A) with id "(D,A)". Covariant morphisms are (d,a) with
/// a: (Fd)A1 → A2, id "(d,a)@A1", composed as (d'd, a'∘(Fd')(a)). Contravariant
/// morphisms are (d,a) with a: A1 → (Fd)A2, id "(d,a)@A2", composed as
/// (d'd, (Fd)(a')∘a). In both cases π: Gr F → D forgets the fiber component.
struct GrothendieckResult {
  CatPtr cat;
  FinFunctor pi;
  std::vector<ObjIdx> object_base, object_fiber;    // (D, A) per object
  std::vector<MorIdx> morphism_base, morphism_fiber;  // (d, a) per morphism

  ObjIdx object_of(ObjIdx d, ObjIdx a) const;
  MorIdx morphism_of(MorIdx d, MorIdx a, ObjIdx anchor) const;

  std::vector<std::uint32_t> object_start;  // per base object
  std::unordered_map<std::array<std::uint32_t, 3>, MorIdx, boost::hash<std::array<std::uint32_t, 3>>> morphism_lookup;
};

/// Throws InvalidInput when validate_grothendieck_input fails.
GrothendieckResult grothendieck(const GrothendieckInput& in);

/// The functor Gr F1 → Gr F2 over D induced by components eta[D]: F1(D) → F2(D)
/// natural in D (checked; throws InvalidInput otherwise).
FinFunctor gr_map(const GrothendieckInput& f1, const GrothendieckResult& g1, const GrothendieckInput& f2,
                  const GrothendieckResult& g2, const std::vector<FinFunctor>& eta);

}  // namespace relcat
