#pragma once

#include <functional>
#include <string>

#include "relcat/cat/functor.hpp"
#include "relcat/core/verdict.hpp"
#include "relcat/rel/krel.hpp"

namespace relcat {

struct HomotopyReport {
  bool endpoints_ok = true;
  std::string endpoint_witness;
  /// Component verdicts; Refuted if some component fails the oracle.
  WEVerdict components = WEVerdict::consistent(0);
  std::string component_witness;
  bool ok() const { return endpoints_ok && components.is_consistent(); }
};

/// Decides whether a morphism of the target is a weak equivalence.
using WeOracle = std::function<WEVerdict(MorIdx)>;

/// Oracle that accepts exactly the maps in a w-mask.
WeOracle mask_oracle(const Mask& w);

/// h: C × [1] → D (product ids "(c,0)", "(c,1)", "(m,0->0)", ...) with
/// h(-,0) = f and h(-,1) = g, every component h(c, 0->1) accepted by the oracle.
HomotopyReport check_strict_homotopy(const FinFunctor& h, const FinFunctor& f, const FinFunctor& g,
                                     const WeOracle& we);

/// The homotopy C × [1] → D of a natural transformation f ⇒ g.
FinFunctor homotopy_from_transformation(const CatPtr& product_cat, const NatTransformation& t);

}  // namespace relcat
