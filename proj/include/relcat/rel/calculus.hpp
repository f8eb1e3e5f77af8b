#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "relcat/rel/krel.hpp"

namespace relcat {

/// A square from w to w2 in the arrow category of wC: w2∘a = b∘w.
struct ArrowSquare {
  MorIdx w, w2, a, b;
  friend auto operator<=>(const ArrowSquare&, const ArrowSquare&) = default;
};

/// Subcategories U, V ⊆ w with a chosen factorization w = v∘u of every w-map
/// and, for every square between w-maps, the connecting map of the middle
/// objects (the functorial factorization).
struct ThreeArrowCalculus {
  Mask u;
  Mask v;
  std::map<MorIdx, std::pair<MorIdx, MorIdx>> factor;  // w ↦ (u, v)
  std::map<ArrowSquare, MorIdx> witnesses;
};

struct CalculusCheck {
  std::string condition;  // e.g. "(i) in (aC,wC)"
  bool pass = true;
  std::string witness;
};

struct CalculusReport {
  bool strict = false;
  std::vector<CalculusCheck> checks;
  bool ok() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

/// Every square between w-maps (a, b ∈ w), in index order.
std::vector<ArrowSquare> w_squares(const KRelStructure& z);

/// Fills `witnesses` for every square where the connecting map is forced
/// (exactly one m ∈ w with m∘u = u2∘a and v2∘m = b∘v). Squares with no or
/// several candidates are left out, so the check reports them.
void derive_unique_witnesses(const KRelStructure& z, ThreeArrowCalculus& cal);

/// Exhaustive check of: (i) pushouts of U-maps along arbitrary maps exist with
/// the opposite leg in U, (ii) pullbacks of V-maps exist with the opposite leg
/// in V, (iii) the factorization and its functoriality. With strict = true it
/// also checks (i)' pushouts of w-maps along U-maps have their leg in w, (ii)'
/// dually for V, and re-runs (i)–(iii) inside wC and inside each v_iC.
/// Pushouts and pullbacks are searched in the ambient category restricted to
/// the mask under consideration; a condition holds when some universal
/// (co)cone has its leg in the required mask.
CalculusReport check_three_arrow_calculus(const KRelStructure& z, const ThreeArrowCalculus& cal, bool strict);

/// A pushout of the span B ← A → C (maps f: A → B, g: A → C) in the subcategory
/// given by `mask`: every universal cocone (P, b: B → P, c: C → P).
std::vector<std::pair<MorIdx, MorIdx>> pushouts(const FinCat& c, const Mask& mask, MorIdx f, MorIdx g);
/// Every universal cone (P, b: P → B, c: P → C) over B → D ← C.
std::vector<std::pair<MorIdx, MorIdx>> pullbacks(const FinCat& c, const Mask& mask, MorIdx f, MorIdx g);

}  // namespace relcat
