#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "relcat/arrow/embed.hpp"
#include "relcat/arrow/grothendieck.hpp"
#include "relcat/arrow/levelwise.hpp"
#include "relcat/core/verdict.hpp"
#include "relcat/nerve/homology.hpp"

namespace relcat {

enum class Overall { Pass, Refuted, Inconclusive };
std::string to_string(Overall o);

/// One case: a weak-equivalence verdict or an exact pass/fail.
struct PropertyCase {
  std::string id;
  std::variant<WEVerdict, bool> outcome;
  std::string note;

  Overall status() const;
  std::string outcome_string() const;
};

struct PropertyReport {
  std::string name;  // "B_n", "C_n", "family-fibrillation", "relative-functor", ...
  std::vector<PropertyCase> cases;
  std::vector<std::string> notes;

  /// Refuted iff some case is Refuted, else Inconclusive iff some case is.
  Overall overall() const;
  void add(std::string id, std::variant<WEVerdict, bool> outcome, std::string note = {});
  /// Prefixes the case ids of `other` and appends them.
  void merge(const PropertyReport& other, const std::string& prefix);
  void sort_cases();
  /// First refuted (else inconclusive) case, or nullptr.
  const PropertyCase* first_problem() const;
  std::string to_string() const;
};

/// One verdict of induced_we_verdict per non-identity base morphism.
PropertyReport check_relative_functor(const GrothendieckInput& in, int bound = 3);

/// Property B_n. The Cat-hat form checks the slice functor Z → Cat-hat; a
/// diagram map is checked level by level; a k-relative functor (k ≥ 1) through
/// w_* on the window [0, window]^k, and through its underlying functor for k = 0.
PropertyReport check_Bn(const FinFunctor& f, int n, int bound = 3);
PropertyReport check_Bn(const FinFunctor& f, const PathPtr& path, int bound = 3);
PropertyReport check_Bn(const DiagramMap& f, int n, int bound = 3);
PropertyReport check_Bn(const KRelFunctor& f, int n, int bound = 3, int window = 1);

/// Property C_n: B_n for every object inclusion, in the same three forms.
PropertyReport check_Cn(const CatPtr& z, int n, int bound = 3);
PropertyReport check_Cn(const CatDiagram& z, int n, int bound = 3);
PropertyReport check_Cn(const KRelStructure& z, int n, int bound = 3, int window = 1);

/// The lower row A --i--> B' --u--> B of a fibrillation test, stored as the two
/// feet a = u∘i and b = u over the shared base B together with i.
struct Cospan {
  FinFunctor first;   // a: A → B
  FinFunctor second;  // b = u: B' → B
  FinFunctor i;       // A → B', second ∘ i = first
  std::string label;
};
/// Throws InvalidInput unless the feet share the base and second ∘ i = first.
void check_cospan(const Cospan& c);

struct SimplexProbe {
  FinFunctor sigma;  // [p] → B
  ObjIdx start = 0;
  std::vector<MorIdx> chain;
  std::vector<std::string> key;
  std::string name;  // "<x>" or "<f,g>"
};
/// All functors [p] → B for p ≤ max_dim, ordered by p and then by key.
std::vector<SimplexProbe> simplex_probes(const CatPtr& b, int max_dim = 2);

/// Probes are all functors [p] → B for p ≤ 2 (nerve simplices, degenerate ones
/// included) ordered by p and then by the ids of the chain. A probe σ that is a
/// weak equivalence gives the cospan (σ, id_B) with i = σ; then every face
/// τ = σ∘δ of a probe of dimension ≥ 1 gives (τ, σ) with i = δ.
std::vector<Cospan> default_cospan_family(const CatPtr& b, int bound = 3);

/// Per cospan: the double pullback rectangle over p, then the verdict of
/// j: A ×_B E → B' ×_B E. A cospan whose i is not ConsistentThrough is
/// skipped as Inconclusive.
PropertyReport check_fibrillation(const FinFunctor& p, const std::vector<Cospan>& family, int bound = 3);

/// Pullbacks of p along the second feet are re-checked on the default family
/// of their base, and each j is recomputed as the pullback of i along the
/// pulled-back map.
PropertyReport fibrillation_stability(const FinFunctor& p, const std::vector<Cospan>& family, int bound = 3);

struct QuillenReport {
  PropertyReport relative;
  PropertyReport fibrillation;
  bool agree() const;
  std::string to_string() const;
};
QuillenReport quillen_lemma_harness(const GrothendieckInput& in, int bound = 3);

/// A disjoint union of one-object groupoids.
struct GroupoidComponent {
  std::string id;                     // "(x,y,γ)"
  std::vector<std::string> elements;  // unit first
  std::vector<std::vector<int>> table;
};
struct GroupoidPresentation {
  std::vector<GroupoidComponent> components;
  /// Empty string when every table is a group.
  std::string problem() const;
};

/// Homotopy pullback of finite groupoids by double cosets. Components of the
/// inputs are matched through the components of G; for each match with group
/// H = Aut(z), transported images φ(A), ψ(B) ⊆ H, the components are the classes
/// of γ ∈ H under γ ~ ψ(b)γφ(a)⁻¹, and the isotropy of γ is
/// {(a,b) : ψ(b) = γφ(a)γ⁻¹}. Throws InvalidInput on non-groupoids.
GroupoidPresentation groupoid_pullback_oracle(const FinFunctor& f, const FinFunctor& g);

/// Homology of the nerve of each component, in degrees below `bound`.
std::vector<HomologySignature> presentation_homology(const GroupoidPresentation& p, int bound);

/// Per connected component of a relative category, relative_homology,
/// sorted by the signature text.
std::vector<HomologySignature> component_homology(const KRelStructure& s, int bound);

struct OracleComparison {
  std::vector<HomologySignature> construction;
  std::vector<HomologySignature> oracle;
  bool match = false;
  std::string witness;
};
/// Compares the n-arrow pullback object with the oracle component by
/// component. Requires groupoids.
OracleComparison compare_with_oracle(const NArrowPullback& pb, int bound);

struct TheoremReport {
  enum class Mode { Skipped, Groupoid, EmbedOnly };
  Mode mode = Mode::Skipped;
  PropertyReport hypothesis;
  std::optional<GroupoidPresentation> oracle;
  std::optional<OracleComparison> comparison;
  HomologySignature object_homology;
  bool embedding_ok = false;
  WEVerdict h_verdict;
  WEVerdict k_verdict;
  std::vector<std::string> notes;

  /// Skipped asserts nothing and counts as ok.
  bool ok() const;
  std::string to_string() const;
};
/// The hypothesis is checked through w_* on the window [0, window]^k.
TheoremReport verify_theorem_Bn(const KRelFunctor& f, const KRelFunctor& g, int n, int bound = 3, int window = 0);

}  // namespace relcat
