#pragma once

#include <string>
#include <vector>

#include "relcat/cat/fincat.hpp"
#include "relcat/nerve/chains.hpp"
#include "relcat/nerve/multisset.hpp"

namespace relcat {

struct DegreeHomology {
  std::size_t betti = 0;
  std::vector<BigInt> torsion;  // ascending, each > 1

  bool is_zero() const { return betti == 0 && torsion.empty(); }
  /// "0", "Z", "Z^2 + Z/2 + Z/6"
  std::string to_string() const;
  friend bool operator==(const DegreeHomology&, const DegreeHomology&) = default;
};

struct HomologySignature {
  std::vector<DegreeHomology> groups;  // H_0 .. H_{groups.size()-1}
  int exact_through = -1;

  std::string to_string() const;
  friend bool operator==(const HomologySignature&, const HomologySignature&) = default;
};

/// Homology of a chain complex through max_degree (needs boundary[max_degree + 1]).
HomologySignature complex_homology(const ChainComplex& c, int max_degree);

/// Normalized homology of an arity-1 simplicial set; max_degree ≤ bound − 1.
HomologySignature homology(const TruncMultiSSet& s, int max_degree);

/// Homology of the nerve of c in degrees below `bound`, computed on a reduced
/// model (skeleton, then beat-point core for posets) from direct chains.
HomologySignature category_homology(const CatPtr& c, int bound);

}  // namespace relcat
