#pragma once

#include <string>
#include <vector>

#include "relcat/cat/functor.hpp"

namespace relcat {

struct Violation {
  std::string axiom;    // e.g. "identity", "associativity", "src-tgt"
  std::string witness;  // ids of the offending cells
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  std::string summary() const;
};

/// Every violated category axiom, with the morphisms that witness it.
ValidationReport validate_cat(const FinCat& c);
/// Checks preservation of src/tgt, identities and all composites.
ValidationReport validate_functor(const FinFunctor& f);
/// Checks shared endpoints, component types and every naturality square.
ValidationReport validate_nat(const NatTransformation& t);

/// Throws InvalidInput with the first violation when the report is not ok.
void require_valid(const ValidationReport& report, const std::string& what);

}  // namespace relcat
