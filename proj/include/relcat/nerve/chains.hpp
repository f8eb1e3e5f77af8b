#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "relcat/cat/functor.hpp"
#include "relcat/nerve/multisset.hpp"
#include "relcat/nerve/smith.hpp"

namespace relcat {

/// Column-sparse integer matrix; each column is sorted by row.
struct SparseMatrix {
  std::size_t rows = 0;
  std::vector<std::vector<std::pair<std::uint32_t, std::int64_t>>> cols;

  std::size_t num_cols() const { return cols.size(); }
  IntMatrix dense() const;
};

SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b);
bool is_zero(const SparseMatrix& m);

/// boundary[d] maps degree d to degree d - 1 (boundary[0] has zero rows).
struct ChainComplex {
  std::vector<std::size_t> dims;
  std::vector<SparseMatrix> boundary;

  int top() const { return static_cast<int>(dims.size()) - 1; }
};

/// Checks ∂∘∂ = 0 in every degree; returns the first failing degree or -1.
int first_nonzero_square(const ChainComplex& c);

/// Normalized chains of an arity-1 simplicial set.
ChainComplex normalized_chains(const TruncMultiSSet& s);

/// Normalized nerve chains of a category through degree `top`: d-chains of
/// non-identity composable morphisms, in extension order.
class CategoryChains {
 public:
  CategoryChains(const FinCat& c, int top);

  const ChainComplex& complex() const { return complex_; }
  int top() const { return complex_.top(); }
  std::size_t count(int d) const { return complex_.dims[static_cast<std::size_t>(d)]; }
  /// Morphisms of the x-th d-chain in order of composition (first applied first).
  std::vector<MorIdx> chain(int d, std::uint32_t x) const;
  /// Index of a chain of non-identity morphisms, or kNone.
  std::uint32_t find(const std::vector<MorIdx>& chain) const;

 private:
  const FinCat* cat_;
  ChainComplex complex_;
  std::vector<std::uint32_t> rank_;                  // per morphism: position among non-identity out-morphisms
  std::vector<std::uint32_t> first_;                 // per morphism: position in degree 1
  std::vector<std::vector<std::uint32_t>> start_;    // start_[d][x]: first extension in degree d + 1
  std::vector<std::vector<std::uint32_t>> parent_;   // parent_[d][x]: prefix in degree d - 1
  std::vector<std::vector<MorIdx>> last_;            // last_[d][x]: final morphism
};

/// The chain map induced by f in degree d (columns: source chains).
SparseMatrix chain_map(const FinFunctor& f, const CategoryChains& x, const CategoryChains& y, int d);

/// Mapping cone of f: cone_d = Y_d ⊕ X_{d-1}, through degree min(Y.top, X.top + 1).
ChainComplex mapping_cone(const FinFunctor& f, const CategoryChains& x, const CategoryChains& y);

struct RankTorsion {
  std::size_t rank = 0;
  std::vector<BigInt> torsion;  // invariant factors > 1, ascending
};
/// Rank and torsion of an integer matrix: sparse elimination on unit pivots,
/// then Smith normal form of the remainder.
RankTorsion rank_and_torsion(const SparseMatrix& m);

}  // namespace relcat
