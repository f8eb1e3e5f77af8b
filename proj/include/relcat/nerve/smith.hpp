#pragma once

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace relcat {

using BigInt = boost::multiprecision::cpp_int;
using IntMatrix = std::vector<std::vector<BigInt>>;

struct SmithResult {
  IntMatrix D;  // U · M · V
  IntMatrix U;
  IntMatrix V;
  std::vector<BigInt> factors;  // nonzero diagonal entries, each dividing the next
};

/// Smith normal form with unimodular transforms. The result is verified
/// (product identity, det U and det V = ±1) and Error is thrown otherwise.
SmithResult smith_normal_form(const IntMatrix& m);

/// Nonzero invariant factors only, without transforms.
std::vector<BigInt> invariant_factors(IntMatrix m);

/// Fraction-free (Bareiss) determinant of a square matrix.
BigInt determinant(IntMatrix m);

IntMatrix matmul(const IntMatrix& a, const IntMatrix& b);

}  // namespace relcat
