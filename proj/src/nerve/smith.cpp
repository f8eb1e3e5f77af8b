#include "relcat/nerve/smith.hpp"

#include <algorithm>
#include <utility>

#include "relcat/core/error.hpp"

namespace relcat {

namespace {

std::size_t cols_of(const IntMatrix& m) { return m.empty() ? 0 : m[0].size(); }

IntMatrix identity(std::size_t n) {
  IntMatrix m(n, std::vector<BigInt>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

void add_row(IntMatrix& a, std::size_t dst, std::size_t src, const BigInt& k) {
  if (k == 0) return;
  for (std::size_t j = 0; j < a[dst].size(); ++j) a[dst][j] += k * a[src][j];
}

void add_col(IntMatrix& a, std::size_t dst, std::size_t src, const BigInt& k) {
  if (k == 0) return;
  for (auto& row : a) row[dst] += k * row[src];
}

void swap_cols(IntMatrix& a, std::size_t i, std::size_t j) {
  if (i == j) return;
  for (auto& row : a) std::swap(row[i], row[j]);
}

// Diagonalizes a in place from position s on; transforms are applied to u
// (rows) and v (columns) when given.
void diagonalize(IntMatrix& a, IntMatrix* u, IntMatrix* v) {
  const std::size_t m = a.size();
  const std::size_t n = cols_of(a);
  const std::size_t nmin = std::min(m, n);
  for (std::size_t s = 0; s < nmin; ++s) {
    for (;;) {
      // smallest nonzero entry in the lower right block
      std::size_t pr = m, pc = n;
      for (std::size_t i = s; i < m; ++i)
        for (std::size_t j = s; j < n; ++j)
          if (a[i][j] != 0 && (pr == m || abs(a[i][j]) < abs(a[pr][pc]))) {
            pr = i;
            pc = j;
          }
      if (pr == m) return;
      std::swap(a[s], a[pr]);
      if (u) std::swap((*u)[s], (*u)[pr]);
      swap_cols(a, s, pc);
      if (v) swap_cols(*v, s, pc);
      bool lone = true;
      for (std::size_t i = s + 1; i < m; ++i)
        if (a[i][s] != 0) {
          const BigInt k = a[i][s] / a[s][s];
          add_row(a, i, s, -k);
          if (u) add_row(*u, i, s, -k);
          if (a[i][s] != 0) lone = false;
        }
      for (std::size_t j = s + 1; j < n; ++j)
        if (a[s][j] != 0) {
          const BigInt k = a[s][j] / a[s][s];
          add_col(a, j, s, -k);
          if (v) add_col(*v, j, s, -k);
          if (a[s][j] != 0) lone = false;
        }
      if (!lone) continue;
      // divisibility of the remaining block
      std::size_t bad = m;
      for (std::size_t i = s + 1; i < m && bad == m; ++i)
        for (std::size_t j = s + 1; j < n; ++j)
          if (a[i][j] % a[s][s] != 0) {
            bad = i;
            break;
          }
      if (bad == m) break;
      add_row(a, s, bad, 1);
      if (u) add_row(*u, s, bad, 1);
    }
    if (a[s][s] < 0) {
      for (auto& x : a[s]) x = -x;
      if (u)
        for (auto& x : (*u)[s]) x = -x;
    }
  }
}

}  // namespace

IntMatrix matmul(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t m = a.size(), k = b.size(), n = cols_of(b);
  if (cols_of(a) != k && !(m == 0 || k == 0)) throw InvalidInput("matmul: shape mismatch");
  IntMatrix c(m, std::vector<BigInt>(n, 0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t t = 0; t < k; ++t)
      if (a[i][t] != 0)
        for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][t] * b[t][j];
  return c;
}

BigInt determinant(IntMatrix m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  for (const auto& row : m)
    if (row.size() != n) throw InvalidInput("determinant: square matrix required");
  BigInt sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && m[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

SmithResult smith_normal_form(const IntMatrix& input) {
  const std::size_t n = cols_of(input);
  for (const auto& row : input)
    if (row.size() != n) throw InvalidInput("smith_normal_form: ragged matrix");
  SmithResult r;
  r.D = input;
  r.U = identity(input.size());
  r.V = identity(n);
  diagonalize(r.D, &r.U, &r.V);
  for (std::size_t i = 0; i < std::min(input.size(), n); ++i)
    if (r.D[i][i] != 0) r.factors.push_back(r.D[i][i]);
  if (matmul(matmul(r.U, input), r.V) != r.D) throw Error("smith_normal_form: U·M·V differs from D");
  for (const auto* t : {&r.U, &r.V})
    if (abs(determinant(*t)) != 1) throw Error("smith_normal_form: transform is not unimodular");
  for (std::size_t i = 0; i < input.size(); ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && r.D[i][j] != 0) throw Error("smith_normal_form: result is not diagonal");
  for (std::size_t i = 1; i < r.factors.size(); ++i)
    if (r.factors[i] % r.factors[i - 1] != 0) throw Error("smith_normal_form: divisibility chain broken");
  return r;
}

std::vector<BigInt> invariant_factors(IntMatrix m) {
  diagonalize(m, nullptr, nullptr);
  std::vector<BigInt> out;
  for (std::size_t i = 0; i < std::min(m.size(), cols_of(m)); ++i)
    if (m[i][i] != 0) out.push_back(m[i][i]);
  return out;
}

}  // namespace relcat
