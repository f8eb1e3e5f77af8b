#include "relcat/nerve/multisset.hpp"

#include "relcat/core/error.hpp"

namespace relcat {

TruncMultiSSet::TruncMultiSSet(int arity_, int bound_) : arity(arity_), bound(bound_) {
  if (arity < 1) throw InvalidInput("multisimplicial set: arity must be at least 1");
  if (bound < 0) throw InvalidInput("multisimplicial set: negative bound");
  std::size_t n = 1;
  for (int d = 0; d < arity; ++d) n *= static_cast<std::size_t>(bound + 1);
  cells.resize(n);
  faces.resize(n);
  degeneracies.resize(n);
}

std::size_t TruncMultiSSet::level_index(const std::vector<int>& degree) const {
  if (static_cast<int>(degree.size()) != arity) throw InvalidInput("multidegree has the wrong arity");
  std::size_t idx = 0;
  for (int v : degree) {
    if (v < 0 || v > bound) throw InvalidInput("multidegree outside the truncation window");
    idx = idx * static_cast<std::size_t>(bound + 1) + static_cast<std::size_t>(v);
  }
  return idx;
}

std::vector<int> TruncMultiSSet::degree_of(std::size_t level) const {
  std::vector<int> d(static_cast<std::size_t>(arity));
  for (int i = arity; i-- > 0;) {
    d[static_cast<std::size_t>(i)] = static_cast<int>(level % static_cast<std::size_t>(bound + 1));
    level /= static_cast<std::size_t>(bound + 1);
  }
  return d;
}

std::size_t TruncMultiSSet::neighbor(std::size_t level, int dir, int delta) const {
  auto d = degree_of(level);
  const int v = d[static_cast<std::size_t>(dir)] + delta;
  if (v < 0 || v > bound) return npos;
  d[static_cast<std::size_t>(dir)] = v;
  return level_index(d);
}

std::vector<std::size_t> TruncMultiSSet::counts() const {
  std::vector<std::size_t> out;
  for (const auto& c : cells) out.push_back(c.size());
  return out;
}

namespace {

std::string where(const TruncMultiSSet& s, std::size_t level, std::uint32_t cell) {
  std::string deg;
  for (int v : s.degree_of(level)) deg += (deg.empty() ? "" : ",") + std::to_string(v);
  return "cell " + s.cells[level][cell] + " at (" + deg + ")";
}

}  // namespace

ValidationReport check_simplicial_identities(const TruncMultiSSet& s) {
  ValidationReport report;
  auto add = [&](const std::string& what, std::size_t level, std::uint32_t cell) {
    if (report.violations.size() < 50) report.violations.push_back({what, where(s, level, cell)});
  };
  for (std::size_t L = 0; L < s.num_levels(); ++L) {
    const auto deg = s.degree_of(L);
    const auto n = static_cast<std::uint32_t>(s.cells[L].size());
    for (int a = 0; a < s.arity; ++a) {
      const int pa = deg[static_cast<std::size_t>(a)];
      const std::size_t La = s.neighbor(L, a, -1);
      // Faces within direction a: d_i d_j = d_{j-1} d_i for i < j.
      if (pa >= 2) {
        const std::size_t Laa = s.neighbor(La, a, -1);
        (void)Laa;
        for (std::uint32_t x = 0; x < n; ++x)
          for (int j = 0; j <= pa; ++j)
            for (int i = 0; i < j; ++i) {
              auto lhs = s.faces[La][a][i][s.faces[L][a][j][x]];
              auto rhs = s.faces[La][a][j - 1][s.faces[L][a][i][x]];
              if (lhs != rhs) add("d_i d_j = d_{j-1} d_i (dir " + std::to_string(a) + ")", L, x);
            }
      }
      // Faces in different directions commute.
      for (int b = a + 1; b < s.arity; ++b) {
        const int pb = deg[static_cast<std::size_t>(b)];
        if (pa == 0 || pb == 0) continue;
        const std::size_t Lb = s.neighbor(L, b, -1);
        for (std::uint32_t x = 0; x < n; ++x)
          for (int i = 0; i <= pa; ++i)
            for (int j = 0; j <= pb; ++j)
              if (s.faces[La][b][j][s.faces[L][a][i][x]] != s.faces[Lb][a][i][s.faces[L][b][j][x]])
                add("mixed faces commute", L, x);
      }
      // Degeneracies within direction a, where the target level exists.
      const std::size_t Lup = s.neighbor(L, a, +1);
      if (Lup == TruncMultiSSet::npos) continue;
      for (std::uint32_t x = 0; x < n; ++x) {
        for (int j = 0; j <= pa; ++j) {
          const auto y = s.degeneracies[L][a][j][x];
          for (int i = 0; i <= pa + 1; ++i) {
            const auto fy = s.faces[Lup][a][i][y];
            if (i == j || i == j + 1) {
              if (fy != x) add("d_j s_j = d_{j+1} s_j = id (dir " + std::to_string(a) + ")", L, x);
            } else if (i < j) {
              if (fy != s.degeneracies[La][a][j - 1][s.faces[L][a][i][x]]) add("d_i s_j = s_{j-1} d_i", L, x);
            } else {
              if (fy != s.degeneracies[La][a][j][s.faces[L][a][i - 1][x]]) add("d_i s_j = s_j d_{i-1}", L, x);
            }
          }
          const std::size_t Lup2 = s.neighbor(Lup, a, +1);
          if (Lup2 != TruncMultiSSet::npos) {
            for (int i = 0; i <= j; ++i) {
              if (s.degeneracies[Lup][a][i][y] != s.degeneracies[Lup][a][j + 1][s.degeneracies[L][a][i][x]])
                add("s_i s_j = s_{j+1} s_i", L, x);
            }
          }
        }
      }
      // Degeneracies in a commute with faces and degeneracies in other directions.
      for (int b = 0; b < s.arity; ++b) {
        if (b == a) continue;
        const int pb = deg[static_cast<std::size_t>(b)];
        const std::size_t Lupb = s.neighbor(Lup, b, -1);
        const std::size_t Lb = s.neighbor(L, b, -1);
        if (pb > 0) {
          for (std::uint32_t x = 0; x < n; ++x)
            for (int j = 0; j <= pa; ++j)
              for (int i = 0; i <= pb; ++i)
                if (s.faces[Lup][b][i][s.degeneracies[L][a][j][x]] !=
                    s.degeneracies[Lb][a][j][s.faces[L][b][i][x]])
                  add("faces and degeneracies of different directions commute", L, x);
        }
        (void)Lupb;
      }
    }
  }
  return report;
}

TruncMultiSSet diagonal(const TruncMultiSSet& s) {
  if (s.arity < 1) throw InvalidInput("diagonal: arity must be at least 1");
  TruncMultiSSet d(1, s.bound);
  for (int p = 0; p <= s.bound; ++p) {
    const std::size_t L = s.level_index(std::vector<int>(static_cast<std::size_t>(s.arity), p));
    d.cells[p] = s.cells[L];
    const auto n = static_cast<std::uint32_t>(s.cells[L].size());
    d.faces[p].assign(1, {});
    d.degeneracies[p].assign(1, {});
    if (p > 0) {
      for (int i = 0; i <= p; ++i) {
        std::vector<std::uint32_t> map(n);
        for (std::uint32_t x = 0; x < n; ++x) {
          std::uint32_t y = x;
          std::size_t cur = L;
          for (int a = 0; a < s.arity; ++a) {
            y = s.faces[cur][a][i][y];
            cur = s.neighbor(cur, a, -1);
          }
          map[x] = y;
        }
        d.faces[p][0].push_back(std::move(map));
      }
    }
    if (p < s.bound) {
      for (int i = 0; i <= p; ++i) {
        std::vector<std::uint32_t> map(n);
        for (std::uint32_t x = 0; x < n; ++x) {
          std::uint32_t y = x;
          std::size_t cur = L;
          for (int a = 0; a < s.arity; ++a) {
            y = s.degeneracies[cur][a][i][y];
            cur = s.neighbor(cur, a, +1);
          }
          map[x] = y;
        }
        d.degeneracies[p][0].push_back(std::move(map));
      }
    }
  }
  return d;
}

std::vector<std::vector<bool>> nondegenerate_cells(const TruncMultiSSet& s) {
  std::vector<std::vector<bool>> out(s.num_levels());
  for (std::size_t L = 0; L < s.num_levels(); ++L) out[L].assign(s.cells[L].size(), true);
  for (std::size_t L = 0; L < s.num_levels(); ++L) {
    for (int a = 0; a < s.arity; ++a) {
      const std::size_t up = s.neighbor(L, a, +1);
      if (up == TruncMultiSSet::npos) continue;
      for (const auto& map : s.degeneracies[L][a])
        for (auto y : map) out[up][y] = false;
    }
  }
  return out;
}

bool same_sset(const TruncMultiSSet& a, const TruncMultiSSet& b, std::string* difference) {
  auto fail = [&](const std::string& why) {
    if (difference) *difference = why;
    return false;
  };
  if (a.arity != b.arity || a.bound != b.bound) return fail("arity or bound differ");
  for (std::size_t L = 0; L < a.num_levels(); ++L) {
    if (a.cells[L] != b.cells[L]) return fail("cells differ at level " + std::to_string(L));
    if (a.faces[L] != b.faces[L]) return fail("faces differ at level " + std::to_string(L));
    if (a.degeneracies[L] != b.degeneracies[L]) return fail("degeneracies differ at level " + std::to_string(L));
  }
  return true;
}

}  // namespace relcat
