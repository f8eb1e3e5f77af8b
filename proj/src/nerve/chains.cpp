#include "relcat/nerve/chains.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>

#include "relcat/core/caps.hpp"
#include "relcat/core/error.hpp"

namespace relcat {

IntMatrix SparseMatrix::dense() const {
  IntMatrix out(rows, std::vector<BigInt>(cols.size(), 0));
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (const auto& [r, v] : cols[j]) out[r][j] = v;
  return out;
}

SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.num_cols() != b.rows) throw InvalidInput("multiply: shape mismatch");
  SparseMatrix c;
  c.rows = a.rows;
  c.cols.resize(b.num_cols());
  for (std::size_t j = 0; j < b.num_cols(); ++j) {
    std::map<std::uint32_t, std::int64_t> acc;
    for (const auto& [k, bv] : b.cols[j])
      for (const auto& [i, av] : a.cols[k]) acc[i] += av * bv;
    for (const auto& [i, v] : acc)
      if (v != 0) c.cols[j].emplace_back(i, v);
  }
  return c;
}

bool is_zero(const SparseMatrix& m) {
  for (const auto& c : m.cols)
    for (const auto& e : c)
      if (e.second != 0) return false;
  return true;
}

int first_nonzero_square(const ChainComplex& c) {
  for (std::size_t d = 2; d < c.boundary.size(); ++d)
    if (!is_zero(multiply(c.boundary[d - 1], c.boundary[d]))) return static_cast<int>(d);
  return -1;
}

ChainComplex normalized_chains(const TruncMultiSSet& s) {
  if (s.arity != 1) throw InvalidInput("normalized_chains: arity 1 required (take the diagonal first)");
  const auto nd = nondegenerate_cells(s);
  ChainComplex out;
  std::vector<std::vector<std::uint32_t>> index(s.num_levels());
  for (std::size_t d = 0; d < s.num_levels(); ++d) {
    index[d].assign(s.cells[d].size(), kNone);
    std::uint32_t n = 0;
    for (std::size_t x = 0; x < s.cells[d].size(); ++x)
      if (nd[d][x]) index[d][x] = n++;
    out.dims.push_back(n);
  }
  for (std::size_t d = 0; d < s.num_levels(); ++d) {
    SparseMatrix m;
    m.rows = d ? out.dims[d - 1] : 0;
    m.cols.resize(out.dims[d]);
    if (d > 0) {
      for (std::size_t x = 0; x < s.cells[d].size(); ++x) {
        if (index[d][x] == kNone) continue;
        std::map<std::uint32_t, std::int64_t> acc;
        for (std::size_t i = 0; i <= d; ++i) {
          const auto y = index[d - 1][s.faces[d][0][i][x]];
          if (y != kNone) acc[y] += (i % 2 == 0) ? 1 : -1;
        }
        for (const auto& [r, v] : acc)
          if (v != 0) m.cols[index[d][x]].emplace_back(r, v);
      }
    }
    out.boundary.push_back(std::move(m));
  }
  return out;
}

CategoryChains::CategoryChains(const FinCat& c, int top) : cat_(&c) {
  if (top < 0) throw InvalidInput("category chains: negative degree");
  const Caps caps = Caps::current();
  const std::size_t nm = c.num_morphisms();
  rank_.assign(nm, kNone);
  first_.assign(nm, kNone);
  std::vector<MorIdx> nonid;
  for (ObjIdx o = 0; o < c.num_objects(); ++o) {
    std::uint32_t r = 0;
    for (MorIdx m : c.out(o))
      if (!c.is_identity(m)) rank_[m] = r++;
  }
  for (MorIdx m = 0; m < nm; ++m)
    if (!c.is_identity(m)) {
      first_[m] = static_cast<std::uint32_t>(nonid.size());
      nonid.push_back(m);
    }
  std::vector<std::uint32_t> nonid_out(c.num_objects(), 0);
  for (MorIdx m : nonid) ++nonid_out[c.src(m)];

  complex_.dims.push_back(c.num_objects());
  start_.emplace_back();
  parent_.emplace_back();
  last_.emplace_back();
  std::size_t total = c.num_objects();
  if (top >= 1) {
    complex_.dims.push_back(nonid.size());
    parent_.emplace_back(nonid.size(), kNone);
    last_.push_back(nonid);
    total += nonid.size();
    caps.check_cells(total, "nerve chains");
  }
  for (int d = 2; d <= top; ++d) {
    const auto& prev_last = last_[static_cast<std::size_t>(d - 1)];
    std::vector<std::uint32_t> starts(prev_last.size() + 1, 0);
    std::size_t n = 0;
    for (std::size_t x = 0; x < prev_last.size(); ++x) {
      starts[x] = static_cast<std::uint32_t>(n);
      n += nonid_out[c.tgt(prev_last[x])];
    }
    starts[prev_last.size()] = static_cast<std::uint32_t>(n);
    total += n;
    caps.check_cells(total, "nerve chains");
    std::vector<std::uint32_t> par;
    std::vector<MorIdx> lst;
    par.reserve(n);
    lst.reserve(n);
    for (std::size_t x = 0; x < prev_last.size(); ++x)
      for (MorIdx m : c.out(c.tgt(prev_last[x])))
        if (!c.is_identity(m)) {
          par.push_back(static_cast<std::uint32_t>(x));
          lst.push_back(m);
        }
    start_.push_back(std::move(starts));
    parent_.push_back(std::move(par));
    last_.push_back(std::move(lst));
    complex_.dims.push_back(n);
  }

  // boundaries
  for (int d = 0; d <= top; ++d) {
    SparseMatrix m;
    m.rows = d ? complex_.dims[static_cast<std::size_t>(d - 1)] : 0;
    m.cols.resize(complex_.dims[static_cast<std::size_t>(d)]);
    if (d == 1) {
      for (std::uint32_t x = 0; x < m.cols.size(); ++x) {
        const MorIdx f = last_[1][x];
        std::map<std::uint32_t, std::int64_t> acc;
        acc[c.tgt(f)] += 1;
        acc[c.src(f)] -= 1;
        for (const auto& [r, v] : acc)
          if (v) m.cols[x].emplace_back(r, v);
      }
    } else if (d >= 2) {
      std::vector<MorIdx> ch, face;
      for (std::uint32_t x = 0; x < m.cols.size(); ++x) {
        ch = chain(d, x);
        std::map<std::uint32_t, std::int64_t> acc;
        for (int i = 0; i <= d; ++i) {
          face.clear();
          bool degenerate = false;
          for (int j = 0; j < d; ++j) {
            if (i == 0 && j == 0) continue;
            if (i == d && j == d - 1) continue;
            if (i > 0 && i < d && j == i) {
              const MorIdx comp = c.compose_unchecked(ch[j], ch[j - 1]);
              if (c.is_identity(comp)) degenerate = true;
              face.back() = comp;
              continue;
            }
            face.push_back(ch[j]);
          }
          if (degenerate) continue;
          acc[find(face)] += (i % 2 == 0) ? 1 : -1;
        }
        for (const auto& [r, v] : acc)
          if (v) m.cols[x].emplace_back(r, v);
      }
    }
    complex_.boundary.push_back(std::move(m));
  }
}

std::vector<MorIdx> CategoryChains::chain(int d, std::uint32_t x) const {
  std::vector<MorIdx> out(static_cast<std::size_t>(d));
  for (int k = d; k >= 1; --k) {
    out[static_cast<std::size_t>(k - 1)] = last_[static_cast<std::size_t>(k)][x];
    x = parent_[static_cast<std::size_t>(k)][x];
  }
  return out;
}

std::uint32_t CategoryChains::find(const std::vector<MorIdx>& ch) const {
  if (ch.empty() || static_cast<int>(ch.size()) > top()) return kNone;
  for (MorIdx m : ch)
    if (m >= rank_.size() || rank_[m] == kNone) return kNone;
  std::uint32_t x = first_[ch[0]];
  for (std::size_t k = 1; k < ch.size(); ++k) {
    if (cat_->src(ch[k]) != cat_->tgt(ch[k - 1])) return kNone;
    x = start_[k][x] + rank_[ch[k]];
  }
  return x;
}

SparseMatrix chain_map(const FinFunctor& f, const CategoryChains& x, const CategoryChains& y, int d) {
  SparseMatrix m;
  m.rows = y.count(d);
  m.cols.resize(x.count(d));
  const FinCat& tc = *f.target;
  for (std::uint32_t c = 0; c < m.cols.size(); ++c) {
    if (d == 0) {
      m.cols[c].emplace_back(f.obj(c), 1);
      continue;
    }
    auto ch = x.chain(d, c);
    bool degenerate = false;
    for (auto& mor : ch) {
      mor = f.mor(mor);
      if (tc.is_identity(mor)) degenerate = true;
    }
    if (degenerate) continue;
    const auto r = y.find(ch);
    if (r == kNone) throw Error("chain_map: image chain not found");
    m.cols[c].emplace_back(r, 1);
  }
  return m;
}

ChainComplex mapping_cone(const FinFunctor& f, const CategoryChains& x, const CategoryChains& y) {
  const int top = std::min(y.top(), x.top() + 1);
  ChainComplex out;
  auto xdim = [&](int d) -> std::size_t { return d < 0 ? 0 : x.count(d); };
  for (int d = 0; d <= top; ++d) out.dims.push_back(y.count(d) + xdim(d - 1));
  for (int d = 0; d <= top; ++d) {
    SparseMatrix m;
    m.rows = d ? out.dims[static_cast<std::size_t>(d - 1)] : 0;
    if (d > 0) {
      const std::size_t ny = y.count(d - 1);
      for (const auto& col : y.complex().boundary[static_cast<std::size_t>(d)].cols) m.cols.push_back(col);
      if (d >= 1 && xdim(d - 1) > 0) {
        const SparseMatrix fm = chain_map(f, x, y, d - 1);
        for (std::size_t c = 0; c < fm.cols.size(); ++c) {
          auto col = fm.cols[c];
          if (d >= 2)
            for (const auto& [r, v] : x.complex().boundary[static_cast<std::size_t>(d - 1)].cols[c])
              col.emplace_back(static_cast<std::uint32_t>(ny + r), -v);
          m.cols.push_back(std::move(col));
        }
      }
    } else {
      m.cols.resize(out.dims[0]);
    }
    out.boundary.push_back(std::move(m));
  }
  return out;
}

namespace {

struct Overflow {};

template <class T>
T checked_sub_mul(const T& a, const T& k, const T& b) {
  if constexpr (std::is_same_v<T, std::int64_t>) {
    std::int64_t p, r;
    if (__builtin_mul_overflow(k, b, &p) || __builtin_sub_overflow(a, p, &r)) throw Overflow{};
    return r;
  } else {
    return a - k * b;
  }
}

template <class T>
bool is_unit(const T& v) {
  return v == 1 || v == -1;
}

template <class T>
RankTorsion eliminate(const SparseMatrix& in) {
  using Col = std::vector<std::pair<std::uint32_t, T>>;
  std::vector<Col> cols(in.cols.size());
  std::vector<std::uint32_t> row_count(in.rows, 0);
  std::vector<std::vector<std::uint32_t>> row_cols(in.rows);
  for (std::size_t j = 0; j < in.cols.size(); ++j)
    for (const auto& [r, v] : in.cols[j]) {
      cols[j].emplace_back(r, T(v));
      ++row_count[r];
      row_cols[r].push_back(static_cast<std::uint32_t>(j));
    }
  std::vector<bool> alive(cols.size(), true);
  RankTorsion out;
  Col merged;
  bool progress = true;
  while (progress) {
    progress = false;
    std::vector<std::uint32_t> order(cols.size());
    std::iota(order.begin(), order.end(), 0u);
    std::stable_sort(order.begin(), order.end(),
                     [&](auto a, auto b) { return cols[a].size() < cols[b].size(); });
    for (auto c : order) {
      if (!alive[c]) continue;
      if (cols[c].empty()) {
        alive[c] = false;
        continue;
      }
      std::size_t best = cols[c].size();
      for (std::size_t e = 0; e < cols[c].size(); ++e)
        if (is_unit(cols[c][e].second) &&
            (best == cols[c].size() || row_count[cols[c][e].first] < row_count[cols[c][best].first]))
          best = e;
      if (best == cols[c].size()) continue;
      const std::uint32_t r = cols[c][best].first;
      const T pv = cols[c][best].second;
      auto targets = row_cols[r];
      std::sort(targets.begin(), targets.end());
      targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
      for (auto c2 : targets) {
        if (c2 == c || !alive[c2]) continue;
        auto& col2 = cols[c2];
        auto it = std::lower_bound(col2.begin(), col2.end(), std::make_pair(r, T(0)),
                                   [](const auto& a, const auto& b) { return a.first < b.first; });
        if (it == col2.end() || it->first != r) continue;
        const T k = it->second * pv;  // pv is its own inverse
        merged.clear();
        auto a = col2.begin();
        auto b = cols[c].begin();
        while (a != col2.end() || b != cols[c].end()) {
          if (b == cols[c].end() || (a != col2.end() && a->first < b->first)) {
            merged.push_back(*a++);
          } else if (a == col2.end() || b->first < a->first) {
            merged.emplace_back(b->first, checked_sub_mul(T(0), k, b->second));
            ++row_count[b->first];
            row_cols[b->first].push_back(c2);
            ++b;
          } else {
            T v = checked_sub_mul(a->second, k, b->second);
            if (v != 0)
              merged.emplace_back(a->first, std::move(v));
            else
              --row_count[a->first];
            ++a;
            ++b;
          }
        }
        col2.swap(merged);
      }
      for (const auto& e : cols[c]) --row_count[e.first];
      cols[c].clear();
      alive[c] = false;
      ++out.rank;
      progress = true;
      row_cols[r].clear();
    }
  }
  // remainder: columns without unit entries
  std::vector<std::uint32_t> rest_cols;
  std::vector<std::uint32_t> row_map(in.rows, kNone);
  std::uint32_t nrows = 0;
  for (std::uint32_t c = 0; c < cols.size(); ++c) {
    if (!alive[c] || cols[c].empty()) continue;
    rest_cols.push_back(c);
    for (const auto& e : cols[c])
      if (row_map[e.first] == kNone) row_map[e.first] = nrows++;
  }
  if (!rest_cols.empty()) {
    IntMatrix dense(nrows, std::vector<BigInt>(rest_cols.size(), 0));
    for (std::size_t j = 0; j < rest_cols.size(); ++j)
      for (const auto& [r, v] : cols[rest_cols[j]]) dense[row_map[r]][j] = BigInt(v);
    for (auto& f : invariant_factors(std::move(dense))) {
      ++out.rank;
      if (f > 1) out.torsion.push_back(f);
    }
  }
  std::sort(out.torsion.begin(), out.torsion.end());
  return out;
}

}  // namespace

RankTorsion rank_and_torsion(const SparseMatrix& m) {
  try {
    return eliminate<std::int64_t>(m);
  } catch (const Overflow&) {
    return eliminate<BigInt>(m);
  }
}

}  // namespace relcat
