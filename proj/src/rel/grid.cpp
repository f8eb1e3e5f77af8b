#include "relcat/rel/grid.hpp"

#include <functional>

#include "relcat/core/error.hpp"

namespace relcat {

std::size_t grid_point_count(const std::vector<int>& dims) {
  std::size_t n = 1;
  for (int d : dims) n *= static_cast<std::size_t>(d + 1);
  return n;
}

std::vector<int> grid_coords(const std::vector<int>& dims, std::size_t point) {
  std::vector<int> coords(dims.size());
  for (std::size_t d = dims.size(); d-- > 0;) {
    coords[d] = static_cast<int>(point % static_cast<std::size_t>(dims[d] + 1));
    point /= static_cast<std::size_t>(dims[d] + 1);
  }
  return coords;
}

std::size_t grid_point(const std::vector<int>& dims, const std::vector<int>& coords) {
  std::size_t p = 0;
  for (std::size_t d = 0; d < dims.size(); ++d) p = p * static_cast<std::size_t>(dims[d] + 1) + coords[d];
  return p;
}

namespace {

std::vector<std::size_t> strides_of(const std::vector<int>& dims) {
  std::vector<std::size_t> s(dims.size(), 1);
  for (std::size_t d = dims.size(); d-- > 1;) s[d - 1] = s[d] * static_cast<std::size_t>(dims[d] + 1);
  return s;
}

Grid blank_grid(const std::vector<int>& dims) {
  Grid g;
  g.dims = dims;
  const std::size_t n = grid_point_count(dims);
  g.objects.assign(n, kNone);
  g.edges.assign(dims.size(), std::vector<MorIdx>(n, kNone));
  return g;
}

}  // namespace

std::vector<Grid> enumerate_grids(const FinCat& c, const std::vector<int>& dims,
                                  const std::vector<const Mask*>& masks, std::size_t limit) {
  if (masks.size() != dims.size()) throw InvalidInput("enumerate_grids: one mask per direction required");
  for (int d : dims)
    if (d < 0) throw InvalidInput("enumerate_grids: negative dimension");
  const std::size_t n = grid_point_count(dims);
  const auto stride = strides_of(dims);
  const int r = static_cast<int>(dims.size());
  std::vector<Grid> out;
  Grid g = blank_grid(dims);
  std::vector<std::vector<int>> coords(n);
  for (std::size_t x = 0; x < n; ++x) coords[x] = grid_coords(dims, x);
  auto allowed = [&](int d, MorIdx m) { return masks[d] == nullptr || (*masks[d])[m]; };

  std::function<void(std::size_t)> at_point;
  // Assigns incoming edges at point x for directions in `incoming` from position j on.
  std::function<void(std::size_t, const std::vector<int>&, std::size_t)> at_edge =
      [&](std::size_t x, const std::vector<int>& incoming, std::size_t j) {
        if (j == incoming.size()) {
          at_point(x + 1);
          return;
        }
        const int b = incoming[j];
        const std::size_t from = x - stride[b];
        auto try_edge = [&](MorIdx m) {
          for (std::size_t i = 0; i < j; ++i) {
            const int a = incoming[i];
            const std::size_t corner = from - stride[a];
            MorIdx lhs = c.compose_unchecked(m, g.edges[a][corner]);
            MorIdx rhs = c.compose_unchecked(g.edges[a][x - stride[a]], g.edges[b][corner]);
            if (lhs != rhs) return;
          }
          g.edges[b][from] = m;
          at_edge(x, incoming, j + 1);
          g.edges[b][from] = kNone;
        };
        if (j == 0) {
          for (MorIdx m : c.out(g.objects[from])) {
            if (!allowed(b, m)) continue;
            g.objects[x] = c.tgt(m);
            try_edge(m);
          }
          g.objects[x] = kNone;
        } else {
          for (MorIdx m : c.hom(g.objects[from], g.objects[x]))
            if (allowed(b, m)) try_edge(m);
        }
      };
  at_point = [&](std::size_t x) {
    if (x == n) {
      if (out.size() >= limit) throw QuotaError("grid enumeration exceeds " + std::to_string(limit) + " grids");
      out.push_back(g);
      return;
    }
    std::vector<int> incoming;
    for (int d = 0; d < r; ++d)
      if (coords[x][d] > 0) incoming.push_back(d);
    if (incoming.empty()) {
      for (ObjIdx o = 0; o < c.num_objects(); ++o) {
        g.objects[x] = o;
        at_point(x + 1);
      }
      g.objects[x] = kNone;
      return;
    }
    at_edge(x, incoming, 0);
  };
  at_point(0);
  return out;
}

MorIdx grid_value(const FinCat& c, const Grid& g, const std::vector<int>& a, const std::vector<int>& b) {
  const auto stride = strides_of(g.dims);
  std::size_t x = grid_point(g.dims, a);
  MorIdx v = c.identity(g.objects[x]);
  for (std::size_t d = 0; d < g.dims.size(); ++d) {
    if (b[d] < a[d]) throw InvalidInput("grid_value: endpoints are not ordered");
    for (int s = a[d]; s < b[d]; ++s) {
      v = c.compose_unchecked(g.edges[d][x], v);
      x += stride[d];
    }
  }
  return v;
}

Grid grid_precompose(const FinCat& c, const Grid& g, int dir, const std::vector<int>& alpha) {
  std::vector<int> dims = g.dims;
  dims[dir] = static_cast<int>(alpha.size()) - 1;
  Grid h = blank_grid(dims);
  const std::size_t n = h.num_points();
  for (std::size_t y = 0; y < n; ++y) {
    auto yc = grid_coords(dims, y);
    auto xc = yc;
    xc[dir] = alpha[yc[dir]];
    const std::size_t x = grid_point(g.dims, xc);
    h.objects[y] = g.objects[x];
    for (std::size_t d = 0; d < dims.size(); ++d) {
      if (yc[d] == dims[d]) continue;
      if (static_cast<int>(d) != dir) {
        h.edges[d][y] = g.edges[d][x];
      } else {
        auto bc = xc;
        bc[dir] = alpha[yc[dir] + 1];
        h.edges[d][y] = grid_value(c, g, xc, bc);
      }
    }
  }
  return h;
}

Grid grid_face(const FinCat& c, const Grid& g, int dir, int i) {
  const int p = g.dims[dir];
  if (p == 0 || i < 0 || i > p) throw InvalidInput("grid_face: index out of range");
  std::vector<int> alpha;
  for (int j = 0; j < p; ++j) alpha.push_back(j < i ? j : j + 1);
  return grid_precompose(c, g, dir, alpha);
}

Grid grid_degeneracy(const FinCat& c, const Grid& g, int dir, int i) {
  const int p = g.dims[dir];
  if (i < 0 || i > p) throw InvalidInput("grid_degeneracy: index out of range");
  std::vector<int> alpha;
  for (int j = 0; j <= p + 1; ++j) alpha.push_back(j <= i ? j : j - 1);
  return grid_precompose(c, g, dir, alpha);
}

Grid grid_slice(const Grid& g, int dir, int index) {
  std::vector<int> dims = g.dims;
  dims.erase(dims.begin() + dir);
  Grid h = blank_grid(dims);
  for (std::size_t y = 0; y < h.num_points(); ++y) {
    auto yc = grid_coords(dims, y);
    auto xc = yc;
    xc.insert(xc.begin() + dir, index);
    const std::size_t x = grid_point(g.dims, xc);
    h.objects[y] = g.objects[x];
    for (std::size_t d = 0, e = 0; d < g.dims.size(); ++d) {
      if (static_cast<int>(d) == dir) continue;
      h.edges[e][y] = g.edges[d][x];
      ++e;
    }
  }
  return h;
}

Grid grid_apply(const FinFunctor& f, const Grid& g) {
  Grid h = g;
  for (auto& o : h.objects) o = f.on_objects[o];
  for (auto& dir : h.edges)
    for (auto& m : dir)
      if (m != kNone) m = f.on_morphisms[m];
  return h;
}

Grid grid_constant_extension(const FinCat& c, const Grid& g) {
  std::vector<int> dims = g.dims;
  dims.push_back(1);
  Grid h = blank_grid(dims);
  const int last = static_cast<int>(g.dims.size());
  for (std::size_t y = 0; y < h.num_points(); ++y) {
    auto yc = grid_coords(dims, y);
    auto xc = yc;
    xc.pop_back();
    const std::size_t x = grid_point(g.dims, xc);
    h.objects[y] = g.objects[x];
    for (int d = 0; d < last; ++d) h.edges[d][y] = g.edges[d][x];
    if (yc[last] == 0) h.edges[last][y] = c.identity(g.objects[x]);
  }
  return h;
}

std::string grid_id(const FinCat& c, const Grid& g) {
  std::size_t edge_count = 0;
  MorIdx only = kNone;
  for (const auto& dir : g.edges)
    for (MorIdx m : dir)
      if (m != kNone) {
        ++edge_count;
        only = m;
      }
  if (edge_count == 0) return c.object_id(g.objects.at(0));
  if (edge_count == 1) return c.morphism_id(only);
  std::string out = "[";
  for (std::size_t d = 0; d < g.edges.size(); ++d) {
    if (d) out += "|";
    bool first = true;
    for (MorIdx m : g.edges[d]) {
      if (m == kNone) continue;
      if (!first) out += ",";
      out += c.morphism_id(m);
      first = false;
    }
  }
  return out + "]";
}

}  // namespace relcat
