#include "relcat/rel/wstar.hpp"

#include <unordered_map>

#include "relcat/core/error.hpp"

namespace relcat {

WStarLevel w_star_at(const KRelStructure& s, const std::vector<int>& p) {
  if (s.k() < 1) throw InvalidInput("w_star_at: needs k >= 1");
  if (static_cast<int>(p.size()) != s.k()) {
    throw InvalidInput("w_star_at: multidimension has " + std::to_string(p.size()) + " entries, k = " +
                       std::to_string(s.k()));
  }
  const FinCat& c = *s.ambient;
  const Caps caps = Caps::current();
  std::vector<const Mask*> masks;
  for (const auto& v : s.v) masks.push_back(&v);
  WStarLevel level;
  level.p = p;
  level.object_grids = enumerate_grids(c, p, masks, caps.max_objects);
  auto mdims = p;
  mdims.push_back(1);
  masks.push_back(&s.w);
  level.morphism_grids = enumerate_grids(c, mdims, masks, caps.max_morphisms);

  const int last = static_cast<int>(p.size());
  std::vector<std::string> objs;
  std::unordered_map<std::string, ObjIdx> obj_index;
  for (const auto& g : level.object_grids) {
    obj_index.emplace(grid_id(c, g), static_cast<ObjIdx>(objs.size()));
    objs.push_back(grid_id(c, g));
  }
  std::vector<MorphismSpec> mors;
  std::unordered_map<std::string, MorIdx> mor_index;
  for (const auto& g : level.morphism_grids) {
    std::string id = grid_id(c, g);
    mor_index.emplace(id, static_cast<MorIdx>(mors.size()));
    mors.push_back({id, obj_index.at(grid_id(c, grid_slice(g, last, 0))),
                    obj_index.at(grid_id(c, grid_slice(g, last, 1)))});
  }
  std::vector<MorIdx> ids;
  for (const auto& g : level.object_grids) ids.push_back(mor_index.at(grid_id(c, grid_constant_extension(c, g))));
  const std::size_t n_points = grid_point_count(p);
  const auto& mg = level.morphism_grids;
  level.cat = std::make_shared<const FinCat>(
      std::move(objs), std::move(mors), std::move(ids),
      [&](MorIdx second, MorIdx first) {
        Grid h = mg[first];
        const Grid& b = mg[second];
        // Layer 1 comes from the second transformation, vertical components compose.
        for (std::size_t x = 0; x < n_points; ++x) {
          const std::size_t top = x * 2 + 1, bottom = x * 2;
          h.objects[top] = b.objects[top];
          for (int d = 0; d < last; ++d) h.edges[d][top] = b.edges[d][top];
          h.edges[last][bottom] = c.compose_unchecked(b.edges[last][bottom], h.edges[last][bottom]);
        }
        return mor_index.at(grid_id(c, h));
      },
      caps);
  return level;
}

namespace {

FinFunctor level_map(const WStarLevel& from, const WStarLevel& to, const FinCat& target_c,
                     const std::function<Grid(const Grid&)>& on_grid) {
  FinFunctor f{from.cat, to.cat, {}, {}};
  for (const auto& g : from.object_grids) f.on_objects.push_back(to.cat->object_index(grid_id(target_c, on_grid(g))));
  for (const auto& g : from.morphism_grids)
    f.on_morphisms.push_back(to.cat->morphism_index(grid_id(target_c, on_grid(g))));
  return f;
}

}  // namespace

FinFunctor w_star_face(const KRelStructure& s, const WStarLevel& from, const WStarLevel& to, int dir, int i) {
  const FinCat& c = *s.ambient;
  return level_map(from, to, c, [&](const Grid& g) { return grid_face(c, g, dir, i); });
}

FinFunctor w_star_degeneracy(const KRelStructure& s, const WStarLevel& from, const WStarLevel& to, int dir,
                             int i) {
  const FinCat& c = *s.ambient;
  return level_map(from, to, c, [&](const Grid& g) { return grid_degeneracy(c, g, dir, i); });
}

FinFunctor w_star_map(const KRelFunctor& f, const WStarLevel& from, const WStarLevel& to) {
  if (auto problem = relative_functor_problem(f); !problem.empty()) {
    throw InvalidInput("w_star_map: not a relative functor: " + problem);
  }
  return level_map(from, to, *f.target.ambient, [&](const Grid& g) { return grid_apply(f.functor, g); });
}

}  // namespace relcat
