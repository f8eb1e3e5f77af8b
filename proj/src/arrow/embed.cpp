#include "relcat/arrow/embed.hpp"

#include <optional>

#include "relcat/cat/structure.hpp"
#include "relcat/core/error.hpp"
#include "relcat/nerve/verdict.hpp"

namespace relcat {

namespace {

bool same_tables(const FinFunctor& a, const FinFunctor& b) {
  return a.on_objects == b.on_objects && a.on_morphisms == b.on_morphisms;
}

// The functor into a strict pullback induced by a commuting pair of legs.
std::optional<FinFunctor> comparison(const CatPtr& source, const PullbackResult& q, const FinFunctor& a,
                                     const FinFunctor& b) {
  FinFunctor out{source, q.cat, {}, {}};
  for (ObjIdx o = 0; o < source->num_objects(); ++o) {
    const ObjIdx t = q.object_of(a.obj(o), b.obj(o));
    if (t == kNone) return std::nullopt;
    out.on_objects.push_back(t);
  }
  for (MorIdx m = 0; m < source->num_morphisms(); ++m) {
    const MorIdx t = q.morphism_of(a.mor(m), b.mor(m));
    if (t == kNone) return std::nullopt;
    out.on_morphisms.push_back(t);
  }
  return out;
}

}  // namespace

ZigzagEmbedding zigzag_embed(const KRelFunctor& f, const KRelFunctor& g, int n, int bound) {
  if (f.functor.target != g.functor.target) throw InvalidInput("zigzag_embed: f and g need a shared target");
  ZigzagEmbedding e;
  e.arrow = n_arrow_pullback(f, g, n);
  e.strict = pullback_cat(f.functor, g.functor);
  e.strict_structure = pullback_structure(e.strict, f.source, g.source);
  const auto& fib = e.arrow.fiber;
  const auto& path = *fib.path;

  const FinCat& x = f.source.cat();
  e.h = {f.source.ambient, fib.fiber.ambient, {}, {}};
  for (ObjIdx o = 0; o < x.num_objects(); ++o)
    e.h.on_objects.push_back(fib.pullback.object_of(o, path.j.obj(f.functor.obj(o))));
  for (MorIdx m = 0; m < x.num_morphisms(); ++m)
    e.h.on_morphisms.push_back(fib.pullback.morphism_of(m, path.j.mor(f.functor.mor(m))));

  const FinCat& p = *e.strict.cat;
  e.k = {e.strict.cat, e.arrow.object.ambient, {}, {}};
  for (ObjIdx o = 0; o < p.num_objects(); ++o)
    e.k.on_objects.push_back(e.arrow.pullback.object_of(e.h.obj(e.strict.first.obj(o)), e.strict.second.obj(o)));
  for (MorIdx m = 0; m < p.num_morphisms(); ++m)
    e.k.on_morphisms.push_back(
        e.arrow.pullback.morphism_of(e.h.mor(e.strict.first.mor(m)), e.strict.second.mor(m)));

  auto fail = [&](const std::string& what) {
    if (e.witness.empty()) e.witness = what;
  };
  e.squares_commute =
      same_tables(compose_functors(e.arrow.pullback.first, e.k), compose_functors(e.h, e.strict.first)) &&
      same_tables(compose_functors(fib.pi, e.arrow.pullback.first), compose_functors(g.functor, e.arrow.pi));
  if (!e.squares_commute) fail("a square does not commute");

  const auto left = pullback_cat(e.h, e.arrow.pullback.first);
  const auto lc = comparison(e.strict.cat, left, e.strict.first, e.k);
  e.left_is_pullback = lc && is_isomorphism(*lc);
  if (!e.left_is_pullback) fail("left square is not a pullback");
  const auto right = pullback_cat(fib.pi, g.functor);
  const auto rc = comparison(e.arrow.object.ambient, right, e.arrow.pullback.first, e.arrow.pi);
  e.right_is_pullback = rc && is_isomorphism(*rc);
  if (!e.right_is_pullback) fail("right square is not a pullback");

  e.h_verdict = relative_we_verdict({f.source, fib.fiber, e.h}, bound);
  e.k_verdict = relative_we_verdict({e.strict_structure, e.arrow.object, e.k}, bound);
  return e;
}

std::string embedding_report(const ZigzagEmbedding& e) {
  auto yes = [](bool b) { return b ? std::string("pass") : std::string("FAIL"); };
  std::string out;
  out += "squares commute: " + yes(e.squares_commute) + "\n";
  out += "left square is a pullback: " + yes(e.left_is_pullback) + "\n";
  out += "right square is a pullback: " + yes(e.right_is_pullback) + "\n";
  out += "h: " + e.h_verdict.to_string() + "\n";
  out += "k: " + e.k_verdict.to_string() + "\n";
  return out;
}

}  // namespace relcat
