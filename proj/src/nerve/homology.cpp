#include "relcat/nerve/homology.hpp"

#include "relcat/core/error.hpp"
#include "relcat/nerve/verdict.hpp"

namespace relcat {

std::string DegreeHomology::to_string() const {
  std::string out;
  if (betti == 1) out = "Z";
  if (betti > 1) out = "Z^" + std::to_string(betti);
  for (const auto& t : torsion) out += (out.empty() ? "" : " + ") + ("Z/" + t.str());
  return out.empty() ? "0" : out;
}

std::string HomologySignature::to_string() const {
  std::string out;
  for (std::size_t d = 0; d < groups.size(); ++d)
    out += (d ? ", " : "") + ("H" + std::to_string(d) + "=" + groups[d].to_string());
  return out + " (exact through " + std::to_string(exact_through) + ")";
}

HomologySignature complex_homology(const ChainComplex& c, int max_degree) {
  if (max_degree + 1 > c.top()) throw InvalidInput("homology: chains through degree max_degree + 1 required");
  HomologySignature sig;
  sig.exact_through = max_degree;
  std::vector<RankTorsion> rt;
  for (int d = 0; d <= max_degree + 1; ++d) rt.push_back(rank_and_torsion(c.boundary[static_cast<std::size_t>(d)]));
  for (int d = 0; d <= max_degree; ++d) {
    DegreeHomology h;
    const auto i = static_cast<std::size_t>(d);
    h.betti = c.dims[i] - rt[i].rank - rt[i + 1].rank;
    h.torsion = rt[i + 1].torsion;
    sig.groups.push_back(std::move(h));
  }
  return sig;
}

HomologySignature homology(const TruncMultiSSet& s, int max_degree) {
  if (s.arity != 1) throw InvalidInput("homology: arity 1 required (take the diagonal first)");
  if (max_degree > s.bound - 1) throw InvalidInput("homology: max_degree must be at most bound - 1");
  if (max_degree < 0) return {{}, -1};
  return complex_homology(normalized_chains(s), max_degree);
}

HomologySignature category_homology(const CatPtr& c, int bound) {
  if (bound < 1) throw InvalidInput("homology: bound must be positive");
  const auto red = reduce_category(c);
  CategoryChains chains(*red.core, bound);
  return complex_homology(chains.complex(), bound - 1);
}

}  // namespace relcat
