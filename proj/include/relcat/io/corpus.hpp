#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "relcat/io/document.hpp"

namespace relcat {

struct CorpusEntry {
  std::string name;  // file stem
  Document doc;
};

/// The example corpus in a fixed order. The seed only drives the few random
/// entries (posets and a functor into one); everything else is fixed.
std::vector<CorpusEntry> generate_corpus(std::uint64_t seed = 1);

/// Writes "<dir>/<name>.json" for every entry; returns the number of files.
std::size_t write_corpus(const std::string& dir, std::uint64_t seed = 1);

/// Corpus entries of one kind, in corpus order.
std::vector<const CorpusEntry*> entries_of_kind(const std::vector<CorpusEntry>& corpus, DocKind kind);

/// Identity-u calculus: U = identities, V = w, w = w∘id.
ThreeArrowCalculus identity_u_calculus(const KRelStructure& z);
/// U = V = w with the factorization w = w∘id (the iso-calculus of a groupoid
/// with all maps weak equivalences, or of a minimal category without
/// non-identity isomorphisms).
ThreeArrowCalculus iso_calculus(const KRelStructure& z);

}  // namespace relcat
