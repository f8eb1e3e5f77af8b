#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "relcat/arrow/grothendieck.hpp"
#include "relcat/core/error.hpp"
#include "relcat/nerve/nerves.hpp"
#include "relcat/props/properties.hpp"
#include "relcat/rel/calculus.hpp"
#include "relcat/rel/krel.hpp"

namespace relcat {

inline constexpr int kFormatVersion = 1;
inline constexpr const char* kToolVersion = "1.0.0";

/// Malformed text or a document that does not fit the schema. The message
/// starts with "line L, column C" or with the JSON pointer of the bad value.
class ParseError : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

enum class DocKind { Category, KRel, Functor, Diagram, Zigzag, Calculus, Grothendieck, Report };
std::string to_string(DocKind k);

/// A functor between plain categories or k-relative categories. An endpoint
/// without a structure is read in Cat-hat.
struct FunctorDoc {
  FinFunctor functor;
  std::optional<KRelStructure> source_structure;
  std::optional<KRelStructure> target_structure;

  KRelFunctor relative() const;
};

/// X --f--> Z <--g-- Y; after parsing both targets are the same object.
struct ZigzagDoc {
  FunctorDoc f;
  FunctorDoc g;
};

struct CalculusDoc {
  KRelStructure structure;
  ThreeArrowCalculus calculus;
};

struct ReportCaseDoc {
  std::string id;
  std::string verdict;  // "pass", "refuted", "inconclusive"
  std::string witness;
};

struct ReportDoc {
  std::string name;
  std::string overall;
  std::vector<ReportCaseDoc> cases;
  std::vector<std::string> notes;
  std::string version = kToolVersion;
  int bound = 0;
  std::string caps;
  std::string family;
};

ReportDoc report_doc(const PropertyReport& r, int bound, const std::string& family = {});

using Payload =
    std::variant<CatPtr, KRelStructure, FunctorDoc, CatDiagram, ZigzagDoc, CalculusDoc, GrothendieckInput, ReportDoc>;

struct Document {
  Payload payload;
  DocKind kind() const;
};

/// Throws ParseError. Structural invariants (ids, composition table entries,
/// wide-subcategory masks, w ⊆ v_i, functor maps) are enforced; category laws
/// and functoriality are left to the validate command.
Document parse_document(std::string_view text);
/// Canonical text: sorted keys, ids in index order, trailing newline.
std::string serialize(const Document& doc);

Document read_document(const std::string& path);
void write_document(const std::string& path, const Document& doc);

}  // namespace relcat
