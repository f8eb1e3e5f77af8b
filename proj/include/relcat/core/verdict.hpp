#pragma once

#include <string>

namespace relcat {

/// Three-valued answer to "is this map a weak equivalence?".
///
/// Refuted carries a concrete obstruction (component count, homology) at a
/// degree; ConsistentThrough(d) only says no obstruction exists through degree d.
struct WEVerdict {
  enum class Kind { Refuted, ConsistentThrough, Inconclusive };

  Kind kind = Kind::Inconclusive;
  int degree = -1;
  std::string detail;

  static WEVerdict refuted(int degree, std::string witness) {
    return {Kind::Refuted, degree, std::move(witness)};
  }
  static WEVerdict consistent(int degree) { return {Kind::ConsistentThrough, degree, {}}; }
  static WEVerdict inconclusive(std::string reason) { return {Kind::Inconclusive, -1, std::move(reason)}; }

  bool is_refuted() const { return kind == Kind::Refuted; }
  bool is_consistent() const { return kind == Kind::ConsistentThrough; }
  bool is_inconclusive() const { return kind == Kind::Inconclusive; }

  std::string to_string() const {
    switch (kind) {
      case Kind::Refuted:
        return "Refuted(" + std::to_string(degree) + ": " + detail + ")";
      case Kind::ConsistentThrough:
        return "ConsistentThrough(" + std::to_string(degree) + ")";
      case Kind::Inconclusive:
        return "Inconclusive(" + detail + ")";
    }
    return "?";
  }
};

}  // namespace relcat
