#pragma once

#include <cstddef>
#include <string>
#include <string_view>

namespace relcat {

/// Size limits applied to every constructed category and simplicial set.
struct Caps {
  std::size_t max_objects = 10000;
  std::size_t max_morphisms = 100000;
  std::size_t max_cells = 2000000;

  /// Parses "objects=N,morphisms=M,cells=K" (any key may be omitted).
  static Caps parse(std::string_view spec);
  std::string to_string() const;

  void check(std::size_t objects, std::size_t morphisms, std::string_view what) const;
  void check_cells(std::size_t cells, std::string_view what) const;

  /// Process-wide caps used by constructions that do not take explicit caps.
  static Caps current();
  static void set_current(const Caps& caps);

  friend bool operator==(const Caps&, const Caps&) = default;
};

/// Installs caps for the lifetime of the guard.
class ScopedCaps {
 public:
  explicit ScopedCaps(const Caps& caps) : saved_(Caps::current()) { Caps::set_current(caps); }
  ~ScopedCaps() { Caps::set_current(saved_); }
  ScopedCaps(const ScopedCaps&) = delete;
  ScopedCaps& operator=(const ScopedCaps&) = delete;

 private:
  Caps saved_;
};

}  // namespace relcat
