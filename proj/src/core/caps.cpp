#include "relcat/core/caps.hpp"

#include <charconv>
#include <mutex>

#include "relcat/core/error.hpp"

namespace relcat {

namespace {

std::size_t parse_count(std::string_view text, std::string_view key) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || value == 0) {
    throw InvalidInput("caps: bad value for '" + std::string(key) + "': '" + std::string(text) + "'");
  }
  return value;
}

std::mutex& caps_mutex() {
  static std::mutex m;
  return m;
}

Caps& caps_storage() {
  static Caps caps;
  return caps;
}

}  // namespace

Caps Caps::parse(std::string_view spec) {
  Caps caps;
  while (!spec.empty()) {
    auto comma = spec.find(',');
    auto item = spec.substr(0, comma);
    spec = comma == std::string_view::npos ? std::string_view{} : spec.substr(comma + 1);
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string_view::npos) {
      throw InvalidInput("caps: expected key=value, got '" + std::string(item) + "'");
    }
    auto key = item.substr(0, eq);
    auto value = item.substr(eq + 1);
    if (key == "objects") {
      caps.max_objects = parse_count(value, key);
    } else if (key == "morphisms") {
      caps.max_morphisms = parse_count(value, key);
    } else if (key == "cells") {
      caps.max_cells = parse_count(value, key);
    } else {
      throw InvalidInput("caps: unknown key '" + std::string(key) + "'");
    }
  }
  return caps;
}

std::string Caps::to_string() const {
  return "objects=" + std::to_string(max_objects) + ",morphisms=" + std::to_string(max_morphisms) +
         ",cells=" + std::to_string(max_cells);
}

void Caps::check(std::size_t objects, std::size_t morphisms, std::string_view what) const {
  if (objects > max_objects || morphisms > max_morphisms) {
    throw QuotaError(std::string(what) + ": " + std::to_string(objects) + " objects / " +
                     std::to_string(morphisms) + " morphisms exceeds caps (" + to_string() + ")");
  }
}

void Caps::check_cells(std::size_t cells, std::string_view what) const {
  if (cells > max_cells) {
    throw QuotaError(std::string(what) + ": " + std::to_string(cells) + " cells exceeds caps (" +
                     to_string() + ")");
  }
}

Caps Caps::current() {
  std::lock_guard lock(caps_mutex());
  return caps_storage();
}

void Caps::set_current(const Caps& caps) {
  std::lock_guard lock(caps_mutex());
  caps_storage() = caps;
}

}  // namespace relcat
