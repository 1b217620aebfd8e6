#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sgp {

struct ParseError : std::runtime_error {
  ParseError(const std::string& what, std::size_t byte_offset)
      : std::runtime_error(what + " (byte " + std::to_string(byte_offset) + ")"),
        offset(byte_offset) {}
  std::size_t offset;
};

struct InvalidGraph : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FamilyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when a vertex pair admits more geodesics than the configured cap.
struct GeodesicCapExceeded : std::runtime_error {
  GeodesicCapExceeded(int u, int v, std::uint64_t cap)
      : std::runtime_error("geodesic count between " + std::to_string(u) + " and " +
                           std::to_string(v) + " exceeds cap " + std::to_string(cap)),
        a(u), b(v), limit(cap) {}
  int a, b;
  std::uint64_t limit;
};

struct NotATree : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace sgp
