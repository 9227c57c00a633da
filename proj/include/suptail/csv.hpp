#pragma once

#include <charconv>
#include <cstdint>
#include <string>

namespace suptail {

// Shortest decimal representation that round-trips the double. Locale-free,
// so CSV output is byte-stable across runs and machines.
inline std::string format_double(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

inline std::string format_u64(std::uint64_t value) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

}  // namespace suptail
