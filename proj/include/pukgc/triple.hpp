#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>

namespace pukgc {

// Integer-id fact <head, relation, tail>.
struct Triple {
  std::int32_t head = 0;
  std::int32_t relation = 0;
  std::int32_t tail = 0;

  friend bool operator==(const Triple&, const Triple&) = default;
};

struct TripleHash {
  std::size_t operator()(const Triple& t) const {
    std::uint64_t x = static_cast<std::uint32_t>(t.head);
    x = x * 0x9E3779B97F4A7C15ull + static_cast<std::uint32_t>(t.relation);
    x = x * 0x9E3779B97F4A7C15ull + static_cast<std::uint32_t>(t.tail);
    x ^= x >> 29;
    x *= 0xBF58476D1CE4E5B9ull;
    x ^= x >> 32;
    return static_cast<std::size_t>(x);
  }
};

enum class CorruptionSide { head, tail };

}  // namespace pukgc
