#pragma once

#include <chordsl2/poly.hpp>

#include <doctest.h>

#include <cstdint>
#include <ostream>
#include <random>
#include <string>

namespace chordsl2 {
inline std::ostream &operator<<(std::ostream &os, const IntPoly &p) { return os << to_string(p); }
} // namespace chordsl2

namespace testing {

// Fixed seeds so failures replay.
inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64(seed); }

inline chordsl2::IntPoly random_poly(std::mt19937_64 &g, int max_degree, int bound) {
  std::uniform_int_distribution<int> deg(-1, max_degree);
  std::uniform_int_distribution<int> coef(-bound, bound);
  std::vector<chordsl2::Integer> c(static_cast<std::size_t>(deg(g) + 1));
  for (auto &v : c)
    v = coef(g);
  return chordsl2::IntPoly(std::move(c));
}

} // namespace testing
