#pragma once

#include "polyvis/geometry.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string_view>

namespace polyvis {

using Seed = std::uint64_t;

/// mt19937_64 with integer range reduction done here rather than through
/// std::uniform_int_distribution, whose output is implementation-defined.
class SeededRng {
 public:
  explicit SeededRng(Seed seed) : engine_(seed) {}

  /// Uniform in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  bool coin() { return (engine_() >> 63) != 0; }

 private:
  std::mt19937_64 engine_;
};

/// Points on the unit circle from the rational parametrization, clockwise.
/// Throws std::invalid_argument if n < 3.
Polygon convex_polygon(std::size_t n);

/// Integer directions sorted clockwise by exact angle, scaled by random
/// radii in [1/2, 2]. The origin lies in the kernel.
Polygon star_polygon(std::size_t n, Seed seed);

/// Distinct increasing x; endpoints at y = 0, other vertices in the band
/// [1, 2] or [-2, -1].
Polygon xmonotone_polygon(std::size_t n, Seed seed);

/// Integer points in [0, 10^4]^2 with no three collinear, untangled by 2-opt
/// always fixing the lexicographically smallest crossing edge pair.
Polygon random_simple_polygon(std::size_t n, Seed seed);

/// Apex (0, 10) over the chain (x, -x^2/100) with x equally spaced in
/// [-10, 10]; every chain vertex strictly between the ends is reflex. When
/// a chain vertex has x = 0 the apex moves right by half the spacing.
/// Throws std::invalid_argument if n < 4.
Polygon fan_polygon(std::size_t n);

enum class PolygonFamily { kConvex, kStar, kXMonotone, kRandom, kFan };

std::string_view to_string(PolygonFamily f);
std::optional<PolygonFamily> parse_family(std::string_view name);

/// Families without randomness ignore the seed.
Polygon generate_polygon(PolygonFamily family, std::size_t n, Seed seed);

}  // namespace polyvis
