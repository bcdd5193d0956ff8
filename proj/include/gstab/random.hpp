#pragma once

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "gstab/representations.hpp"

namespace gstab {

using Rng = std::mt19937_64;

namespace detail {

/// Random rational num/den with den in 1..6 and value in [lo, hi).
inline Rational random_rational(Rng& rng, std::int64_t lo, std::int64_t hi) {
  std::uniform_int_distribution<std::int64_t> den_d(1, 6);
  std::int64_t den = den_d(rng);
  std::uniform_int_distribution<std::int64_t> num_d(lo * den, hi * den - 1);
  return Rational(num_d(rng), den);
}

inline std::vector<Rational> distinct_rationals(Rng& rng, int count, std::int64_t lo,
                                                std::int64_t hi) {
  std::set<Rational> seen;
  std::vector<Rational> out;
  while (static_cast<int>(out.size()) < count) {
    Rational r = random_rational(rng, lo, hi);
    if (seen.insert(r).second) out.push_back(r);
  }
  return out;
}

}  // namespace detail

/// Shapes with distinct random anchors and heights and random left
/// extents reaching up to the whole width.
inline GroundedLRep random_grounded(int n, Rng& rng) {
  auto anchors = detail::distinct_rationals(rng, n, 0, 2 * n);
  auto heights = detail::distinct_rationals(rng, n, 1, 2 * n + 1);
  std::vector<LShape> shapes;
  for (int v = 1; v <= n; ++v) {
    const Rational& x = anchors[v - 1];
    Rational reach = detail::random_rational(rng, 0, 2 * n);
    if (!(reach > Rational(0))) reach = Rational(1, 7);
    shapes.push_back({v, x, heights[v - 1], x - reach});
  }
  return GroundedLRep(std::move(shapes));
}

inline StickRep random_stick(int n, Rng& rng) {
  auto pos = detail::distinct_rationals(rng, n, 0, 2 * n);
  std::bernoulli_distribution coin(0.5);
  std::vector<Stick> sticks;
  for (int v = 1; v <= n; ++v) {
    Rational len = detail::random_rational(rng, 0, 2 * n);
    if (!(len > Rational(0))) len = Rational(1, 7);
    sticks.push_back({v, coin(rng) ? Side::A : Side::B, pos[v - 1], len});
  }
  return StickRep(std::move(sticks));
}

/// Stabbed axis-parallel segments; parallel segments never share a line.
inline GridRep random_grid(int n, Rng& rng) {
  std::bernoulli_distribution coin(0.5);
  auto levels = detail::distinct_rationals(rng, n, -n, n);
  std::vector<GridSegment> segs;
  for (int v = 1; v <= n; ++v) {
    const Rational& c = levels[v - 1];
    Rational below = detail::random_rational(rng, 0, n + 1);
    Rational above = detail::random_rational(rng, 0, n + 1);
    if (below == Rational(0) && above == Rational(0)) above = Rational(1, 3);
    Rational lo = c - below, hi = c + above;
    segs.push_back({v, coin(rng) ? Segment::horizontal(c, lo, hi) : Segment::vertical(c, lo, hi)});
  }
  return GridRep(std::move(segs));
}

}  // namespace gstab
