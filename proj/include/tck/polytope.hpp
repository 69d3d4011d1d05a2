#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "tck/rational.hpp"

namespace tck {

struct RationalPoint {
  Rational x, y;

  friend bool operator==(const RationalPoint&, const RationalPoint&) = default;
};

// The labeled Hirzebruch trapezoid of an orbifold Hirzebruch surface
// (S_n, Delta_m) with symplectic class i E0 + k L: vertices, counterclockwise,
//   (0, 0), (i, 0), (i, k - (n/2) i), (0, k + (n/2) i),
// with label m on the two vertical edges (the branch divisors E and F) and
// slope -n on the slanted top edge. The horizontal and slanted edges carry
// the implicit label 1. Coordinates are half-integers when n i is odd.
struct LabeledTrapezoid {
  std::array<RationalPoint, 4> vertices;
  std::int64_t edge_label = 1;  // m
  std::int64_t slope = 0;       // -n
  std::int64_t level = 1;       // i
  std::int64_t height = 1;      // k

  friend bool operator==(const LabeledTrapezoid&, const LabeledTrapezoid&) = default;
};

// Requires i >= 1, m >= 1 and k - (n/2) i > 0 (nondegenerate trapezoid).
LabeledTrapezoid build_trapezoid(std::int64_t k, std::int64_t i, std::int64_t n, std::int64_t m);

// The Galois cover (S_n, Delta_m) -> (S_n, empty set) on polytopes: same
// geometry, unit labels. Idempotent.
LabeledTrapezoid strip_labels(const LabeledTrapezoid& t);

// i * k exactly, independent of the slope.
Rational trapezoid_area(const LabeledTrapezoid& t);

// Karshon graph skeleton: the four torus-fixed corners by circle moment
// height, plus the two invariant label-carrying spheres. This is the data
// that is constant along a gcd level set; it carries no surface index.
struct KarshonGraph {
  struct LabeledSphere {
    Rational height;
    std::int64_t label = 1;

    friend bool operator==(const LabeledSphere&, const LabeledSphere&) = default;
  };

  std::array<Rational, 4> fixed_heights;
  std::array<LabeledSphere, 2> spheres;

  friend bool operator==(const KarshonGraph&, const KarshonGraph&) = default;
};

KarshonGraph karshon_graph_of(const LabeledTrapezoid& t);

// Deterministic serialization:
//   {"vertices":[[[xn,xd],[yn,yd]] x4],"m":int,"slope":int}
// Byte-stable for golden-file tests.
std::string trapezoid_to_json(const LabeledTrapezoid& t);

// Presentation-only SVG drawing of the trapezoid with its edge labels.
std::string trapezoid_to_svg(const LabeledTrapezoid& t);

}  // namespace tck
