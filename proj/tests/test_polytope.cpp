#include <doctest.h>

#include <stdexcept>

#include "tck/hirzebruch.hpp"
#include "tck/polytope.hpp"

using tck::LabeledTrapezoid;
using tck::ManifoldType;
using tck::Rational;
using tck::RationalPoint;

TEST_CASE("trapezoid vertices from the figure formulas") {
  const auto t = tck::build_trapezoid(9, 8, 2, 1);
  CHECK(t.vertices[0] == RationalPoint{0, 0});
  CHECK(t.vertices[1] == RationalPoint{8, 0});
  CHECK(t.vertices[2] == RationalPoint{8, 1});
  CHECK(t.vertices[3] == RationalPoint{0, 17});
  CHECK(t.edge_label == 1);
  CHECK(t.slope == -2);

  const auto odd = tck::build_trapezoid(9, 4, 3, 2);
  CHECK(odd.vertices[2] == RationalPoint{4, 3});
  CHECK(odd.vertices[3] == RationalPoint{0, 15});
  CHECK(odd.edge_label == 2);

  // n = 0 degenerates to a rectangle of height k.
  const auto box = tck::build_trapezoid(6, 3, 0, 4);
  CHECK(box.vertices[2] == RationalPoint{3, 6});
  CHECK(box.vertices[3] == RationalPoint{0, 6});
}

TEST_CASE("half-integer coordinates appear exactly when n i is odd") {
  const auto t = tck::build_trapezoid(9, 3, 1, 2);
  CHECK(t.vertices[2].y == Rational(15, 2));
  CHECK(t.vertices[3].y == Rational(21, 2));
  for (const auto& v : t.vertices) {
    CHECK(v.x.denominator() <= 2);
    CHECK(v.y.denominator() <= 2);
  }
}

TEST_CASE("degenerate trapezoids are rejected") {
  CHECK_THROWS_AS(tck::build_trapezoid(4, 4, 2, 1), std::domain_error);  // k - (n/2) i = 0
  CHECK_THROWS_AS(tck::build_trapezoid(3, 4, 2, 1), std::domain_error);
  CHECK_THROWS_AS(tck::build_trapezoid(3, 0, 2, 1), std::domain_error);
}

TEST_CASE("area equals i * k regardless of the slope") {
  for (std::int64_t k = 1; k <= 12; ++k)
    for (std::int64_t i = 1; i <= 12; ++i)
      for (std::int64_t n = 0; n <= 6; ++n) {
        if (Rational(k) - Rational(n, 2) * Rational(i) <= Rational(0)) continue;
        const auto t = tck::build_trapezoid(k, i, n, 3);
        CHECK(tck::trapezoid_area(t) == Rational(i * k));
      }
}

TEST_CASE("strip_labels is the Galois cover on polytopes") {
  const auto t = tck::build_trapezoid(9, 4, 3, 2);
  const auto stripped = tck::strip_labels(t);
  CHECK(stripped.vertices == t.vertices);
  CHECK(stripped.edge_label == 1);
  CHECK(tck::strip_labels(stripped) == stripped);
  CHECK(tck::strip_labels(tck::build_trapezoid(9, 8, 2, 1)) == tck::build_trapezoid(9, 8, 2, 1));
}

TEST_CASE("Karshon graphs are constant along level sets") {
  // (9,8) level (4, odd) = {3, 7}: surfaces S_3 and S_1, both m = 2.
  const auto d3 = tck::level_of({9, 8, 3, ManifoldType::TrivialBundle});
  const auto d7 = tck::level_of({9, 8, 7, ManifoldType::TrivialBundle});
  const auto t3 = tck::build_trapezoid(9, d3.g, d3.n, d3.m);
  const auto t7 = tck::build_trapezoid(9, d7.g, d7.n, d7.m);
  CHECK(t3.vertices != t7.vertices);  // different surfaces, different shapes
  CHECK(tck::karshon_graph_of(t3) == tck::karshon_graph_of(t7));
  // Distinct levels have distinct widths, hence distinct graphs.
  const auto d1 = tck::level_of({9, 8, 1, ManifoldType::TrivialBundle});
  const auto t1 = tck::build_trapezoid(9, d1.g, d1.n, d1.m);
  CHECK(tck::karshon_graph_of(t1) != tck::karshon_graph_of(t3));
  // Stripping labels then comparing graphs identifies level partners only.
  CHECK(tck::karshon_graph_of(tck::strip_labels(t3)) == tck::karshon_graph_of(tck::strip_labels(t7)));
}

TEST_CASE("label-stripping is invisible on the graph exactly when m = 1") {
  const auto labeled = tck::build_trapezoid(9, 4, 3, 2);
  CHECK(tck::karshon_graph_of(tck::strip_labels(labeled)) != tck::karshon_graph_of(labeled));
  const auto unit = tck::build_trapezoid(9, 8, 2, 1);
  CHECK(tck::karshon_graph_of(tck::strip_labels(unit)) == tck::karshon_graph_of(unit));
}

TEST_CASE("deterministic JSON layout") {
  const auto t = tck::build_trapezoid(9, 4, 3, 2);
  CHECK(tck::trapezoid_to_json(t) ==
        "{\"vertices\":[[[0,1],[0,1]],[[4,1],[0,1]],[[4,1],[3,1]],[[0,1],[15,1]]],"
        "\"m\":2,\"slope\":-3}");
  const auto half = tck::build_trapezoid(9, 3, 1, 2);
  CHECK(tck::trapezoid_to_json(half) ==
        "{\"vertices\":[[[0,1],[0,1]],[[3,1],[0,1]],[[3,1],[15,2]],[[0,1],[21,2]]],"
        "\"m\":2,\"slope\":-1}");
}

TEST_CASE("SVG output is well-formed") {
  for (const auto& t : {tck::build_trapezoid(9, 4, 3, 2), tck::build_trapezoid(9, 3, 1, 2)}) {
    const std::string svg = tck::trapezoid_to_svg(t);
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(svg.find("</svg>") != std::string::npos);
    CHECK(svg.find("polygon") != std::string::npos);
    CHECK(svg.find("slope") != std::string::npos);
  }
}
