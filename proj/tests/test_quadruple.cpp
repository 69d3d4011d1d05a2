#include <doctest.h>

#include <numeric>
#include <random>
#include <stdexcept>

#include "tck/quadruple.hpp"

using tck::make_quadruple;
using tck::ManifoldType;
using tck::Quadruple;
using tck::Rational;
using tck::SasakiConeVector;
using tck::YpqParams;

TEST_CASE("admissibility examples") {
  CHECK(tck::is_admissible(make_quadruple(1, 1, 1, 1)));
  CHECK(tck::is_admissible(make_quadruple(1, 17, 8, 8)));
  CHECK_FALSE(tck::is_admissible(make_quadruple(2, 16, 8, 8)));
  // Only the {1,2} x {3,4} gcds matter: gcd within a pair is allowed.
  CHECK(tck::is_admissible(make_quadruple(2, 4, 3, 9)));
  CHECK_THROWS_AS(make_quadruple(0, 1, 1, 1), std::domain_error);
}

TEST_CASE("first Chern coefficient") {
  CHECK(tck::first_chern_coefficient(make_quadruple(1, 1, 1, 1)) == 0);
  CHECK(tck::first_chern_coefficient(make_quadruple(1, 17, 8, 8)) == 2);
  for (std::int64_t p = 2; p <= 12; ++p)
    for (std::int64_t q = 0; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      CHECK(tck::first_chern_coefficient(make_quadruple(p - q, p + q, p, p)) == 0);
    }
  CHECK_THROWS_AS(tck::first_chern_coefficient(make_quadruple(1, 18, 8, 8)), std::domain_error);
}

TEST_CASE("manifold type from the raw parity") {
  CHECK(tck::manifold_type(make_quadruple(1, 17, 8, 8)) == ManifoldType::TrivialBundle);
  // X-infinity subfamily member (j, 2k-j+1, l, l) with j=2, k=9, l=9.
  CHECK(tck::manifold_type(make_quadruple(2, 17, 9, 9)) == ManifoldType::NontrivialBundle);
  CHECK_THROWS_AS(tck::manifold_type(make_quadruple(1, 18, 8, 8)), std::domain_error);
}

TEST_CASE("type matches Chern parity on an exhaustive grid") {
  for (std::int64_t p1 = 1; p1 <= 12; ++p1)
    for (std::int64_t p2 = 1; p2 <= 12; ++p2)
      for (std::int64_t p3 = 1; p3 <= 12; ++p3)
        for (std::int64_t p4 = 1; p4 <= 12; ++p4) {
          const Quadruple q{p1, p2, p3, p4};
          if (!tck::is_admissible(q)) continue;
          const bool even = tck::first_chern_coefficient(q) % 2 == 0;
          CHECK((tck::manifold_type(q) == ManifoldType::TrivialBundle) == even);
        }
}

TEST_CASE("swap invariance of the basic invariants") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> dist(1, 100);
  int tested = 0;
  while (tested < 2000) {
    const Quadruple q{dist(rng), dist(rng), dist(rng), dist(rng)};
    if (!tck::is_admissible(q)) continue;
    ++tested;
    const Quadruple in_pair{q.p2, q.p1, q.p4, q.p3};
    const Quadruple across{q.p3, q.p4, q.p1, q.p2};
    CHECK(tck::is_admissible(in_pair));
    CHECK(tck::is_admissible(across));
    CHECK(tck::first_chern_coefficient(in_pair) == tck::first_chern_coefficient(q));
    CHECK(tck::first_chern_coefficient(across) == -tck::first_chern_coefficient(q));
    CHECK(tck::manifold_type(in_pair) == tck::manifold_type(q));
    CHECK(tck::manifold_type(across) == tck::manifold_type(q));
    CHECK(tck::canonical_form(in_pair) == tck::canonical_form(q));
    CHECK(tck::canonical_form(across) == tck::canonical_form(q));
  }
}

TEST_CASE("Sasaki cone membership") {
  const Quadruple ones = make_quadruple(1, 1, 1, 1);
  CHECK(tck::sasaki_cone_contains(ones, {1, 1, 1, 1}));  // the Reeb field itself
  CHECK_FALSE(tck::sasaki_cone_contains(ones, {1, -1, 0, 0}));
  CHECK(tck::sasaki_cone_contains(make_quadruple(1, 3, 2, 2), {0, 0, 1, 1}));
  // Boundary is excluded: p2 a3 + p3 a2 = 0 at a = (1, 0, 0, 1) for (1,1,1,1).
  CHECK_FALSE(tck::sasaki_cone_contains(ones, {1, 0, 0, 1}));
}

TEST_CASE("Sasaki cone is convex on sampled pairs") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<std::int64_t> widist(1, 12);
  std::uniform_int_distribution<std::int64_t> numdist(-6, 6);
  std::uniform_int_distribution<std::int64_t> dendist(1, 4);
  std::uniform_int_distribution<std::int64_t> lamdist(1, 5);
  int tested = 0;
  while (tested < 400) {
    const Quadruple q{widist(rng), widist(rng), widist(rng), widist(rng)};
    if (!tck::is_admissible(q)) continue;
    const auto vec = [&] {
      return SasakiConeVector{Rational(numdist(rng), dendist(rng)),
                              Rational(numdist(rng), dendist(rng)),
                              Rational(numdist(rng), dendist(rng)),
                              Rational(numdist(rng), dendist(rng))};
    };
    const SasakiConeVector a = vec(), b = vec();
    if (!tck::sasaki_cone_contains(q, a) || !tck::sasaki_cone_contains(q, b)) continue;
    ++tested;
    const Rational lam(lamdist(rng), dendist(rng));
    const Rational mu(lamdist(rng), dendist(rng));
    const SasakiConeVector mix{lam * a.a1 + mu * b.a1, lam * a.a2 + mu * b.a2,
                               lam * a.a3 + mu * b.a3, lam * a.a4 + mu * b.a4};
    CHECK(tck::sasaki_cone_contains(q, mix));
  }
}

TEST_CASE("Y^{p,q} bridge") {
  CHECK(tck::ypq_to_quadruple({2, 1}) == make_quadruple(1, 3, 2, 2));
  CHECK(tck::quadruple_to_ypq(make_quadruple(1, 3, 2, 2)) == YpqParams{2, 1});
  CHECK_FALSE(tck::quadruple_to_ypq(make_quadruple(1, 17, 8, 8)).has_value());
  CHECK_THROWS_AS(tck::ypq_to_quadruple({4, 2}), std::domain_error);
  // Order of the pairs does not matter.
  CHECK(tck::quadruple_to_ypq(make_quadruple(2, 2, 3, 1)) == YpqParams{2, 1});
}

TEST_CASE("Y^{p,q} round trip for p up to 500") {
  for (std::int64_t p = 1; p <= 500; ++p)
    for (std::int64_t q = 0; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      const YpqParams y{p, q};
      const auto back = tck::quadruple_to_ypq(tck::ypq_to_quadruple(y));
      REQUIRE(back.has_value());
      CHECK(*back == y);
    }
}
