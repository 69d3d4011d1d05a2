#include <doctest.h>

#include <numeric>
#include <vector>

#include "tck/equivalence.hpp"
#include "tck/numeric.hpp"
#include "tck/spectrum.hpp"

using tck::EquivalencePolicy;
using tck::LevelData;
using tck::make_quadruple;
using tck::ManifoldType;
using tck::Outcome;
using tck::Parity;
using tck::Quadruple;

namespace {
constexpr auto kTrivial = ManifoldType::TrivialBundle;
constexpr auto kNontrivial = ManifoldType::NontrivialBundle;
}  // namespace

TEST_CASE("the (12,8) chain is pairwise equivalent via the level-set rule") {
  const std::vector<Quadruple> chain = {make_quadruple(1, 23, 8, 8), make_quadruple(3, 21, 8, 8),
                                        make_quadruple(5, 19, 8, 8), make_quadruple(7, 17, 8, 8)};
  for (const auto& a : chain)
    for (const auto& b : chain) {
      const auto verdict = tck::decide_equivalence(a, b);
      CHECK(verdict.outcome == Outcome::Equivalent);
      CHECK(verdict.rule == "level-set");
    }
}

TEST_CASE("different k is detected by the generator-count rule") {
  const auto verdict = tck::decide_equivalence(make_quadruple(1, 27, 10, 10),
                                               make_quadruple(1, 23, 8, 8));
  CHECK(verdict.outcome == Outcome::Inequivalent);
  CHECK(verdict.rule == "generator-count");
}

TEST_CASE("Y^{p,q} equivalence classes are the fixed-p families") {
  for (std::int64_t p = 2; p <= 12; ++p)
    for (std::int64_t q = 0; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      for (std::int64_t pp = 2; pp <= 12; ++pp)
        for (std::int64_t qq = 0; qq < pp; ++qq) {
          if (std::gcd(pp, qq) != 1) continue;
          const auto verdict = tck::decide_equivalence(tck::ypq_to_quadruple({p, q}),
                                                       tck::ypq_to_quadruple({pp, qq}));
          if (p == pp) {
            CHECK(verdict.outcome == Outcome::Equivalent);
            CHECK(verdict.rule == "level-set");
          } else {
            CHECK(verdict.outcome == Outcome::Inequivalent);
            CHECK(verdict.rule == "generator-count");
          }
        }
    }
}

TEST_CASE("policy split on equal gcd with opposite parity") {
  // (1,9,4,4) and (3,7,4,4): gcd(4, p2-p1) = 4 on both sides, but the
  // quotients are S_2 (no exceptional sphere) and S_1 (exceptional sphere).
  const auto a = make_quadruple(1, 9, 4, 4);
  const auto b = make_quadruple(3, 7, 4, 4);
  const auto strict = tck::decide_equivalence(a, b, EquivalencePolicy::StrictParity);
  CHECK(strict.outcome == Outcome::Inequivalent);
  CHECK(strict.rule == "exceptional-sphere");
  CHECK(strict.note.find("MatchingGcd") != std::string::npos);
  const auto lenient = tck::decide_equivalence(a, b, EquivalencePolicy::MatchingGcd);
  CHECK(lenient.outcome == Outcome::Equivalent);
  CHECK(lenient.rule == "gcd-match");
  CHECK(lenient.note.find("StrictParity") != std::string::npos);
}

TEST_CASE("different manifolds and different Chern classes short-circuit") {
  const auto topo = tck::decide_equivalence(make_quadruple(1, 3, 2, 2),    // S^2 x S^3
                                            make_quadruple(1, 4, 3, 3));   // X_infinity
  CHECK(topo.outcome == Outcome::Inequivalent);
  CHECK(topo.rule == "manifold-type");
  const auto chern = tck::decide_equivalence(make_quadruple(1, 23, 8, 8),  // c1 = 8
                                             make_quadruple(3, 21, 10, 10));  // c1 = 4
  CHECK(chern.outcome == Outcome::Inequivalent);
  CHECK(chern.rule == "chern-class");
}

TEST_CASE("chern comparison is orientation-blind") {
  // (5, 7, 9, 9) has c1 = -6; (9, 9, 5, 7) is its pair swap with c1 = +6.
  const auto verdict = tck::decide_equivalence(make_quadruple(5, 7, 9, 9),
                                               make_quadruple(9, 9, 5, 7));
  CHECK(verdict.outcome == Outcome::Equivalent);
}

TEST_CASE("undetermined when no rule covers the pair") {
  // Same manifold, |c1| and p1+p2, but different l: c1 = 4 vs -4.
  const auto verdict = tck::decide_equivalence(make_quadruple(1, 11, 4, 4),
                                               make_quadruple(5, 7, 8, 8));
  CHECK(verdict.outcome == Outcome::Undetermined);
  CHECK(verdict.rule == "none");
  // Same l but different gcd levels is also outside the covered cases.
  const auto levels = tck::decide_equivalence(make_quadruple(5, 13, 8, 8),
                                              make_quadruple(3, 15, 8, 8));
  CHECK(levels.outcome == Outcome::Undetermined);
}

TEST_CASE("non-subfamily quadruples are rejected") {
  CHECK_THROWS_AS(tck::decide_equivalence(make_quadruple(2, 3, 5, 7), make_quadruple(1, 3, 2, 2)),
                  std::domain_error);
  CHECK_THROWS_AS(tck::decide_equivalence(make_quadruple(1, 18, 8, 8), make_quadruple(1, 3, 2, 2)),
                  std::domain_error);  // inadmissible
}

TEST_CASE("symmetry and reflexivity sweeps") {
  std::vector<Quadruple> pool;
  for (std::int64_t k = 1; k <= 12; ++k)
    for (std::int64_t l = 1; l <= k; ++l) {
      for (std::int64_t j : tck::admissible_set(k, l, kTrivial))
        pool.push_back(tck::quadruple_of({k, l, j, kTrivial}));
      for (std::int64_t j : tck::admissible_set(k, l, kNontrivial))
        pool.push_back(tck::quadruple_of({k, l, j, kNontrivial}));
    }
  for (const auto& a : pool) {
    const auto self = tck::decide_equivalence(a, a);
    CHECK(self.outcome == Outcome::Equivalent);
    CHECK(self.rule == "level-set");
  }
  for (std::size_t x = 0; x < pool.size(); x += 7)
    for (std::size_t y = 0; y < pool.size(); y += 5) {
      for (EquivalencePolicy policy :
           {EquivalencePolicy::StrictParity, EquivalencePolicy::MatchingGcd}) {
        const auto ab = tck::decide_equivalence(pool[x], pool[y], policy);
        const auto ba = tck::decide_equivalence(pool[y], pool[x], policy);
        CHECK(ab.outcome == ba.outcome);
        CHECK(ab.rule == ba.rule);
      }
    }
}

TEST_CASE("R3 verdicts always split the contact-homology count") {
  for (std::int64_t k = 1; k <= 10; ++k)
    for (std::int64_t l = 1; l <= k; ++l)
      for (std::int64_t j : tck::admissible_set(k, l, kTrivial))
        for (std::int64_t kk = 1; kk <= 10; ++kk)
          for (std::int64_t ll = 1; ll <= kk; ++ll)
            for (std::int64_t jj : tck::admissible_set(kk, ll, kTrivial)) {
              const auto a = tck::quadruple_of({k, l, j, kTrivial});
              const auto b = tck::quadruple_of({kk, ll, jj, kTrivial});
              const auto verdict = tck::decide_equivalence(a, b);
              if (verdict.rule != "generator-count") continue;
              CHECK(tck::count_low_degree(a.p1, a.p2) != tck::count_low_degree(b.p1, b.p2));
            }
}

TEST_CASE("level-set classes under StrictParity at fixed (k,l)") {
  for (std::int64_t k = 2; k <= 14; ++k)
    for (std::int64_t l = 1; l <= k; ++l)
      for (ManifoldType bundle : {kTrivial, kNontrivial}) {
        const auto levels = tck::level_decomposition(k, l, bundle);
        for (const auto& [ka, ja] : levels)
          for (const auto& [kb, jb] : levels)
            for (std::int64_t a : ja)
              for (std::int64_t b : jb) {
                const auto verdict = tck::decide_equivalence(
                    tck::quadruple_of({k, l, a, bundle}), tck::quadruple_of({k, l, b, bundle}));
                if (ka == kb) {
                  CHECK(verdict.outcome == Outcome::Equivalent);
                  CHECK(verdict.rule == "level-set");
                } else if (ka.i == kb.i) {
                  CHECK(verdict.outcome == Outcome::Inequivalent);  // parity differs
                  CHECK(verdict.rule == "exceptional-sphere");
                } else {
                  CHECK(verdict.outcome == Outcome::Undetermined);
                }
              }
      }
}

TEST_CASE("nontrivial-bundle pairs") {
  // (9,9) levels: g^{-1}(9) = {5}, g^{-1}(3) = {2,8}.
  const auto same_level = tck::decide_equivalence(make_quadruple(2, 17, 9, 9),
                                                  make_quadruple(8, 11, 9, 9));
  CHECK(same_level.outcome == Outcome::Equivalent);
  CHECK(same_level.rule == "level-set");
  const auto cross_level = tck::decide_equivalence(make_quadruple(5, 14, 9, 9),
                                                   make_quadruple(2, 17, 9, 9));
  CHECK(cross_level.outcome == Outcome::Undetermined);
  const auto different_k = tck::decide_equivalence(make_quadruple(2, 17, 9, 9),
                                                   make_quadruple(4, 13, 9, 9));
  CHECK(different_k.outcome == Outcome::Inequivalent);
  // c1 = 1 vs -1 agree up to orientation, so the count rule fires.
  CHECK(different_k.rule == "generator-count");
}

TEST_CASE("exceptional sphere test flags odd surfaces") {
  CHECK(tck::exceptional_sphere_test(LevelData{4, 3, 2, Parity::Odd}));
  CHECK_FALSE(tck::exceptional_sphere_test(LevelData{8, 0, 1, Parity::Even}));
  CHECK_FALSE(tck::exceptional_sphere_test(LevelData{8, 2, 1, Parity::Even}));
  // The R5 pair from the policy test: S_2 vs S_1.
  CHECK_FALSE(tck::exceptional_sphere_test(tck::level_of({5, 4, 1, kTrivial})));
  CHECK(tck::exceptional_sphere_test(tck::level_of({5, 4, 3, kTrivial})));
}

TEST_CASE("maximal torus counts and bouquet sizes") {
  // True level-set cardinalities; the published example lists only a
  // subset of the admissible j's, so these exceed its stated bounds.
  CHECK(tck::tori_conjugacy_lower_bound(12, 8, 2, Parity::Odd, kTrivial) == 6);
  CHECK(tck::tori_conjugacy_lower_bound(12, 8, 2, Parity::Odd, kTrivial) >= 4);
  CHECK(tck::tori_conjugacy_lower_bound(14, 10, 2, Parity::Odd, kTrivial) == 3);
  CHECK(tck::tori_conjugacy_lower_bound(14, 10, 2, Parity::Odd, kTrivial) >= 2);
  CHECK(tck::tori_conjugacy_lower_bound(9, 8, 3, Parity::Odd, kTrivial) == 0);  // empty level
  for (std::int64_t p : {3, 5, 7, 9, 15})
    CHECK(tck::tori_conjugacy_lower_bound(p, p, 1, Parity::Even, kTrivial) == tck::euler_phi(p));
  CHECK(tck::bouquet_size(9, 8, 4, Parity::Odd, kTrivial) == 2);
  CHECK(tck::bouquet_size(9, 8, 4, Parity::Even, kTrivial) == 0);
  for (std::int64_t p : {5, 8, 12})
    CHECK(tck::bouquet_size(p, p, p % 2 == 0 ? 2 : 1, p % 2 == 0 ? Parity::Odd : Parity::Even,
                            kTrivial) == tck::euler_phi(p));
}
