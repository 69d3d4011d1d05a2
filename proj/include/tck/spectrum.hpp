#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "tck/hirzebruch.hpp"
#include "tck/rational.hpp"

namespace tck {

enum class CriticalType { Max, Min, Saddle1, Saddle2 };

const char* to_string(CriticalType t);

// Where a closed Reeb orbit lives: one of the two 2-sphere orbit spaces
// sitting over the branch divisors, or the dense 4-dimensional stratum.
enum class Stratum { Branch1, Branch2, Dense };

const char* to_string(Stratum s);

// One contact-homology generator of the quadruple (p1, p2, k2, k2).
struct Generator {
  Stratum stratum = Stratum::Dense;
  std::int64_t multiplicity = 1;
  CriticalType critical = CriticalType::Min;
  std::int64_t rs_index = 0;
  std::int64_t grading = 0;
  Rational action;

  friend bool operator==(const Generator&, const Generator&) = default;
};

// Robbin-Salamon index of the multiplicity-m orbit in branch stratum i:
//   2 k1 m + 2 floor(m p_other / p_i) - 1,   k1 = gcd(p1, p2), p1 <= p2.
// Always odd and strictly increasing in m.
std::int64_t rs_index_branch(std::int64_t p1, std::int64_t p2, std::int64_t k1, int i,
                             std::int64_t m);

// Robbin-Salamon index of the multiplicity-m dense orbit for a capping class
// with Chern evaluation chern_eval:  2 k2 m chern_eval.
Rational rs_index_dense(std::int64_t k2, std::int64_t m, const Rational& chern_eval);

// Grading of a generator from its orbit's index and its critical point:
//   dim 2:  Max +1, Min -1
//   dim 4:  Max +2, Saddle1/Saddle2 0, Min -2
std::int64_t grade_generator(std::int64_t rs_index, int stratum_dim, CriticalType t);

// Action k2 m / p_i of a branch orbit; p_i | m means the orbit lies in the
// dense stratum and is a domain error here.
Rational action_of_branch_orbit(std::int64_t k2, int i, std::int64_t m, std::int64_t p_i);

// Grading shift from multiplying by the Novikov ring element of a class A
// with <c_1(D), A> = chern_on_a: grading - 2 chern_on_a. Always even, so
// grading parity is a Novikov-invariant.
std::int64_t novikov_shift(std::int64_t grading, std::int64_t chern_on_a);

// The low-degree generator census of (p1, p2, k2, k2), the set behind the
// p1 + p2 - 1 count:
//   - each branch stratum i contributes one entry per multiplicity in the
//     fundamental period, m = 1 .. p_i - 1, represented by the minimum of
//     the Morse function on the orbit 2-sphere (the maximum partner sits
//     two gradings above it, via grade_generator);
//   - the dense stratum contributes the minimum of its first orbit space.
// The census is structural, so its size never depends on the capping class
// used to grade the dense entry; degree_bound records the degree window
// the count is quoted at, 2(p1 + p2 + 1) for the invariant.
struct Spectrum {
  std::int64_t p1 = 1, p2 = 1, k2 = 1;
  std::int64_t degree_bound = 0;
  std::vector<Generator> generators;
  std::map<std::int64_t, std::int64_t> counts_by_degree;
};

// Capping class for the dense stratum defaults to the fiber class L.
Spectrum enumerate_spectrum(std::int64_t p1, std::int64_t p2, std::int64_t k2,
                            std::int64_t degree_bound);
Spectrum enumerate_spectrum(std::int64_t p1, std::int64_t p2, std::int64_t k2,
                            std::int64_t degree_bound, const DivisorClass& capping);

// The contact invariant p1 + p2 - 1: the number of generators in degree
// below 2(p1 + p2 + 1). Cross-checked against enumerate_spectrum; a mismatch
// raises internal_error.
std::int64_t count_low_degree(std::int64_t p1, std::int64_t p2);

// Gradings for the regular structures (k, k, k-c, k-c), c_1 = 2c: with m the
// smallest positive solution of k m = -1 (mod c), x = (km+1)/c, y = x - m,
// the orbits of action N grade at N(2x+2y) + 2 / N(2x+2y) / N(2x+2y) - 2.
struct RegularCaseGradings {
  std::int64_t max_grading = 0;
  std::int64_t saddle_grading = 0;
  std::int64_t min_grading = 0;
  std::int64_t x = 0;
  std::int64_t y = 0;
  std::int64_t m = 0;
};

RegularCaseGradings regular_case_gradings(std::int64_t k, std::int64_t c, std::int64_t N);

}  // namespace tck
