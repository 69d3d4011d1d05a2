#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "tck/quadruple.hpp"
#include "tck/rational.hpp"

namespace tck {

enum class Parity { Even, Odd };

const char* to_string(Parity p);  // "even" / "odd"

// Subfamily parameters (k, l, j): the quadruple is (j, 2k-j, l, l) on the
// trivial bundle and (j, 2k-j+1, l, l) on the nontrivial one, 1 <= j <= k.
struct SubfamilyParams {
  std::int64_t k = 1;
  std::int64_t l = 1;
  std::int64_t j = 1;
  ManifoldType bundle = ManifoldType::TrivialBundle;
};

Quadruple quadruple_of(const SubfamilyParams& s);
bool is_admissible(const SubfamilyParams& s);
void require_admissible(const SubfamilyParams& s);

// Level data of an admissible subfamily member: with d = p2 - p1
// (= 2(k-j) or 2k-2j+1), g = gcd(l, d), n g = d, m g = l, gcd(m, n) = 1.
// The quotient orbifold is (S_n, Delta_m); parity is the parity of n.
struct LevelData {
  std::int64_t g = 1;
  std::int64_t n = 0;
  std::int64_t m = 1;
  Parity parity = Parity::Even;

  friend bool operator==(const LevelData&, const LevelData&) = default;
};

LevelData level_of(const SubfamilyParams& s);

// Ascending list of admissible j in [1, k].
std::vector<std::int64_t> admissible_set(std::int64_t k, std::int64_t l, ManifoldType bundle);

struct LevelKey {
  std::int64_t i = 1;  // the gcd level
  Parity parity = Parity::Even;

  friend auto operator<=>(const LevelKey&, const LevelKey&) = default;
};

// Partition of admissible_set by (g, parity of n). Empty levels are omitted.
// On the nontrivial bundle only odd i with odd parity occur.
std::map<LevelKey, std::vector<std::int64_t>> level_decomposition(std::int64_t k, std::int64_t l,
                                                                  ManifoldType bundle);

// Closed form for the cardinality of the top level set i = l, k >= l >= 1.
// The ceiling formulas
//     #g^{-1}(l)_even = ceil(k/l)
//     #g^{-1}(l)_odd  = ceil((2k-l)/(2l))        (trivial bundle)
//     #g^{-1}(l)      = ceil((2k-l+1)/(2l))      (nontrivial bundle)
// count the arithmetic progression j = k mod l (resp. its odd-step halves);
// when a gcd obstruction makes every member of that progression
// inadmissible the level set is empty, so the closed form is piecewise:
//   trivial/even:  ceil(k/l)            if gcd(k,l) = 1, else 0
//   trivial/odd:   ceil((2k-l)/(2l))    if l even, k + l/2 odd, gcd(k, l/2) = 1, else 0
//   nontrivial:    ceil((2k-l+1)/(2l))  if l odd and gcd(l, 2k+1) = 1, else 0
// (and the nontrivial bundle has no even-parity levels at all).
std::int64_t top_level_cardinality(std::int64_t k, std::int64_t l, ManifoldType bundle,
                                   Parity parity);

// --- Divisor theory on Hirzebruch surfaces -------------------------------
//
// On S_n the section E has E.E = n, the fiber L has E.L = 1, L.L = 0.
// As Q-divisors, E0 = E - (n/2)L (square 0) and E_{-1} = E - ((n+1)/2)L
// (square -1) are admitted on every surface; E0 and E_{-1} pairings are
// independent of n, which is what lets a symplectic class be attached to a
// whole level set rather than to one surface.

enum class DivisorBasis { E, E0, Eminus1 };

const char* to_string(DivisorBasis b);  // "E" / "E0" / "E-1"

// Sentinel surface index for classes expressed at level scope (E0/E_{-1}
// bases only); such classes pair with any surface.
inline constexpr std::int64_t kAnySurface = -1;

// Q-divisor class  e * basis_section + l * L  on S_{surface}.
struct DivisorClass {
  Rational e;
  Rational l;
  DivisorBasis basis = DivisorBasis::E;
  std::int64_t surface = kAnySurface;

  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
};

// The fiber class L (pairs with any surface).
DivisorClass fiber_class();

// Change of basis; converting to or from the E basis needs a concrete
// surface index.
DivisorClass in_basis(const DivisorClass& c, DivisorBasis basis);

// Symmetric bilinear extension of E.E = n, E.L = 1, L.L = 0. Classes on
// distinct concrete surfaces do not pair.
Rational intersection_number(const DivisorClass& a, const DivisorClass& b);

// Orbifold canonical divisor of (S_n, Delta_m) with branch divisor
// (1 - 1/m)(E + F):  K = -(2/m) E - ((2m-n)/m) L = -(2/m) E0 - 2 L.
DivisorClass canonical_divisor(std::int64_t n, std::int64_t m);

// Log del Pezzo (anticanonical ample) iff 2m > n.
bool is_log_del_pezzo(std::int64_t n, std::int64_t m);

struct OrbifoldSurface {
  LevelData level;
  Rational branch_coefficient;   // 1 - 1/m; zero iff the orbifold is trivial
  DivisorClass canonical_class;  // in the E basis, surface = n
  bool log_del_pezzo = false;
  DivisorClass symplectic_class;  // level-scope class, E0 or E_{-1} basis
};

// Full quotient data for an admissible subfamily member.
OrbifoldSurface quotient_orbifold(const SubfamilyParams& s);

// Cohomology class of the reduced symplectic form. Depends only on
// (k, l, level, parity, bundle), never on j within a level set:
//   even levels:       i E0 + k L
//   odd levels:        i E_{-1} + (k + i/2) L
//   nontrivial bundle: i E_{-1} + (k + (i+1)/2) L
DivisorClass symplectic_class(const SubfamilyParams& s);
DivisorClass symplectic_class_at_level(std::int64_t k, std::int64_t l, std::int64_t i,
                                       Parity parity, ManifoldType bundle);

// <c_1^orb, cycle> = intersection of -K^orb with the cycle.
Rational orbifold_chern_evaluation(const OrbifoldSurface& surface, const DivisorClass& cycle);

}  // namespace tck
