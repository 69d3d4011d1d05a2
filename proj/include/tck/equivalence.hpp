#pragma once

#include <cstdint>
#include <string>

#include "tck/hirzebruch.hpp"
#include "tck/quadruple.hpp"

namespace tck {

enum class Outcome { Equivalent, Inequivalent, Undetermined };

const char* to_string(Outcome o);

// Which rule to apply when two structures share a gcd level but their
// quotient surfaces have opposite parity. StrictParity treats the presence
// of an exceptional sphere downstairs as a contact obstruction and reports
// Inequivalent; MatchingGcd reports Equivalent from the matching
// gcd(l, p2 - p1) alone. The verdict note records the tension either way.
enum class EquivalencePolicy { StrictParity, MatchingGcd };

struct EquivalenceVerdict {
  Outcome outcome = Outcome::Undetermined;
  // One of "manifold-type", "chern-class", "generator-count", "level-set",
  // "exceptional-sphere", "gcd-match", "none".
  std::string rule;
  std::string note;
};

// Decide contact equivalence of two admissible subfamily quadruples
// (p3 = p4 on both sides). First matching rule wins:
//   R1 different manifold types            -> Inequivalent (manifold-type)
//   R2 different |c_1| coefficients        -> Inequivalent (chern-class)
//   R3 p1 + p2 differs                     -> Inequivalent (generator-count)
//   R4 same (k, l), level and parity       -> Equivalent  (level-set)
//   R5 same (k, l) and level, parity flips -> policy-dependent
//   R6 otherwise                           -> Undetermined (none)
EquivalenceVerdict decide_equivalence(const Quadruple& a, const Quadruple& b,
                                      EquivalencePolicy policy = EquivalencePolicy::StrictParity);

// Lower bound on the number of conjugacy classes of maximal 3-tori in the
// contactomorphism group: the cardinality of the level set (i, parity).
// An absent level yields 0.
std::int64_t tori_conjugacy_lower_bound(std::int64_t k, std::int64_t l, std::int64_t i,
                                        Parity parity, ManifoldType bundle);

// Size of the Sasaki bouquet attached to the level's contact structure;
// numerically the same level-set cardinality.
std::int64_t bouquet_size(std::int64_t k, std::int64_t l, std::int64_t i, Parity parity,
                          ManifoldType bundle);

// Whether the quotient surface contains an exceptional sphere: true exactly
// on odd Hirzebruch surfaces, whose E_{-1} has self-intersection -1.
bool exceptional_sphere_test(const LevelData& level);

}  // namespace tck
