#include "tck/equivalence.hpp"

#include <cstdlib>
#include <numeric>
#include <stdexcept>

#include "tck/numeric.hpp"

namespace tck {

const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::Equivalent: return "equivalent";
    case Outcome::Inequivalent: return "inequivalent";
    case Outcome::Undetermined: return "undetermined";
  }
  return "?";
}

namespace {

// Normal-form invariants of a subfamily quadruple (p1, p2, l, l).
struct SubfamilyView {
  ManifoldType bundle;
  std::int64_t c1_abs;  // |p1 + p2 - 2l|
  std::int64_t sum;     // p1 + p2
  std::int64_t l;
  std::int64_t level;   // g = gcd(l, p2 - p1)
  Parity parity;        // parity of (p2 - p1) / g
};

SubfamilyView view_of(const Quadruple& q) {
  require_admissible(q);
  const Quadruple c = canonical_form(q);
  std::int64_t p1, p2, l;
  if (c.p1 == c.p2 && c.p3 == c.p4) {
    // Both pairs constant: read the larger one as the weight pair, the
    // normalization p1 + p2 > p3 + p4 under which the generator-count
    // invariant is stated.
    p1 = p2 = std::max(c.p1, c.p3);
    l = std::min(c.p1, c.p3);
  } else if (c.p3 == c.p4) {
    p1 = c.p1;
    p2 = c.p2;
    l = c.p3;
  } else if (c.p1 == c.p2) {
    p1 = c.p3;
    p2 = c.p4;
    l = c.p1;
  } else {
    throw std::domain_error("quadruple " + q.str() +
                            " is outside the subfamily (p1, p2, l, l): no constant pair");
  }
  SubfamilyView v;
  v.bundle = manifold_type(c);
  v.c1_abs = std::llabs(first_chern_coefficient(c));
  v.sum = checked_add(p1, p2);
  v.l = l;
  const std::int64_t d = p2 - p1;
  v.level = d == 0 ? l : std::gcd(l, d);
  v.parity = (d / v.level) % 2 == 0 ? Parity::Even : Parity::Odd;
  return v;
}

}  // namespace

EquivalenceVerdict decide_equivalence(const Quadruple& a, const Quadruple& b,
                                      EquivalencePolicy policy) {
  const SubfamilyView va = view_of(a);
  const SubfamilyView vb = view_of(b);

  if (va.bundle != vb.bundle)
    return {Outcome::Inequivalent, "manifold-type",
            "the underlying manifolds differ: " + std::string(to_string(va.bundle)) + " vs " +
                to_string(vb.bundle)};
  if (va.c1_abs != vb.c1_abs)
    return {Outcome::Inequivalent, "chern-class",
            "first Chern coefficients differ up to orientation: " + std::to_string(va.c1_abs) +
                " vs " + std::to_string(vb.c1_abs)};
  if (va.sum != vb.sum)
    return {Outcome::Inequivalent, "generator-count",
            "p1 + p2 differs (" + std::to_string(va.sum) + " vs " + std::to_string(vb.sum) +
                "), so the low-degree generator counts " + std::to_string(va.sum - 1) + " and " +
                std::to_string(vb.sum - 1) + " differ"};
  if (va.l == vb.l && va.level == vb.level) {
    if (va.parity == vb.parity)
      return {Outcome::Equivalent, "level-set",
              "same (k, l), gcd level " + std::to_string(va.level) +
                  " and quotient parity: level-set members are contactomorphic"};
    if (policy == EquivalencePolicy::StrictParity)
      return {Outcome::Inequivalent, "exceptional-sphere",
              "equal gcd level " + std::to_string(va.level) +
                  " but opposite quotient parity: exactly one quotient contains an exceptional "
                  "sphere; the matching gcd would make them equivalent under the MatchingGcd "
                  "policy"};
    return {Outcome::Equivalent, "gcd-match",
            "equal gcd(l, p2 - p1) = " + std::to_string(va.level) +
                "; note the opposite quotient parities: the StrictParity policy reports these "
                "as inequivalent via the exceptional-sphere obstruction"};
  }
  return {Outcome::Undetermined, "none",
          "no rule applies: equal c1, manifold type and p1 + p2, but different (l, level) data"};
}

std::int64_t tori_conjugacy_lower_bound(std::int64_t k, std::int64_t l, std::int64_t i,
                                        Parity parity, ManifoldType bundle) {
  const auto levels = level_decomposition(k, l, bundle);
  const auto it = levels.find(LevelKey{i, parity});
  return it == levels.end() ? 0 : static_cast<std::int64_t>(it->second.size());
}

std::int64_t bouquet_size(std::int64_t k, std::int64_t l, std::int64_t i, Parity parity,
                          ManifoldType bundle) {
  return tori_conjugacy_lower_bound(k, l, i, parity, bundle);
}

bool exceptional_sphere_test(const LevelData& level) { return level.n % 2 != 0; }

}  // namespace tck
