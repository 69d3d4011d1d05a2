#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "tck/rational.hpp"

namespace tck {

// The two diffeomorphism types of simply connected S^3-bundles over S^2.
enum class ManifoldType { TrivialBundle, NontrivialBundle };

const char* to_string(ManifoldType t);  // "S^2 x S^3" / "X_infinity"

// Weights (p1, p2, p3, p4) of the circle action cutting the contact manifold
// M_p out of S^3 x S^3. The structure carries no invariants itself; every
// operation that needs admissibility checks it.
struct Quadruple {
  std::int64_t p1 = 1, p2 = 1, p3 = 1, p4 = 1;

  std::array<std::int64_t, 4> weights() const { return {p1, p2, p3, p4}; }
  std::string str() const;  // "(1,17,8,8)"

  friend bool operator==(const Quadruple&, const Quadruple&) = default;
};

// Validates entries >= 1 and within the integer cap.
Quadruple make_quadruple(std::int64_t p1, std::int64_t p2, std::int64_t p3, std::int64_t p4);

// gcd(p_i, p_j) = 1 for i in {1,2}, j in {3,4}: the condition for the
// reduced space to be a smooth 5-manifold.
bool is_admissible(const Quadruple& q);
void require_admissible(const Quadruple& q);

// Coefficient of c_1(D_p) on the positive generator: p1 + p2 - p3 - p4.
// The parity test below must see this raw sum, never a normalized form.
std::int64_t first_chern_coefficient(const Quadruple& q);

// Trivial bundle iff p1 + p2 - p3 - p4 is even.
ManifoldType manifold_type(const Quadruple& q);

// Normal form under the coordinate interchanges z1<->z2, z3<->z4 and the
// pair swap: each pair sorted ascending, the pair with the smaller minimum
// first, ties broken lexicographically.
Quadruple canonical_form(const Quadruple& q);

// Candidate Reeb field sum a_i * pi(H_i) in the reduced torus algebra.
struct SasakiConeVector {
  Rational a1, a2, a3, a4;
};

// Membership in the (unreduced) Sasaki cone: the four strict inequalities
// p_i a_j + p_j a_i > 0 for i in {1,2}, j in {3,4}.
bool sasaki_cone_contains(const Quadruple& q, const SasakiConeVector& a);

// The Sasaki-Einstein family Y^{p,q}: in quadruple form (p-q, p+q, p, p).
struct YpqParams {
  std::int64_t p = 1;
  std::int64_t q = 0;

  friend bool operator==(const YpqParams&, const YpqParams&) = default;
};

// Requires p > q >= 0 and gcd(p, q) = 1; the result is always admissible.
Quadruple ypq_to_quadruple(const YpqParams& y);

// Recognizes the exact (p-q, p+q, p, p) shape modulo canonical_form.
std::optional<YpqParams> quadruple_to_ypq(const Quadruple& q);

}  // namespace tck
