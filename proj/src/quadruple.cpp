#include "tck/quadruple.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "tck/numeric.hpp"

namespace tck {

const char* to_string(ManifoldType t) {
  return t == ManifoldType::TrivialBundle ? "S^2 x S^3" : "X_infinity";
}

std::string Quadruple::str() const {
  return "(" + std::to_string(p1) + "," + std::to_string(p2) + "," + std::to_string(p3) + "," +
         std::to_string(p4) + ")";
}

Quadruple make_quadruple(std::int64_t p1, std::int64_t p2, std::int64_t p3, std::int64_t p4) {
  const Quadruple q{p1, p2, p3, p4};
  for (std::int64_t w : q.weights()) {
    if (w < 1) throw std::domain_error("quadruple entries must be positive: " + q.str());
    require_in_cap(w, "quadruple entry");
  }
  return q;
}

bool is_admissible(const Quadruple& q) {
  for (std::int64_t a : {q.p1, q.p2})
    for (std::int64_t b : {q.p3, q.p4})
      if (std::gcd(a, b) != 1) return false;
  return true;
}

void require_admissible(const Quadruple& q) {
  for (std::int64_t a : {q.p1, q.p2})
    for (std::int64_t b : {q.p3, q.p4})
      if (std::gcd(a, b) != 1)
        throw std::domain_error("quadruple " + q.str() + " is not admissible: gcd(" +
                                std::to_string(a) + "," + std::to_string(b) + ") > 1");
}

std::int64_t first_chern_coefficient(const Quadruple& q) {
  require_admissible(q);
  return checked_sub(checked_add(q.p1, q.p2), checked_add(q.p3, q.p4));
}

ManifoldType manifold_type(const Quadruple& q) {
  return first_chern_coefficient(q) % 2 == 0 ? ManifoldType::TrivialBundle
                                             : ManifoldType::NontrivialBundle;
}

Quadruple canonical_form(const Quadruple& q) {
  std::pair<std::int64_t, std::int64_t> a{std::min(q.p1, q.p2), std::max(q.p1, q.p2)};
  std::pair<std::int64_t, std::int64_t> b{std::min(q.p3, q.p4), std::max(q.p3, q.p4)};
  if (b < a) std::swap(a, b);
  return Quadruple{a.first, a.second, b.first, b.second};
}

bool sasaki_cone_contains(const Quadruple& q, const SasakiConeVector& a) {
  require_admissible(q);
  const std::array<std::int64_t, 2> left = {q.p1, q.p2};
  const std::array<std::int64_t, 2> right = {q.p3, q.p4};
  const std::array<Rational, 2> aleft = {a.a1, a.a2};
  const std::array<Rational, 2> aright = {a.a3, a.a4};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      const Rational s = Rational(left[i]) * aright[j] + Rational(right[j]) * aleft[i];
      if (!s.is_positive()) return false;
    }
  return true;
}

Quadruple ypq_to_quadruple(const YpqParams& y) {
  if (y.p < 1 || y.q < 0 || y.q >= y.p)
    throw std::domain_error("Y^{p,q} requires p > q >= 0 with p positive");
  if (std::gcd(y.p, y.q) != 1)
    throw std::domain_error("Y^{p,q} requires gcd(p,q) = 1, got p=" + std::to_string(y.p) +
                            " q=" + std::to_string(y.q));
  return make_quadruple(checked_sub(y.p, y.q), checked_add(y.p, y.q), y.p, y.p);
}

std::optional<YpqParams> quadruple_to_ypq(const Quadruple& q) {
  const Quadruple c = canonical_form(q);
  // After canonicalization, try each pair as the constant (p,p) pair.
  const auto match = [](std::int64_t lo, std::int64_t hi, std::int64_t p) -> std::optional<YpqParams> {
    if (checked_add(lo, hi) != checked_mul(2, p)) return std::nullopt;
    const std::int64_t qq = (hi - lo) / 2;
    if (qq < 0 || qq >= p || std::gcd(p, qq) != 1) return std::nullopt;
    return YpqParams{p, qq};
  };
  if (c.p3 == c.p4)
    if (auto y = match(c.p1, c.p2, c.p3)) return y;
  if (c.p1 == c.p2)
    if (auto y = match(c.p3, c.p4, c.p1)) return y;
  return std::nullopt;
}

}  // namespace tck
