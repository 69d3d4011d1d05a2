#include "tck/hirzebruch.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

#include "tck/numeric.hpp"

namespace tck {

const char* to_string(Parity p) { return p == Parity::Even ? "even" : "odd"; }

const char* to_string(DivisorBasis b) {
  switch (b) {
    case DivisorBasis::E: return "E";
    case DivisorBasis::E0: return "E0";
    case DivisorBasis::Eminus1: return "E-1";
  }
  return "?";
}

Quadruple quadruple_of(const SubfamilyParams& s) {
  if (s.k < 1 || s.l < 1) throw std::domain_error("subfamily requires k, l >= 1");
  if (s.j < 1 || s.j > s.k)
    throw std::domain_error("subfamily requires 1 <= j <= k, got j=" + std::to_string(s.j) +
                            " k=" + std::to_string(s.k));
  require_in_cap(s.k, "subfamily k");
  require_in_cap(s.l, "subfamily l");
  std::int64_t p2 = checked_sub(checked_mul(2, s.k), s.j);
  if (s.bundle == ManifoldType::NontrivialBundle) p2 = checked_add(p2, 1);
  return make_quadruple(s.j, p2, s.l, s.l);
}

bool is_admissible(const SubfamilyParams& s) { return is_admissible(quadruple_of(s)); }

void require_admissible(const SubfamilyParams& s) { require_admissible(quadruple_of(s)); }

LevelData level_of(const SubfamilyParams& s) {
  const Quadruple q = quadruple_of(s);
  require_admissible(q);
  const std::int64_t d = q.p2 - q.p1;  // 2(k-j) or 2k-2j+1
  LevelData level;
  level.g = std::gcd(s.l, d);
  level.n = d / level.g;
  level.m = s.l / level.g;
  level.parity = level.n % 2 == 0 ? Parity::Even : Parity::Odd;
  return level;
}

std::vector<std::int64_t> admissible_set(std::int64_t k, std::int64_t l, ManifoldType bundle) {
  if (k < 1 || l < 1) throw std::domain_error("admissible_set requires k, l >= 1");
  require_in_cap(k, "admissible_set k");
  require_in_cap(l, "admissible_set l");
  std::vector<std::int64_t> js;
  for (std::int64_t j = 1; j <= k; ++j)
    if (is_admissible(SubfamilyParams{k, l, j, bundle})) js.push_back(j);
  return js;
}

std::map<LevelKey, std::vector<std::int64_t>> level_decomposition(std::int64_t k, std::int64_t l,
                                                                  ManifoldType bundle) {
  std::map<LevelKey, std::vector<std::int64_t>> levels;
  for (std::int64_t j : admissible_set(k, l, bundle)) {
    const LevelData d = level_of(SubfamilyParams{k, l, j, bundle});
    levels[LevelKey{d.g, d.parity}].push_back(j);
  }
  return levels;
}

std::int64_t top_level_cardinality(std::int64_t k, std::int64_t l, ManifoldType bundle,
                                   Parity parity) {
  if (l < 1 || k < l) throw std::domain_error("top_level_cardinality requires k >= l >= 1");
  require_in_cap(k, "top_level_cardinality k");
  if (bundle == ManifoldType::NontrivialBundle) {
    if (parity == Parity::Even) return 0;  // all levels are odd there
    if (l % 2 == 0 || std::gcd(l, checked_add(checked_mul(2, k), 1)) != 1) return 0;
    return ceil_div(2 * k - l + 1, 2 * l);
  }
  if (parity == Parity::Even) {
    if (std::gcd(k, l) != 1) return 0;
    return ceil_div(k, l);
  }
  if (l % 2 != 0) return 0;  // odd n forces even g
  const std::int64_t half = l / 2;
  if ((k + half) % 2 == 0 || std::gcd(k, half) != 1) return 0;
  return ceil_div(2 * k - l, 2 * l);
}

// --- divisor classes ------------------------------------------------------

namespace {

// Offset r of a basis section: section = E - r L as a Q-divisor on S_n.
Rational basis_offset(DivisorBasis basis, std::int64_t n) {
  switch (basis) {
    case DivisorBasis::E: return Rational(0);
    case DivisorBasis::E0: return Rational(n, 2);
    case DivisorBasis::Eminus1: return Rational(n + 1, 2);
  }
  throw std::domain_error("unknown divisor basis");
}

std::int64_t common_surface(const DivisorClass& a, const DivisorClass& b) {
  if (a.surface == kAnySurface) return b.surface;
  if (b.surface == kAnySurface) return a.surface;
  if (a.surface != b.surface)
    throw std::domain_error("divisor classes live on different surfaces: S_" +
                            std::to_string(a.surface) + " vs S_" + std::to_string(b.surface));
  return a.surface;
}

}  // namespace

DivisorClass fiber_class() { return DivisorClass{Rational(0), Rational(1), DivisorBasis::E, kAnySurface}; }

DivisorClass in_basis(const DivisorClass& c, DivisorBasis basis) {
  if (basis == c.basis) return c;
  if (c.e.is_zero()) return DivisorClass{c.e, c.l, basis, c.surface};
  const bool needs_n = basis == DivisorBasis::E || c.basis == DivisorBasis::E;
  if (needs_n && c.surface == kAnySurface)
    throw std::domain_error("basis change to/from the E basis needs a concrete surface index");
  const std::int64_t n = needs_n ? c.surface : 0;  // E0 <-> E_{-1} offsets differ by 1/2, n-free
  // e (E - r L) + l L  =  e (E - r' L) + (l + e (r' - r)) L
  const Rational r = basis_offset(c.basis, n);
  const Rational rp = basis_offset(basis, n);
  return DivisorClass{c.e, c.l + c.e * (rp - r), basis, c.surface};
}

Rational intersection_number(const DivisorClass& a, const DivisorClass& b) {
  const std::int64_t surface = common_surface(a, b);
  // Section . section on S_n: (E - r_a L).(E - r_b L) = n - r_a - r_b.
  // In the E0 and E_{-1} bases this is n-free (0, -1, or -1/2), so classes
  // expressed there pair at level scope; the E basis needs the surface.
  Rational section_square(0);
  if (!a.e.is_zero() && !b.e.is_zero()) {
    if (a.basis == DivisorBasis::E || b.basis == DivisorBasis::E) {
      if (surface == kAnySurface)
        throw std::domain_error("pairing in the E basis needs a concrete surface index");
      section_square =
          Rational(surface) - basis_offset(a.basis, surface) - basis_offset(b.basis, surface);
    } else {
      const auto offset_half = [](DivisorBasis basis) {
        return basis == DivisorBasis::E0 ? Rational(0) : Rational(1, 2);
      };
      section_square = -offset_half(a.basis) - offset_half(b.basis);
    }
  }
  return a.e * b.e * section_square + a.e * b.l + a.l * b.e;
}

DivisorClass canonical_divisor(std::int64_t n, std::int64_t m) {
  if (n < 0) throw std::domain_error("canonical_divisor: surface index must be >= 0");
  if (m < 1) throw std::domain_error("canonical_divisor: ramification index must be >= 1");
  // K = -(2/m) E - ((2m-n)/m) L
  return DivisorClass{Rational(-2, m), Rational(-(2 * m - n), m), DivisorBasis::E, n};
}

bool is_log_del_pezzo(std::int64_t n, std::int64_t m) { return 2 * m > n; }

DivisorClass symplectic_class_at_level(std::int64_t k, std::int64_t l, std::int64_t i,
                                       Parity parity, ManifoldType bundle) {
  if (i < 1 || i > l) throw std::domain_error("level must satisfy 1 <= i <= l");
  if (bundle == ManifoldType::NontrivialBundle) {
    if (parity == Parity::Even)
      throw std::domain_error("the nontrivial bundle has no even-parity levels");
    // i E_{-1} + (k + (i+1)/2) L, with i odd
    return DivisorClass{Rational(i), Rational(k) + Rational(i + 1, 2), DivisorBasis::Eminus1,
                        kAnySurface};
  }
  if (parity == Parity::Even)
    return DivisorClass{Rational(i), Rational(k), DivisorBasis::E0, kAnySurface};
  // i E_{-1} + (k + i/2) L, with i even
  return DivisorClass{Rational(i), Rational(k) + Rational(i, 2), DivisorBasis::Eminus1,
                      kAnySurface};
}

DivisorClass symplectic_class(const SubfamilyParams& s) {
  const LevelData level = level_of(s);
  return symplectic_class_at_level(s.k, s.l, level.g, level.parity, s.bundle);
}

OrbifoldSurface quotient_orbifold(const SubfamilyParams& s) {
  const LevelData level = level_of(s);
  OrbifoldSurface surface;
  surface.level = level;
  surface.branch_coefficient = Rational(1) - Rational(1, level.m);
  surface.canonical_class = canonical_divisor(level.n, level.m);
  surface.log_del_pezzo = is_log_del_pezzo(level.n, level.m);
  surface.symplectic_class = symplectic_class(s);
  return surface;
}

Rational orbifold_chern_evaluation(const OrbifoldSurface& surface, const DivisorClass& cycle) {
  const DivisorClass anticanonical{-surface.canonical_class.e, -surface.canonical_class.l,
                                   surface.canonical_class.basis, surface.canonical_class.surface};
  return intersection_number(anticanonical, cycle);
}

}  // namespace tck
