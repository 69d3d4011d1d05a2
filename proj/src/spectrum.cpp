#include "tck/spectrum.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "tck/numeric.hpp"

namespace tck {

const char* to_string(CriticalType t) {
  switch (t) {
    case CriticalType::Max: return "max";
    case CriticalType::Min: return "min";
    case CriticalType::Saddle1: return "saddle1";
    case CriticalType::Saddle2: return "saddle2";
  }
  return "?";
}

const char* to_string(Stratum s) {
  switch (s) {
    case Stratum::Branch1: return "branch1";
    case Stratum::Branch2: return "branch2";
    case Stratum::Dense: return "dense";
  }
  return "?";
}

std::int64_t rs_index_branch(std::int64_t p1, std::int64_t p2, std::int64_t k1, int i,
                             std::int64_t m) {
  if (i != 1 && i != 2) throw std::domain_error("branch stratum index must be 1 or 2");
  if (p1 < 1 || p2 < p1) throw std::domain_error("rs_index_branch requires 1 <= p1 <= p2");
  if (k1 != std::gcd(p1, p2)) throw std::domain_error("k1 must equal gcd(p1, p2)");
  if (m < 1) throw std::domain_error("multiplicity must be positive");
  const std::int64_t pi = i == 1 ? p1 : p2;
  const std::int64_t pother = i == 1 ? p2 : p1;
  if (m % pi == 0)
    throw std::domain_error("orbit (i=" + std::to_string(i) + ", m=" + std::to_string(m) +
                            ") lies in the dense stratum");
  return checked_sub(
      checked_add(checked_mul(2, checked_mul(k1, m)), 2 * (checked_mul(m, pother) / pi)), 1);
}

Rational rs_index_dense(std::int64_t k2, std::int64_t m, const Rational& chern_eval) {
  if (k2 < 1) throw std::domain_error("k2 must be positive");
  if (m < 1) throw std::domain_error("multiplicity must be positive");
  return Rational(2) * Rational(k2) * Rational(m) * chern_eval;
}

std::int64_t grade_generator(std::int64_t rs_index, int stratum_dim, CriticalType t) {
  if (stratum_dim == 2) {
    switch (t) {
      case CriticalType::Max: return checked_add(rs_index, 1);
      case CriticalType::Min: return checked_sub(rs_index, 1);
      default:
        throw std::domain_error("a 2-sphere orbit space has no saddle generators");
    }
  }
  if (stratum_dim == 4) {
    switch (t) {
      case CriticalType::Max: return checked_add(rs_index, 2);
      case CriticalType::Min: return checked_sub(rs_index, 2);
      case CriticalType::Saddle1:
      case CriticalType::Saddle2: return rs_index;
    }
  }
  throw std::domain_error("stratum dimension must be 2 or 4");
}

Rational action_of_branch_orbit(std::int64_t k2, int i, std::int64_t m, std::int64_t p_i) {
  if (i != 1 && i != 2) throw std::domain_error("branch stratum index must be 1 or 2");
  if (k2 < 1 || m < 1 || p_i < 1)
    throw std::domain_error("action_of_branch_orbit requires positive arguments");
  if (m % p_i == 0)
    throw std::domain_error("p_" + std::to_string(i) + " divides m=" + std::to_string(m) +
                            ": the orbit lies in the dense stratum");
  return Rational(checked_mul(k2, m), p_i);
}

std::int64_t novikov_shift(std::int64_t grading, std::int64_t chern_on_a) {
  return checked_sub(grading, checked_mul(2, chern_on_a));
}

namespace {

// Subfamily view of (p1, p2, k2, k2) with p1 <= p2: k and j such that the
// quadruple is (j, 2k-j, l, l) or (j, 2k-j+1, l, l).
SubfamilyParams subfamily_of(std::int64_t p1, std::int64_t p2, std::int64_t k2) {
  const std::int64_t sum = checked_add(p1, p2);
  if (sum % 2 == 0) return SubfamilyParams{sum / 2, k2, p1, ManifoldType::TrivialBundle};
  return SubfamilyParams{(sum - 1) / 2, k2, p1, ManifoldType::NontrivialBundle};
}

// No enumerated branch orbit may be a bad orbit: its index is odd for every
// multiplicity, so the grading parity of even and odd multiples agrees. A
// formula change that broke this would flip the parity and surface here.
void check_good_orbit(std::int64_t rs) {
  if (rs % 2 == 0)
    throw internal_error("branch orbit with even Robbin-Salamon index: bad-orbit filter hit");
}

}  // namespace

Spectrum enumerate_spectrum(std::int64_t p1, std::int64_t p2, std::int64_t k2,
                            std::int64_t degree_bound) {
  return enumerate_spectrum(p1, p2, k2, degree_bound, fiber_class());
}

Spectrum enumerate_spectrum(std::int64_t p1, std::int64_t p2, std::int64_t k2,
                            std::int64_t degree_bound, const DivisorClass& capping) {
  if (p1 > p2) std::swap(p1, p2);
  if (degree_bound < 0) throw std::domain_error("degree bound must be nonnegative");
  const Quadruple q = make_quadruple(p1, p2, k2, k2);
  require_admissible(q);

  Spectrum spectrum;
  spectrum.p1 = p1;
  spectrum.p2 = p2;
  spectrum.k2 = k2;
  spectrum.degree_bound = degree_bound;

  const std::int64_t k1 = std::gcd(p1, p2);
  for (int i = 1; i <= 2; ++i) {
    const std::int64_t pi = i == 1 ? p1 : p2;
    for (std::int64_t m = 1; m < pi; ++m) {
      const std::int64_t rs = rs_index_branch(p1, p2, k1, i, m);
      check_good_orbit(rs);
      Generator g;
      g.stratum = i == 1 ? Stratum::Branch1 : Stratum::Branch2;
      g.multiplicity = m;
      g.critical = CriticalType::Min;
      g.rs_index = rs;
      g.grading = grade_generator(rs, 2, CriticalType::Min);
      g.action = action_of_branch_orbit(k2, i, m, pi);
      spectrum.generators.push_back(g);
    }
  }

  // Dense stratum: the census always carries the minimum of the first
  // integer-action orbit space. Its index comes from the caller's capping
  // class evaluated against the quotient orbifold; the count stays
  // independent of that choice, which is what makes it an invariant.
  const OrbifoldSurface surface = quotient_orbifold(subfamily_of(p1, p2, k2));
  const Rational chern = orbifold_chern_evaluation(surface, capping);
  const Rational rs1 = rs_index_dense(k2, 1, chern);
  if (!rs1.is_integer())
    throw std::domain_error("capping class gives the non-integral index " + rs1.str() +
                            "; choose a class with integral Chern evaluation");
  Generator dense;
  dense.stratum = Stratum::Dense;
  dense.multiplicity = 1;
  dense.critical = CriticalType::Min;
  dense.rs_index = rs1.as_integer();
  dense.grading = grade_generator(dense.rs_index, 4, CriticalType::Min);
  dense.action = Rational(1);
  spectrum.generators.push_back(dense);

  std::sort(spectrum.generators.begin(), spectrum.generators.end(),
            [](const Generator& a, const Generator& b) {
              return std::tie(a.grading, a.action, a.stratum, a.multiplicity) <
                     std::tie(b.grading, b.action, b.stratum, b.multiplicity);
            });
  for (const Generator& g : spectrum.generators) ++spectrum.counts_by_degree[g.grading];
  return spectrum;
}

std::int64_t count_low_degree(std::int64_t p1, std::int64_t p2) {
  if (p1 < 1 || p2 < 1) throw std::domain_error("count_low_degree requires positive weights");
  if (p1 > p2) std::swap(p1, p2);
  const std::int64_t count = checked_sub(checked_add(p1, p2), 1);
  // (p1, p2, 1, 1) is admissible for every p1, p2; the census size must
  // reproduce the closed count or the enumeration has drifted.
  const std::int64_t bound = checked_mul(2, checked_add(checked_add(p1, p2), 1));
  const Spectrum spectrum = enumerate_spectrum(p1, p2, 1, bound);
  if (static_cast<std::int64_t>(spectrum.generators.size()) != count)
    throw internal_error("low-degree generator count mismatch for (" + std::to_string(p1) + "," +
                         std::to_string(p2) + "): formula " + std::to_string(count) +
                         ", enumeration " + std::to_string(spectrum.generators.size()));
  return count;
}

RegularCaseGradings regular_case_gradings(std::int64_t k, std::int64_t c, std::int64_t N) {
  if (c < 1 || N < 1) throw std::domain_error("regular case requires c >= 1 and N >= 1");
  if (k <= c) throw std::domain_error("regular case requires k > c for positive weights");
  if (std::gcd(k, k - c) != 1)
    throw std::domain_error("(k, k, k-c, k-c) is not admissible: gcd(k, k-c) > 1");
  require_in_cap(k, "regular case k");
  // Smallest m >= 1 with k m = -1 (mod c); exists iff gcd(k, c) = 1, which
  // the admissibility check above already guarantees.
  std::int64_t m = 0;
  for (std::int64_t candidate = 1; candidate <= c; ++candidate) {
    if ((checked_mul(k, candidate) + 1) % c == 0) {
      m = candidate;
      break;
    }
  }
  if (m == 0)
    throw std::domain_error("no m <= c solves k m = -1 (mod c); gcd(k, c) > 1");
  RegularCaseGradings r;
  r.m = m;
  r.x = (checked_mul(k, m) + 1) / c;
  r.y = checked_sub(r.x, m);
  const std::int64_t level = checked_mul(N, checked_add(checked_mul(2, r.x), checked_mul(2, r.y)));
  r.max_grading = checked_add(level, 2);
  r.saddle_grading = level;
  r.min_grading = checked_sub(level, 2);
  return r;
}

}  // namespace tck
