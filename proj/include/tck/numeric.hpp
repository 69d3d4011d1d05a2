#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>

namespace tck {

// Raised when a cross-check between a closed formula and an independent
// enumeration disagrees. This is a bug report, not a bad-input report; the
// CLI maps it to a distinct exit code.
class internal_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Cap on raw integer inputs (weights, sweep bounds, multiplicities). The
// interesting examples are tiny; the cap keeps sweep requests from silently
// wrapping 64-bit intermediates. Overridable via TCK_MAX_INT in the CLI.
std::int64_t input_cap();
void set_input_cap(std::int64_t cap);
void require_in_cap(std::int64_t value, const char* what);

// gcd of a nonempty list of nonnegative integers, at least one nonzero.
// gcd_all({a}) == a.
std::int64_t gcd_all(std::span<const std::int64_t> values);

// Euler phi: the number of 1 <= q <= n coprime to n. Trial-division
// factorization; n is capped, so nothing faster is warranted.
std::int64_t euler_phi(std::int64_t n);

// Ceiling of a/b for positive a, b: the unique q with (q-1)b < a <= qb.
std::int64_t ceil_div(std::int64_t a, std::int64_t b);

}  // namespace tck
