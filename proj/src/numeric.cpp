#include "tck/numeric.hpp"

#include <numeric>
#include <string>

#include "tck/rational.hpp"

namespace tck {

namespace {
std::int64_t g_input_cap = 1'000'000;
}

std::int64_t input_cap() { return g_input_cap; }

void set_input_cap(std::int64_t cap) {
  if (cap < 1) throw std::domain_error("input cap must be positive");
  g_input_cap = cap;
}

void require_in_cap(std::int64_t value, const char* what) {
  if (value > g_input_cap)
    throw std::domain_error(std::string(what) + " exceeds the integer cap " +
                            std::to_string(g_input_cap) + " (" + std::to_string(value) + ")");
}

std::int64_t gcd_all(std::span<const std::int64_t> values) {
  if (values.empty()) throw std::domain_error("gcd_all: empty list");
  std::int64_t g = 0;
  for (std::int64_t v : values) {
    if (v < 0) throw std::domain_error("gcd_all: negative value");
    g = std::gcd(g, v);
  }
  if (g == 0) throw std::domain_error("gcd_all: all values are zero");
  return g;
}

std::int64_t euler_phi(std::int64_t n) {
  if (n < 1) throw std::domain_error("euler_phi: n must be positive");
  require_in_cap(n, "euler_phi argument");
  std::int64_t phi = n;
  std::int64_t rest = n;
  for (std::int64_t p = 2; p * p <= rest; ++p) {
    if (rest % p != 0) continue;
    phi -= phi / p;
    while (rest % p == 0) rest /= p;
  }
  if (rest > 1) phi -= phi / rest;
  return phi;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
  if (a < 1 || b < 1) throw std::domain_error("ceil_div: arguments must be positive");
  return checked_add(a, b - 1) / b;
}

}  // namespace tck
