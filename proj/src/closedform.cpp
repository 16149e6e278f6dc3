#include "corona/closedform.hpp"

#include <stdexcept>
#include <string>

namespace corona::closedform {

namespace {

void check_side(int n) {
  if (n < 0) throw std::invalid_argument("side length " + std::to_string(n) + " is negative");
}

BigInt pow(BigInt base, unsigned e) {
  BigInt r = 1;
  while (e--) r *= base;
  return r;
}

std::array<std::uint64_t, 4> sizes_from(std::uint64_t lowest) {
  return {lowest, lowest + 1, lowest + 2, lowest + 3};
}

}  // namespace

Polynomial CountBreakdown::as_polynomial() const {
  Polynomial p;
  for (std::size_t i = 0; i < 4; ++i) p += Polynomial::monomial(parts[i], static_cast<unsigned>(sizes[i]));
  return p;
}

CountBreakdown hexagon_counts(int n) {
  check_side(n);
  const BigInt m = n;
  const BigInt m1 = m + 1;
  CountBreakdown b;
  b.parts = {2, 9 * pow(m1, 2), 6 * pow(m1, 4), pow(m1, 6)};
  b.sizes = sizes_from(6 * static_cast<std::uint64_t>(n) + 3);
  b.total = pow(m, 6) + 6 * pow(m, 5) + 21 * pow(m, 4) + 44 * pow(m, 3) + 60 * pow(m, 2) + 48 * m + 18;
  b.algebraic_extension = n == 0;
  return b;
}

CountBreakdown diamond_counts(int n) {
  check_side(n);
  const BigInt m = n;
  const BigInt m1 = m + 1;
  CountBreakdown b;
  b.parts = {2, pow(2 * m + 3, 2), 2 * pow(m1, 2) * (2 * m + 3), pow(m1, 4)};
  b.sizes = sizes_from(4 * static_cast<std::uint64_t>(n) + 3);
  b.total = pow(m, 4) + 8 * pow(m, 3) + 24 * pow(m, 2) + 32 * m + 18;
  b.algebraic_extension = n == 0;
  return b;
}

CountBreakdown gen_hexagon_counts(int n1, int n2, int n3) {
  check_side(n1);
  check_side(n2);
  check_side(n3);
  const BigInt s = BigInt(n1) + n2 + n3 + 3;
  const BigInt p = BigInt(n1 + 1) * (n2 + 1) * (n3 + 1);
  CountBreakdown b;
  b.parts = {2, s * s, 2 * p * s, p * p};
  b.sizes = sizes_from(2 * (static_cast<std::uint64_t>(n1) + n2 + n3) + 3);
  b.total = pow(p + s, 2) + 2;
  b.algebraic_extension = n1 == 0 || n2 == 0 || n3 == 0;
  return b;
}

CountBreakdown gen_diamond_counts(int n1, int n2) {
  check_side(n1);
  check_side(n2);
  const BigInt s = BigInt(n1) + n2 + 3;
  const BigInt p = BigInt(n1 + 1) * (n2 + 1);
  CountBreakdown b;
  b.parts = {2, s * s, 2 * p * s, p * p};
  b.sizes = sizes_from(2 * (static_cast<std::uint64_t>(n1) + n2) + 3);
  b.total = pow(p + s, 2) + 2;
  b.algebraic_extension = n1 == 0 || n2 == 0;
  return b;
}

std::vector<BigInt> rational_series(const std::vector<BigInt>& numerator, unsigned power, std::size_t count) {
  if (power == 0) throw std::invalid_argument("denominator power must be positive");
  // binom[k] = C(k + power - 1, power - 1), built by the ratio recurrence.
  std::vector<BigInt> binom(count);
  if (count > 0) binom[0] = 1;
  for (std::size_t k = 1; k < count; ++k) binom[k] = binom[k - 1] * (k + power - 1) / k;

  std::vector<BigInt> out(count);
  for (std::size_t k = 0; k < count; ++k)
    for (std::size_t j = 0; j < numerator.size() && j <= k; ++j) out[k] += numerator[j] * binom[k - j];
  return out;
}

std::vector<BigInt> hexagon_gf_series(std::size_t count) {
  if (count < 1) throw std::invalid_argument("need at least one term");
  return rational_series({18, 72, 290, 220, 114, 4, 2}, 7, count);
}

std::vector<BigInt> diamond_gf_series(std::size_t count) {
  if (count < 1) throw std::invalid_argument("need at least one term");
  return rational_series({18, -7, 23, -13, 3}, 5, count);
}

}  // namespace corona::closedform
