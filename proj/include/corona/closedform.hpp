#pragma once

// Closed-form corona counts and the rational generating functions of the
// hexagon and diamond sequences.
//
// Side lengths of 0 are accepted: the formulas are polynomials, so they
// extend to 0 even though no region has a zero-length side. Such results are
// flagged as an algebraic extension.

#include "corona/polynomial.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace corona::closedform {

struct CountBreakdown {
  std::array<BigInt, 4> parts;          // coronas using sizes[i] lozenges
  std::array<std::uint64_t, 4> sizes;   // four consecutive lozenge counts
  BigInt total;
  bool algebraic_extension = false;

  /// Coefficient of x^sizes[i] is parts[i].
  Polynomial as_polynomial() const;

  bool operator==(const CountBreakdown&) const = default;
};

/// 2, 9(n+1)^2, 6(n+1)^4, (n+1)^6 at sizes 6n+3..6n+6. The total is
/// evaluated from its expanded degree-6 form, not by summing the parts.
CountBreakdown hexagon_counts(int n);

/// 2, (2n+3)^2, 2(n+1)^2(2n+3), (n+1)^4 at sizes 4n+3..4n+6.
CountBreakdown diamond_counts(int n);

/// Hexagon with opposite sides n1, n2, n3. Total evaluated as
/// ((n1+1)(n2+1)(n3+1) + (n1+n2+n3+3))^2 + 2.
CountBreakdown gen_hexagon_counts(int n1, int n2, int n3);

/// Diamond with opposite sides n1, n2. Total evaluated as
/// ((n1+1)(n2+1) + (n1+n2+3))^2 + 2.
CountBreakdown gen_diamond_counts(int n1, int n2);

/// First `count` Taylor coefficients of
/// (2x^6+4x^5+114x^4+220x^3+290x^2+72x+18) / (1-x)^7.
std::vector<BigInt> hexagon_gf_series(std::size_t count);

/// First `count` Taylor coefficients of (3x^4-13x^3+23x^2-7x+18) / (1-x)^5.
std::vector<BigInt> diamond_gf_series(std::size_t count);

/// Taylor coefficients of numerator / (1-x)^power, by convolving the
/// numerator with C(k+power-1, power-1).
std::vector<BigInt> rational_series(const std::vector<BigInt>& numerator, unsigned power, std::size_t count);

}  // namespace corona::closedform
