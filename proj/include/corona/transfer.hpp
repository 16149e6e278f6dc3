#pragma once

// Weighted transfer matrices between corner states of a region, and the
// corona-counting polynomials obtained as traces of their products.
//
// A corona is a closed walk around the region: one corner state per corner,
// joined along each side by one of the n+1 side states. Entry (i, j) of a
// transfer matrix is the weighted number of ways to go from state i at one
// corner to state j at the next, the weight x^r recording the r lozenges
// contributed by the target corner plus the side in between. The trace of the
// product around the whole boundary therefore has coefficient of x^k equal to
// the number of coronas using k lozenges.

#include "corona/polynomial.hpp"

#include <array>
#include <string_view>

namespace corona::transfer {

/// Combinatorial mode accepts side lengths >= 1 only. Algebraic mode also
/// accepts 0, where the (n-1) multiplicities become -1; the resulting
/// polynomials continue the counting formulas but count nothing.
enum class Mode { combinatorial, algebraic };

// Row/column order of every matrix below.
inline constexpr std::array<std::string_view, 5> hexagon_states{"A", "B", "C", "D", "E"};
inline constexpr std::array<std::string_view, 8> diamond_sharp_states{"A", "B", "C", "D", "E", "F", "I", "J"};
inline constexpr std::array<std::string_view, 5> diamond_blunt_states{"U", "V", "W", "X", "Y"};

/// 5x5 transfer matrix across one side of length n of a 120-degree-cornered
/// hexagon. Rows: states at the leaving corner; columns: states at the
/// arriving corner.
PolyMatrix hexagon_matrix(int n, Mode mode = Mode::combinatorial);

struct DiamondMatrices {
  PolyMatrix sharp_to_blunt;  // 8x5, 60-degree corner -> 120-degree corner
  PolyMatrix blunt_to_sharp;  // 5x8, 120-degree corner -> 60-degree corner
};

/// Transfer matrices across a diamond side of length n. The first side
/// length passed to gen_diamond_trace feeds sharp_to_blunt, the second
/// blunt_to_sharp.
DiamondMatrices diamond_matrices(int n, Mode mode = Mode::combinatorial);

/// tr(M(n)^6).
Polynomial hexagon_trace(int n, Mode mode = Mode::combinatorial);

/// tr((S(n) B(n))^2) with S = sharp_to_blunt, B = blunt_to_sharp.
Polynomial diamond_trace(int n, Mode mode = Mode::combinatorial);

/// tr((M(n1) M(n2) M(n3))^2).
Polynomial gen_hexagon_trace(int n1, int n2, int n3, Mode mode = Mode::combinatorial);

/// tr((S(n1) B(n2))^2).
Polynomial gen_diamond_trace(int n1, int n2, Mode mode = Mode::combinatorial);

}  // namespace corona::transfer
