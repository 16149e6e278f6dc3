#include <doctest.h>

#include "corona/closedform.hpp"
#include "corona/transfer.hpp"

#include <stdexcept>

using namespace corona;
using namespace corona::transfer;

namespace {

Polynomial x(int c, unsigned e) { return Polynomial::monomial(c, e); }

Polynomial four_terms(std::initializer_list<long long> coeffs, unsigned lowest) {
  Polynomial p;
  unsigned e = lowest;
  for (auto c : coeffs) p += Polynomial::monomial(BigInt(c), e++);
  return p;
}

// State indices.
constexpr std::size_t A = 0, B = 1, C = 2, D = 3, E = 4;
constexpr std::size_t U = 0, W = 2, X = 3, Y = 4;
constexpr std::size_t B3 = 1, C3 = 2, E3 = 4, F3 = 5, J3 = 7;

}  // namespace

TEST_CASE("hexagon matrix entries") {
  CHECK(hexagon_matrix(2).at(D, A) == x(1, 3));
  CHECK(hexagon_matrix(1).at(D, B).is_zero());
  CHECK(hexagon_matrix(3).at(A, D) == x(1, 3));
  CHECK(hexagon_matrix(4).at(E, B) == x(3, 6));
  CHECK(hexagon_matrix(4).at(D, D) == x(3, 5));
  CHECK(hexagon_matrix(4).at(E, C) == x(1, 6));

  for (int n = 1; n <= 5; ++n) {
    const PolyMatrix m = hexagon_matrix(n);
    CHECK(m.rows() == 5);
    for (std::size_t r : {A, B, C})
      for (std::size_t c : {A, C, E}) CHECK(m.at(r, c).is_zero());
    for (std::size_t c = 0; c < 5; ++c) {
      CHECK(m.at(A, c) == m.at(B, c));
      CHECK(m.at(A, c) == m.at(C, c));
      CHECK(m.at(D, c) == m.at(E, c));
    }
  }
  CHECK(hexagon_states[3] == "D");
}

TEST_CASE("diamond matrix entries") {
  const auto m2 = diamond_matrices(2);
  CHECK(m2.sharp_to_blunt.rows() == 8);
  CHECK(m2.sharp_to_blunt.cols() == 5);
  CHECK(m2.blunt_to_sharp.rows() == 5);
  CHECK(m2.blunt_to_sharp.cols() == 8);
  CHECK(m2.sharp_to_blunt.at(0, U) == x(1, 3));
  CHECK(m2.blunt_to_sharp.at(U, B3) == x(1, 3));
  for (std::size_t r : {W, X, Y})
    for (std::size_t c : {B3, C3, E3, F3, J3}) CHECK(m2.blunt_to_sharp.at(r, c).is_zero());

  const auto m3 = diamond_matrices(3);
  CHECK(m3.sharp_to_blunt.at(7, U) == x(1, 3));      // J1 -> U2: x^{2+n-2}
  CHECK(m3.sharp_to_blunt.at(2, X) == x(2, 5));      // C1 -> X2: (n-1)x^{3+n-1}
  CHECK(m3.blunt_to_sharp.at(1, 6) == x(2, 6));      // V2 -> I3: (n-1)x^{n+3}
  CHECK(m3.blunt_to_sharp.at(4, 6) == x(1, 5));      // Y2 -> I3: x^{n+2}
  CHECK(diamond_sharp_states[6] == "I");
  CHECK(diamond_blunt_states[4] == "Y");
}

TEST_CASE("side length 0 only in algebraic mode") {
  CHECK_THROWS_AS(hexagon_matrix(0), std::invalid_argument);
  CHECK_THROWS_AS(diamond_matrices(0), std::invalid_argument);
  CHECK_THROWS_AS(gen_hexagon_trace(1, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(hexagon_matrix(-1, Mode::algebraic), std::invalid_argument);
  CHECK(hexagon_matrix(0, Mode::algebraic).at(D, B) == x(-1, 2));
  // The trace identity is polynomial in n, so it survives n = 0.
  CHECK(hexagon_trace(0, Mode::algebraic) == closedform::hexagon_counts(0).as_polynomial());
  CHECK(diamond_trace(0, Mode::algebraic) == closedform::diamond_counts(0).as_polynomial());
  CHECK(gen_hexagon_trace(0, 1, 2, Mode::algebraic) == closedform::gen_hexagon_counts(0, 1, 2).as_polynomial());
  CHECK(gen_diamond_trace(0, 3, Mode::algebraic) == closedform::gen_diamond_counts(0, 3).as_polynomial());
}

TEST_CASE("hexagon traces") {
  CHECK(mat_trace(mat_pow(hexagon_matrix(1), 6)) == four_terms({2, 36, 96, 64}, 9));
  CHECK(hexagon_trace(1) == four_terms({2, 36, 96, 64}, 9));
  CHECK(hexagon_trace(2) == four_terms({2, 81, 486, 729}, 15));
  CHECK(hexagon_trace(1).coefficient_sum() == 198);
}

TEST_CASE("diamond traces") {
  CHECK(diamond_trace(1) == four_terms({2, 25, 40, 16}, 7));
  CHECK(diamond_trace(2) == four_terms({2, 49, 126, 81}, 11));
  CHECK(diamond_trace(2).coefficient_sum() == 258);
}

TEST_CASE("generalized hexagon traces") {
  for (int n = 1; n <= 5; ++n) CHECK(gen_hexagon_trace(n, n, n) == hexagon_trace(n));
  CHECK(gen_hexagon_trace(1, 2, 3) == four_terms({2, 81, 432, 576}, 15));
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b)
      for (int c = 1; c <= 3; ++c) {
        CHECK(gen_hexagon_trace(a, b, c) == gen_hexagon_trace(b, c, a));
        CHECK(gen_hexagon_trace(a, b, c) == gen_hexagon_trace(c, a, b));
      }
}

TEST_CASE("generalized diamond traces") {
  for (int n = 1; n <= 5; ++n) CHECK(gen_diamond_trace(n, n) == diamond_trace(n));
  CHECK(gen_diamond_trace(1, 2) == four_terms({2, 36, 72, 36}, 9));
  for (int a = 1; a <= 4; ++a)
    for (int b = 1; b <= 4; ++b) CHECK(gen_diamond_trace(a, b) == gen_diamond_trace(b, a));
}

TEST_CASE("every trace has four consecutive terms starting at perimeter + 3") {
  for (int a = 1; a <= 4; ++a)
    for (int b = 1; b <= 4; ++b) {
      const Polynomial d = gen_diamond_trace(a, b);
      CHECK(d.terms().size() == 4);
      CHECK(d.lowest_exponent() == static_cast<unsigned>(2 * (a + b) + 3));
      CHECK(d.degree() == d.lowest_exponent() + 3);
      for (int c = 1; c <= 3; ++c) {
        const Polynomial h = gen_hexagon_trace(a, b, c);
        CHECK(h.terms().size() == 4);
        CHECK(h.lowest_exponent() == static_cast<unsigned>(2 * (a + b + c) + 3));
        CHECK(h.degree() == h.lowest_exponent() + 3);
      }
    }
}
