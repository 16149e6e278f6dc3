#include "corona/transfer.hpp"

#include <stdexcept>
#include <string>

namespace corona::transfer {

namespace {

void check_side(int n, Mode mode) {
  const int lowest = mode == Mode::algebraic ? 0 : 1;
  if (n < lowest)
    throw std::invalid_argument("side length " + std::to_string(n) + " out of range (minimum " +
                                std::to_string(lowest) + ")");
}

// c * x^e. Exponents here are always n + k with n >= 0, k >= 0.
Polynomial mono(int c, int e) { return Polynomial::monomial(BigInt(c), static_cast<unsigned>(e)); }

void fill_row(PolyMatrix& m, std::size_t row, const std::vector<Polynomial>& values) {
  for (std::size_t c = 0; c < values.size(); ++c) m.at(row, c) = values[c];
}

}  // namespace

// Displayed exponents are written as "k + n - 2" (one side state Q/K with
// n-2 lozenges) or "k + n - 1" (n-1 side states L_i with n-1 lozenges each):
//
//   x^{3+n-2} = x^{n+1}     (n-1)x^{3+n-1} = (n-1)x^{n+2}
//   x^{4+n-2} = x^{n+2}     (n-1)x^{2+n-1} = (n-1)x^{n+1}
//   x^{2+n-2} = x^{n}
//
// Rows A..C:  0, x^{n+1}, 0, x^{n}, 0
// Rows D..E:  x^{n+1}, (n-1)x^{n+2}, x^{n+2}, (n-1)x^{n+1}, x^{n+1}
PolyMatrix hexagon_matrix(int n, Mode mode) {
  check_side(n, mode);
  PolyMatrix m(5, 5);
  const std::vector<Polynomial> closing{0, mono(1, n + 1), 0, mono(1, n), 0};
  const std::vector<Polynomial> open{mono(1, n + 1), mono(n - 1, n + 2), mono(1, n + 2), mono(n - 1, n + 1),
                                     mono(1, n + 1)};
  for (std::size_t r = 0; r < 3; ++r) fill_row(m, r, closing);
  for (std::size_t r = 3; r < 5; ++r) fill_row(m, r, open);
  return m;
}

// 60-degree corner -> 120-degree corner, columns U..Y:
//   rows A..C:  (n-1)x^{2+n-1}, x^{3+n-2}, x^{3+n-2}, (n-1)x^{3+n-1}, x^{4+n-2}
//            =  (n-1)x^{n+1},   x^{n+1},   x^{n+1},   (n-1)x^{n+2},   x^{n+2}
//   rows D..J:  x^{2+n-2}, 0, 0, x^{3+n-2}, 0
//            =  x^{n},     0, 0, x^{n+1},   0
//
// 120-degree corner -> 60-degree corner, columns A..J (no G, H), already in
// simplified form:
//   rows U..V:  (n-1)x^{n+2}, x^{n+1}, x^{n+2}, (n-1)x^{n+2}, x^{n+2}, x^{n+2}, (n-1)x^{n+3}, x^{n+3}
//   rows W..Y:  x^{n+1},      0,       0,       x^{n+1},      0,       0,       x^{n+2},      0
DiamondMatrices diamond_matrices(int n, Mode mode) {
  check_side(n, mode);
  DiamondMatrices out{PolyMatrix(8, 5), PolyMatrix(5, 8)};

  const std::vector<Polynomial> sharp_open{mono(n - 1, n + 1), mono(1, n + 1), mono(1, n + 1), mono(n - 1, n + 2),
                                           mono(1, n + 2)};
  const std::vector<Polynomial> sharp_closing{mono(1, n), 0, 0, mono(1, n + 1), 0};
  for (std::size_t r = 0; r < 3; ++r) fill_row(out.sharp_to_blunt, r, sharp_open);
  for (std::size_t r = 3; r < 8; ++r) fill_row(out.sharp_to_blunt, r, sharp_closing);

  const std::vector<Polynomial> blunt_open{mono(n - 1, n + 2), mono(1, n + 1), mono(1, n + 2), mono(n - 1, n + 2),
                                           mono(1, n + 2),     mono(1, n + 2), mono(n - 1, n + 3), mono(1, n + 3)};
  const std::vector<Polynomial> blunt_closing{mono(1, n + 1), 0, 0, mono(1, n + 1), 0, 0, mono(1, n + 2), 0};
  for (std::size_t r = 0; r < 2; ++r) fill_row(out.blunt_to_sharp, r, blunt_open);
  for (std::size_t r = 2; r < 5; ++r) fill_row(out.blunt_to_sharp, r, blunt_closing);
  return out;
}

Polynomial hexagon_trace(int n, Mode mode) { return mat_trace(mat_pow(hexagon_matrix(n, mode), 6)); }

Polynomial diamond_trace(int n, Mode mode) { return gen_diamond_trace(n, n, mode); }

Polynomial gen_hexagon_trace(int n1, int n2, int n3, Mode mode) {
  const PolyMatrix half = mat_mul(mat_mul(hexagon_matrix(n1, mode), hexagon_matrix(n2, mode)), hexagon_matrix(n3, mode));
  return mat_trace(mat_mul(half, half));
}

Polynomial gen_diamond_trace(int n1, int n2, Mode mode) {
  const PolyMatrix half = mat_mul(diamond_matrices(n1, mode).sharp_to_blunt, diamond_matrices(n2, mode).blunt_to_sharp);
  return mat_trace(mat_mul(half, half));
}

}  // namespace corona::transfer
