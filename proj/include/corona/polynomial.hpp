#pragma once

// Exact sparse univariate polynomials over the integers, and dense matrices
// of them. The formal variable is x; in this project the exponent of x counts
// lozenges.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace corona {

using BigInt = boost::multiprecision::cpp_int;

class Polynomial {
 public:
  using Terms = std::map<unsigned, BigInt>;

  Polynomial() = default;
  Polynomial(BigInt constant);  // NOLINT: implicit promotion of scalars
  Polynomial(int constant) : Polynomial(BigInt(constant)) {}

  static Polynomial monomial(BigInt coefficient, unsigned exponent);

  /// Never contains a zero coefficient.
  const Terms& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  /// Highest exponent; throws std::domain_error for the zero polynomial.
  unsigned degree() const;
  unsigned lowest_exponent() const;
  BigInt coefficient(unsigned exponent) const;
  /// Sum of all coefficients, i.e. the value at x = 1.
  BigInt coefficient_sum() const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  bool operator==(const Polynomial&) const = default;

 private:
  void add_term(unsigned exponent, const BigInt& coefficient);

  Terms terms_;
};

enum class TermOrder { ascending, descending };

/// "2*x^9 + 36*x^10" style. Constants print bare, x^1 prints as x, and
/// the zero polynomial prints as "0".
std::string format(const Polynomial& p, TermOrder order = TermOrder::descending);

class PolyMatrix {
 public:
  /// Throws std::invalid_argument unless rows, cols >= 1.
  PolyMatrix(std::size_t rows, std::size_t cols);

  static PolyMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Polynomial& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Polynomial& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  bool operator==(const PolyMatrix&) const = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Polynomial> entries_;  // row-major
};

/// Throws std::invalid_argument when a.cols() != b.rows().
PolyMatrix mat_mul(const PolyMatrix& a, const PolyMatrix& b);

/// Repeated multiplication; exponent 0 gives the identity. Square input only.
PolyMatrix mat_pow(const PolyMatrix& a, unsigned exponent);

/// Throws std::invalid_argument for non-square input.
Polynomial mat_trace(const PolyMatrix& a);

}  // namespace corona
