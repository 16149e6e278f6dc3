#include "corona/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace corona {

Polynomial::Polynomial(BigInt constant) { add_term(0, constant); }

Polynomial Polynomial::monomial(BigInt coefficient, unsigned exponent) {
  Polynomial p;
  p.add_term(exponent, coefficient);
  return p;
}

void Polynomial::add_term(unsigned exponent, const BigInt& coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coefficient);
  if (inserted) return;
  it->second += coefficient;
  if (it->second == 0) terms_.erase(it);
}

unsigned Polynomial::degree() const {
  if (terms_.empty()) throw std::domain_error("degree of the zero polynomial");
  return terms_.rbegin()->first;
}

unsigned Polynomial::lowest_exponent() const {
  if (terms_.empty()) throw std::domain_error("lowest exponent of the zero polynomial");
  return terms_.begin()->first;
}

BigInt Polynomial::coefficient(unsigned exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? BigInt(0) : it->second;
}

BigInt Polynomial::coefficient_sum() const {
  BigInt s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
  return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = *this * o; }

std::string format(const Polynomial& p, TermOrder order) {
  if (p.is_zero()) return "0";
  std::vector<std::pair<unsigned, BigInt>> terms(p.terms().begin(), p.terms().end());
  if (order == TermOrder::descending) std::reverse(terms.begin(), terms.end());
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms) {
    BigInt mag = c;
    if (first) {
      if (c < 0) {
        os << '-';
        mag = -c;
      }
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) mag = -c;
    }
    first = false;
    os << mag;
    if (e == 1)
      os << "*x";
    else if (e > 1)
      os << "*x^" << e;
  }
  return os.str();
}

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {
  if (rows == 0 || cols == 0) throw std::invalid_argument("matrix dimensions must be positive");
}

PolyMatrix PolyMatrix::identity(std::size_t n) {
  PolyMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Polynomial(1);
  return m;
}

PolyMatrix mat_mul(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols() != b.rows())
    throw std::invalid_argument("dimension mismatch: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                                " times " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  PolyMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Polynomial& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (!b.at(k, j).is_zero()) out.at(i, j) += aik * b.at(k, j);
    }
  return out;
}

PolyMatrix mat_pow(const PolyMatrix& a, unsigned exponent) {
  if (a.rows() != a.cols()) throw std::invalid_argument("matrix power needs a square matrix");
  PolyMatrix out = PolyMatrix::identity(a.rows());
  for (unsigned i = 0; i < exponent; ++i) out = mat_mul(out, a);
  return out;
}

Polynomial mat_trace(const PolyMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("trace needs a square matrix");
  Polynomial t;
  for (std::size_t i = 0; i < a.rows(); ++i) t += a.at(i, i);
  return t;
}

}  // namespace corona
