#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace chromzeta {

using BigInt = boost::multiprecision::cpp_int;

/// Dense polynomial with arbitrary-precision integer coefficients.
/// coefficients()[i] is the coefficient of x^i; the highest stored one is nonzero.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coefficients);
  IntPolynomial(std::initializer_list<long long> coefficients);

  static IntPolynomial constant(BigInt c);
  static IntPolynomial x();
  // x - a
  static IntPolynomial linear(const BigInt& a);
  // x (x - 1) ... (x - m + 1)
  static IntPolynomial falling_factorial(int m);

  // -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const std::vector<BigInt>& coefficients() const noexcept { return coeffs_; }
  BigInt coefficient(int i) const;
  BigInt leading() const { return coeffs_.empty() ? BigInt(0) : coeffs_.back(); }

  BigInt operator()(const BigInt& x) const;
  // Floating evaluation; for exact work use the BigInt overload.
  double evaluate(double x) const;

  // Power sums of the roots, S_1..S_count, via Newton's identities.
  // Requires a monic polynomial.
  std::vector<BigInt> root_power_sums(int count) const;

  IntPolynomial pow(unsigned e) const;

  IntPolynomial& operator+=(const IntPolynomial& rhs);
  IntPolynomial& operator-=(const IntPolynomial& rhs);
  IntPolynomial& operator*=(const IntPolynomial& rhs);
  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(IntPolynomial a, const IntPolynomial& b) { return a *= b; }
  IntPolynomial operator-() const;
  bool operator==(const IntPolynomial&) const = default;

  // "x^3 - 3x^2 + 2x"
  std::string to_string() const;
  // "[0, 2, -3, 1]", constant term first.
  std::string coefficient_list() const;
  // ["0","2","-3","1"]
  std::string to_json() const;

 private:
  void normalize();
  std::vector<BigInt> coeffs_;
};

}  // namespace chromzeta
