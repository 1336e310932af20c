#include "chromzeta/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace chromzeta {

IntPolynomial::IntPolynomial(std::vector<BigInt> coefficients) : coeffs_(std::move(coefficients)) {
  normalize();
}

IntPolynomial::IntPolynomial(std::initializer_list<long long> coefficients) {
  coeffs_.reserve(coefficients.size());
  for (long long c : coefficients) coeffs_.emplace_back(c);
  normalize();
}

IntPolynomial IntPolynomial::constant(BigInt c) { return IntPolynomial(std::vector<BigInt>{std::move(c)}); }

IntPolynomial IntPolynomial::x() { return IntPolynomial{0, 1}; }

IntPolynomial IntPolynomial::linear(const BigInt& a) { return IntPolynomial(std::vector<BigInt>{-a, 1}); }

IntPolynomial IntPolynomial::falling_factorial(int m) {
  IntPolynomial p = constant(1);
  for (int i = 0; i < m; ++i) p *= linear(i);
  return p;
}

void IntPolynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPolynomial::coefficient(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[i];
}

BigInt IntPolynomial::operator()(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double IntPolynomial::evaluate(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->convert_to<double>();
  return acc;
}

std::vector<BigInt> IntPolynomial::root_power_sums(int count) const {
  const int k = degree();
  if (k < 0 || leading() != 1) throw std::invalid_argument("root_power_sums: polynomial is not monic");
  // Elementary symmetric polynomials: coeff of x^{k-m} is (-1)^m e_m.
  std::vector<BigInt> e(k + 1);
  for (int m = 0; m <= k; ++m) e[m] = (m % 2 == 0) ? coeffs_[k - m] : BigInt(-coeffs_[k - m]);

  std::vector<BigInt> sums(count + 1, 0);
  for (int j = 1; j <= count; ++j) {
    BigInt acc = 0;
    for (int m = 1; m < j && m <= k; ++m) {
      BigInt term = e[m] * sums[j - m];
      acc += (m % 2 == 1) ? term : BigInt(-term);
    }
    if (j <= k) {
      BigInt term = BigInt(j) * e[j];
      acc += (j % 2 == 1) ? term : BigInt(-term);
    }
    sums[j] = acc;
  }
  sums.erase(sums.begin());
  return sums;
}

IntPolynomial IntPolynomial::pow(unsigned e) const {
  IntPolynomial result = constant(1);
  IntPolynomial base = *this;
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  normalize();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  normalize();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<BigInt> out(coeffs_.size() + rhs.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  coeffs_ = std::move(out);
  normalize();
  return *this;
}

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

std::string IntPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const BigInt& c = coeffs_[i];
    if (c == 0) continue;
    const bool negative = c < 0;
    const BigInt magnitude = negative ? BigInt(-c) : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (magnitude != 1 || i == 0) out += magnitude.str();
    if (i >= 1) out += "x";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

std::string IntPolynomial::coefficient_list() const {
  std::string out = "[";
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) out += ", ";
    out += coeffs_[i].str();
  }
  if (coeffs_.empty()) out += "0";
  return out + "]";
}

std::string IntPolynomial::to_json() const {
  std::string out = "[";
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) out += ",";
    out += "\"" + coeffs_[i].str() + "\"";
  }
  if (coeffs_.empty()) out += "\"0\"";
  return out + "]";
}

}  // namespace chromzeta
