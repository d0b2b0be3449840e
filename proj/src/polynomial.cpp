#include "conjforge/polynomial.hpp"

#include <stdexcept>

namespace conjforge {

IntPolynomial::IntPolynomial(std::vector<Int> coefficients)
    : coeffs_(std::move(coefficients)) {
  normalize();
}

IntPolynomial::IntPolynomial(std::initializer_list<long> coefficients) {
  coeffs_.reserve(coefficients.size());
  for (long c : coefficients) coeffs_.emplace_back(c);
  normalize();
}

void IntPolynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::constant(Int c) {
  IntPolynomial out;
  out.coeffs_.push_back(std::move(c));
  out.normalize();
  return out;
}

IntPolynomial IntPolynomial::monomial(unsigned k) {
  IntPolynomial out;
  out.coeffs_.assign(k + 1, Int(0));
  out.coeffs_.back() = 1;
  return out;
}

IntPolynomial IntPolynomial::monic_from_integer_roots(
    std::span<const Int> roots) {
  IntPolynomial out = constant(Int(1));
  for (const Int& r : roots) {
    IntPolynomial linear(std::vector<Int>{-r, Int(1)});
    out = out * linear;
  }
  return out;
}

const Int& IntPolynomial::leading() const {
  if (coeffs_.empty()) throw std::invalid_argument("zero polynomial");
  return coeffs_.back();
}

Int IntPolynomial::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Int(0);
}

Int IntPolynomial::eval(const Int& x) const {
  Int acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * x + *it;
  return acc;
}

Rat IntPolynomial::eval(const Rat& x) const {
  Rat acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * x + Rat(*it);
  return acc;
}

IntPolynomial IntPolynomial::derivative() const {
  IntPolynomial out;
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    out.coeffs_.push_back(coeffs_[i] * static_cast<unsigned long>(i));
  out.normalize();
  return out;
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& rhs) const {
  IntPolynomial out;
  out.coeffs_.resize(std::max(coeffs_.size(), rhs.coeffs_.size()), Int(0));
  for (std::size_t i = 0; i < out.coeffs_.size(); ++i)
    out.coeffs_[i] = coeff(i) + rhs.coeff(i);
  out.normalize();
  return out;
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& rhs) const {
  IntPolynomial out;
  out.coeffs_.resize(std::max(coeffs_.size(), rhs.coeffs_.size()), Int(0));
  for (std::size_t i = 0; i < out.coeffs_.size(); ++i)
    out.coeffs_[i] = coeff(i) - rhs.coeff(i);
  out.normalize();
  return out;
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& rhs) const {
  if (is_zero() || rhs.is_zero()) return IntPolynomial();
  IntPolynomial out;
  out.coeffs_.assign(coeffs_.size() + rhs.coeffs_.size() - 1, Int(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
      out.coeffs_[i + j] += coeffs_[i] * rhs.coeffs_[j];
  out.normalize();
  return out;
}

std::string IntPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Int& c = coeffs_[k];
    if (c == 0) continue;
    Int a = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    const bool unit = a == 1;
    if (k == 0) {
      out += a.get_str();
    } else {
      if (!unit) out += a.get_str() + "*";
      out += k == 1 ? "X" : "X^" + std::to_string(k);
    }
  }
  return out;
}

}  // namespace conjforge
