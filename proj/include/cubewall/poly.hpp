#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "cubewall/numeric.hpp"

namespace cubewall {

/**
 * Integer polynomial in t with only even powers.
 *
 * Coefficient k is the coefficient of t^(2k). The stored list never ends in
 * a zero; the zero polynomial has no coefficients at all.
 */
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::initializer_list<long long> coeffs);
  explicit Polynomial(std::vector<BigInt> coeffs);

  static Polynomial constant(const BigInt& c);
  /// 1 + t^2 + ... + t^(2(terms-1)); zero when terms == 0.
  static Polynomial geometric(std::size_t terms);
  /// c * t^(2k).
  static Polynomial monomial(std::size_t k, const BigInt& c = 1);

  std::span<const BigInt> coeffs() const { return coeffs_; }
  /// Number of stored coefficients (highest t^2-index plus one).
  std::size_t size() const { return coeffs_.size(); }
  bool is_zero() const { return coeffs_.empty(); }
  /// Degree in t; -1 for the zero polynomial.
  long long degree() const { return 2 * static_cast<long long>(coeffs_.size()) - 2; }
  /// Coefficient of t^(2k), zero past the end.
  BigInt operator[](std::size_t k) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// `1 + 2*t^2 + t^4`; negative terms render as ` - 2*t^4`.
  std::string to_string() const;

 private:
  void normalize();
  std::vector<BigInt> coeffs_;
};

Polynomial add(const Polynomial& p, const Polynomial& q);
Polynomial sub(const Polynomial& p, const Polynomial& q);

/// Convolution product. Large operands are split across OpenMP threads by
/// output coefficient; the result is identical to mul_serial.
Polynomial mul(const Polynomial& p, const Polynomial& q);
/// Single-threaded schoolbook reference for mul.
Polynomial mul_serial(const Polynomial& p, const Polynomial& q);

inline Polynomial operator+(const Polynomial& p, const Polynomial& q) { return add(p, q); }
inline Polynomial operator-(const Polynomial& p, const Polynomial& q) { return sub(p, q); }
inline Polynomial operator*(const Polynomial& p, const Polynomial& q) { return mul(p, q); }

/// Value at t = x, i.e. sum of coeffs[k] * x^(2k).
BigInt eval_int(const Polynomial& p, long long x);

bool is_palindromic(const Polynomial& p);
/// Non-decreasing then non-increasing.
bool is_unimodal(const Polynomial& p);
bool is_nonnegative(const Polynomial& p);

}  // namespace cubewall
