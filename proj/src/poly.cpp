#include "cubewall/poly.hpp"

#include <algorithm>
#include <sstream>

#include <omp.h>

namespace cubewall {

namespace {

// Below this many multiply-adds the thread fork costs more than it saves.
constexpr std::size_t kParallelMulWork = 1 << 14;

}  // namespace

Polynomial::Polynomial(std::initializer_list<long long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

Polynomial::Polynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

Polynomial Polynomial::constant(const BigInt& c) { return Polynomial(std::vector<BigInt>{c}); }

Polynomial Polynomial::geometric(std::size_t terms) {
  return Polynomial(std::vector<BigInt>(terms, BigInt(1)));
}

Polynomial Polynomial::monomial(std::size_t k, const BigInt& c) {
  std::vector<BigInt> v(k + 1);
  v[k] = c;
  return Polynomial(std::move(v));
}

BigInt Polynomial::operator[](std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : BigInt(0);
}

void Polynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  normalize();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  normalize();
  return *this;
}

std::string Polynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const BigInt& c = coeffs_[k];
    if (c == 0) continue;
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << mag;
    } else {
      if (mag != 1) os << mag << '*';
      os << "t^" << 2 * k;
    }
  }
  return os.str();
}

Polynomial add(const Polynomial& p, const Polynomial& q) {
  Polynomial out = p;
  out += q;
  return out;
}

Polynomial sub(const Polynomial& p, const Polynomial& q) {
  Polynomial out = p;
  out -= q;
  return out;
}

Polynomial mul_serial(const Polynomial& p, const Polynomial& q) {
  if (p.is_zero() || q.is_zero()) return {};
  auto a = p.coeffs();
  auto b = q.coeffs();
  std::vector<BigInt> c(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  return Polynomial(std::move(c));
}

Polynomial mul(const Polynomial& p, const Polynomial& q) {
  if (p.is_zero() || q.is_zero()) return {};
  auto a = p.coeffs();
  auto b = q.coeffs();
  if (a.size() * b.size() < kParallelMulWork) return mul_serial(p, q);

  const auto out_len = static_cast<long long>(a.size() + b.size() - 1);
  const auto na = static_cast<long long>(a.size());
  const auto nb = static_cast<long long>(b.size());
  std::vector<BigInt> c(static_cast<std::size_t>(out_len));
  // Each output coefficient is owned by exactly one iteration.
#pragma omp parallel for schedule(dynamic, 64)
  for (long long k = 0; k < out_len; ++k) {
    const long long lo = std::max(0LL, k - nb + 1);
    const long long hi = std::min(k, na - 1);
    BigInt acc = 0;
    for (long long i = lo; i <= hi; ++i) acc += a[i] * b[k - i];
    c[static_cast<std::size_t>(k)] = std::move(acc);
  }
  return Polynomial(std::move(c));
}

BigInt eval_int(const Polynomial& p, long long x) {
  // Horner in x^2.
  const BigInt x2 = BigInt(x) * x;
  BigInt acc = 0;
  auto c = p.coeffs();
  for (std::size_t k = c.size(); k-- > 0;) acc = acc * x2 + c[k];
  return acc;
}

bool is_palindromic(const Polynomial& p) {
  auto c = p.coeffs();
  return std::equal(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(c.size() / 2), c.rbegin());
}

bool is_unimodal(const Polynomial& p) {
  auto c = p.coeffs();
  std::size_t k = 1;
  while (k < c.size() && c[k] >= c[k - 1]) ++k;
  while (k < c.size() && c[k] <= c[k - 1]) ++k;
  return k >= c.size();
}

bool is_nonnegative(const Polynomial& p) {
  auto c = p.coeffs();
  return std::all_of(c.begin(), c.end(), [](const BigInt& v) { return v >= 0; });
}

}  // namespace cubewall
