#include "cubewall/closedform.hpp"

#include <string>
#include <vector>

#include "cubewall/errors.hpp"

namespace cubewall {

namespace {

constexpr std::size_t kParallelWindow = 1 << 12;

void check_rank(int r) {
  if (r < 1) throw InputError("torus rank must be at least 1, got " + std::to_string(r));
  // The coefficient count 2^r - r must be addressable.
  if (r > 40) throw CapabilityError("rank " + std::to_string(r) + " is beyond any addressable coefficient list");
}

// Multiplies by 1 + x + ... + x^(window-1): c[k] = prefix[k+1] - prefix[k+1-window].
std::vector<BigInt> times_window(const std::vector<BigInt>& a, std::size_t window, bool parallel) {
  std::vector<BigInt> prefix(a.size() + 1);
  for (std::size_t i = 0; i < a.size(); ++i) prefix[i + 1] = prefix[i] + a[i];

  const auto out_len = static_cast<long long>(a.size() + window - 1);
  const auto na = static_cast<long long>(a.size());
  const auto w = static_cast<long long>(window);
  std::vector<BigInt> c(static_cast<std::size_t>(out_len));
#pragma omp parallel for schedule(static) if (parallel && out_len >= static_cast<long long>(kParallelWindow))
  for (long long k = 0; k < out_len; ++k) {
    const long long hi = std::min(k + 1, na);
    const long long lo = std::max(0LL, k + 1 - w);
    c[static_cast<std::size_t>(k)] = prefix[static_cast<std::size_t>(hi)] - prefix[static_cast<std::size_t>(lo)];
  }
  return c;
}

Polynomial product(int r, bool parallel) {
  check_rank(r);
  std::vector<BigInt> acc{1};
  for (int i = 1; i < r; ++i) acc = times_window(acc, std::size_t{1} << i, parallel);
  return Polynomial(std::move(acc));
}

}  // namespace

Polynomial poincare_product(int r) { return product(r, true); }

Polynomial poincare_product_serial(int r) { return product(r, false); }

BigInt euler_char(int r) {
  if (r < 1) throw InputError("torus rank must be at least 1, got " + std::to_string(r));
  BigInt chi = 1;
  for (int i = 0; i < r; ++i) chi *= BigInt(1) << i;
  const BigInt shortcut = BigInt(1) << (r * (r - 1) / 2);
  if (chi != shortcut) throw InvariantError("Euler product disagrees with 2^(r(r-1)/2)");
  return chi;
}

long long quotient_dim(int r) {
  if (r < 1) throw InputError("torus rank must be at least 1, got " + std::to_string(r));
  if (r > 61) throw CapabilityError("quotient dimension overflows 64 bits past rank 61");
  return (1LL << (r + 1)) - 2LL * r - 2;
}

}  // namespace cubewall
