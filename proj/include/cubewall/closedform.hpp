#pragma once

#include "cubewall/numeric.hpp"
#include "cubewall/poly.hpp"

namespace cubewall {

/// prod_{i<r} (1 + t^2 + ... + t^(2(2^i - 1))). Each factor is applied as a
/// sliding-window sum over prefix sums, OpenMP-parallel over coefficients.
Polynomial poincare_product(int r);
/// Same product, single-threaded.
Polynomial poincare_product_serial(int r);

/// prod_{i<r} 2^i, multiplied out literally.
BigInt euler_char(int r);

/// 2^(r+1) - 2r - 2, the real dimension of the reduced space.
long long quotient_dim(int r);

}  // namespace cubewall
