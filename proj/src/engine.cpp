#include "cubewall/engine.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <string>

#include "cubewall/errors.hpp"

namespace cubewall {

namespace {

constexpr int kMaxExhaustiveRank = 5;

std::uint64_t face_key(const CubeFace& f) {
  return (static_cast<std::uint64_t>(f.free_mask()) << 32) | f.negative_mask();
}

Polynomial poincare_apply(std::size_t b, std::size_t f) { return poincare_crossing(b, f); }
BigInt euler_apply(std::size_t b, std::size_t f) { return euler_crossing(b, f); }

}  // namespace

Polynomial poincare_crossing(std::size_t b, std::size_t f) {
  if (b == f) return {};
  const std::size_t lo = std::min(b, f);
  const std::size_t hi = std::max(b, f);
  std::vector<BigInt> c(hi);
  for (std::size_t k = lo; k < hi; ++k) c[k] = f > b ? 1 : -1;
  return Polynomial(std::move(c));
}

BigInt euler_crossing(std::size_t b, std::size_t f) { return BigInt(f) - BigInt(b); }

CrossingFunction<Polynomial> poincare_invariant() {
  return {"poincare", &poincare_apply, Polynomial::constant(1)};
}

CrossingFunction<BigInt> euler_invariant() { return {"euler", &euler_apply, BigInt(1)}; }

CrossingCounts CrossingCache::exterior_counts(const CubeFace& wall, const CubeFace& chamber) {
  const Key key{face_key(wall), face_key(chamber)};
  {
    std::shared_lock lock(mu_);
    if (auto it = table_.find(key); it != table_.end()) return it->second;
  }
  const auto counts = normal_weight_signs(wall, chamber, a_, EntrySide::exterior);
  std::unique_lock lock(mu_);
  table_.emplace(key, counts);
  return counts;
}

std::size_t CrossingCache::size() const {
  std::shared_lock lock(mu_);
  return table_.size();
}

void validate_path(int r, std::span<const CubeFace> path) {
  if (path.size() != static_cast<std::size_t>(r) + 1)
    throw InputError("path must hold r + 1 = " + std::to_string(r + 1) + " faces, got " +
                     std::to_string(path.size()));
  for (std::size_t k = 0; k < path.size(); ++k) {
    if (path[k].rank() != r) throw InputError("path face " + std::to_string(k) + " has the wrong rank");
    if (path[k].dim() != static_cast<int>(k))
      throw InputError("path is not ascending: face " + std::to_string(k) + " has dimension " +
                       std::to_string(path[k].dim()));
    if (k > 0 && !path[k].contains(path[k - 1]))
      throw InputError("path faces " + std::to_string(k - 1) + " and " + std::to_string(k) +
                       " are not incident");
  }
}

template <class Ring>
WalkResult<Ring> walk(const SignMatrix& a, std::span<const CubeFace> path, const CrossingFunction<Ring>& cross,
                      CrossingCache* cache) {
  validate_path(a.rank(), path);
  WalkResult<Ring> out;
  out.trace.start = cross.vertex_value;
  Ring value = cross.vertex_value;
  for (std::size_t k = 1; k < path.size(); ++k) {
    const CubeFace& wall = path[k - 1];
    const CubeFace& chamber = path[k];
    const auto counts = cache ? cache->exterior_counts(wall, chamber)
                              : normal_weight_signs(wall, chamber, a, EntrySide::exterior);
    // Outside the chamber the invariant vanishes.
    Ring next = recursive_step<Ring>(Ring{}, value, counts.b, counts.f, cross);
    out.trace.steps.push_back({wall, chamber, counts.b, counts.f, cross(counts.b, counts.f), next});
    value = std::move(next);
  }
  out.value = std::move(value);
  return out;
}

std::vector<CubeFace> canonical_path(int r) {
  if (r < 1) throw InputError("torus rank must be at least 1");
  std::vector<CubeFace> path;
  std::uint32_t free = 0;
  path.emplace_back(r, free, 0);
  for (int i = 0; i < r; ++i) {
    free |= 1U << i;
    path.emplace_back(r, free, 0);
  }
  return path;
}

std::vector<std::vector<CubeFace>> all_ascending_paths(int r) {
  if (r < 1) throw InputError("torus rank must be at least 1");
  if (r > kMaxExhaustiveRank)
    throw CapabilityError("exhaustive path enumeration is capped at rank " + std::to_string(kMaxExhaustiveRank));
  std::vector<std::vector<CubeFace>> out;
  for (std::uint32_t v = 0; v < (1U << r); ++v) {
    std::vector<int> order(static_cast<std::size_t>(r));
    std::iota(order.begin(), order.end(), 0);
    do {
      std::vector<CubeFace> path;
      std::uint32_t free = 0;
      path.emplace_back(r, free, v);
      for (int i : order) {
        free |= 1U << i;
        path.emplace_back(r, free, v);
      }
      out.push_back(std::move(path));
    } while (std::next_permutation(order.begin(), order.end()));
  }
  return out;
}

std::uint64_t PathSampler::below(std::uint64_t n) {
  if (n == 0) throw InputError("empty sampling range");
  // Reject the (2^64 mod n) lowest outputs so every residue is equally likely.
  const std::uint64_t threshold = (0 - n) % n;
  for (;;) {
    const std::uint64_t x = rng_();
    if (x >= threshold) return x % n;
  }
}

std::vector<CubeFace> PathSampler::next(int r) {
  const auto vertex = static_cast<std::uint32_t>(below(std::uint64_t{1} << r));
  std::vector<int> order(static_cast<std::size_t>(r));
  std::iota(order.begin(), order.end(), 0);
  for (std::size_t i = order.size(); i-- > 1;) std::swap(order[i], order[below(i + 1)]);

  std::vector<CubeFace> path;
  std::uint32_t free = 0;
  path.emplace_back(r, free, vertex);
  for (int i : order) {
    free |= 1U << i;
    path.emplace_back(r, free, vertex);
  }
  return path;
}

std::vector<std::vector<CubeFace>> random_paths(int r, std::size_t trials, std::uint64_t seed) {
  if (r < 1) throw InputError("torus rank must be at least 1");
  PathSampler sampler(seed);
  std::vector<std::vector<CubeFace>> out;
  out.reserve(trials);
  for (std::size_t t = 0; t < trials; ++t) out.push_back(sampler.next(r));
  return out;
}

template <class Ring>
std::vector<WalkResult<Ring>> walk_paths_serial(const SignMatrix& a,
                                                const std::vector<std::vector<CubeFace>>& paths,
                                                const CrossingFunction<Ring>& cross) {
  std::vector<WalkResult<Ring>> out;
  out.reserve(paths.size());
  for (const auto& p : paths) out.push_back(walk<Ring>(a, p, cross));
  return out;
}

template <class Ring>
std::vector<WalkResult<Ring>> walk_paths(const SignMatrix& a, const std::vector<std::vector<CubeFace>>& paths,
                                         const CrossingFunction<Ring>& cross) {
  std::vector<WalkResult<Ring>> out(paths.size());
  CrossingCache cache(a);
  const auto n = static_cast<long long>(paths.size());
#pragma omp parallel for schedule(dynamic)
  for (long long t = 0; t < n; ++t) {
    const auto i = static_cast<std::size_t>(t);
    out[i] = walk<Ring>(a, paths[i], cross, &cache);
  }
  return out;
}

template <class Ring>
std::vector<Ring> walk_random_paths(int r, std::size_t trials, std::uint64_t seed,
                                    const CrossingFunction<Ring>& cross) {
  if (trials == 0) return {};
  const auto a = SignMatrix::canonical(r);
  auto results = walk_paths<Ring>(a, random_paths(r, trials, seed), cross);
  std::vector<Ring> out;
  out.reserve(results.size());
  for (auto& res : results) out.push_back(std::move(res.value));
  return out;
}

#define CUBEWALL_INSTANTIATE(Ring)                                                                          \
  template WalkResult<Ring> walk<Ring>(const SignMatrix&, std::span<const CubeFace>,                       \
                                       const CrossingFunction<Ring>&, CrossingCache*);                     \
  template std::vector<WalkResult<Ring>> walk_paths<Ring>(                                                 \
      const SignMatrix&, const std::vector<std::vector<CubeFace>>&, const CrossingFunction<Ring>&);        \
  template std::vector<WalkResult<Ring>> walk_paths_serial<Ring>(                                          \
      const SignMatrix&, const std::vector<std::vector<CubeFace>>&, const CrossingFunction<Ring>&);        \
  template std::vector<Ring> walk_random_paths<Ring>(int, std::size_t, std::uint64_t,                      \
                                                     const CrossingFunction<Ring>&);

CUBEWALL_INSTANTIATE(Polynomial)
CUBEWALL_INSTANTIATE(BigInt)

#undef CUBEWALL_INSTANTIATE

}  // namespace cubewall
