#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <shared_mutex>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cubewall/action.hpp"
#include "cubewall/numeric.hpp"
#include "cubewall/poly.hpp"
#include "cubewall/xray.hpp"

namespace cubewall {

/// (t^(2b) - t^(2f)) / (1 - t^2), expanded.
Polynomial poincare_crossing(std::size_t b, std::size_t f);

/// Euler-characteristic jump, f - b. This is poincare_crossing at t = -1.
BigInt euler_crossing(std::size_t b, std::size_t f);

/// The wall-crossing function of a recursive invariant with values in `Ring`,
/// plus the invariant's value on a point quotient (a vertex of the cube).
template <class Ring>
struct CrossingFunction {
  std::string name;
  Ring (*apply)(std::size_t b, std::size_t f) = nullptr;
  Ring vertex_value{};

  Ring operator()(std::size_t b, std::size_t f) const { return apply(b, f); }
};

CrossingFunction<Polynomial> poincare_invariant();
CrossingFunction<BigInt> euler_invariant();

/// One principal subwall term of a crossing: the subwall's own invariant and
/// its normal weight counts.
template <class Ring>
struct SubwallTerm {
  Ring wall_value;
  std::size_t b = 0;
  std::size_t f = 0;
};

/// prev + sum_k C(b_k, f_k) * I(subwall_k).
template <class Ring>
Ring recursive_step(const Ring& prev, std::span<const SubwallTerm<Ring>> subwalls,
                    const CrossingFunction<Ring>& cross) {
  Ring out = prev;
  for (const auto& s : subwalls) out += cross(s.b, s.f) * s.wall_value;
  return out;
}

/// Single-subwall form; with prev = 0 this is the boundary condition.
template <class Ring>
Ring recursive_step(const Ring& prev, const Ring& wall_value, std::size_t b, std::size_t f,
                    const CrossingFunction<Ring>& cross) {
  const SubwallTerm<Ring> term{wall_value, b, f};
  return recursive_step<Ring>(prev, std::span<const SubwallTerm<Ring>>(&term, 1), cross);
}

/// A crossing from outside `chamber` (where the invariant is zero) through
/// its facet `wall` into the relative interior of `chamber`.
template <class Ring>
struct CrossingStep {
  CubeFace wall;
  CubeFace chamber;
  std::size_t b = 0;
  std::size_t f = 0;
  Ring factor;   ///< C(b, f)
  Ring running;  ///< invariant of `chamber` after the crossing
};

template <class Ring>
struct Trace {
  Ring start;  ///< invariant at the starting vertex
  std::vector<CrossingStep<Ring>> steps;
};

template <class Ring>
struct WalkResult {
  Ring value;
  Trace<Ring> trace;
};

/**
 * Write-once cache of crossing counts keyed by (wall, chamber).
 *
 * Safe to share between threads; concurrent inserts for a key store equal
 * values, so whichever lands first wins.
 */
class CrossingCache {
 public:
  explicit CrossingCache(const SignMatrix& a) : a_(a) {}
  CrossingCounts exterior_counts(const CubeFace& wall, const CubeFace& chamber);
  std::size_t size() const;

 private:
  using Key = std::pair<std::uint64_t, std::uint64_t>;
  const SignMatrix& a_;
  mutable std::shared_mutex mu_;
  std::map<Key, CrossingCounts> table_;
};

/// Throws InputError unless the path is a full chain vertex -> ... -> interior.
void validate_path(int r, std::span<const CubeFace> path);

/// Walks from the starting vertex up the chain. Each step crosses from the
/// exterior of the next face through the previous one; counts come from
/// normal_weight_signs, never from a formula.
template <class Ring>
WalkResult<Ring> walk(const SignMatrix& a, std::span<const CubeFace> path, const CrossingFunction<Ring>& cross,
                      CrossingCache* cache = nullptr);

template <class Ring>
WalkResult<Ring> walk(int r, std::span<const CubeFace> path, const CrossingFunction<Ring>& cross) {
  return walk(SignMatrix::canonical(r), path, cross);
}

/// All-plus vertex, then free coordinates 0, 1, ..., r-1 in order.
std::vector<CubeFace> canonical_path(int r);

/// Every chain vertex -> ... -> interior: 2^r * r! of them. Capped at r <= 5.
std::vector<std::vector<CubeFace>> all_ascending_paths(int r);

/// Path sampler on std::mt19937_64. The engine is fully specified by the C++
/// standard; bounded draws use rejection sampling rather than
/// std::uniform_int_distribution so the sequence is identical everywhere.
class PathSampler {
 public:
  explicit PathSampler(std::uint64_t seed) : rng_(seed) {}
  /// Uniform over all 2^r * r! chains.
  std::vector<CubeFace> next(int r);
  /// Uniform in [0, n).
  std::uint64_t below(std::uint64_t n);

 private:
  std::mt19937_64 rng_;
};

std::vector<std::vector<CubeFace>> random_paths(int r, std::size_t trials, std::uint64_t seed);

/// Walks every path; OpenMP-parallel over paths, sharing one CrossingCache.
template <class Ring>
std::vector<WalkResult<Ring>> walk_paths(const SignMatrix& a, const std::vector<std::vector<CubeFace>>& paths,
                                         const CrossingFunction<Ring>& cross);
template <class Ring>
std::vector<WalkResult<Ring>> walk_paths_serial(const SignMatrix& a,
                                                const std::vector<std::vector<CubeFace>>& paths,
                                                const CrossingFunction<Ring>& cross);

/// Final values of `trials` walks along seeded random chains.
template <class Ring>
std::vector<Ring> walk_random_paths(int r, std::size_t trials, std::uint64_t seed,
                                    const CrossingFunction<Ring>& cross);

}  // namespace cubewall
