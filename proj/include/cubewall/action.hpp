#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "cubewall/numeric.hpp"

namespace cubewall {

/// Largest torus rank for which the 2^r sign columns are materialized.
inline constexpr int kMaxMatrixRank = 20;

/// A vector in {-1,+1}^r, packed as a mask of the negative coordinates.
class SignVector {
 public:
  SignVector() = default;
  SignVector(int rank, std::uint32_t negative_mask) : rank_(rank), neg_(negative_mask) {}
  static SignVector from_signs(std::span<const int> signs);

  int rank() const { return rank_; }
  std::uint32_t negative_mask() const { return neg_; }
  int sign(int coord) const { return (neg_ >> coord) & 1U ? -1 : 1; }
  SignVector negated() const { return {rank_, neg_ ^ ((1U << rank_) - 1U)}; }
  std::vector<int> to_vector() const;

  friend bool operator==(const SignVector&, const SignVector&) = default;

 private:
  int rank_ = 0;
  std::uint32_t neg_ = 0;
};

/// Integer weight of the torus; entries lie in {-2, 0, 2} for this action.
struct WeightVector {
  std::vector<int> entries;

  bool is_zero() const;
  WeightVector operator-() const;
  friend bool operator==(const WeightVector&, const WeightVector&) = default;
  friend auto operator<=>(const WeightVector&, const WeightVector&) = default;
};

/**
 * The r x 2^r matrix of exponents of the torus action on C^(2^r).
 *
 * Column j of the canonical matrix has coordinate i equal to -1 exactly when
 * bit i of j is set. Columns are the weights of the representation, and half
 * of column j is the moment image of the j-th coordinate point.
 */
class SignMatrix {
 public:
  /// Canonical matrix; throws InputError for r < 1, CapabilityError past kMaxMatrixRank.
  static SignMatrix canonical(int r);
  /// Arbitrary column list; checks shape and entries but not distinctness.
  static SignMatrix from_columns(int r, const std::vector<std::vector<int>>& columns);

  int rank() const { return rank_; }
  std::size_t num_columns() const { return columns_.size(); }
  const SignVector& column(std::size_t j) const { return columns_[j]; }
  std::span<const SignVector> columns() const { return columns_; }
  int entry(int row, std::size_t col) const { return columns_[col].sign(row); }

  /// All columns distinct and together exhausting {-1,+1}^r.
  bool is_complete() const;

 private:
  SignMatrix(int r, std::vector<SignVector> cols) : rank_(r), columns_(std::move(cols)) {}
  int rank_ = 0;
  std::vector<SignVector> columns_;
};

SignMatrix build_sign_matrix(int r);

/// The coordinate point [0:...:1:...:0] with the 1 at `index`.
struct FixedPoint {
  std::size_t index = 0;
  SignVector signs;
};

/// One fixed point per column. Throws InvariantError when two columns
/// coincide, since then the fixed points are no longer isolated.
std::vector<FixedPoint> fixed_points(const SignMatrix& a);

/// 1/2 * sum_j amplitudes[j] * column_j. Amplitudes are the squared moduli
/// |z_j|^2 of a normalized state: nonnegative with exact sum 1.
std::vector<Rational> moment_of_state(const SignMatrix& a, std::span<const Rational> amplitudes);

/// Weights column_k - column_j for k != j, in column order.
std::vector<WeightVector> isotropy_weights(const SignMatrix& a, const FixedPoint& p);

/// Two integer vectors are parallel over Q iff every 2x2 minor vanishes.
bool parallel(const WeightVector& u, const WeightVector& v);
/// Divide by the gcd of the entries, keeping the sign (so opposite rays stay distinct).
WeightVector primitive_direction(const WeightVector& w);

struct ParallelPair {
  std::size_t first = 0;  ///< column index
  std::size_t second = 0;
  friend bool operator==(const ParallelPair&, const ParallelPair&) = default;
};

struct DirectionMultiplicity {
  WeightVector direction;
  std::size_t multiplicity = 0;
};

struct FixedPointGkm {
  std::size_t index = 0;
  std::vector<ParallelPair> parallel_pairs;
  std::vector<DirectionMultiplicity> directions;  ///< sorted by direction
  std::size_t max_multiplicity = 0;
};

struct GkmReport {
  int r = 0;
  std::vector<FixedPointGkm> points;
  std::size_t total_parallel_pairs = 0;
  /// True when no fixed point has a pair of parallel isotropy weights.
  bool pairwise_independent = true;
};

/// Parallel over fixed points.
GkmReport gkm_report(const SignMatrix& a);
GkmReport gkm_report_serial(const SignMatrix& a);

/// Aggregate sanity scan of all isotropy weights.
struct IsotropySummary {
  std::size_t fixed_points = 0;
  std::size_t weights = 0;
  std::size_t zero_weights = 0;
  std::size_t bad_entries = 0;      ///< entries outside {-2, 0, 2}
  std::size_t short_lists = 0;      ///< points whose list is not 2^r - 1 long
  bool ok() const { return zero_weights == 0 && bad_entries == 0 && short_lists == 0; }
  friend bool operator==(const IsotropySummary&, const IsotropySummary&) = default;
};

IsotropySummary summarize_isotropy(const SignMatrix& a);
IsotropySummary summarize_isotropy_serial(const SignMatrix& a);

}  // namespace cubewall
