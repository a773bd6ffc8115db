#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "cubewall/action.hpp"
#include "cubewall/numeric.hpp"

namespace cubewall {

/// Largest rank for which all 3^r cube faces are listed.
inline constexpr int kMaxFaceRank = 12;
/// Largest rank for full stratum (affine flat) enumeration.
inline constexpr int kMaxStrataRank = 4;

/**
 * A face of the cube [-1/2, 1/2]^r.
 *
 * Free coordinates range over the whole interval; every other coordinate is
 * pinned to sign(i)/2. The relative interior of a face is also the sub-chamber
 * the hypercube recursion assigns a value to.
 */
class CubeFace {
 public:
  CubeFace() = default;
  /// `negative_mask` bits on free coordinates are ignored.
  CubeFace(int rank, std::uint32_t free_mask, std::uint32_t negative_mask);
  static CubeFace vertex(const SignVector& v);
  static CubeFace interior(int rank);
  /// +1 / -1 for pinned coordinates, 0 for free ones.
  static CubeFace from_signs(std::span<const int> signs);

  int rank() const { return rank_; }
  int dim() const;
  std::uint32_t free_mask() const { return free_; }
  std::uint32_t negative_mask() const { return neg_; }
  bool is_free(int coord) const { return (free_ >> coord) & 1U; }
  /// 0 when the coordinate is free.
  int fixed_sign(int coord) const;
  std::vector<int> signs() const;
  std::vector<int> free_coords() const;

  /// True when `sub` lies in the closure of this face.
  bool contains(const CubeFace& sub) const;
  /// True when the sign vector is a vertex of this face.
  bool has_vertex(const SignVector& v) const;

  friend bool operator==(const CubeFace&, const CubeFace&) = default;

 private:
  int rank_ = 0;
  std::uint32_t free_ = 0;
  std::uint32_t neg_ = 0;
};

/// All 3^r faces, by dimension, then lexicographically on the per-coordinate
/// pattern with + < - < free and coordinate 0 most significant.
std::vector<CubeFace> enumerate_faces(int r);

/**
 * Closure of one orbit-type stratum: the coordinate subspace spanned by a set
 * of columns that is closed under affine span. Its moment image is the convex
 * hull of half of those columns.
 */
struct Stratum {
  std::vector<std::size_t> columns;  ///< ascending
  int moment_dim = 0;
  int stab_dim = 0;
  std::vector<std::vector<Rational>> moment_vertices;
};

/// Dimension of the affine span of the given columns; -1 for an empty set.
int affine_rank(const SignMatrix& a, std::span<const std::size_t> columns);

/// Every nonempty affinely closed column set, ordered by moment_dim then by
/// column list. Throws CapabilityError past kMaxStrataRank.
std::vector<Stratum> enumerate_strata(const SignMatrix& a);

/// Columns whose sign vector is a vertex of the face, ascending.
std::vector<std::size_t> face_strata_columns(const CubeFace& face, const SignMatrix& a);

/// Number of normal weights pointing backward / forward along a crossing.
struct CrossingCounts {
  std::size_t b = 0;
  std::size_t f = 0;
  friend bool operator==(const CrossingCounts&, const CrossingCounts&) = default;
};

/// Which side of a boundary face a crossing enters from, measured along the
/// one axis that is free in the outer face but pinned in the inner face.
enum class EntrySide {
  exterior,  ///< from outside the outer face, moving inward
  interior,  ///< from inside the outer face, moving outward
};

/**
 * Projects the normal weights of `inner`'s stratum inside `outer`'s stratum
 * onto the crossing axis. Weights are column_l - column_j for l in outer but
 * not inner, with j the lowest inner column; forward means along the
 * direction of travel. Throws InputError unless inner is a facet of outer.
 */
CrossingCounts normal_weight_signs(const CubeFace& inner, const CubeFace& outer, const SignMatrix& a,
                                   EntrySide side);

/**
 * Crossing of a codimension-one stratum in the direction `normal`. The normal
 * must vanish on the wall's linear span. Weights column_l - column_j (l off
 * the wall, j its lowest column) project positive for forward, negative for
 * backward, counted with multiplicity.
 */
CrossingCounts interior_wall_signs(const Stratum& wall, std::span<const Rational> normal,
                                   const SignMatrix& a);

/// Primitive integer normal of a codimension-one stratum, first nonzero entry positive.
std::vector<Rational> wall_normal(const Stratum& wall, const SignMatrix& a);

/// Codimension-one strata that are not cube facets (their moment image
/// meets the open cube), e.g. the diagonals of the square.
std::vector<Stratum> interior_walls(const SignMatrix& a);

}  // namespace cubewall
