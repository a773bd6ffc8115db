#include <algorithm>
#include <set>

#include <gtest/gtest.h>

#include "cubewall/errors.hpp"
#include "cubewall/xray.hpp"

namespace cubewall {
namespace {

// Rank over Q by plain Gaussian elimination on rationals.
int rational_rank(std::vector<std::vector<Rational>> m) {
  int rank = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols; ++c) {
    auto pivot = std::find_if(m.begin() + rank, m.end(), [c](const auto& row) { return row[c] != 0; });
    if (pivot == m.end()) continue;
    std::iter_swap(m.begin() + rank, pivot);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == static_cast<std::size_t>(rank) || m[i][c] == 0) continue;
      const Rational factor = m[i][c] / m[static_cast<std::size_t>(rank)][c];
      for (std::size_t k = 0; k < cols; ++k) m[i][k] -= factor * m[static_cast<std::size_t>(rank)][k];
    }
    ++rank;
  }
  return rank;
}

int oracle_affine_rank(const SignMatrix& a, const std::vector<std::size_t>& cols) {
  std::vector<std::vector<Rational>> diffs;
  for (std::size_t m = 1; m < cols.size(); ++m) {
    std::vector<Rational> d;
    for (int i = 0; i < a.rank(); ++i) d.emplace_back(a.entry(i, cols[m]) - a.entry(i, cols[0]));
    diffs.push_back(std::move(d));
  }
  return rational_rank(std::move(diffs));
}

// Every nonempty column subset that already contains its affine closure.
std::set<std::vector<std::size_t>> brute_force_flats(const SignMatrix& a) {
  std::set<std::vector<std::size_t>> out;
  const std::size_t n = a.num_columns();
  for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
    std::vector<std::size_t> cols;
    for (std::size_t j = 0; j < n; ++j)
      if ((mask >> j) & 1U) cols.push_back(j);
    const int rank = oracle_affine_rank(a, cols);
    bool closed = true;
    for (std::size_t q = 0; q < n && closed; ++q) {
      if ((mask >> q) & 1U) continue;
      auto ext = cols;
      ext.push_back(q);
      closed = oracle_affine_rank(a, ext) > rank;
    }
    if (closed) out.insert(cols);
  }
  return out;
}

CubeFace face(std::initializer_list<int> signs) {
  const std::vector<int> v(signs);
  return CubeFace::from_signs(v);
}

TEST(Faces, Counts) {
  EXPECT_EQ(enumerate_faces(1).size(), 3u);
  EXPECT_EQ(enumerate_faces(2).size(), 9u);
  EXPECT_EQ(enumerate_faces(3).size(), 27u);
  std::size_t expected = 1;
  for (int r = 1; r <= 8; ++r) {
    expected *= 3;
    EXPECT_EQ(enumerate_faces(r).size(), expected);
  }
  EXPECT_THROW(enumerate_faces(kMaxFaceRank + 1), CapabilityError);
  EXPECT_THROW(enumerate_faces(0), InputError);
}

TEST(Faces, OrderAndSquareBreakdown) {
  const auto faces = enumerate_faces(2);
  std::vector<int> dims;
  for (const auto& f : faces) dims.push_back(f.dim());
  EXPECT_EQ(dims, (std::vector<int>{0, 0, 0, 0, 1, 1, 1, 1, 2}));
  EXPECT_EQ(faces[0].signs(), (std::vector<int>{1, 1}));
  EXPECT_EQ(faces[1].signs(), (std::vector<int>{1, -1}));
  EXPECT_EQ(faces[4].signs(), (std::vector<int>{1, 0}));
  EXPECT_EQ(faces[8].signs(), (std::vector<int>{0, 0}));
}

TEST(Faces, LatticeClosedUnderSubfaces) {
  for (int r = 1; r <= 5; ++r) {
    const auto faces = enumerate_faces(r);
    const std::set<std::vector<int>> all = [&] {
      std::set<std::vector<int>> s;
      for (const auto& f : faces) s.insert(f.signs());
      return s;
    }();
    for (const auto& f : faces) {
      for (int c : f.free_coords()) {
        for (int s : {1, -1}) {
          auto sub = f.signs();
          sub[static_cast<std::size_t>(c)] = s;
          ASSERT_TRUE(all.count(sub));
          ASSERT_TRUE(f.contains(CubeFace::from_signs(sub)));
        }
      }
    }
  }
}

TEST(Strata, RankTwoHasElevenWithTwoDiagonals) {
  const auto a = build_sign_matrix(2);
  const auto strata = enumerate_strata(a);
  ASSERT_EQ(strata.size(), 11u);
  std::size_t points = 0, lines = 0, open = 0, diagonals = 0;
  for (const auto& s : strata) {
    EXPECT_EQ(s.stab_dim, 2 - s.moment_dim);
    if (s.moment_dim == 0) ++points;
    if (s.moment_dim == 1) {
      ++lines;
      // A diagonal joins antipodal columns.
      if (a.column(s.columns[0]).negated() == a.column(s.columns[1])) ++diagonals;
    }
    if (s.moment_dim == 2) {
      ++open;
      EXPECT_EQ(s.columns.size(), 4u);
      EXPECT_EQ(s.stab_dim, 0);
    }
  }
  EXPECT_EQ(points, 4u);
  EXPECT_EQ(lines, 6u);
  EXPECT_EQ(diagonals, 2u);
  EXPECT_EQ(open, 1u);
}

TEST(Strata, RankOne) {
  const auto strata = enumerate_strata(build_sign_matrix(1));
  ASSERT_EQ(strata.size(), 3u);
  EXPECT_EQ(strata[2].columns, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(strata[2].moment_vertices[0][0], Rational(1, 2));
}

TEST(Strata, MatchBruteForceFlatsUpToRankThree) {
  for (int r = 1; r <= 3; ++r) {
    const auto a = build_sign_matrix(r);
    std::set<std::vector<std::size_t>> got;
    for (const auto& s : enumerate_strata(a)) {
      got.insert(s.columns);
      EXPECT_EQ(s.moment_dim, oracle_affine_rank(a, s.columns));
    }
    EXPECT_EQ(got, brute_force_flats(a)) << "r=" << r;
  }
}

TEST(Strata, RankThreePairsAreLines) {
  const auto a = build_sign_matrix(3);
  for (const auto& s : enumerate_strata(a))
    if (s.columns.size() == 2) EXPECT_EQ(s.moment_dim, 1);
}

TEST(Strata, IncludeEveryCubeFace) {
  for (int r = 1; r <= 4; ++r) {
    const auto a = build_sign_matrix(r);
    std::set<std::vector<std::size_t>> got;
    for (const auto& s : enumerate_strata(a)) got.insert(s.columns);
    for (const auto& f : enumerate_faces(r)) EXPECT_TRUE(got.count(face_strata_columns(f, a)));
  }
}

TEST(Strata, CappedAtRankFour) {
  EXPECT_NO_THROW(enumerate_strata(build_sign_matrix(4)));
  EXPECT_THROW(enumerate_strata(build_sign_matrix(5)), CapabilityError);
}

TEST(FaceColumns, Examples) {
  const auto a2 = build_sign_matrix(2);
  EXPECT_EQ(face_strata_columns(face({1, 1}), a2), (std::vector<std::size_t>{0}));
  // Coordinate 0 pinned to +: columns (1,1) and (1,-1).
  EXPECT_EQ(face_strata_columns(face({1, 0}), a2), (std::vector<std::size_t>{0, 2}));
  const auto a3 = build_sign_matrix(3);
  EXPECT_EQ(face_strata_columns(face({0, -1, 0}), a3).size(), 4u);
}

TEST(NormalWeights, ExteriorEntryCounts) {
  const auto a2 = build_sign_matrix(2);
  EXPECT_EQ(normal_weight_signs(face({1, 1}), face({1, 0}), a2, EntrySide::exterior), (CrossingCounts{0, 1}));
  EXPECT_EQ(normal_weight_signs(face({1, 0}), face({0, 0}), a2, EntrySide::exterior), (CrossingCounts{0, 2}));
  const auto a3 = build_sign_matrix(3);
  EXPECT_EQ(normal_weight_signs(face({0, 0, -1}), face({0, 0, 0}), a3, EntrySide::exterior),
            (CrossingCounts{0, 4}));
}

TEST(NormalWeights, EveryIncidentPairFromOutside) {
  for (int r = 1; r <= 6; ++r) {
    const auto a = build_sign_matrix(r);
    const auto faces = enumerate_faces(r);
    for (const auto& outer : faces) {
      for (const auto& inner : faces) {
        if (outer.dim() != inner.dim() + 1 || !outer.contains(inner)) continue;
        const std::size_t n = std::size_t{1} << inner.dim();
        ASSERT_EQ(normal_weight_signs(inner, outer, a, EntrySide::exterior), (CrossingCounts{0, n}));
        ASSERT_EQ(normal_weight_signs(inner, outer, a, EntrySide::interior), (CrossingCounts{n, 0}));
      }
    }
  }
}

TEST(NormalWeights, RejectsNonIncidentFaces) {
  const auto a = build_sign_matrix(2);
  EXPECT_THROW(normal_weight_signs(face({1, 1}), face({-1, 0}), a, EntrySide::exterior), InputError);
  EXPECT_THROW(normal_weight_signs(face({1, 1}), face({0, 0}), a, EntrySide::exterior), InputError);
  EXPECT_THROW(normal_weight_signs(face({1, 0}), face({1, 1}), a, EntrySide::exterior), InputError);
}

TEST(InteriorWalls, SquareDiagonalsAreBalanced) {
  const auto a = build_sign_matrix(2);
  const auto walls = interior_walls(a);
  ASSERT_EQ(walls.size(), 2u);
  Stratum diag, anti;
  for (const auto& w : walls) (w.columns == std::vector<std::size_t>{0, 3} ? diag : anti) = w;
  ASSERT_EQ(diag.columns, (std::vector<std::size_t>{0, 3}));  // (1,1), (-1,-1)
  ASSERT_EQ(anti.columns, (std::vector<std::size_t>{1, 2}));  // (-1,1), (1,-1)
  EXPECT_EQ(interior_wall_signs(diag, std::vector<Rational>{1, -1}, a), (CrossingCounts{1, 1}));
  EXPECT_EQ(interior_wall_signs(anti, std::vector<Rational>{1, 1}, a), (CrossingCounts{1, 1}));
  EXPECT_EQ(wall_normal(diag, a), (std::vector<Rational>{1, -1}));
  EXPECT_EQ(wall_normal(anti, a), (std::vector<Rational>{1, 1}));
}

TEST(InteriorWalls, InvalidCrossings) {
  const auto a1 = build_sign_matrix(1);
  const auto open = enumerate_strata(a1).back();
  EXPECT_THROW(interior_wall_signs(open, std::vector<Rational>{1}, a1), InputError);

  const auto a2 = build_sign_matrix(2);
  const auto diag = interior_walls(a2).front();
  EXPECT_THROW(interior_wall_signs(diag, std::vector<Rational>{0, 0}, a2), InputError);
  EXPECT_THROW(interior_wall_signs(diag, std::vector<Rational>{1, 0}, a2), InputError);
}

// Rank 3 has two kinds of interior wall: the six planes x_i = +-x_k through
// four vertices, which are balanced, and the eight planes cutting off a
// corner through three vertices, which are not.
TEST(InteriorWalls, RankThreeWallKinds) {
  const auto a = build_sign_matrix(3);
  const auto walls = interior_walls(a);
  ASSERT_EQ(walls.size(), 14u);
  std::size_t balanced = 0, corner = 0;
  for (const auto& w : walls) {
    const auto n = wall_normal(w, a);
    const auto c = interior_wall_signs(w, n, a);
    EXPECT_EQ(c.b + c.f, 8 - w.columns.size());
    if (w.columns.size() == 4) {
      EXPECT_EQ(c, (CrossingCounts{2, 2}));
      ++balanced;
    } else {
      ASSERT_EQ(w.columns.size(), 3u);
      EXPECT_TRUE((c == CrossingCounts{4, 1}) || (c == CrossingCounts{1, 4}));
      // Reversing the direction swaps the roles.
      std::vector<Rational> back;
      for (const auto& x : n) back.push_back(-x);
      EXPECT_EQ(interior_wall_signs(w, back, a), (CrossingCounts{c.f, c.b}));
      ++corner;
    }
  }
  EXPECT_EQ(balanced, 6u);
  EXPECT_EQ(corner, 8u);
}

TEST(InteriorWalls, BalancedUpToRankThree) {
  for (int r = 2; r <= 3; ++r) {
    const auto a = build_sign_matrix(r);
    for (const auto& w : interior_walls(a)) {
      const auto c = interior_wall_signs(w, wall_normal(w, a), a);
      EXPECT_EQ(c.b, c.f) << "r=" << r << " wall of " << w.columns.size() << " columns";
    }
  }
}

}  // namespace
}  // namespace cubewall
