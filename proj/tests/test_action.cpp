#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "cubewall/action.hpp"
#include "cubewall/errors.hpp"

namespace cubewall {
namespace {

using Weights = std::vector<std::vector<int>>;

Weights entries_of(const std::vector<WeightVector>& ws) {
  Weights out;
  for (const auto& w : ws) out.push_back(w.entries);
  return out;
}

// Primitive, sign-normalized representative of the line through w.
std::vector<int> line_key(std::vector<int> w) {
  int g = 0;
  for (int e : w) g = std::gcd(g, e);
  auto lead = std::find_if(w.begin(), w.end(), [](int e) { return e != 0; });
  if (lead != w.end() && *lead < 0) g = -g;
  for (int& e : w) e /= g;
  return w;
}

TEST(SignMatrix, RankOneAndTwo) {
  const auto a1 = build_sign_matrix(1);
  ASSERT_EQ(a1.num_columns(), 2u);
  EXPECT_EQ(a1.column(0).to_vector(), std::vector<int>{1});
  EXPECT_EQ(a1.column(1).to_vector(), std::vector<int>{-1});

  const auto a2 = build_sign_matrix(2);
  std::set<std::vector<int>> cols;
  for (const auto& c : a2.columns()) cols.insert(c.to_vector());
  EXPECT_EQ(cols, (std::set<std::vector<int>>{{1, 1}, {1, -1}, {-1, 1}, {-1, -1}}));
  // Bit i of the column index is the sign of coordinate i.
  EXPECT_EQ(a2.column(1).to_vector(), (std::vector<int>{-1, 1}));
  EXPECT_EQ(a2.column(2).to_vector(), (std::vector<int>{1, -1}));
}

TEST(SignMatrix, RankThreeExhaustsSignVectors) {
  const auto a = build_sign_matrix(3);
  std::set<std::vector<int>> seen;
  for (const auto& c : a.columns()) seen.insert(c.to_vector());
  std::set<std::vector<int>> all;
  for (int x : {1, -1})
    for (int y : {1, -1})
      for (int z : {1, -1}) all.insert({x, y, z});
  EXPECT_EQ(seen, all);
  EXPECT_TRUE(a.is_complete());
}

TEST(SignMatrix, RankLimits) {
  EXPECT_THROW(build_sign_matrix(0), InputError);
  EXPECT_THROW(build_sign_matrix(kMaxMatrixRank + 1), CapabilityError);
  EXPECT_EQ(build_sign_matrix(kMaxMatrixRank).num_columns(), std::size_t{1} << kMaxMatrixRank);
}

TEST(FixedPoints, OnePerColumn) {
  EXPECT_EQ(fixed_points(build_sign_matrix(1)).size(), 2u);
  EXPECT_EQ(fixed_points(build_sign_matrix(2)).size(), 4u);
  EXPECT_EQ(fixed_points(build_sign_matrix(3)).size(), 8u);
  for (int r = 1; r <= 8; ++r) {
    const auto a = build_sign_matrix(r);
    const auto pts = fixed_points(a);
    ASSERT_EQ(pts.size(), std::size_t{1} << r);
    for (const auto& p : pts) EXPECT_EQ(p.signs, a.column(p.index));
  }
}

TEST(FixedPoints, RepeatedColumnsAreRejected) {
  const auto bad = SignMatrix::from_columns(2, {{1, 1}, {1, -1}, {1, 1}, {-1, -1}});
  EXPECT_FALSE(bad.is_complete());
  EXPECT_THROW(fixed_points(bad), InvariantError);
  EXPECT_THROW(SignMatrix::from_columns(2, {{1, 1}, {1, -1}}), InputError);
  EXPECT_THROW(SignMatrix::from_columns(2, {{1, 1}, {1, 0}, {-1, 1}, {-1, -1}}), InputError);
}

TEST(Moment, VertexImagesAndOrigin) {
  const auto a = build_sign_matrix(2);
  for (std::size_t j = 0; j < a.num_columns(); ++j) {
    std::vector<Rational> amp(4, Rational(0));
    amp[j] = 1;
    const auto mu = moment_of_state(a, amp);
    for (int i = 0; i < 2; ++i) EXPECT_EQ(mu[static_cast<std::size_t>(i)], Rational(a.entry(i, j), 2));
  }
  for (int r = 1; r <= 6; ++r) {
    const auto ar = build_sign_matrix(r);
    std::vector<Rational> uniform(ar.num_columns(), Rational(1, static_cast<long long>(ar.num_columns())));
    for (const auto& x : moment_of_state(ar, uniform)) EXPECT_EQ(x, 0);
  }
}

TEST(Moment, HalfAndHalfOnTwoColumns) {
  const auto a = build_sign_matrix(2);
  // Columns 0 and 2 are (1,1) and (1,-1).
  const std::vector<Rational> amp{Rational(1, 2), 0, Rational(1, 2), 0};
  const auto mu = moment_of_state(a, amp);
  EXPECT_EQ(mu[0], Rational(1, 2));
  EXPECT_EQ(mu[1], 0);
}

TEST(Moment, RejectsBadAmplitudes) {
  const auto a = build_sign_matrix(2);
  EXPECT_THROW(moment_of_state(a, std::vector<Rational>{1, 0, 0}), InputError);
  EXPECT_THROW(moment_of_state(a, std::vector<Rational>{Rational(1, 2), 0, 0, 0}), InputError);
  EXPECT_THROW(moment_of_state(a, std::vector<Rational>{2, -1, 0, 0}), InputError);
}

TEST(MomentProperty, RandomStatesStayInCube) {
  std::mt19937_64 rng(31337);
  std::uniform_int_distribution<long long> weight(0, 50);
  for (int r = 1; r <= 5; ++r) {
    const auto a = build_sign_matrix(r);
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<long long> raw(a.num_columns());
      long long total = 0;
      for (auto& x : raw) total += (x = weight(rng));
      if (total == 0) continue;
      std::vector<Rational> amp;
      for (auto x : raw) amp.emplace_back(x, total);
      for (const auto& m : moment_of_state(a, amp)) {
        ASSERT_LE(m, Rational(1, 2));
        ASSERT_GE(m, Rational(-1, 2));
      }
    }
  }
}

TEST(Isotropy, RankTwoAtAllPlusVertex) {
  const auto a = build_sign_matrix(2);
  const auto w = entries_of(isotropy_weights(a, fixed_points(a)[0]));
  EXPECT_EQ(w, (Weights{{-2, 0}, {0, -2}, {-2, -2}}));
  const std::set<std::vector<int>> as_set(w.begin(), w.end());
  EXPECT_EQ(as_set, (std::set<std::vector<int>>{{0, -2}, {-2, 0}, {-2, -2}}));
}

TEST(Isotropy, RankOne) {
  const auto a = build_sign_matrix(1);
  EXPECT_EQ(entries_of(isotropy_weights(a, fixed_points(a)[0])), (Weights{{-2}}));
}

TEST(Isotropy, ExhaustiveShapeUpToRankEight) {
  for (int r = 1; r <= 8; ++r) {
    const auto a = build_sign_matrix(r);
    for (const auto& p : fixed_points(a)) {
      const auto ws = isotropy_weights(a, p);
      ASSERT_EQ(ws.size(), a.num_columns() - 1);
      for (const auto& w : ws) {
        ASSERT_FALSE(w.is_zero());
        for (int e : w.entries) ASSERT_TRUE(e == -2 || e == 0 || e == 2);
      }
    }
  }
}

TEST(Isotropy, AntipodalPointHasNegatedWeights) {
  for (int r = 1; r <= 6; ++r) {
    const auto a = build_sign_matrix(r);
    const auto pts = fixed_points(a);
    for (const auto& p : pts) {
      const auto& q = pts[p.signs.negated().negative_mask()];
      ASSERT_EQ(q.signs, p.signs.negated());
      auto wp = isotropy_weights(a, p);
      std::multiset<WeightVector> neg_wp;
      for (const auto& w : wp) neg_wp.insert(-w);
      const auto wq = isotropy_weights(a, q);
      ASSERT_EQ(neg_wp, std::multiset<WeightVector>(wq.begin(), wq.end()));
    }
  }
}

TEST(Gkm, SmallRanks) {
  const auto r1 = gkm_report(build_sign_matrix(1));
  EXPECT_EQ(r1.total_parallel_pairs, 0u);
  EXPECT_TRUE(r1.pairwise_independent);

  const auto r2 = gkm_report(build_sign_matrix(2));
  EXPECT_TRUE(r2.points[0].parallel_pairs.empty());
  EXPECT_EQ(r2.points[0].directions.size(), 3u);
}

TEST(Gkm, MatchesLineKeyOracleUpToRankFive) {
  for (int r = 1; r <= 5; ++r) {
    const auto a = build_sign_matrix(r);
    const auto report = gkm_report(a);
    std::size_t oracle_pairs = 0;
    for (const auto& p : fixed_points(a)) {
      std::map<std::vector<int>, std::size_t> lines;
      for (const auto& w : isotropy_weights(a, p)) ++lines[line_key(w.entries)];
      for (const auto& [key, n] : lines) oracle_pairs += n * (n - 1) / 2;
    }
    EXPECT_EQ(report.total_parallel_pairs, oracle_pairs) << "r=" << r;
    // Every fixed point sees 2^r - 1 distinct rays, one weight each.
    EXPECT_EQ(oracle_pairs, 0u) << "r=" << r;
    for (const auto& pt : report.points) EXPECT_EQ(pt.max_multiplicity, 1u);
  }
}

TEST(Gkm, ParallelPredicate) {
  EXPECT_TRUE(parallel({{2, -2, 0}}, {{-2, 2, 0}}));
  EXPECT_FALSE(parallel({{2, 0}}, {{2, 2}}));
  EXPECT_EQ(primitive_direction({{-2, 0, 2}}).entries, (std::vector<int>{-1, 0, 1}));
}

}  // namespace
}  // namespace cubewall
