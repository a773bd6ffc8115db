#include "cubewall/xray.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <numeric>
#include <set>
#include <string>

#include "cubewall/errors.hpp"

namespace cubewall {

namespace {

using Matrix = std::vector<std::vector<long long>>;

// Row-reduces in place over the integers (rows rescaled by gcd to stay small).
int integer_rank(Matrix m) {
  if (m.empty()) return 0;
  const std::size_t cols = m.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < m.size() && m[pivot][c] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[rank], m[pivot]);
    for (std::size_t i = rank + 1; i < m.size(); ++i) {
      if (m[i][c] == 0) continue;
      const long long p = m[rank][c];
      const long long q = m[i][c];
      long long g = 0;
      for (std::size_t k = 0; k < cols; ++k) {
        m[i][k] = m[i][k] * p - m[rank][k] * q;
        g = std::gcd(g, m[i][k]);
      }
      if (g > 1)
        for (auto& x : m[i]) x /= g;
    }
    ++rank;
  }
  return static_cast<int>(rank);
}

// Bareiss fraction-free determinant.
long long determinant(Matrix m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  long long sign = 1;
  long long prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

std::vector<long long> column_difference(const SignMatrix& a, std::size_t l, std::size_t j) {
  std::vector<long long> d(static_cast<std::size_t>(a.rank()));
  for (int i = 0; i < a.rank(); ++i) d[static_cast<std::size_t>(i)] = a.entry(i, l) - a.entry(i, j);
  return d;
}

std::vector<std::size_t> mask_columns(std::uint32_t mask) {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; mask != 0; ++j, mask >>= 1)
    if (mask & 1U) out.push_back(j);
  return out;
}

std::uint32_t affine_closure(const SignMatrix& a, std::uint32_t mask) {
  auto cols = mask_columns(mask);
  const int rank = affine_rank(a, cols);
  std::uint32_t closed = mask;
  for (std::size_t q = 0; q < a.num_columns(); ++q) {
    if ((mask >> q) & 1U) continue;
    cols.push_back(q);
    if (affine_rank(a, cols) == rank) closed |= 1U << q;
    cols.pop_back();
  }
  return closed;
}

Stratum make_stratum(const SignMatrix& a, std::uint32_t mask) {
  Stratum s;
  s.columns = mask_columns(mask);
  s.moment_dim = affine_rank(a, s.columns);
  s.stab_dim = a.rank() - s.moment_dim;
  for (std::size_t j : s.columns) {
    std::vector<Rational> v;
    for (int i = 0; i < a.rank(); ++i) v.emplace_back(Rational(a.entry(i, j), 2));
    s.moment_vertices.push_back(std::move(v));
  }
  return s;
}

Rational dot(std::span<const Rational> n, const std::vector<long long>& w) {
  Rational acc = 0;
  for (std::size_t i = 0; i < w.size(); ++i) acc += n[i] * w[i];
  return acc;
}

}  // namespace

CubeFace::CubeFace(int rank, std::uint32_t free_mask, std::uint32_t negative_mask)
    : rank_(rank), free_(free_mask), neg_(negative_mask & ~free_mask) {
  const std::uint32_t all = rank >= 32 ? ~0U : (1U << rank) - 1U;
  if (rank < 1 || (free_mask & ~all) || (negative_mask & ~all))
    throw InputError("cube face masks do not fit rank " + std::to_string(rank));
}

CubeFace CubeFace::vertex(const SignVector& v) { return {v.rank(), 0, v.negative_mask()}; }

CubeFace CubeFace::interior(int rank) { return {rank, (1U << rank) - 1U, 0}; }

CubeFace CubeFace::from_signs(std::span<const int> signs) {
  std::uint32_t free = 0, neg = 0;
  for (std::size_t i = 0; i < signs.size(); ++i) {
    if (signs[i] == 0) {
      free |= 1U << i;
    } else if (signs[i] == -1) {
      neg |= 1U << i;
    } else if (signs[i] != 1) {
      throw InputError("face sign pattern entries must be -1, 0 or +1");
    }
  }
  return {static_cast<int>(signs.size()), free, neg};
}

int CubeFace::dim() const { return std::popcount(free_); }

int CubeFace::fixed_sign(int coord) const {
  if (is_free(coord)) return 0;
  return (neg_ >> coord) & 1U ? -1 : 1;
}

std::vector<int> CubeFace::signs() const {
  std::vector<int> out(static_cast<std::size_t>(rank_));
  for (int i = 0; i < rank_; ++i) out[static_cast<std::size_t>(i)] = fixed_sign(i);
  return out;
}

std::vector<int> CubeFace::free_coords() const {
  std::vector<int> out;
  for (int i = 0; i < rank_; ++i)
    if (is_free(i)) out.push_back(i);
  return out;
}

bool CubeFace::contains(const CubeFace& sub) const {
  if (sub.rank_ != rank_) return false;
  if ((sub.free_ & ~free_) != 0) return false;
  const std::uint32_t pinned = ~free_ & ((1U << rank_) - 1U);
  return (sub.neg_ & pinned) == (neg_ & pinned);
}

bool CubeFace::has_vertex(const SignVector& v) const {
  const std::uint32_t pinned = ~free_ & ((1U << rank_) - 1U);
  return v.rank() == rank_ && (v.negative_mask() & pinned) == neg_;
}

std::vector<CubeFace> enumerate_faces(int r) {
  if (r < 1) throw InputError("torus rank must be at least 1");
  if (r > kMaxFaceRank)
    throw CapabilityError("face enumeration is capped at rank " + std::to_string(kMaxFaceRank));
  std::size_t total = 1;
  for (int i = 0; i < r; ++i) total *= 3;

  std::vector<CubeFace> faces;
  faces.reserve(total);
  // Counting in base 3 with coordinate 0 as the leading digit yields the
  // lexicographic order; digit 0 = +, 1 = -, 2 = free.
  for (std::size_t code = 0; code < total; ++code) {
    std::uint32_t free = 0, neg = 0;
    std::size_t rest = code;
    for (int i = r - 1; i >= 0; --i) {
      const auto digit = rest % 3;
      rest /= 3;
      if (digit == 2) free |= 1U << i;
      if (digit == 1) neg |= 1U << i;
    }
    faces.emplace_back(r, free, neg);
  }
  std::stable_sort(faces.begin(), faces.end(),
                   [](const CubeFace& x, const CubeFace& y) { return x.dim() < y.dim(); });
  return faces;
}

int affine_rank(const SignMatrix& a, std::span<const std::size_t> columns) {
  if (columns.empty()) return -1;
  Matrix diffs;
  for (std::size_t m = 1; m < columns.size(); ++m) diffs.push_back(column_difference(a, columns[m], columns[0]));
  return integer_rank(std::move(diffs));
}

std::vector<Stratum> enumerate_strata(const SignMatrix& a) {
  if (a.rank() > kMaxStrataRank)
    throw CapabilityError("stratum enumeration is capped at rank " + std::to_string(kMaxStrataRank) +
                          ", got " + std::to_string(a.rank()));
  std::set<std::uint32_t> flats;
  std::vector<std::uint32_t> frontier;
  for (std::size_t j = 0; j < a.num_columns(); ++j) {
    const auto f = affine_closure(a, 1U << j);
    if (flats.insert(f).second) frontier.push_back(f);
  }
  while (!frontier.empty()) {
    std::vector<std::uint32_t> next;
    for (auto f : frontier) {
      for (std::size_t p = 0; p < a.num_columns(); ++p) {
        if ((f >> p) & 1U) continue;
        const auto g = affine_closure(a, f | (1U << p));
        if (flats.insert(g).second) next.push_back(g);
      }
    }
    frontier = std::move(next);
  }

  std::vector<Stratum> out;
  out.reserve(flats.size());
  for (auto f : flats) out.push_back(make_stratum(a, f));
  std::sort(out.begin(), out.end(), [](const Stratum& x, const Stratum& y) {
    if (x.moment_dim != y.moment_dim) return x.moment_dim < y.moment_dim;
    return x.columns < y.columns;
  });
  return out;
}

std::vector<std::size_t> face_strata_columns(const CubeFace& face, const SignMatrix& a) {
  if (face.rank() != a.rank()) throw InputError("face rank does not match the sign matrix");
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < a.num_columns(); ++j)
    if (face.has_vertex(a.column(j))) out.push_back(j);
  return out;
}

CrossingCounts normal_weight_signs(const CubeFace& inner, const CubeFace& outer, const SignMatrix& a,
                                   EntrySide side) {
  if (inner.rank() != a.rank() || outer.rank() != a.rank())
    throw InputError("face rank does not match the sign matrix");
  if (!outer.contains(inner) || outer.dim() != inner.dim() + 1)
    throw InputError("faces are not incident: inner must be a facet of outer");

  const int axis = std::countr_zero(outer.free_mask() & ~inner.free_mask());
  // The outer face lies on the -pinned side of the inner face along `axis`.
  const int pinned = inner.fixed_sign(axis);
  const int travel = side == EntrySide::exterior ? -pinned : pinned;

  const auto inner_cols = face_strata_columns(inner, a);
  const auto outer_cols = face_strata_columns(outer, a);
  if (inner_cols.empty()) throw InvariantError("cube face has no vertex among the columns");
  const std::size_t base = inner_cols.front();

  CrossingCounts counts;
  for (std::size_t l : outer_cols) {
    if (std::binary_search(inner_cols.begin(), inner_cols.end(), l)) continue;
    const int component = a.entry(axis, l) - a.entry(axis, base);
    if (component == 0) throw InvariantError("normal weight has no component along the crossing axis");
    if ((component > 0) == (travel > 0)) {
      ++counts.f;
    } else {
      ++counts.b;
    }
  }
  return counts;
}

CrossingCounts interior_wall_signs(const Stratum& wall, std::span<const Rational> normal,
                                   const SignMatrix& a) {
  if (wall.columns.empty()) throw InputError("empty stratum");
  if (normal.size() != static_cast<std::size_t>(a.rank()))
    throw InputError("crossing normal has the wrong length");
  if (wall.moment_dim != a.rank() - 1)
    throw InputError("stratum has moment dimension " + std::to_string(wall.moment_dim) +
                     "; a wall crossing needs codimension one");
  if (std::all_of(normal.begin(), normal.end(), [](const Rational& x) { return x == 0; }))
    throw InputError("crossing normal is zero");

  const std::size_t base = wall.columns.front();
  for (std::size_t k : wall.columns)
    if (dot(normal, column_difference(a, k, base)) != 0)
      throw InputError("crossing normal does not vanish along the wall");

  CrossingCounts counts;
  for (std::size_t l = 0; l < a.num_columns(); ++l) {
    if (std::binary_search(wall.columns.begin(), wall.columns.end(), l)) continue;
    const Rational p = dot(normal, column_difference(a, l, base));
    if (p > 0) {
      ++counts.f;
    } else if (p < 0) {
      ++counts.b;
    } else {
      throw InvariantError("column off the wall projects to zero; stratum is not affinely closed");
    }
  }
  return counts;
}

std::vector<Rational> wall_normal(const Stratum& wall, const SignMatrix& a) {
  const int r = a.rank();
  if (wall.moment_dim != r - 1) throw InputError("wall normal needs a codimension-one stratum");

  // Greedily pick r-1 independent difference vectors.
  Matrix basis;
  const std::size_t base = wall.columns.front();
  for (std::size_t m = 1; m < wall.columns.size() && static_cast<int>(basis.size()) < r - 1; ++m) {
    basis.push_back(column_difference(a, wall.columns[m], base));
    if (integer_rank(basis) < static_cast<int>(basis.size())) basis.pop_back();
  }

  // Generalized cross product: signed maximal minors.
  std::vector<long long> n(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) {
    Matrix minor;
    for (const auto& row : basis) {
      std::vector<long long> reduced;
      for (int c = 0; c < r; ++c)
        if (c != i) reduced.push_back(row[static_cast<std::size_t>(c)]);
      minor.push_back(std::move(reduced));
    }
    const long long d = determinant(std::move(minor));
    n[static_cast<std::size_t>(i)] = (i % 2 == 0) ? d : -d;
  }
  long long g = 0;
  for (long long x : n) g = std::gcd(g, x);
  auto lead = std::find_if(n.begin(), n.end(), [](long long x) { return x != 0; });
  if (g == 0 || lead == n.end()) throw InvariantError("degenerate wall: zero normal");
  if (*lead < 0) g = -g;

  std::vector<Rational> out;
  for (long long x : n) out.emplace_back(x / g);
  return out;
}

std::vector<Stratum> interior_walls(const SignMatrix& a) {
  std::vector<Stratum> out;
  for (auto& s : enumerate_strata(a)) {
    if (s.moment_dim != a.rank() - 1) continue;
    bool facet = false;
    for (int i = 0; i < a.rank() && !facet; ++i) {
      const int first = a.entry(i, s.columns.front());
      facet = std::all_of(s.columns.begin(), s.columns.end(),
                          [&](std::size_t j) { return a.entry(i, j) == first; });
    }
    if (!facet) out.push_back(std::move(s));
  }
  return out;
}

}  // namespace cubewall
