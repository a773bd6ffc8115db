#include "cubewall/action.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "cubewall/errors.hpp"

namespace cubewall {

SignVector SignVector::from_signs(std::span<const int> signs) {
  std::uint32_t neg = 0;
  for (std::size_t i = 0; i < signs.size(); ++i) {
    if (signs[i] == -1) {
      neg |= 1U << i;
    } else if (signs[i] != 1) {
      throw InputError("sign vector entry " + std::to_string(i) + " is " +
                       std::to_string(signs[i]) + ", expected +1 or -1");
    }
  }
  return {static_cast<int>(signs.size()), neg};
}

std::vector<int> SignVector::to_vector() const {
  std::vector<int> out(static_cast<std::size_t>(rank_));
  for (int i = 0; i < rank_; ++i) out[static_cast<std::size_t>(i)] = sign(i);
  return out;
}

bool WeightVector::is_zero() const {
  return std::all_of(entries.begin(), entries.end(), [](int e) { return e == 0; });
}

WeightVector WeightVector::operator-() const {
  WeightVector out = *this;
  for (int& e : out.entries) e = -e;
  return out;
}

namespace {

void check_rank(int r) {
  if (r < 1) throw InputError("torus rank must be at least 1, got " + std::to_string(r));
  if (r > kMaxMatrixRank)
    throw CapabilityError("torus rank " + std::to_string(r) + " exceeds the sign-matrix cap of " +
                          std::to_string(kMaxMatrixRank));
}

WeightVector difference(const SignVector& k, const SignVector& j) {
  WeightVector w;
  w.entries.resize(static_cast<std::size_t>(k.rank()));
  for (int i = 0; i < k.rank(); ++i) w.entries[static_cast<std::size_t>(i)] = k.sign(i) - j.sign(i);
  return w;
}

FixedPointGkm gkm_at(const SignMatrix& a, const FixedPoint& p) {
  FixedPointGkm out;
  out.index = p.index;
  const auto weights = isotropy_weights(a, p);
  // weights[m] belongs to column m for m < index and m + 1 otherwise.
  auto column_of = [&](std::size_t m) { return m < p.index ? m : m + 1; };
  std::map<WeightVector, std::size_t> rays;
  for (std::size_t m = 0; m < weights.size(); ++m) {
    ++rays[primitive_direction(weights[m])];
    for (std::size_t n = m + 1; n < weights.size(); ++n) {
      if (parallel(weights[m], weights[n])) out.parallel_pairs.push_back({column_of(m), column_of(n)});
    }
  }
  for (auto& [dir, count] : rays) {
    out.max_multiplicity = std::max(out.max_multiplicity, count);
    out.directions.push_back({dir, count});
  }
  return out;
}

void finish(GkmReport& report) {
  for (const auto& pt : report.points) report.total_parallel_pairs += pt.parallel_pairs.size();
  report.pairwise_independent = report.total_parallel_pairs == 0;
}

IsotropySummary scan_point(const SignMatrix& a, const FixedPoint& p) {
  IsotropySummary s;
  s.fixed_points = 1;
  const auto weights = isotropy_weights(a, p);
  s.weights = weights.size();
  if (weights.size() + 1 != a.num_columns()) s.short_lists = 1;
  for (const auto& w : weights) {
    if (w.is_zero()) ++s.zero_weights;
    for (int e : w.entries)
      if (e != -2 && e != 0 && e != 2) ++s.bad_entries;
  }
  return s;
}

}  // namespace

SignMatrix SignMatrix::canonical(int r) {
  check_rank(r);
  const std::size_t n = std::size_t{1} << r;
  std::vector<SignVector> cols;
  cols.reserve(n);
  for (std::size_t j = 0; j < n; ++j) cols.emplace_back(r, static_cast<std::uint32_t>(j));
  return SignMatrix(r, std::move(cols));
}

SignMatrix SignMatrix::from_columns(int r, const std::vector<std::vector<int>>& columns) {
  check_rank(r);
  const std::size_t n = std::size_t{1} << r;
  if (columns.size() != n)
    throw InputError("expected " + std::to_string(n) + " columns, got " + std::to_string(columns.size()));
  std::vector<SignVector> cols;
  cols.reserve(n);
  for (const auto& c : columns) {
    if (c.size() != static_cast<std::size_t>(r))
      throw InputError("column has " + std::to_string(c.size()) + " entries, expected " + std::to_string(r));
    cols.push_back(SignVector::from_signs(c));
  }
  return SignMatrix(r, std::move(cols));
}

bool SignMatrix::is_complete() const {
  std::vector<bool> seen(num_columns(), false);
  for (const auto& c : columns_) {
    if (seen[c.negative_mask()]) return false;
    seen[c.negative_mask()] = true;
  }
  return true;
}

SignMatrix build_sign_matrix(int r) { return SignMatrix::canonical(r); }

std::vector<FixedPoint> fixed_points(const SignMatrix& a) {
  if (!a.is_complete())
    throw InvariantError("sign matrix has repeated columns; fixed points are not isolated");
  std::vector<FixedPoint> out;
  out.reserve(a.num_columns());
  for (std::size_t j = 0; j < a.num_columns(); ++j) out.push_back({j, a.column(j)});
  return out;
}

std::vector<Rational> moment_of_state(const SignMatrix& a, std::span<const Rational> amplitudes) {
  if (amplitudes.size() != a.num_columns())
    throw InputError("expected " + std::to_string(a.num_columns()) + " amplitudes, got " +
                     std::to_string(amplitudes.size()));
  Rational total = 0;
  for (const auto& x : amplitudes) {
    if (x < 0) throw InputError("amplitudes must be nonnegative");
    total += x;
  }
  if (total != 1) throw InputError("amplitudes sum to " + to_decimal(total) + ", expected 1");

  std::vector<Rational> mu(static_cast<std::size_t>(a.rank()), Rational(0));
  for (std::size_t j = 0; j < a.num_columns(); ++j) {
    if (amplitudes[j] == 0) continue;
    for (int i = 0; i < a.rank(); ++i) mu[static_cast<std::size_t>(i)] += amplitudes[j] * a.entry(i, j);
  }
  for (auto& x : mu) x /= 2;
  return mu;
}

std::vector<WeightVector> isotropy_weights(const SignMatrix& a, const FixedPoint& p) {
  std::vector<WeightVector> out;
  out.reserve(a.num_columns() - 1);
  for (std::size_t k = 0; k < a.num_columns(); ++k) {
    if (k == p.index) continue;
    out.push_back(difference(a.column(k), p.signs));
  }
  return out;
}

bool parallel(const WeightVector& u, const WeightVector& v) {
  const auto& x = u.entries;
  const auto& y = v.entries;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t k = i + 1; k < x.size(); ++k)
      if (static_cast<long long>(x[i]) * y[k] != static_cast<long long>(x[k]) * y[i]) return false;
  return true;
}

WeightVector primitive_direction(const WeightVector& w) {
  int g = 0;
  for (int e : w.entries) g = std::gcd(g, e);
  if (g == 0) return w;
  WeightVector out = w;
  for (int& e : out.entries) e /= g;
  return out;
}

GkmReport gkm_report_serial(const SignMatrix& a) {
  GkmReport report;
  report.r = a.rank();
  for (const auto& p : fixed_points(a)) report.points.push_back(gkm_at(a, p));
  finish(report);
  return report;
}

GkmReport gkm_report(const SignMatrix& a) {
  GkmReport report;
  report.r = a.rank();
  const auto points = fixed_points(a);
  report.points.resize(points.size());
  const auto n = static_cast<long long>(points.size());
#pragma omp parallel for schedule(dynamic)
  for (long long j = 0; j < n; ++j) {
    report.points[static_cast<std::size_t>(j)] = gkm_at(a, points[static_cast<std::size_t>(j)]);
  }
  finish(report);
  return report;
}

IsotropySummary summarize_isotropy_serial(const SignMatrix& a) {
  IsotropySummary total;
  for (const auto& p : fixed_points(a)) {
    const auto s = scan_point(a, p);
    total.fixed_points += s.fixed_points;
    total.weights += s.weights;
    total.zero_weights += s.zero_weights;
    total.bad_entries += s.bad_entries;
    total.short_lists += s.short_lists;
  }
  return total;
}

IsotropySummary summarize_isotropy(const SignMatrix& a) {
  const auto points = fixed_points(a);
  const auto n = static_cast<long long>(points.size());
  std::size_t fp = 0, weights = 0, zero = 0, bad = 0, shortl = 0;
#pragma omp parallel for reduction(+ : fp, weights, zero, bad, shortl)
  for (long long j = 0; j < n; ++j) {
    const auto s = scan_point(a, points[static_cast<std::size_t>(j)]);
    fp += s.fixed_points;
    weights += s.weights;
    zero += s.zero_weights;
    bad += s.bad_entries;
    shortl += s.short_lists;
  }
  return {fp, weights, zero, bad, shortl};
}

}  // namespace cubewall
