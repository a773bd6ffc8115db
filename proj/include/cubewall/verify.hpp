#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "cubewall/errors.hpp"
#include "cubewall/numeric.hpp"

namespace cubewall {

/// Malformed or self-inconsistent Betti table.
class TableError : public InputError {
 public:
  using InputError::InputError;
};

/// One published row: even-degree Betti numbers, Euler characteristic, real dimension.
struct PaperRow {
  int r = 0;
  std::string source;  ///< "table" or "worked-example"
  std::vector<BigInt> betti;
  BigInt euler;
  long long dim = 0;
  friend bool operator==(const PaperRow&, const PaperRow&) = default;
};

/// Throws TableError when len(betti) != dim/2 + 1 or the Betti sum is not euler.
void validate_row(const PaperRow& row);

std::vector<PaperRow> parse_paper_table(std::string_view text, std::string_view origin = "<memory>");
std::vector<PaperRow> load_paper_table(const std::filesystem::path& path);
/// Canonical JSON, byte-identical to the committed data file.
std::string serialize_paper_table(const std::vector<PaperRow>& rows);

struct CheckResult {
  std::string id;
  std::string name;
  bool passed = true;
  std::vector<std::string> details;  ///< one line per rank, failures prefixed "FAIL "
};

struct Report {
  std::vector<CheckResult> checks;  ///< sorted by id
  bool passed() const;
};

struct VerifyOptions {
  int r_max = 8;
  std::size_t trials = 50;
  std::uint64_t seed = 7;
};

/// Largest rank for which engine walks run inside check_all.
inline constexpr int kMaxWalkRank = 8;

/**
 * Runs every consistency check up to options.r_max:
 *   1 closed form against the table rows,
 *   2 canonical walk against the closed form, with per-step (b, f) audit,
 *   3 path independence (seeded random paths; exhaustive for r <= 3),
 *   4 balanced crossings of interior codimension-one walls for r = 2, 3,
 *   5 duality, unimodality, degree and Euler identities.
 */
Report check_all(const VerifyOptions& options, const std::vector<PaperRow>& table);

/// Individual checks, exposed for the acceptance suite.
CheckResult check_table(int r_max, const std::vector<PaperRow>& table);
CheckResult check_engine(int r_max);
CheckResult check_paths(int r_max, std::size_t trials, std::uint64_t seed);
CheckResult check_interior_walls(int r_max);
CheckResult check_identities(int r_max);

}  // namespace cubewall
