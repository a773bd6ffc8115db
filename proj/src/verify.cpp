#include "cubewall/verify.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cubewall/action.hpp"
#include "cubewall/closedform.hpp"
#include "cubewall/engine.hpp"
#include "cubewall/serialize.hpp"
#include "cubewall/xray.hpp"

namespace cubewall {

using nlohmann::json;

namespace {

constexpr int kMaxExhaustiveCheckRank = 3;
constexpr int kMaxInteriorCheckRank = 3;

std::size_t line_of(std::string_view text, std::size_t byte) {
  byte = std::min(byte, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(byte), '\n'));
}

BigInt parse_decimal(const json& v, const std::string& where) {
  if (!v.is_string()) throw TableError(where + ": expected a decimal string");
  const auto& s = v.get_ref<const std::string&>();
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw TableError(where + ": '" + s + "' is not a nonnegative decimal integer");
  return BigInt(s);
}

const json& field(const json& row, const char* name, const std::string& where) {
  auto it = row.find(name);
  if (it == row.end()) throw TableError(where + ": missing field '" + name + "'");
  return *it;
}

PaperRow parse_row(const json& j, const std::string& where) {
  if (!j.is_object()) throw TableError(where + ": expected an object");
  PaperRow row;
  const auto& r = field(j, "r", where);
  if (!r.is_number_integer()) throw TableError(where + ": field 'r' must be an integer");
  row.r = r.get<int>();
  const auto& source = field(j, "source", where);
  if (!source.is_string() || (source != "table" && source != "worked-example"))
    throw TableError(where + ": field 'source' must be \"table\" or \"worked-example\"");
  row.source = source.get<std::string>();
  const auto& betti = field(j, "betti", where);
  if (!betti.is_array()) throw TableError(where + ": field 'betti' must be an array");
  for (std::size_t k = 0; k < betti.size(); ++k)
    row.betti.push_back(parse_decimal(betti[k], where + ": field 'betti'[" + std::to_string(k) + "]"));
  row.euler = parse_decimal(field(j, "euler", where), where + ": field 'euler'");
  const auto& dim = field(j, "dim", where);
  if (!dim.is_number_integer()) throw TableError(where + ": field 'dim' must be an integer");
  row.dim = dim.get<long long>();
  return row;
}

std::string describe(const Polynomial& p) { return p.to_string(); }

// Spreads the user seed across ranks so each rank samples its own stream.
std::uint64_t rank_seed(std::uint64_t seed, int r) {
  return seed + 0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(r);
}

// Each step must cross a wall of dimension i with (b, f) = (0, 2^i).
bool audit_steps(const Trace<Polynomial>& trace, std::string& why) {
  for (const auto& s : trace.steps) {
    const std::size_t expect_f = std::size_t{1} << s.wall.dim();
    if (s.b != 0 || s.f != expect_f) {
      why = "wall of dim " + std::to_string(s.wall.dim()) + " gave (b,f)=(" + std::to_string(s.b) + "," +
            std::to_string(s.f) + "), expected (0," + std::to_string(expect_f) + ")";
      return false;
    }
  }
  return true;
}

void fail(CheckResult& c, std::string msg) {
  c.passed = false;
  c.details.push_back("FAIL " + std::move(msg));
}

}  // namespace

void validate_row(const PaperRow& row) {
  const std::string where = "row r=" + std::to_string(row.r);
  if (row.r < 1) throw TableError(where + ": r must be positive");
  if (row.dim < 0 || row.dim % 2 != 0) throw TableError(where + ": dim must be a nonnegative even integer");
  if (row.betti.size() != static_cast<std::size_t>(row.dim / 2 + 1))
    throw TableError(where + ": " + std::to_string(row.betti.size()) + " Betti numbers but dim/2 + 1 = " +
                     std::to_string(row.dim / 2 + 1));
  BigInt sum = 0;
  for (const auto& b : row.betti) sum += b;
  if (sum != row.euler)
    throw TableError(where + ": Betti numbers sum to " + sum.str() + " but euler is " + row.euler.str());
}

std::vector<PaperRow> parse_paper_table(std::string_view text, std::string_view origin) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw TableError(std::string(origin) + ":" + std::to_string(line_of(text, e.byte)) + ": " + e.what());
  }
  if (!doc.is_object() || !doc.contains("rows") || !doc["rows"].is_array())
    throw TableError(std::string(origin) + ": top level must be an object with a \"rows\" array");

  std::vector<PaperRow> rows;
  const auto& arr = doc["rows"];
  for (std::size_t i = 0; i < arr.size(); ++i) {
    auto row = parse_row(arr[i], std::string(origin) + ": rows[" + std::to_string(i) + "]");
    validate_row(row);
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw TableError(std::string(origin) + ": no rows");
  return rows;
}

std::vector<PaperRow> load_paper_table(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open table file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_paper_table(buf.str(), path.string());
}

std::string serialize_paper_table(const std::vector<PaperRow>& rows) {
  json arr = json::array();
  for (const auto& row : rows) {
    json betti = json::array();
    for (const auto& b : row.betti) betti.push_back(b.str());
    arr.push_back({{"r", row.r}, {"source", row.source}, {"betti", betti}, {"euler", row.euler.str()},
                   {"dim", row.dim}});
  }
  return canonical_json(json{{"rows", arr}});
}

bool Report::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

CheckResult check_table(int r_max, const std::vector<PaperRow>& table) {
  CheckResult c{"1", "closed form matches the published Betti table", true, {}};
  for (int r = 2; r <= std::min(r_max, kMaxWalkRank); ++r) {
    auto it = std::find_if(table.begin(), table.end(), [r](const PaperRow& row) { return row.r == r; });
    if (it == table.end()) {
      fail(c, "r=" + std::to_string(r) + ": no table row");
      continue;
    }
    const auto p = poincare_product(r);
    const auto& betti = it->betti;
    const std::size_t n = std::max(p.size(), betti.size());
    bool row_ok = true;
    for (std::size_t k = 0; k < n; ++k) {
      const BigInt expected = p[k];
      const BigInt actual = k < betti.size() ? betti[k] : BigInt(0);
      if (expected != actual || k >= betti.size()) {
        fail(c, "r=" + std::to_string(r) + ": betti[" + std::to_string(k) + "] closed form " + expected.str() +
                    ", table " + (k < betti.size() ? actual.str() : std::string("<missing>")));
        row_ok = false;
        break;
      }
    }
    if (euler_char(r) != it->euler) {
      fail(c, "r=" + std::to_string(r) + ": euler closed form " + euler_char(r).str() + ", table " + it->euler.str());
      row_ok = false;
    }
    if (quotient_dim(r) != it->dim) {
      fail(c, "r=" + std::to_string(r) + ": dim closed form " + std::to_string(quotient_dim(r)) + ", table " +
                  std::to_string(it->dim));
      row_ok = false;
    }
    if (row_ok) c.details.push_back("r=" + std::to_string(r) + " (" + it->source + "): match");
  }
  return c;
}

CheckResult check_engine(int r_max) {
  CheckResult c{"2", "canonical wall-crossing walk equals the closed form", true, {}};
  for (int r = 1; r <= std::min(r_max, kMaxWalkRank); ++r) {
    const auto a = SignMatrix::canonical(r);
    const auto path = canonical_path(r);
    const auto poincare = walk<Polynomial>(a, path, poincare_invariant());
    const auto euler = walk<BigInt>(a, path, euler_invariant());
    const auto expected = poincare_product(r);
    const std::string tag = "r=" + std::to_string(r) + ": ";
    std::string why;
    if (poincare.value != expected) {
      fail(c, tag + "walk gave " + describe(poincare.value) + ", closed form " + describe(expected));
    } else if (euler.value != euler_char(r)) {
      fail(c, tag + "Euler walk gave " + euler.value.str() + ", closed form " + euler_char(r).str());
    } else if (!audit_steps(poincare.trace, why)) {
      fail(c, tag + why);
    } else {
      c.details.push_back(tag + "match after " + std::to_string(poincare.trace.steps.size()) + " crossings");
    }
  }
  return c;
}

CheckResult check_paths(int r_max, std::size_t trials, std::uint64_t seed) {
  CheckResult c{"3", "every ascending path yields the same invariant", true, {}};
  for (int r = 1; r <= std::min(r_max, kMaxWalkRank); ++r) {
    const auto a = SignMatrix::canonical(r);
    const auto expected = poincare_product(r);
    auto paths = random_paths(r, trials, rank_seed(seed, r));
    const bool exhaustive = r <= kMaxExhaustiveCheckRank;
    if (exhaustive) {
      auto all = all_ascending_paths(r);
      paths.insert(paths.end(), all.begin(), all.end());
    }
    const auto results = walk_paths<Polynomial>(a, paths, poincare_invariant());
    std::size_t bad = 0;
    std::string first_bad;
    for (const auto& res : results) {
      std::string why;
      if (res.value != expected) why = "path gave " + describe(res.value);
      else audit_steps(res.trace, why);
      if (!why.empty() && bad++ == 0) first_bad = why;
    }
    const std::string tag = "r=" + std::to_string(r) + ": ";
    if (bad > 0) {
      fail(c, tag + std::to_string(bad) + " of " + std::to_string(results.size()) + " paths disagree; first: " +
                  first_bad);
    } else {
      c.details.push_back(tag + std::to_string(results.size()) + " paths agree" +
                          (exhaustive ? " (random + exhaustive)" : ""));
    }
  }
  return c;
}

CheckResult check_interior_walls(int r_max) {
  CheckResult c{"4", "interior codimension-one walls are balanced (b = f)", true, {}};
  for (int r = 2; r <= std::min(r_max, kMaxInteriorCheckRank); ++r) {
    const auto a = SignMatrix::canonical(r);
    const auto walls = interior_walls(a);
    std::size_t balanced = 0;
    for (const auto& w : walls) {
      const auto normal = wall_normal(w, a);
      const auto counts = interior_wall_signs(w, normal, a);
      if (counts.b == counts.f) {
        ++balanced;
        continue;
      }
      std::string cols, n;
      for (auto j : w.columns) cols += (cols.empty() ? "" : ",") + std::to_string(j);
      for (const auto& x : normal) n += (n.empty() ? "" : ",") + to_decimal(x);
      fail(c, "r=" + std::to_string(r) + ": wall {" + cols + "} normal (" + n + ") gave (b,f)=(" +
                  std::to_string(counts.b) + "," + std::to_string(counts.f) + "), jump " +
                  describe(poincare_crossing(counts.b, counts.f)) + " times the wall value");
    }
    c.details.push_back("r=" + std::to_string(r) + ": " + std::to_string(balanced) + " of " +
                        std::to_string(walls.size()) + " interior walls balanced");
  }
  return c;
}

CheckResult check_identities(int r_max) {
  CheckResult c{"5", "duality, unimodality, degree and Euler identities", true, {}};
  Polynomial previous;
  for (int r = 1; r <= r_max; ++r) {
    const auto p = poincare_product(r);
    const std::string tag = "r=" + std::to_string(r) + ": ";
    const auto chi = euler_char(r);
    if (p.degree() != quotient_dim(r))
      fail(c, tag + "degree " + std::to_string(p.degree()) + " != dim " + std::to_string(quotient_dim(r)));
    if (!is_palindromic(p)) fail(c, tag + "not palindromic");
    if (!is_unimodal(p)) fail(c, tag + "not unimodal");
    if (!is_nonnegative(p)) fail(c, tag + "negative coefficient");
    if (eval_int(p, 1) != chi || eval_int(p, -1) != chi)
      fail(c, tag + "P(1)=" + eval_int(p, 1).str() + ", P(-1)=" + eval_int(p, -1).str() + ", chi=" + chi.str());
    if (r > 1 && mul(previous, Polynomial::geometric(std::size_t{1} << (r - 1))) != p)
      fail(c, tag + "product recursion in r broken");
    previous = p;
  }
  if (c.passed) c.details.push_back("r=1.." + std::to_string(r_max) + ": all identities hold");
  return c;
}

Report check_all(const VerifyOptions& options, const std::vector<PaperRow>& table) {
  if (options.r_max < 1) throw InputError("max rank must be at least 1");
  Report report;
  report.checks.push_back(check_table(options.r_max, table));
  report.checks.push_back(check_engine(options.r_max));
  report.checks.push_back(check_paths(options.r_max, options.trials, options.seed));
  report.checks.push_back(check_interior_walls(options.r_max));
  report.checks.push_back(check_identities(options.r_max));
  std::sort(report.checks.begin(), report.checks.end(),
            [](const CheckResult& x, const CheckResult& y) { return x.id < y.id; });
  return report;
}

}  // namespace cubewall
