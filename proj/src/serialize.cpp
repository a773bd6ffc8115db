#include "cubewall/serialize.hpp"

#include "cubewall/closedform.hpp"

namespace cubewall {

using nlohmann::json;

namespace {

json rational_vector(const std::vector<Rational>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_decimal(x));
  return out;
}

}  // namespace

std::string canonical_json(const json& j) { return j.dump(2) + "\n"; }

json to_json(const CubeFace& face) { return {{"dim", face.dim()}, {"fixed_signs", face.signs()}}; }

json to_json(const Stratum& s) {
  json vertices = json::array();
  for (const auto& v : s.moment_vertices) vertices.push_back(rational_vector(v));
  return {{"columns", s.columns},
          {"moment_dim", s.moment_dim},
          {"stab_dim", s.stab_dim},
          {"moment_vertices", vertices}};
}

json to_json(const GkmReport& report) {
  json points = json::array();
  for (const auto& p : report.points) {
    json pairs = json::array();
    for (const auto& pr : p.parallel_pairs) pairs.push_back({pr.first, pr.second});
    json dirs = json::array();
    for (const auto& d : p.directions)
      dirs.push_back({{"direction", d.direction.entries}, {"multiplicity", d.multiplicity}});
    points.push_back({{"index", p.index},
                      {"parallel_pairs", pairs},
                      {"directions", dirs},
                      {"max_multiplicity", p.max_multiplicity}});
  }
  return {{"r", report.r},
          {"pairwise_independent", report.pairwise_independent},
          {"total_parallel_pairs", report.total_parallel_pairs},
          {"points", points}};
}

json to_json(const Report& report) {
  json checks = json::array();
  for (const auto& c : report.checks)
    checks.push_back({{"id", c.id}, {"name", c.name}, {"passed", c.passed}, {"details", c.details}});
  return {{"passed", report.passed()}, {"checks", checks}};
}

OutputRecord make_record(int r) { return {r, poincare_product(r), euler_char(r), quotient_dim(r)}; }

json to_json(const OutputRecord& rec) {
  json betti = json::array();
  for (const auto& b : rec.poincare.coeffs()) betti.push_back(b.str());
  return {{"r", rec.r},
          {"poincare", rec.poincare.to_string()},
          {"betti", betti},
          {"euler", rec.euler.str()},
          {"dim", rec.dim}};
}

json trace_json(int r, const WalkResult<Polynomial>& poincare, const WalkResult<BigInt>& euler) {
  json steps = json::array();
  for (std::size_t k = 0; k < poincare.trace.steps.size(); ++k) {
    const auto& s = poincare.trace.steps[k];
    const auto& e = euler.trace.steps.at(k);
    steps.push_back({{"from", "exterior"},
                     {"wall_dim", s.wall.dim()},
                     {"wall_fixed_signs", s.wall.signs()},
                     {"chamber_dim", s.chamber.dim()},
                     {"chamber_fixed_signs", s.chamber.signs()},
                     {"b", s.b},
                     {"f", s.f},
                     {"factor", s.factor.to_string()},
                     {"running", s.running.to_string()},
                     {"euler_factor", e.factor.str()},
                     {"euler_running", e.running.str()}});
  }
  return {{"r", r},
          {"start", poincare.trace.start.to_string()},
          {"final", poincare.value.to_string()},
          {"euler", euler.value.str()},
          {"steps", steps}};
}

json xray_json(int r, bool faces_only) {
  json faces = json::array();
  for (const auto& f : enumerate_faces(r)) faces.push_back(to_json(f));
  json doc{{"r", r}, {"faces", faces}};
  if (faces_only) return doc;

  const auto a = SignMatrix::canonical(r);
  json strata = json::array();
  for (const auto& s : enumerate_strata(a)) strata.push_back(to_json(s));
  doc["strata"] = strata;

  json points = json::array();
  for (const auto& p : fixed_points(a)) {
    std::vector<Rational> indicator(a.num_columns(), Rational(0));
    indicator[p.index] = 1;
    json weights = json::array();
    for (const auto& w : isotropy_weights(a, p)) weights.push_back(w.entries);
    points.push_back({{"index", p.index},
                      {"signs", p.signs.to_vector()},
                      {"moment", rational_vector(moment_of_state(a, indicator))},
                      {"isotropy_weights", weights}});
  }
  doc["fixed_points"] = points;
  doc["gkm"] = to_json(gkm_report(a));
  return doc;
}

}  // namespace cubewall
