#pragma once

#include <string>

#include <json.hpp>

#include "cubewall/action.hpp"
#include "cubewall/engine.hpp"
#include "cubewall/poly.hpp"
#include "cubewall/verify.hpp"
#include "cubewall/xray.hpp"

namespace cubewall {

/// Sorted keys, two-space indent, trailing newline.
std::string canonical_json(const nlohmann::json& j);

nlohmann::json to_json(const CubeFace& face);
nlohmann::json to_json(const Stratum& s);
nlohmann::json to_json(const GkmReport& report);
nlohmann::json to_json(const Report& report);

/// Summary of the reduced space at rank r: poincare, betti, euler, dim.
struct OutputRecord {
  int r = 0;
  Polynomial poincare;
  BigInt euler;
  long long dim = 0;
};
OutputRecord make_record(int r);
nlohmann::json to_json(const OutputRecord& rec);

nlohmann::json trace_json(int r, const WalkResult<Polynomial>& poincare, const WalkResult<BigInt>& euler);

/// Full X-ray document; faces only when `faces_only`.
nlohmann::json xray_json(int r, bool faces_only);

}  // namespace cubewall
