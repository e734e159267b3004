#include "octomod/json_io.hpp"

#include <cmath>

namespace octomod {

namespace {

json vec_to_json(const Vec& v) {
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(format_rational(v[i]));
  return a;
}

json mat_row_major(const Mat& m) {
  json a = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) a.push_back(format_rational(m(r, c)));
  return a;
}

[[noreturn]] void bad(const std::string& what) {
  throw DomainError(ErrorCode::ParseError, what);
}

}  // namespace

json to_json(const Rational& q) { return format_rational(q); }

json to_json(const Octonion& o) {
  json a = json::array();
  for (int i = 0; i < 8; ++i) a.push_back(format_rational(o[i]));
  return a;
}

json to_json(const ModuleElement& x) {
  json comps = json::array();
  for (const auto& c : x.components) comps.push_back(to_json(c));
  return json{{"n", x.sig.n}, {"m", x.sig.m}, {"components", comps}};
}

json to_json(const BimoduleElement& x) { return to_json(x.element()); }

json to_json(const RealSubspace& s) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < s.dim(); ++r) rows.push_back(vec_to_json(s.row(r)));
  return json{{"ambient_dim", s.ambient_dim()}, {"dim", s.dim()}, {"basis", rows}};
}

json to_json(const RightMultCandidate& c) {
  json mats = json::array();
  for (const Mat& r : c.R) mats.push_back(mat_row_major(r));
  return json{{"n", c.sig.n}, {"m", c.sig.m}, {"R", mats}};
}

json to_json(const LinearStageFamily& f) {
  json out{{"n", f.sig.n}, {"m", f.sig.m}, {"feasible", f.feasible}};
  if (f.feasible) {
    json mats = json::array();
    for (const Mat& r : f.particular) mats.push_back(mat_row_major(r));
    out["particular"] = mats;
    out["kernel_dim"] = f.kernel.size();
  }
  return out;
}

json to_json(const SolveOutcome& o) {
  json sols = json::array();
  for (const auto& c : o.solutions) sols.push_back(to_json(c));
  json out{{"status", to_string(o.status)}, {"solutions", sols}};
  if (!o.residual.empty()) out["residual"] = o.residual;
  return out;
}

json to_json(const CyclicDecomposition& d) {
  json terms = json::array();
  for (const auto& t : d.terms)
    terms.push_back(json{{"root", to_json(t.root)}, {"vector", to_json(t.vector.element())}});
  return json{{"terms", terms}};
}

json to_json(const SigmaClass& s) { return json{{"direction", vec_to_json(s.direction)}}; }

json to_json(const IdentityReport& r) {
  // The four contraction identities, keyed in table order.
  static const char* kKeys[4] = {"eq3", "eq4", "eq5", "eq6"};
  json out;
  for (size_t i = 0; i < r.checks.size() && i < 4; ++i) {
    out[kKeys[i]] = r.checks[i].pass ? "pass" : "fail";
    if (!r.checks[i].pass) out[std::string(kKeys[i]) + "_first_failure"] = r.checks[i].first_failure;
  }
  return out;
}

json to_json(const BimoduleVerifyReport& r) {
  json v = json::array();
  for (const auto& viol : r.violations)
    v.push_back(json{{"relation", viol.relation}, {"i", viol.i}, {"j", viol.j},
                     {"basis", viol.basis}});
  return json{{"pass", r.pass()}, {"violations", v}};
}

Rational rational_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  bad("expected a rational as \"p/q\" string or integer");
}

Octonion octonion_from_json(const json& j) {
  if (!j.is_array() || j.size() != 8) bad("octonion must be an array of 8 rationals");
  typename Octonion::Coeffs c;
  for (int i = 0; i < 8; ++i) c[i] = rational_from_json(j[i]);
  return Octonion(c);
}

ModuleElement element_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("m") || !j.contains("components"))
    bad("module element must be {\"n\", \"m\", \"components\"}");
  const ModuleSignature sig(j["n"].get<int>(), j["m"].get<int>());
  const json& comps = j["components"];
  if (!comps.is_array() || comps.size() != static_cast<size_t>(sig.slots()))
    bad("component count does not match the signature");
  std::vector<Octonion> parts;
  parts.reserve(comps.size());
  for (const auto& c : comps) parts.push_back(octonion_from_json(c));
  return ModuleElement(sig, std::move(parts));
}

RightMultCandidate candidate_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("m") || !j.contains("R"))
    bad("candidate must be {\"n\", \"m\", \"R\"}");
  const ModuleSignature sig(j["n"].get<int>(), j["m"].get<int>());
  const json& mats = j["R"];
  if (!mats.is_array() || mats.size() != 7) bad("R must hold 7 matrices");
  const Eigen::Index d = sig.real_dim();
  RightMultCandidate cand{sig, {}};
  for (int i = 0; i < 7; ++i) {
    const json& flat = mats[i];
    if (!flat.is_array() || flat.size() != static_cast<size_t>(d * d))
      bad("each matrix must be a row-major array of 8(n+m) x 8(n+m) rationals");
    Mat m(d, d);
    for (Eigen::Index r = 0; r < d; ++r)
      for (Eigen::Index c = 0; c < d; ++c)
        m(r, c) = rational_from_json(flat[static_cast<size_t>(r * d + c)]);
    cand.R[i] = std::move(m);
  }
  return cand;
}

Mat square_matrix_from_json(const json& j) {
  if (!j.is_array()) bad("matrix must be a flat row-major array");
  const auto total = j.size();
  const auto side = static_cast<Eigen::Index>(std::llround(std::sqrt(static_cast<double>(total))));
  if (static_cast<size_t>(side * side) != total) bad("matrix array length is not a square");
  Mat m(side, side);
  for (Eigen::Index r = 0; r < side; ++r)
    for (Eigen::Index c = 0; c < side; ++c)
      m(r, c) = rational_from_json(j[static_cast<size_t>(r * side + c)]);
  return m;
}

}  // namespace octomod
