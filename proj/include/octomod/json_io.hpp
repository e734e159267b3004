#pragma once

#include <json.hpp>

#include "octomod/cyclic.hpp"
#include "octomod/epsilon.hpp"
#include "octomod/solver.hpp"

namespace octomod {

using nlohmann::json;

// Octonions travel as arrays of 8 "p/q" strings; module elements as
// {"n": int, "m": int, "components": [octonion, ...]}; right-action
// candidates as {"n", "m", "R": [7 row-major rational-string arrays]}.

json to_json(const Rational& q);
json to_json(const Octonion& o);
json to_json(const ModuleElement& x);
json to_json(const BimoduleElement& x);
json to_json(const RealSubspace& s);
json to_json(const RightMultCandidate& c);
json to_json(const LinearStageFamily& f);
json to_json(const SolveOutcome& o);
json to_json(const CyclicDecomposition& d);
json to_json(const SigmaClass& s);
json to_json(const IdentityReport& r);
json to_json(const BimoduleVerifyReport& r);

Rational rational_from_json(const json& j);
Octonion octonion_from_json(const json& j);
ModuleElement element_from_json(const json& j);
RightMultCandidate candidate_from_json(const json& j);
/// Row-major square matrix from a flat array of rational strings.
Mat square_matrix_from_json(const json& j);

}  // namespace octomod
