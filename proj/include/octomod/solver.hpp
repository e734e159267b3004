#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "octomod/bimodule.hpp"
#include "octomod/module.hpp"

namespace octomod {

/// A candidate right action: seven real matrices, one per e_1..e_7, acting
/// on the flattened module. The real unit always acts as the identity.
/// Candidates may be invalid; verify_bimodule decides.
struct RightMultCandidate {
  ModuleSignature sig;
  std::array<Mat, 7> R;
};

/// Slotwise right octonion multiplication on O^n, the unique compatible
/// structure. Throws ConjugateSlotsPresent when m > 0.
RightMultCandidate canonical_bimodule(const ModuleSignature& sig);

struct BimoduleViolation {
  std::string relation;  // "middle" ([p,q,x]=[q,x,p]) or "outer" ([p,q,x]=[x,p,q])
  int i = 0, j = 0;      // basis pair (e_i, e_j)
  Eigen::Index basis = 0;
};

struct BimoduleVerifyReport {
  std::vector<BimoduleViolation> violations;
  bool pass() const { return violations.empty(); }
};

/// Exhaustively checks, over basis pairs and basis vectors, that both
/// associator equalities of an alternative bimodule hold for the candidate.
BimoduleVerifyReport verify_bimodule(const RightMultCandidate& cand);

/// Exact affine solution set of the middle-associator condition
/// R_p(q x) - q R_p(x) = [p,q,x] over all basis p, q and all x.
struct LinearStageFamily {
  ModuleSignature sig;
  bool feasible = false;
  std::array<Mat, 7> particular;
  /// Homogeneous directions: (index of the affected R in 0..6, matrix).
  std::vector<std::pair<int, Mat>> kernel;
};

LinearStageFamily solve_linear_stage(const ModuleSignature& sig);

enum class SolveStatus { Unique, Infeasible, Family, Undecided };

const char* to_string(SolveStatus s);

struct SolveOutcome {
  SolveStatus status = SolveStatus::Undecided;
  /// Unique: the solution. Family: one representative of the affine family.
  std::vector<RightMultCandidate> solutions;
  /// Unresolved constraints (Undecided) or free-parameter summary (Family).
  std::string residual;
};

/// Substitutes the affine family into the outer-associator condition
/// R_q R_p - R_{pq} = [p,q,.], producing degree-<=2 polynomial equations in
/// the family parameters, and resolves them by iterated elimination of
/// parameters that occur linearly in some equation.
SolveOutcome impose_quadratic(const LinearStageFamily& family);

/// Theorem oracle: a signature admits a compatible bimodule structure iff
/// it has no conjugate slots. Cross-validated against the solver in tests.
bool admits_bimodule(const ModuleSignature& sig);

/// If Re(f(px) - p f(x)) = 0 for all p, x (checked exactly on the basis),
/// returns the unique q with f(x) = x q; otherwise nullopt.
std::optional<Octonion> classify_almost_linear(const Mat& f);

enum class HomMode { Left, Right, Bi };

/// Exact dimension of the space of intertwiners between two modules:
/// f L_p = L_p f (left), f R_p = R_p f (right), or both (bi). Right and bi
/// require bimodule signatures on both sides.
Eigen::Index hom_space_dim(const ModuleSignature& a, const ModuleSignature& b, HomMode mode);

}  // namespace octomod
