#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace octomod {

/// The totally antisymmetric structure tensors of the basis:
///   e_i e_j       = eps3(i,j,k) e_k - delta_ij        (sum over k)
///   [e_i,e_j,e_k] = 2 eps4(i,j,k,l) e_l               (sum over l)
/// Indices run over 1..7; any index outside a line/coassociative tuple
/// gives 0.
class EpsilonTables {
 public:
  int eps3(int i, int j, int k) const { return e3_[idx3(i, j, k)]; }
  int eps4(int i, int j, int k, int l) const { return e4_[idx4(i, j, k, l)]; }

  void set3(int i, int j, int k, int v) { e3_[idx3(i, j, k)] = static_cast<std::int8_t>(v); }
  void set4(int i, int j, int k, int l, int v) {
    e4_[idx4(i, j, k, l)] = static_cast<std::int8_t>(v);
  }

 private:
  static size_t idx3(int i, int j, int k) {
    return static_cast<size_t>(((i - 1) * 7 + (j - 1)) * 7 + (k - 1));
  }
  static size_t idx4(int i, int j, int k, int l) {
    return static_cast<size_t>((((i - 1) * 7 + (j - 1)) * 7 + (k - 1)) * 7 + (l - 1));
  }
  std::array<std::int8_t, 7 * 7 * 7> e3_{};
  std::array<std::int8_t, 7 * 7 * 7 * 7> e4_{};
};

/// Extracts eps3/eps4 from octonion multiplication and re-verifies total
/// antisymmetry plus the defining equations before returning. Throws
/// InternalTableInconsistent when the multiplication table is corrupt.
EpsilonTables build_epsilon_tables();

/// Shared read-only tables, built and verified once.
const EpsilonTables& epsilon_tables();

struct IdentityCheck {
  std::string identity;
  bool pass = false;
  std::string first_failure;  // empty when pass
};

struct IdentityReport {
  std::vector<IdentityCheck> checks;
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

/// Exhaustively checks the four epsilon contraction identities
///   sum_ij eps_ijk eps_ijl            = 6 delta_kl
///   sum_ij eps_ijq eps_ijkl           = 4 eps_qkl
///   sum_i  eps_ipq eps_ijk            = eps_pqjk + d_pj d_qk - d_pk d_qj
///   sum_i  eps_ipq eps_ijkl           = d_pj eps_qkl - d_jq eps_pkl + d_pk eps_jql
///                                       - d_kq eps_jpl + d_pl eps_jkq - d_lq eps_jkp
/// over all free indices in 1..7.
IdentityReport verify_contraction_identities();

}  // namespace octomod
