#include "octomod/epsilon.hpp"

#include <sstream>

#include "octomod/errors.hpp"
#include "octomod/octonion.hpp"

namespace octomod {

namespace {

[[noreturn]] void table_fault(const std::string& what) {
  throw DomainError(ErrorCode::InternalTableInconsistent, what);
}

int rational_to_small_int(const Rational& q, const char* where) {
  if (q.get_den() != 1) table_fault(std::string(where) + ": non-integer coefficient");
  if (q < -2 || q > 2) table_fault(std::string(where) + ": coefficient out of range");
  return static_cast<int>(q.get_num().get_si());
}

}  // namespace

EpsilonTables build_epsilon_tables() {
  EpsilonTables t;

  // eps3(i,j,k) is the e_k coefficient of e_i e_j.
  for (int i = 1; i <= 7; ++i) {
    for (int j = 1; j <= 7; ++j) {
      const Octonion p = mul(Octonion::unit(i), Octonion::unit(j));
      for (int k = 1; k <= 7; ++k)
        t.set3(i, j, k, rational_to_small_int(p[k], "eps3 extraction"));
      // Eq: e_i e_j = sum_k eps3 e_k - delta_ij, so the real part must be
      // exactly -delta_ij.
      if (p[0] != Rational(i == j ? -1 : 0)) table_fault("basis product real part");
    }
  }

  // [e_i,e_j,e_k] = 2 eps4(i,j,k,l) e_l.
  for (int i = 1; i <= 7; ++i) {
    for (int j = 1; j <= 7; ++j) {
      for (int k = 1; k <= 7; ++k) {
        const Octonion a = associator(Octonion::unit(i), Octonion::unit(j), Octonion::unit(k));
        if (a[0] != Rational(0)) table_fault("associator has a real part");
        for (int l = 1; l <= 7; ++l) {
          const Rational half = a[l] / 2;
          if (half.get_den() != 1) table_fault("odd associator coefficient");
          t.set4(i, j, k, l, rational_to_small_int(half, "eps4 extraction"));
        }
      }
    }
  }

  // Total antisymmetry of eps3: swapping any two indices flips the sign.
  for (int i = 1; i <= 7; ++i)
    for (int j = 1; j <= 7; ++j)
      for (int k = 1; k <= 7; ++k) {
        const int v = t.eps3(i, j, k);
        if (t.eps3(j, i, k) != -v || t.eps3(i, k, j) != -v || t.eps3(k, j, i) != -v)
          table_fault("eps3 not totally antisymmetric");
        if ((i == j || j == k || i == k) && v != 0) table_fault("eps3 repeated index");
      }

  // Total antisymmetry of eps4 (adjacent transpositions generate the rest).
  for (int i = 1; i <= 7; ++i)
    for (int j = 1; j <= 7; ++j)
      for (int k = 1; k <= 7; ++k)
        for (int l = 1; l <= 7; ++l) {
          const int v = t.eps4(i, j, k, l);
          if (t.eps4(j, i, k, l) != -v || t.eps4(i, k, j, l) != -v || t.eps4(i, j, l, k) != -v)
            table_fault("eps4 not totally antisymmetric");
          if ((i == j || i == k || i == l || j == k || j == l || k == l) && v != 0)
            table_fault("eps4 repeated index");
        }

  // Reconstruction: multiplying through eps3 must reproduce mul on all
  // basis pairs, and eps4 must reproduce every basis associator.
  for (int i = 1; i <= 7; ++i)
    for (int j = 1; j <= 7; ++j) {
      Octonion viaEps = Octonion::scalar(Rational(i == j ? -1 : 0));
      for (int k = 1; k <= 7; ++k) viaEps[k] = Rational(t.eps3(i, j, k));
      if (viaEps != mul(Octonion::unit(i), Octonion::unit(j)))
        table_fault("eps3 does not reconstruct the product");
    }
  for (int i = 1; i <= 7; ++i)
    for (int j = 1; j <= 7; ++j)
      for (int k = 1; k <= 7; ++k) {
        Octonion viaEps;
        for (int l = 1; l <= 7; ++l) viaEps[l] = Rational(2 * t.eps4(i, j, k, l));
        if (viaEps != associator(Octonion::unit(i), Octonion::unit(j), Octonion::unit(k)))
          table_fault("eps4 does not reconstruct the associator");
      }

  return t;
}

const EpsilonTables& epsilon_tables() {
  static const EpsilonTables tables = build_epsilon_tables();
  return tables;
}

IdentityReport verify_contraction_identities() {
  const EpsilonTables& t = epsilon_tables();
  IdentityReport report;

  {
    IdentityCheck c{"eps_ijk eps_ijl = 6 delta_kl", true, ""};
    for (int k = 1; k <= 7 && c.pass; ++k)
      for (int l = 1; l <= 7 && c.pass; ++l) {
        int s = 0;
        for (int i = 1; i <= 7; ++i)
          for (int j = 1; j <= 7; ++j) s += t.eps3(i, j, k) * t.eps3(i, j, l);
        if (s != (k == l ? 6 : 0)) {
          c.pass = false;
          std::ostringstream os;
          os << "(k,l)=(" << k << "," << l << ") sum=" << s;
          c.first_failure = os.str();
        }
      }
    report.checks.push_back(std::move(c));
  }

  {
    IdentityCheck c{"eps_ijq eps_ijkl = 4 eps_qkl", true, ""};
    for (int q = 1; q <= 7 && c.pass; ++q)
      for (int k = 1; k <= 7 && c.pass; ++k)
        for (int l = 1; l <= 7 && c.pass; ++l) {
          int s = 0;
          for (int i = 1; i <= 7; ++i)
            for (int j = 1; j <= 7; ++j) s += t.eps3(i, j, q) * t.eps4(i, j, k, l);
          if (s != 4 * t.eps3(q, k, l)) {
            c.pass = false;
            std::ostringstream os;
            os << "(q,k,l)=(" << q << "," << k << "," << l << ") sum=" << s;
            c.first_failure = os.str();
          }
        }
    report.checks.push_back(std::move(c));
  }

  {
    IdentityCheck c{"eps_ipq eps_ijk = eps_pqjk + d_pj d_qk - d_pk d_qj", true, ""};
    for (int p = 1; p <= 7 && c.pass; ++p)
      for (int q = 1; q <= 7 && c.pass; ++q)
        for (int j = 1; j <= 7 && c.pass; ++j)
          for (int k = 1; k <= 7 && c.pass; ++k) {
            int s = 0;
            for (int i = 1; i <= 7; ++i) s += t.eps3(i, p, q) * t.eps3(i, j, k);
            const int want =
                t.eps4(p, q, j, k) + (p == j ? 1 : 0) * (q == k ? 1 : 0) -
                (p == k ? 1 : 0) * (q == j ? 1 : 0);
            if (s != want) {
              c.pass = false;
              std::ostringstream os;
              os << "(p,q,j,k)=(" << p << "," << q << "," << j << "," << k << ") sum=" << s;
              c.first_failure = os.str();
            }
          }
    report.checks.push_back(std::move(c));
  }

  {
    IdentityCheck c{
        "eps_ipq eps_ijkl = d_pj eps_qkl - d_jq eps_pkl + d_pk eps_jql - d_kq eps_jpl + "
        "d_pl eps_jkq - d_lq eps_jkp",
        true, ""};
    for (int p = 1; p <= 7 && c.pass; ++p)
      for (int q = 1; q <= 7 && c.pass; ++q)
        for (int j = 1; j <= 7 && c.pass; ++j)
          for (int k = 1; k <= 7 && c.pass; ++k)
            for (int l = 1; l <= 7 && c.pass; ++l) {
              int s = 0;
              for (int i = 1; i <= 7; ++i) s += t.eps3(i, p, q) * t.eps4(i, j, k, l);
              const int want = (p == j ? t.eps3(q, k, l) : 0) - (j == q ? t.eps3(p, k, l) : 0) +
                               (p == k ? t.eps3(j, q, l) : 0) - (k == q ? t.eps3(j, p, l) : 0) +
                               (p == l ? t.eps3(j, k, q) : 0) - (l == q ? t.eps3(j, k, p) : 0);
              if (s != want) {
                c.pass = false;
                std::ostringstream os;
                os << "(p,q,j,k,l)=(" << p << "," << q << "," << j << "," << k << "," << l
                   << ") sum=" << s;
                c.first_failure = os.str();
              }
            }
    report.checks.push_back(std::move(c));
  }

  return report;
}

}  // namespace octomod
