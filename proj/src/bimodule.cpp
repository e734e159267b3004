#include "octomod/bimodule.hpp"

namespace octomod {

namespace {

ModuleElement right_mul_basis_impl(const ModuleElement& x, int a) {
  if (a == 0) return x;
  const EpsilonTables& t = epsilon_tables();
  ModuleElement out = left_mul_basis(a, x);
  for (int j = 1; j <= 7; ++j)
    for (int k = 1; k <= 7; ++k) {
      const int e = t.eps3(a, j, k);
      if (e == 0) continue;
      ModuleElement term = basis_associator(j, k, x);
      term *= Rational(-e, 4);
      out += term;
    }
  return out;
}

}  // namespace

ModuleElement right_mul_basis(const ModuleElement& x, int a) {
  if (x.sig.m != 0)
    throw DomainError(ErrorCode::ConjugateSlotsPresent, "derived right action requires m = 0");
  return right_mul_basis_impl(x, a);
}

BimoduleElement right_mul(const BimoduleElement& x, const Octonion& p) {
  ModuleElement out(x.sig());
  for (int a = 0; a < 8; ++a) {
    if (p[a] == Rational(0)) continue;
    ModuleElement term = right_mul_basis_impl(x.element(), a);
    term *= p[a];
    out += term;
  }
  return BimoduleElement(std::move(out));
}

Mat right_mul_matrix(const ModuleSignature& sig, int i) {
  if (sig.m != 0)
    throw DomainError(ErrorCode::ConjugateSlotsPresent, "derived right action requires m = 0");
  const Eigen::Index d = sig.real_dim();
  Mat out(d, d);
  for (Eigen::Index v = 0; v < d; ++v) {
    Vec e = Vec::Zero(d);
    e[v] = 1;
    out.col(v) = right_mul_basis_impl(ModuleElement::unflatten(sig, e), i).flatten();
  }
  return out;
}

BimoduleElement re_part(const BimoduleElement& x) {
  const ModuleElement& m = x.element();

  ModuleElement two_sided = m;
  two_sided *= Rational(5, 12);
  for (int i = 1; i <= 7; ++i) {
    ModuleElement t = left_mul_basis(i, right_mul_basis_impl(m, i));
    t *= Rational(-1, 12);
    two_sided += t;
  }

  ModuleElement left_only = m;
  const EpsilonTables& t = epsilon_tables();
  for (int i = 1; i <= 7; ++i)
    for (int j = 1; j <= 7; ++j)
      for (int k = 1; k <= 7; ++k) {
        const int e = t.eps3(i, j, k);
        if (e == 0) continue;
        ModuleElement term = left_mul_basis(i, basis_associator(j, k, m));
        term *= Rational(e, 48);
        left_only += term;
      }

  if (two_sided != left_only)
    throw DomainError(ErrorCode::InternalFormulaMismatch,
                      "two-sided and left-only real part formulas disagree");
  return BimoduleElement(std::move(two_sided));
}

std::array<BimoduleElement, 8> peirce_decompose(const BimoduleElement& x) {
  const ModuleElement& m = x.element();
  std::array<BimoduleElement, 8> parts{
      re_part(x),
      re_part(BimoduleElement(left_mul_basis(1, m))),
      re_part(BimoduleElement(left_mul_basis(2, m))),
      re_part(BimoduleElement(left_mul_basis(3, m))),
      re_part(BimoduleElement(left_mul_basis(4, m))),
      re_part(BimoduleElement(left_mul_basis(5, m))),
      re_part(BimoduleElement(left_mul_basis(6, m))),
      re_part(BimoduleElement(left_mul_basis(7, m)))};
  ModuleElement recon = parts[0].element();
  for (int i = 1; i <= 7; ++i) {
    ModuleElement xi = parts[i].element();
    xi *= Rational(-1);
    parts[i] = BimoduleElement(xi);
    recon += left_mul_basis(i, xi);
  }
  if (recon != m)
    throw DomainError(ErrorCode::InternalFormulaMismatch,
                      "coordinate reconstruction x = Re x + sum e_i x_i failed");
  return parts;
}

RealSubspace center(const ModuleSignature& sig) {
  if (sig.m != 0)
    throw DomainError(ErrorCode::ConjugateSlotsPresent, "center requires a bimodule (m = 0)");
  const Eigen::Index d = sig.real_dim();
  Mat stacked(7 * d, d);
  for (int i = 1; i <= 7; ++i) {
    stacked.middleRows((i - 1) * d, d) =
        basis_left_perm(sig, i).to_matrix() - right_mul_matrix(sig, i);
  }
  return RealSubspace::span_of_rows(kernel_basis(stacked));
}

}  // namespace octomod
