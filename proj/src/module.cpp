#include "octomod/module.hpp"

#include <deque>
#include <map>
#include <mutex>

namespace octomod {

ModuleElement basis_associator(int i, int j, const ModuleElement& x) {
  const EpsilonTables& t = epsilon_tables();
  // left_mul((e_i e_j), x) with e_i e_j = sum_k eps3 e_k - delta_ij.
  ModuleElement out(x.sig);
  for (int k = 1; k <= 7; ++k) {
    const int e = t.eps3(i, j, k);
    if (e == 0) continue;
    ModuleElement term = left_mul_basis(k, x);
    if (e < 0) term *= Rational(-1);
    out += term;
    break;  // at most one k carries the product of distinct units
  }
  if (i == j) out -= x;
  out -= left_mul_basis(i, left_mul_basis(j, x));
  return out;
}

Mat SignedPerm::to_matrix() const {
  Mat m = Mat::Zero(size(), size());
  for (Eigen::Index v = 0; v < size(); ++v) m(image[v], v) = Rational(sign[v]);
  return m;
}

Mat SignedPerm::apply_left(const Mat& a) const {
  Mat out(a.rows(), a.cols());
  for (Eigen::Index r = 0; r < a.rows(); ++r) {
    if (sign[r] > 0)
      out.row(image[r]) = a.row(r);
    else
      out.row(image[r]) = -a.row(r);
  }
  return out;
}

Vec SignedPerm::apply(const Vec& v) const {
  Vec out(v.size());
  for (Eigen::Index r = 0; r < v.size(); ++r)
    out[image[r]] = sign[r] > 0 ? v[r] : Rational(-v[r]);
  return out;
}

SignedPerm basis_left_perm(const ModuleSignature& sig, int a) {
  SignedPerm p;
  p.image.resize(sig.real_dim());
  p.sign.resize(sig.real_dim());
  for (int s = 0; s < sig.slots(); ++s) {
    const bool conj_slot = sig.is_conjugate_slot(s);
    for (int c = 0; c < 8; ++c) {
      const BasisProduct bp = kBasisTable[a][c];
      int sgn = bp.sign;
      if (a != 0 && conj_slot) sgn = -sgn;
      p.image[8 * s + c] = 8 * s + bp.index;
      p.sign[8 * s + c] = sgn;
    }
  }
  return p;
}

SignedPerm basis_right_perm(const ModuleSignature& sig, int a) {
  if (sig.m != 0)
    throw DomainError(ErrorCode::ConjugateSlotsPresent,
                      "canonical right action requires m = 0");
  SignedPerm p;
  p.image.resize(sig.real_dim());
  p.sign.resize(sig.real_dim());
  for (int s = 0; s < sig.slots(); ++s) {
    for (int c = 0; c < 8; ++c) {
      const BasisProduct bp = kBasisTable[c][a];
      p.image[8 * s + c] = 8 * s + bp.index;
      p.sign[8 * s + c] = bp.sign;
    }
  }
  return p;
}

Mat left_mul_matrix(const ModuleSignature& sig, const Octonion& p) {
  const Eigen::Index d = sig.real_dim();
  Mat out = Mat::Zero(d, d);
  for (int a = 0; a < 8; ++a) {
    if (p[a] == Rational(0)) continue;
    const SignedPerm perm = basis_left_perm(sig, a);
    for (Eigen::Index v = 0; v < d; ++v) out(perm.image[v], v) += p[a] * Rational(perm.sign[v]);
  }
  return out;
}

Mat associator_matrix(const ModuleSignature& sig, int i, int j) {
  const Eigen::Index d = sig.real_dim();
  Mat out = Mat::Zero(d, d);
  ModuleElement basis(sig);
  for (Eigen::Index v = 0; v < d; ++v) {
    Vec e = Vec::Zero(d);
    e[v] = 1;
    const ModuleElement col = basis_associator(i, j, ModuleElement::unflatten(sig, e));
    out.col(v) = col.flatten();
  }
  return out;
}

namespace {

RealSubspace compute_associative_part(const ModuleSignature& sig) {
  const Eigen::Index d = sig.real_dim();
  Mat stacked(21 * d, d);
  Eigen::Index row = 0;
  for (int i = 1; i <= 7; ++i)
    for (int j = i + 1; j <= 7; ++j) {
      stacked.middleRows(row, d) = associator_matrix(sig, i, j);
      row += d;
    }
  const Mat ker = kernel_basis(stacked);
  return RealSubspace::span_of_rows(ker);
}

RealSubspace compute_conjugate_associative_part(const ModuleSignature& sig) {
  const Eigen::Index d = sig.real_dim();
  // (e_i e_j) x = e_j.(e_i.x) for all i,j; diagonal pairs reduce to left
  // alternativity and contribute zero rows.
  Mat stacked(49 * d, d);
  Eigen::Index row = 0;
  const EpsilonTables& t = epsilon_tables();
  for (int i = 1; i <= 7; ++i) {
    const Mat li = basis_left_perm(sig, i).to_matrix();
    for (int j = 1; j <= 7; ++j) {
      const Mat lj = basis_left_perm(sig, j).to_matrix();
      Mat cond = -lj * li;  // q(pm) with p=e_i, q=e_j
      for (int k = 1; k <= 7; ++k) {
        const int e = t.eps3(i, j, k);
        if (e != 0) cond += Rational(e) * basis_left_perm(sig, k).to_matrix();
      }
      if (i == j) cond -= Mat::Identity(d, d);
      stacked.middleRows(row, d) = cond;
      row += d;
    }
  }
  const Mat ker = kernel_basis(stacked);
  return RealSubspace::span_of_rows(ker);
}

}  // namespace

RealSubspace associative_part(const ModuleSignature& sig) {
  return detail::associative_part_ref(sig);
}

RealSubspace conjugate_associative_part(const ModuleSignature& sig) {
  return detail::conjugate_associative_part_ref(sig);
}

namespace detail {

const RealSubspace& associative_part_ref(const ModuleSignature& sig) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, RealSubspace> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find({sig.n, sig.m});
  if (it == cache.end())
    it = cache.emplace(std::make_pair(sig.n, sig.m), compute_associative_part(sig)).first;
  return it->second;
}

const RealSubspace& conjugate_associative_part_ref(const ModuleSignature& sig) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, RealSubspace> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find({sig.n, sig.m});
  if (it == cache.end())
    it = cache.emplace(std::make_pair(sig.n, sig.m), compute_conjugate_associative_part(sig))
             .first;
  return it->second;
}

}  // namespace detail

RealSubspace submodule_closure(const ModuleElement& x) {
  RealSubspace span(x.sig.real_dim());
  if (x.is_zero()) return span;
  std::deque<ModuleElement> work;
  span.insert(x.flatten());
  work.push_back(x);
  while (!work.empty()) {
    const ModuleElement v = std::move(work.front());
    work.pop_front();
    for (int a = 1; a <= 7; ++a) {
      ModuleElement w = left_mul_basis(a, v);
      if (span.insert(w.flatten())) work.push_back(std::move(w));
    }
  }
  return span;
}

bool is_cyclic(const ModuleElement& x) {
  if (x.is_zero()) throw DomainError(ErrorCode::ZeroElement, "is_cyclic of zero element");
  return submodule_closure(x).dim() == 8;
}

std::optional<CyclicClass> cyclic_class(const ModuleElement& x) {
  if (x.is_zero()) throw DomainError(ErrorCode::ZeroElement, "cyclic_class of zero element");
  const RealSubspace closure = submodule_closure(x);
  if (closure.dim() != 8) return std::nullopt;
  if (intersect(closure, detail::associative_part_ref(x.sig)).dim() == 1)
    return CyclicClass::Plus;
  if (intersect(closure, detail::conjugate_associative_part_ref(x.sig)).dim() == 1)
    return CyclicClass::Minus;
  throw DomainError(ErrorCode::InternalFormulaMismatch,
                    "8-dimensional submodule is neither regular nor conjugate regular");
}

}  // namespace octomod
