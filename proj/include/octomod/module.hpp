#pragma once

#include <optional>
#include <vector>

#include "octomod/epsilon.hpp"
#include "octomod/linalg.hpp"
#include "octomod/octonion.hpp"

namespace octomod {

/// Signature (n, m): n regular slots O followed by m conjugate slots O-bar.
struct ModuleSignature {
  int n = 1;
  int m = 0;

  ModuleSignature(int n_, int m_) : n(n_), m(m_) {
    if (n < 0 || m < 0 || n + m < 1)
      throw DomainError(ErrorCode::InvalidSignature,
                        "signature needs n >= 0, m >= 0, n + m >= 1");
  }

  int slots() const { return n + m; }
  Eigen::Index real_dim() const { return 8 * static_cast<Eigen::Index>(n + m); }
  bool is_conjugate_slot(int s) const { return s >= n; }

  friend bool operator==(const ModuleSignature& a, const ModuleSignature& b) {
    return a.n == b.n && a.m == b.m;
  }
  friend bool operator!=(const ModuleSignature& a, const ModuleSignature& b) {
    return !(a == b);
  }
  friend bool operator<(const ModuleSignature& a, const ModuleSignature& b) {
    return a.n != b.n ? a.n < b.n : a.m < b.m;
  }
};

/// Element of O^n + Obar^m: one octonion per slot. Flattening is slot-major
/// (slot s occupies coordinates 8s..8s+7).
template <typename Scalar = Rational>
struct ModuleElementT {
  ModuleSignature sig;
  std::vector<OctonionT<Scalar>> components;

  explicit ModuleElementT(ModuleSignature s)
      : sig(s), components(static_cast<size_t>(s.slots())) {}
  ModuleElementT(ModuleSignature s, std::vector<OctonionT<Scalar>> comps)
      : sig(s), components(std::move(comps)) {
    if (components.size() != static_cast<size_t>(sig.slots()))
      throw DomainError(ErrorCode::InvalidSignature, "component count does not match signature");
  }

  bool is_zero() const {
    for (const auto& c : components)
      if (!c.is_zero()) return false;
    return true;
  }

  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> flatten() const {
    Eigen::Matrix<Scalar, Eigen::Dynamic, 1> v(sig.real_dim());
    for (int s = 0; s < sig.slots(); ++s)
      for (int a = 0; a < 8; ++a) v[8 * s + a] = components[s][a];
    return v;
  }

  static ModuleElementT unflatten(ModuleSignature s,
                                  const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& v) {
    ModuleElementT x(s);
    for (int slot = 0; slot < s.slots(); ++slot)
      for (int a = 0; a < 8; ++a) x.components[slot][a] = v[8 * slot + a];
    return x;
  }

  friend bool operator==(const ModuleElementT& a, const ModuleElementT& b) {
    return a.sig == b.sig && a.components == b.components;
  }
  friend bool operator!=(const ModuleElementT& a, const ModuleElementT& b) { return !(a == b); }

  ModuleElementT& operator+=(const ModuleElementT& o) {
    for (size_t s = 0; s < components.size(); ++s) components[s] += o.components[s];
    return *this;
  }
  ModuleElementT& operator-=(const ModuleElementT& o) {
    for (size_t s = 0; s < components.size(); ++s) components[s] -= o.components[s];
    return *this;
  }
  ModuleElementT& operator*=(const Scalar& c) {
    for (auto& comp : components) comp *= c;
    return *this;
  }
  friend ModuleElementT operator+(ModuleElementT a, const ModuleElementT& b) { return a += b; }
  friend ModuleElementT operator-(ModuleElementT a, const ModuleElementT& b) { return a -= b; }
  friend ModuleElementT operator*(const Scalar& c, ModuleElementT a) { return a *= c; }
};

using ModuleElement = ModuleElementT<Rational>;

/// Left action: p . x is p x_s on regular slots and conj(p) x_s on
/// conjugate slots.
template <typename S>
ModuleElementT<S> left_mul(const OctonionT<S>& p, const ModuleElementT<S>& x) {
  ModuleElementT<S> out(x.sig);
  const OctonionT<S> pbar = conj(p);
  for (int s = 0; s < x.sig.slots(); ++s)
    out.components[s] = mul(x.sig.is_conjugate_slot(s) ? pbar : p, x.components[s]);
  return out;
}

/// Left action of the basis unit e_a (a in 0..7); a signed permutation of
/// coordinates.
template <typename S>
ModuleElementT<S> left_mul_basis(int a, const ModuleElementT<S>& x) {
  ModuleElementT<S> out(x.sig);
  for (int s = 0; s < x.sig.slots(); ++s) {
    out.components[s] = basis_mul_left(a, x.components[s]);
    if (a != 0 && x.sig.is_conjugate_slot(s)) out.components[s] *= S(-1);
  }
  return out;
}

/// [p,q,x] = (pq) . x - p . (q . x).
template <typename S>
ModuleElementT<S> module_associator(const OctonionT<S>& p, const OctonionT<S>& q,
                                    const ModuleElementT<S>& x) {
  return left_mul(mul(p, q), x) - left_mul(p, left_mul(q, x));
}

/// [e_i,e_j,x] through the epsilon table: left_mul(e_i e_j, x) - e_i.(e_j.x).
ModuleElement basis_associator(int i, int j, const ModuleElement& x);

/// A signed permutation of coordinate axes: e_v maps to sign[v] * e_image[v].
struct SignedPerm {
  std::vector<Eigen::Index> image;
  std::vector<int> sign;

  Eigen::Index size() const { return static_cast<Eigen::Index>(image.size()); }
  Mat to_matrix() const;
  /// M * A where M is this permutation (signed row shuffle of A).
  Mat apply_left(const Mat& a) const;
  Vec apply(const Vec& v) const;
};

/// Matrix of x -> e_a . x on the flattened module.
SignedPerm basis_left_perm(const ModuleSignature& sig, int a);
/// Matrix of x -> x . e_a for the canonical right action on O^n (m = 0).
SignedPerm basis_right_perm(const ModuleSignature& sig, int a);

Mat left_mul_matrix(const ModuleSignature& sig, const Octonion& p);
Mat associator_matrix(const ModuleSignature& sig, int i, int j);

/// A(M) = {x : [p,q,x] = 0 for all p,q}: exact kernel of the stacked basis
/// associators. The real axes of the regular slots.
RealSubspace associative_part(const ModuleSignature& sig);
/// A-(M) = {x : (pq)x = q(px) for all p,q}: the real axes of the conjugate
/// slots.
RealSubspace conjugate_associative_part(const ModuleSignature& sig);

namespace detail {
/// Cached references for hot loops; same values as the public functions.
const RealSubspace& associative_part_ref(const ModuleSignature& sig);
const RealSubspace& conjugate_associative_part_ref(const ModuleSignature& sig);
}  // namespace detail

/// Smallest subspace containing x and closed under the left action,
/// computed by a worklist closure over the seven imaginary generators.
RealSubspace submodule_closure(const ModuleElement& x);

/// x is cyclic iff dim <x> = 8. Throws ZeroElement for x = 0.
bool is_cyclic(const ModuleElement& x);

enum class CyclicClass { Plus, Minus };

/// C+ (submodule isomorphic to O) or C- (isomorphic to Obar); nullopt when
/// x is not cyclic.
std::optional<CyclicClass> cyclic_class(const ModuleElement& x);

}  // namespace octomod
