#pragma once

#include <Eigen/Core>
#include <array>
#include <cstdint>

#include "octomod/errors.hpp"
#include "octomod/linalg.hpp"
#include "octomod/rational.hpp"

namespace octomod {

/// Product of two basis units: e_i * e_j = sign * e_index (index 0 = real unit).
struct BasisProduct {
  std::int8_t index;
  std::int8_t sign;
};

/// Oriented quaternionic lines of the multiplication table. Each ordered
/// triple (a,b,c) means e_a e_b = e_c, cyclically.
inline constexpr std::array<std::array<int, 3>, 7> kFanoLines = {
    {{1, 2, 3}, {1, 4, 5}, {1, 7, 6}, {2, 4, 6}, {2, 5, 7}, {3, 4, 7}, {3, 6, 5}}};

namespace detail {

constexpr std::array<std::array<BasisProduct, 8>, 8> build_basis_table() {
  std::array<std::array<BasisProduct, 8>, 8> t{};
  for (int j = 0; j < 8; ++j) {
    t[0][j] = {static_cast<std::int8_t>(j), 1};
    t[j][0] = {static_cast<std::int8_t>(j), 1};
  }
  for (int i = 1; i < 8; ++i) t[i][i] = {0, -1};
  for (const auto& line : kFanoLines) {
    const auto a = static_cast<std::int8_t>(line[0]);
    const auto b = static_cast<std::int8_t>(line[1]);
    const auto c = static_cast<std::int8_t>(line[2]);
    t[a][b] = {c, 1};
    t[b][a] = {c, -1};
    t[b][c] = {a, 1};
    t[c][b] = {a, -1};
    t[c][a] = {b, 1};
    t[a][c] = {b, -1};
  }
  return t;
}

}  // namespace detail

inline constexpr auto kBasisTable = detail::build_basis_table();

/// An octonion over an exact scalar field. Coefficient 0 is the real part,
/// coefficients 1..7 multiply the imaginary units e_1..e_7.
template <typename Scalar = Rational>
class OctonionT {
 public:
  using Coeffs = Eigen::Matrix<Scalar, 8, 1>;

  OctonionT() : c_(Coeffs::Zero()) {}
  explicit OctonionT(Coeffs c) : c_(std::move(c)) {}

  static OctonionT zero() { return OctonionT(); }
  static OctonionT one() { return unit(0); }
  /// e_i for i in 1..7; unit(0) is the real unit 1.
  static OctonionT unit(int i) {
    OctonionT o;
    o.c_[i] = Scalar(1);
    return o;
  }
  static OctonionT scalar(Scalar s) {
    OctonionT o;
    o.c_[0] = std::move(s);
    return o;
  }

  const Coeffs& coeffs() const { return c_; }
  Coeffs& coeffs() { return c_; }
  const Scalar& operator[](Eigen::Index i) const { return c_[i]; }
  Scalar& operator[](Eigen::Index i) { return c_[i]; }

  bool is_zero() const {
    for (int i = 0; i < 8; ++i)
      if (c_[i] != Scalar(0)) return false;
    return true;
  }

  friend bool operator==(const OctonionT& a, const OctonionT& b) { return a.c_ == b.c_; }
  friend bool operator!=(const OctonionT& a, const OctonionT& b) { return !(a == b); }

  OctonionT& operator+=(const OctonionT& o) {
    c_ += o.c_;
    return *this;
  }
  OctonionT& operator-=(const OctonionT& o) {
    c_ -= o.c_;
    return *this;
  }
  OctonionT& operator*=(const Scalar& s) {
    c_ *= s;
    return *this;
  }

  friend OctonionT operator+(OctonionT a, const OctonionT& b) { return a += b; }
  friend OctonionT operator-(OctonionT a, const OctonionT& b) { return a -= b; }
  friend OctonionT operator-(const OctonionT& a) { return OctonionT(-a.coeffs()); }
  friend OctonionT operator*(OctonionT a, const Scalar& s) { return a *= s; }
  friend OctonionT operator*(const Scalar& s, OctonionT a) { return a *= s; }

 private:
  Coeffs c_;
};

using Octonion = OctonionT<Rational>;

/// Bilinear extension of the basis table.
template <typename S>
OctonionT<S> mul(const OctonionT<S>& a, const OctonionT<S>& b) {
  OctonionT<S> out;
  for (int i = 0; i < 8; ++i) {
    const S& ai = a[i];
    if (ai == S(0)) continue;
    for (int j = 0; j < 8; ++j) {
      const S& bj = b[j];
      if (bj == S(0)) continue;
      const BasisProduct p = kBasisTable[i][j];
      if (p.sign > 0)
        out[p.index] += ai * bj;
      else
        out[p.index] -= ai * bj;
    }
  }
  return out;
}

template <typename S>
OctonionT<S> operator*(const OctonionT<S>& a, const OctonionT<S>& b) {
  return mul(a, b);
}

/// e_a * x for a basis index a in 0..7 (8 signed coefficient moves).
template <typename S>
OctonionT<S> basis_mul_left(int a, const OctonionT<S>& x) {
  OctonionT<S> out;
  for (int j = 0; j < 8; ++j) {
    if (x[j] == S(0)) continue;
    const BasisProduct p = kBasisTable[a][j];
    if (p.sign > 0)
      out[p.index] += x[j];
    else
      out[p.index] -= x[j];
  }
  return out;
}

/// x * e_a for a basis index a in 0..7.
template <typename S>
OctonionT<S> basis_mul_right(const OctonionT<S>& x, int a) {
  OctonionT<S> out;
  for (int j = 0; j < 8; ++j) {
    if (x[j] == S(0)) continue;
    const BasisProduct p = kBasisTable[j][a];
    if (p.sign > 0)
      out[p.index] += x[j];
    else
      out[p.index] -= x[j];
  }
  return out;
}

template <typename S>
OctonionT<S> conj(const OctonionT<S>& a) {
  OctonionT<S> out = -a;
  out[0] = a[0];
  return out;
}

template <typename S>
S re(const OctonionT<S>& a) {
  return a[0];
}

template <typename S>
OctonionT<S> im(const OctonionT<S>& a) {
  OctonionT<S> out = a;
  out[0] = S(0);
  return out;
}

/// |a|^2 as a sum of squares; square roots are never taken.
template <typename S>
S norm_sq(const OctonionT<S>& a) {
  S s(0);
  for (int i = 0; i < 8; ++i) s += a[i] * a[i];
  return s;
}

template <typename S>
OctonionT<S> inverse(const OctonionT<S>& a) {
  const S n = norm_sq(a);
  if (n == S(0)) throw DomainError(ErrorCode::DivisionByZero, "inverse of zero octonion");
  return conj(a) * (S(1) / n);
}

/// [x,y,z] = (xy)z - x(yz). Alternating with zero real part.
template <typename S>
OctonionT<S> associator(const OctonionT<S>& x, const OctonionT<S>& y, const OctonionT<S>& z) {
  return mul(mul(x, y), z) - mul(x, mul(y, z));
}

template <typename S>
OctonionT<S> commutator(const OctonionT<S>& x, const OctonionT<S>& y) {
  return mul(x, y) - mul(y, x);
}

/// <<p,q,r>> = [p,q,r] + r[p,q]; the associator transported through a
/// conjugate slot: [p,q,rx] = <<p,q,r>> x for conjugate-associative x.
template <typename S>
OctonionT<S> double_assoc(const OctonionT<S>& p, const OctonionT<S>& q, const OctonionT<S>& r) {
  return associator(p, q, r) + mul(r, commutator(p, q));
}

/// u x v = Im(uv) on imaginary arguments.
template <typename S>
OctonionT<S> cross(const OctonionT<S>& u, const OctonionT<S>& v) {
  if (re(u) != S(0) || re(v) != S(0))
    throw DomainError(ErrorCode::NotImaginary, "cross product requires imaginary arguments");
  return im(mul(u, v));
}

/// x^2 == -1, i.e. x lies on the unit sphere of imaginary octonions.
template <typename S>
bool is_imaginary_unit(const OctonionT<S>& x) {
  return mul(x, x) == OctonionT<S>::scalar(S(-1));
}

/// Rescales a rational vector to the primitive integer vector on the same
/// ray (gcd of numerators 1), preserving orientation.
Vec primitive_integer_vector(const Vec& v);

/// The primitive integer vector along Im x. Two non-real octonions lie in
/// the same complex slice C_J exactly when these agree up to sign.
inline Octonion imaginary_direction(const Octonion& x) {
  const Octonion imx = im(x);
  if (imx.is_zero())
    throw DomainError(ErrorCode::RealArgument, "imaginary_direction of a real octonion");
  Vec v(8);
  for (int i = 0; i < 8; ++i) v[i] = imx[i];
  v = primitive_integer_vector(v);
  typename Octonion::Coeffs c;
  for (int i = 0; i < 8; ++i) c[i] = v[i];
  return Octonion(c);
}

/// Exact basis of the associative subspace Lambda(u,v) = {x in Im O :
/// [u,v,x] = 0} for independent imaginary u, v. Always 3-dimensional and
/// contains u, v and u x v.
inline RealSubspace assoc_subspace(const Octonion& u, const Octonion& v) {
  if (re(u) != Rational(0) || re(v) != Rational(0))
    throw DomainError(ErrorCode::DependentArguments, "arguments must be imaginary");
  {
    RealSubspace span(8);
    Vec uc(8), vc(8);
    for (int i = 0; i < 8; ++i) {
      uc[i] = u[i];
      vc[i] = v[i];
    }
    span.insert(uc);
    if (!span.insert(vc))
      throw DomainError(ErrorCode::DependentArguments, "arguments must be independent");
  }
  // Kernel of x -> [u,v,x] restricted to Im O, re-embedded into R^8.
  Mat map(8, 7);
  for (int a = 1; a < 8; ++a) {
    const Octonion col = associator(u, v, Octonion::unit(a));
    for (int r = 0; r < 8; ++r) map(r, a - 1) = col[r];
  }
  const Mat ker = kernel_basis(map);
  RealSubspace out(8);
  for (Eigen::Index r = 0; r < ker.rows(); ++r) {
    Vec x = Vec::Zero(8);
    for (int a = 1; a < 8; ++a) x[a] = ker(r, a - 1);
    out.insert(std::move(x));
  }
  return out;
}

}  // namespace octomod
