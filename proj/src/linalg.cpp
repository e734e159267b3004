#include "octomod/linalg.hpp"

#include <algorithm>

namespace octomod {

RealSubspace RealSubspace::span_of_rows(const Mat& rows) {
  RealSubspace s(rows.cols());
  for (Eigen::Index r = 0; r < rows.rows(); ++r) s.insert(rows.row(r).transpose());
  return s;
}

Mat RealSubspace::basis() const {
  Mat b(dim(), ambient_);
  for (Eigen::Index r = 0; r < dim(); ++r) b.row(r) = rows_[r].transpose();
  return b;
}

Vec RealSubspace::reduce(Vec v) const {
  for (size_t r = 0; r < rows_.size(); ++r) {
    const Rational& c = v[pivots_[r]];
    if (!is_zero(c)) v -= c * rows_[r];
  }
  return v;
}

bool RealSubspace::insert(Vec v) {
  v = reduce(std::move(v));
  Eigen::Index lead = -1;
  for (Eigen::Index i = 0; i < ambient_; ++i) {
    if (!is_zero(v[i])) {
      lead = i;
      break;
    }
  }
  if (lead < 0) return false;
  v /= v[lead];
  for (size_t r = 0; r < rows_.size(); ++r) {
    const Rational& c = rows_[r][lead];
    if (!is_zero(c)) rows_[r] -= c * v;
  }
  const auto pos = std::upper_bound(pivots_.begin(), pivots_.end(), lead) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, lead);
  rows_.insert(rows_.begin() + pos, std::move(v));
  return true;
}

bool RealSubspace::contains(const Vec& v) const {
  Vec r = reduce(v);
  for (Eigen::Index i = 0; i < ambient_; ++i)
    if (!is_zero(r[i])) return false;
  return true;
}

std::optional<Vec> RealSubspace::coordinates(const Vec& v) const {
  Vec c(dim());
  Vec residue = v;
  for (size_t r = 0; r < rows_.size(); ++r) {
    c[r] = residue[pivots_[r]];
    if (!is_zero(c[r])) residue -= c[r] * rows_[r];
  }
  for (Eigen::Index i = 0; i < ambient_; ++i)
    if (!is_zero(residue[i])) return std::nullopt;
  return c;
}

RealSubspace intersect(const RealSubspace& a, const RealSubspace& b) {
  const Eigen::Index ra = a.dim(), rb = b.dim();
  RealSubspace out(a.ambient_dim());
  if (ra == 0 || rb == 0) return out;
  Mat m(a.ambient_dim(), ra + rb);
  for (Eigen::Index i = 0; i < ra; ++i) m.col(i) = a.row(i);
  for (Eigen::Index j = 0; j < rb; ++j) m.col(ra + j) = -b.row(j);
  const Mat ker = kernel_basis(m);
  for (Eigen::Index r = 0; r < ker.rows(); ++r) {
    Vec x = Vec::Zero(a.ambient_dim());
    for (Eigen::Index i = 0; i < ra; ++i)
      if (!is_zero(ker(r, i))) x += ker(r, i) * a.row(i);
    out.insert(std::move(x));
  }
  return out;
}

Mat kernel_basis(const Mat& A) {
  const Eigen::Index n = A.cols();
  RealSubspace rowspace(n);
  for (Eigen::Index r = 0; r < A.rows(); ++r) rowspace.insert(A.row(r).transpose());

  std::vector<bool> is_pivot(n, false);
  for (Eigen::Index p : rowspace.pivots()) is_pivot[p] = true;

  RealSubspace ker(n);
  for (Eigen::Index f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vec v = Vec::Zero(n);
    v[f] = 1;
    for (Eigen::Index r = 0; r < rowspace.dim(); ++r)
      v[rowspace.pivots()[r]] = -rowspace.row(r)[f];
    ker.insert(std::move(v));
  }
  return ker.basis();
}

void AffineSystem::add_equation(Vec coeffs, const Rational& rhs) {
  Vec row(n_ + 1);
  row.head(n_) = coeffs;
  row[n_] = rhs;
  if (rows_.insert(std::move(row)) && rows_.pivots().back() == n_) feasible_ = false;
}

Eigen::Index AffineSystem::rank() const {
  Eigen::Index r = rows_.dim();
  if (!feasible_) --r;  // the contradiction row is not a constraint on x
  return r;
}

Vec AffineSystem::particular() const {
  Vec x = Vec::Zero(n_);
  for (Eigen::Index r = 0; r < rows_.dim(); ++r) {
    const Eigen::Index p = rows_.pivots()[r];
    if (p < n_) x[p] = rows_.row(r)[n_];
  }
  return x;
}

Mat AffineSystem::kernel() const {
  std::vector<bool> is_pivot(n_, false);
  for (Eigen::Index p : rows_.pivots())
    if (p < n_) is_pivot[p] = true;

  RealSubspace ker(n_);
  for (Eigen::Index f = 0; f < n_; ++f) {
    if (is_pivot[f]) continue;
    Vec v = Vec::Zero(n_);
    v[f] = 1;
    for (Eigen::Index r = 0; r < rows_.dim(); ++r) {
      const Eigen::Index p = rows_.pivots()[r];
      if (p < n_) v[p] = -rows_.row(r)[f];
    }
    ker.insert(std::move(v));
  }
  return ker.basis();
}

Vec primitive_integer_vector(const Vec& v) {
  mpz_class lcm_den(1);
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (is_zero(v[i])) continue;
    mpz_class den = v[i].get_den();
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), den.get_mpz_t());
  }
  Vec w = v * Rational(lcm_den);
  mpz_class g(0);
  for (Eigen::Index i = 0; i < w.size(); ++i) {
    if (is_zero(w[i])) continue;
    mpz_class num = w[i].get_num();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
  }
  if (g != 0) w /= Rational(g);
  return w;
}

}  // namespace octomod
