#pragma once

#include <Eigen/Core>
#include <optional>
#include <vector>

#include "octomod/rational.hpp"

namespace octomod {

/// A subspace of Q^n held as reduced row echelon basis rows. RREF is a
/// canonical form, so two subspaces are equal iff their bases are
/// componentwise equal.
class RealSubspace {
 public:
  explicit RealSubspace(Eigen::Index ambient_dim) : ambient_(ambient_dim) {}
  static RealSubspace span_of_rows(const Mat& rows);

  Eigen::Index ambient_dim() const { return ambient_; }
  Eigen::Index dim() const { return static_cast<Eigen::Index>(rows_.size()); }
  Mat basis() const;
  const Vec& row(size_t i) const { return rows_[i]; }
  const std::vector<Eigen::Index>& pivots() const { return pivots_; }

  /// Inserts v into the span; returns true when the dimension grew.
  bool insert(Vec v);
  bool contains(const Vec& v) const;
  /// Residue of v after eliminating against the basis rows.
  Vec reduce(Vec v) const;
  /// Coordinates of v over the basis rows, or nullopt when v lies outside.
  std::optional<Vec> coordinates(const Vec& v) const;

  friend bool operator==(const RealSubspace& a, const RealSubspace& b) {
    if (a.ambient_ != b.ambient_ || a.rows_.size() != b.rows_.size()) return false;
    for (size_t i = 0; i < a.rows_.size(); ++i)
      if (a.rows_[i] != b.rows_[i]) return false;
    return true;
  }
  friend bool operator!=(const RealSubspace& a, const RealSubspace& b) { return !(a == b); }

 private:
  Eigen::Index ambient_;
  std::vector<Vec> rows_;
  std::vector<Eigen::Index> pivots_;
};

RealSubspace intersect(const RealSubspace& a, const RealSubspace& b);

/// Canonical basis rows of {x : A x = 0}.
Mat kernel_basis(const Mat& A);

/// Exact streaming solver for a linear system fed one equation at a time.
/// Keeps the augmented matrix [A | b] in rref, so memory stays bounded by
/// the rank no matter how many equations are added.
class AffineSystem {
 public:
  explicit AffineSystem(Eigen::Index unknowns) : n_(unknowns), rows_(unknowns + 1) {}

  void add_equation(Vec coeffs, const Rational& rhs);
  bool feasible() const { return feasible_; }
  Eigen::Index rank() const;
  Eigen::Index unknowns() const { return n_; }
  /// Particular solution with all free variables set to zero.
  Vec particular() const;
  /// Canonical basis rows of the homogeneous solution space.
  Mat kernel() const;

 private:
  Eigen::Index n_;
  RealSubspace rows_;
  bool feasible_ = true;
};

/// Rescales a rational vector to the primitive integer vector on the same
/// oriented ray.
Vec primitive_integer_vector(const Vec& v);

}  // namespace octomod
