#pragma once

#include <vector>

#include "octomod/bimodule.hpp"

namespace octomod {

/// One cyclic summand: root * vector with the vector in A(M).
struct CyclicTerm {
  Octonion root;
  BimoduleElement vector;
};

/// m = sum root_i * vector_i with both the roots (in O) and the vectors
/// real-linearly independent. The term count is an invariant of m.
struct CyclicDecomposition {
  std::vector<CyclicTerm> terms;

  Eigen::Index length() const { return static_cast<Eigen::Index>(terms.size()); }
  /// sum_i root_i . vector_i
  BimoduleElement reconstruct() const;
};

/// Which dependent term the elimination passes fold away. The resulting
/// length is the same either way; the knob exists so tests can check that.
enum class PivotOrder { HighestIndex, LowestIndex };

/// Three-stage decomposition: coordinates over Re M + sum e_i Re M seed the
/// terms, then dependent vectors (merging roots) and dependent roots
/// (merging vectors) are eliminated alternately until both sets are
/// independent. Throws ZeroElement for m = 0. When trace is given, the term
/// list after every merge is appended to it (the running sum reconstructs m
/// at each step).
CyclicDecomposition decompose(const BimoduleElement& m,
                              PivotOrder order = PivotOrder::HighestIndex,
                              std::vector<CyclicDecomposition>* trace = nullptr);

/// Term count of a cyclic decomposition; equals dim<m>/8.
Eigen::Index length(const BimoduleElement& m);

/// <m> assembled as the sum of the O root_i vector_i from a cyclic
/// decomposition. Coincides with the worklist closure.
RealSubspace generated_submodule(const BimoduleElement& m);

/// Projective class of the characteristic root of a cyclic element:
/// primitive integer 8-vector with its first nonzero entry positive.
struct SigmaClass {
  Vec direction;

  friend bool operator==(const SigmaClass& a, const SigmaClass& b) {
    return a.direction == b.direction;
  }
  friend bool operator!=(const SigmaClass& a, const SigmaClass& b) { return !(a == b); }
};

/// Finds m = p.x with x in A(M) and returns the class of p, which does not
/// depend on the representation. Throws NotCyclic unless m is cyclic.
SigmaClass sigma_class(const BimoduleElement& m);

/// Whether the sum of two cyclic elements is cyclic: true when the
/// characteristic vectors are dependent or the sigma classes coincide.
/// Agrees with is_cyclic(m1 + m2).
bool sum_is_cyclic(const BimoduleElement& m1, const BimoduleElement& m2);

/// Whether O m = m O as subspaces; holds exactly for cyclic m.
bool commutes_with_octonions(const BimoduleElement& m);

}  // namespace octomod
