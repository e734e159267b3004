#pragma once

#include <array>

#include "octomod/module.hpp"

namespace octomod {

/// Element of a module that actually carries a bimodule structure, i.e.
/// whose signature has no conjugate slots.
class BimoduleElement {
 public:
  explicit BimoduleElement(ModuleElement el) : el_(std::move(el)) {
    if (el_.sig.m != 0)
      throw DomainError(ErrorCode::ConjugateSlotsPresent,
                        "bimodule operations require signature (n, 0)");
  }

  const ModuleElement& element() const { return el_; }
  const ModuleSignature& sig() const { return el_.sig; }

  friend bool operator==(const BimoduleElement& a, const BimoduleElement& b) {
    return a.el_ == b.el_;
  }
  friend bool operator!=(const BimoduleElement& a, const BimoduleElement& b) {
    return !(a == b);
  }

 private:
  ModuleElement el_;
};

/// The right action derived from the left one:
///   x e_i = e_i x - 1/4 sum_{j,k} eps_ijk [e_j,e_k,x],
/// extended real-linearly to x p. On the canonical O^n this is slotwise
/// right octonion multiplication.
BimoduleElement right_mul(const BimoduleElement& x, const Octonion& p);

/// x e_a for a basis index a in 0..7.
ModuleElement right_mul_basis(const ModuleElement& x, int a);

/// Matrix of x -> x e_i on the flattened module (i in 1..7).
Mat right_mul_matrix(const ModuleSignature& sig, int i);

/// The idempotent projector onto the associative part, computed through
/// both published forms
///   Re x = 5/12 x - 1/12 sum_i e_i x e_i
///   Re x = x + 1/48 sum_{ijk} eps_ijk e_i [e_j,e_k,x]
/// which are cross-asserted before returning.
BimoduleElement re_part(const BimoduleElement& x);

/// Coordinates of x over Re M + sum e_i Re M: returns (x_0,...,x_7) with
/// x_0 = Re x, x_i = -Re(e_i x), and x = x_0 + sum e_i x_i exactly.
std::array<BimoduleElement, 8> peirce_decompose(const BimoduleElement& x);

/// Z(M) = {x : p x = x p for all p}; equal to the associative part as a
/// canonical subspace.
RealSubspace center(const ModuleSignature& sig);

}  // namespace octomod
