#include "octomod/cyclic.hpp"

namespace octomod {

namespace {

Vec root_coeffs(const Octonion& r) {
  Vec v(8);
  for (int i = 0; i < 8; ++i) v[i] = r[i];
  return v;
}

Octonion root_from_coeffs(const Vec& v) {
  typename Octonion::Coeffs c;
  for (int i = 0; i < 8; ++i) c[i] = v[i];
  return Octonion(c);
}

/// Highest index whose vector lies in the span of the previous ones,
/// together with the coordinates over that independent prefix. Returns -1
/// when the family is independent.
struct Dependency {
  int index = -1;
  std::vector<std::pair<int, Rational>> coords;  // (earlier term, coefficient)
};

Dependency find_dependency(const std::vector<Vec>& vectors, PivotOrder order) {
  Dependency dep;
  if (vectors.empty()) return dep;
  RealSubspace span(vectors.front().size());
  std::vector<int> independent;
  for (int t = 0; t < static_cast<int>(vectors.size()); ++t) {
    if (span.insert(vectors[t])) {
      independent.push_back(t);
    } else if (order == PivotOrder::HighestIndex || dep.index < 0) {
      dep.index = t;
    }
  }
  if (dep.index < 0) return dep;

  std::vector<int> prefix_terms;
  for (int t : independent) {
    if (t > dep.index) break;
    prefix_terms.push_back(t);
  }
  // Unique coordinates of the dropped vector over the independent prefix:
  // sum_i c_i vectors[prefix_terms[i]] = vectors[dep.index].
  AffineSystem sys(static_cast<Eigen::Index>(prefix_terms.size()));
  for (Eigen::Index row = 0; row < vectors.front().size(); ++row) {
    Vec coeffs(static_cast<Eigen::Index>(prefix_terms.size()));
    for (size_t i = 0; i < prefix_terms.size(); ++i) coeffs[i] = vectors[prefix_terms[i]][row];
    sys.add_equation(coeffs, vectors[dep.index][row]);
  }
  if (!sys.feasible())
    throw DomainError(ErrorCode::InternalFormulaMismatch, "inconsistent dependency solve");
  const Vec c = sys.particular();
  for (size_t i = 0; i < prefix_terms.size(); ++i)
    if (!is_zero(c[i])) dep.coords.emplace_back(prefix_terms[i], c[i]);
  return dep;
}

}  // namespace

BimoduleElement CyclicDecomposition::reconstruct() const {
  if (terms.empty())
    throw DomainError(ErrorCode::ZeroElement, "empty decomposition has no signature");
  ModuleElement sum(terms.front().vector.sig());
  for (const CyclicTerm& t : terms) sum += left_mul(t.root, t.vector.element());
  return BimoduleElement(sum);
}

CyclicDecomposition decompose(const BimoduleElement& m, PivotOrder order,
                              std::vector<CyclicDecomposition>* trace) {
  if (m.element().is_zero())
    throw DomainError(ErrorCode::ZeroElement, "decompose of zero element");

  CyclicDecomposition out;
  const auto coords = peirce_decompose(m);
  for (int j = 0; j < 8; ++j) {
    if (coords[j].element().is_zero()) continue;
    out.terms.push_back({Octonion::unit(j), coords[j]});
  }

  while (true) {
    // Step A: vectors independent. A dependent vector is folded into the
    // others by merging roots.
    std::vector<Vec> vectors;
    vectors.reserve(out.terms.size());
    for (const CyclicTerm& t : out.terms) vectors.push_back(t.vector.element().flatten());
    Dependency dep = find_dependency(vectors, order);
    if (dep.index >= 0) {
      for (const auto& [i, c] : dep.coords)
        out.terms[i].root += c * out.terms[dep.index].root;
      out.terms.erase(out.terms.begin() + dep.index);
      if (trace) trace->push_back(out);
      continue;
    }

    // Step B: roots independent. A dependent root is folded into the
    // others by merging vectors.
    std::vector<Vec> roots;
    roots.reserve(out.terms.size());
    for (const CyclicTerm& t : out.terms) roots.push_back(root_coeffs(t.root));
    dep = find_dependency(roots, order);
    if (dep.index >= 0) {
      for (const auto& [i, c] : dep.coords) {
        ModuleElement v = out.terms[i].vector.element();
        ModuleElement delta = out.terms[dep.index].vector.element();
        delta *= c;
        v += delta;
        out.terms[i].vector = BimoduleElement(std::move(v));
      }
      out.terms.erase(out.terms.begin() + dep.index);
      if (trace) trace->push_back(out);
      continue;
    }
    break;
  }
  return out;
}

Eigen::Index length(const BimoduleElement& m) { return decompose(m).length(); }

RealSubspace generated_submodule(const BimoduleElement& m) {
  const CyclicDecomposition dec = decompose(m);
  RealSubspace span(m.sig().real_dim());
  for (const CyclicTerm& t : dec.terms) {
    const ModuleElement mi = left_mul(t.root, t.vector.element());
    for (int a = 0; a < 8; ++a) span.insert(left_mul_basis(a, mi).flatten());
  }
  return span;
}

namespace {

/// Characteristic pair (p, x) of a cyclic bimodule element: x spans
/// <m> n A(M) and m = p.x.
std::pair<Octonion, ModuleElement> characteristic_pair(const BimoduleElement& m) {
  const RealSubspace closure = submodule_closure(m.element());
  if (closure.dim() != 8)
    throw DomainError(ErrorCode::NotCyclic, "element does not generate an 8-dimensional module");
  const RealSubspace axis = intersect(closure, detail::associative_part_ref(m.sig()));
  if (axis.dim() != 1)
    throw DomainError(ErrorCode::InternalFormulaMismatch,
                      "cyclic bimodule element without a 1-dimensional associative axis");
  const ModuleElement x = ModuleElement::unflatten(m.sig(), axis.row(0));

  AffineSystem sys(8);
  std::array<Vec, 8> cols;
  for (int a = 0; a < 8; ++a) cols[a] = left_mul_basis(a, x).flatten();
  const Vec target = m.element().flatten();
  for (Eigen::Index row = 0; row < target.size(); ++row) {
    Vec coeffs(8);
    for (int a = 0; a < 8; ++a) coeffs[a] = cols[a][row];
    sys.add_equation(coeffs, target[row]);
  }
  if (!sys.feasible())
    throw DomainError(ErrorCode::InternalFormulaMismatch,
                      "cyclic element is not a left multiple of its associative axis");
  return {root_from_coeffs(sys.particular()), x};
}

}  // namespace

SigmaClass sigma_class(const BimoduleElement& m) {
  if (m.element().is_zero())
    throw DomainError(ErrorCode::ZeroElement, "sigma_class of zero element");
  const auto [p, x] = characteristic_pair(m);
  Vec dir = primitive_integer_vector(root_coeffs(p));
  for (Eigen::Index i = 0; i < dir.size(); ++i) {
    if (is_zero(dir[i])) continue;
    if (sgn(dir[i]) < 0) dir = -dir;
    break;
  }
  return SigmaClass{std::move(dir)};
}

bool sum_is_cyclic(const BimoduleElement& m1, const BimoduleElement& m2) {
  if (m1.element().is_zero() || m2.element().is_zero())
    throw DomainError(ErrorCode::ZeroElement, "sum_is_cyclic needs nonzero elements");
  if ((m1.element() + m2.element()).is_zero())
    throw DomainError(ErrorCode::ZeroElement, "m1 + m2 must be nonzero");
  const auto [p1, x1] = characteristic_pair(m1);
  const auto [p2, x2] = characteristic_pair(m2);

  RealSubspace span(m1.sig().real_dim());
  span.insert(x1.flatten());
  if (!span.insert(x2.flatten())) return true;  // dependent characteristic vectors
  return sigma_class(m1) == sigma_class(m2);
}

bool commutes_with_octonions(const BimoduleElement& m) {
  if (m.element().is_zero())
    throw DomainError(ErrorCode::ZeroElement, "commutes_with_octonions of zero element");
  RealSubspace left_span(m.sig().real_dim());
  RealSubspace right_span(m.sig().real_dim());
  for (int a = 0; a < 8; ++a) {
    left_span.insert(left_mul_basis(a, m.element()).flatten());
    right_span.insert(right_mul_basis(m.element(), a).flatten());
  }
  return left_span == right_span;
}

}  // namespace octomod
