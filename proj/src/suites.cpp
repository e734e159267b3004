#include "octomod/suites.hpp"

#include <sstream>

#include "octomod/cyclic.hpp"
#include "octomod/epsilon.hpp"
#include "octomod/solver.hpp"

namespace octomod {

namespace {

SuiteReport identities_suite() {
  SuiteReport rep{"identities", {}};
  const IdentityReport ir = verify_contraction_identities();
  for (const auto& c : ir.checks)
    rep.lines.push_back({c.identity, c.pass, c.first_failure});
  return rep;
}

bool candidates_equal(const RightMultCandidate& a, const RightMultCandidate& b) {
  if (a.sig != b.sig) return false;
  for (int i = 0; i < 7; ++i)
    if (a.R[i] != b.R[i]) return false;
  return true;
}

SuiteReport bimodule_suite() {
  SuiteReport rep{"bimodule-theorems", {}};
  struct Case {
    int n, m;
    SolveStatus expect;
  };
  const Case cases[] = {{1, 0, SolveStatus::Unique},
                        {2, 0, SolveStatus::Unique},
                        {0, 1, SolveStatus::Infeasible},
                        {1, 1, SolveStatus::Infeasible},
                        {0, 2, SolveStatus::Infeasible}};
  for (const Case& c : cases) {
    const ModuleSignature sig(c.n, c.m);
    const SolveOutcome out = impose_quadratic(solve_linear_stage(sig));
    std::ostringstream label;
    label << "(" << c.n << "," << c.m << ") -> " << to_string(c.expect);
    bool pass = out.status == c.expect;
    std::string detail = std::string("got ") + to_string(out.status);
    if (pass && c.expect == SolveStatus::Unique) {
      const bool canonical = candidates_equal(out.solutions.at(0), canonical_bimodule(sig));
      const bool verified = verify_bimodule(out.solutions.at(0)).pass();
      pass = canonical && verified;
      if (!canonical) detail += "; solution differs from canonical";
      if (!verified) detail += "; solution fails verification";
    }
    if (pass && admits_bimodule(sig) != (c.expect == SolveStatus::Unique)) {
      pass = false;
      detail += "; admits_bimodule disagrees with the solver";
    }
    rep.lines.push_back({label.str(), pass, detail});
  }
  return rep;
}

ModuleElement elem3(const Octonion& a, const Octonion& b, const Octonion& c) {
  return ModuleElement(ModuleSignature(3, 0), {a, b, c});
}

RealSubspace orbit_span(const std::vector<ModuleElement>& gens) {
  RealSubspace s(gens.front().sig.real_dim());
  for (const auto& g : gens)
    for (int a = 0; a < 8; ++a) s.insert(left_mul_basis(a, g).flatten());
  return s;
}

SuiteReport cyclic_suite() {
  SuiteReport rep{"cyclic-examples", {}};
  const Octonion one = Octonion::one();
  const Octonion e1 = Octonion::unit(1), e2 = Octonion::unit(2), e3 = Octonion::unit(3);
  const Octonion zero;

  {
    // m = (e1, e2, e1+e2): two terms, <m> = O(1,0,1) + O(0,1,1).
    const BimoduleElement m(elem3(e1, e2, e1 + e2));
    const CyclicDecomposition dec = decompose(m);
    const RealSubspace gen = generated_submodule(m);
    const RealSubspace closure = submodule_closure(m.element());
    const RealSubspace expected =
        orbit_span({elem3(one, zero, one), elem3(zero, one, one)});
    const bool pass = dec.length() == 2 && gen.dim() == 16 && gen == closure &&
                      gen == expected && dec.reconstruct() == m;
    std::ostringstream detail;
    detail << "length " << dec.length() << ", dim " << gen.dim();
    rep.lines.push_back({"(e1, e2, e1+e2): length 2, <m> = O(1,0,1) + O(0,1,1)", pass,
                         detail.str()});
  }
  {
    // m = (e1, e2, e3): three terms, <m> = O^3.
    const BimoduleElement m(elem3(e1, e2, e3));
    const CyclicDecomposition dec = decompose(m);
    const RealSubspace gen = generated_submodule(m);
    const bool pass = dec.length() == 3 && gen.dim() == 24 &&
                      gen == submodule_closure(m.element()) && dec.reconstruct() == m;
    std::ostringstream detail;
    detail << "length " << dec.length() << ", dim " << gen.dim();
    rep.lines.push_back({"(e1, e2, e3): length 3, <m> = O^3", pass, detail.str()});
  }
  {
    // m = (1, 1+e1, e1): two terms, <m> = O(1,1,0) + O(0,1,1) ~ O^2.
    const BimoduleElement m(elem3(one, one + e1, e1));
    const CyclicDecomposition dec = decompose(m);
    const RealSubspace gen = generated_submodule(m);
    const RealSubspace expected =
        orbit_span({elem3(one, one, zero), elem3(zero, one, one)});
    const bool pass = dec.length() == 2 && gen.dim() == 16 &&
                      gen == submodule_closure(m.element()) && gen == expected &&
                      dec.reconstruct() == m;
    std::ostringstream detail;
    detail << "length " << dec.length() << ", dim " << gen.dim();
    rep.lines.push_back({"(1, 1+e1, e1): length 2, <m> ~ O^2", pass, detail.str()});
  }
  return rep;
}

}  // namespace

SuiteReport run_suite(const std::string& name) {
  if (name == "identities") return identities_suite();
  if (name == "bimodule-theorems") return bimodule_suite();
  if (name == "cyclic-examples") return cyclic_suite();
  throw DomainError(ErrorCode::UnknownSuite,
                    "unknown suite '" + name +
                        "'; expected identities, bimodule-theorems or cyclic-examples");
}

}  // namespace octomod
