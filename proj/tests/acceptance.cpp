// Acceptance suite: one pass/fail line per criterion, exact arithmetic
// throughout. Returns the number of failing criteria.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

#include "octomod/cyclic.hpp"
#include "octomod/epsilon.hpp"
#include "octomod/solver.hpp"
#include "support/random_values.hpp"

using namespace octomod;
using octomod::testing::Rng;
using octomod::testing::random_element;
using octomod::testing::random_element_of_length;
using octomod::testing::random_nonzero_element;
using octomod::testing::random_octonion;
using octomod::testing::random_rational;

namespace {

struct Checker {
  bool ok = true;
  std::ostringstream log;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      if (!ok) log << "; ";
      ok = false;
      log << what;
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Octonion pow_oct(const Octonion& p, int k) {
  Octonion out = Octonion::one();
  for (int i = 0; i < k; ++i) out = mul(out, p);
  return out;
}

ModuleElement random_associative_element(Rng& rng, const ModuleSignature& sig) {
  const RealSubspace& a = detail::associative_part_ref(sig);
  Vec combo = Vec::Zero(sig.real_dim());
  for (Eigen::Index r = 0; r < a.dim(); ++r) combo += random_rational(rng, 3, 1) * a.row(r);
  return ModuleElement::unflatten(sig, combo);
}

// --- criterion 1 -----------------------------------------------------------

void criterion_identities(Checker& c) {
  const auto t0 = std::chrono::steady_clock::now();
  const IdentityReport rep = verify_contraction_identities();
  const double elapsed = seconds_since(t0);
  c.require(rep.checks.size() == 4, "expected four identities");
  for (const auto& chk : rep.checks)
    c.require(chk.pass, chk.identity + " failed at " + chk.first_failure);
  c.require(elapsed < 1.0, "runtime exceeded 1 s");
}

// --- criterion 2 -----------------------------------------------------------

void criterion_algebra_laws(Checker& c) {
  const auto t0 = std::chrono::steady_clock::now();
  Rng rng(101);
  for (int k = 0; k < 10000 && c.ok; ++k) {
    const Octonion x = random_octonion(rng), y = random_octonion(rng),
                   z = random_octonion(rng);
    c.require(associator(x, x, y).is_zero(), "alternativity [x,x,y] != 0");
    c.require(norm_sq(mul(x, y)) == norm_sq(x) * norm_sq(y), "composition law failed");
    const Octonion xyx = mul(mul(x, y), x);
    c.require(mul(xyx, z) == mul(x, mul(y, mul(x, z))), "Moufang (xyx)z failed");
    c.require(mul(z, xyx) == mul(mul(mul(z, x), y), x), "Moufang z(xyx) failed");
    c.require(mul(mul(x, mul(y, z)), x) == mul(mul(x, y), mul(z, x)),
              "Moufang x(yz)x failed");
  }
  const double elapsed = seconds_since(t0);
  c.require(elapsed < 10.0, "runtime exceeded 10 s");
}

// --- criterion 3 -----------------------------------------------------------

void criterion_module_laws(Checker& c) {
  for (const ModuleSignature sig :
       {ModuleSignature(1, 0), ModuleSignature(0, 1), ModuleSignature(2, 1)}) {
    Rng rng(102 + sig.n * 10 + sig.m);
    for (int k = 0; k < 1000 && c.ok; ++k) {
      const Octonion p = random_octonion(rng, 4, 2), q = random_octonion(rng, 4, 2),
                     r = random_octonion(rng, 4, 2);
      const ModuleElement x = random_element(rng, sig, 4, 2);

      c.require(module_associator(p, q, x) + module_associator(q, p, x) == ModuleElement(sig),
                "left alternativity failed");

      const ModuleElement lhs =
          left_mul(associator(p, q, r), x) + left_mul(p, module_associator(q, r, x));
      const ModuleElement rhs = module_associator(mul(p, q), r, x) -
                                module_associator(p, mul(q, r), x) +
                                module_associator(p, q, left_mul(r, x));
      c.require(lhs == rhs, "product-associator identity failed");

      const int a = 1 + k % 4, b = 1 + (k / 4) % 4;
      c.require(left_mul(pow_oct(p, a), left_mul(pow_oct(p, b), x)) ==
                    left_mul(pow_oct(p, a + b), x),
                "power associativity failed");
    }
  }
  {
    Rng rng(103);
    const ModuleSignature bar(0, 1);
    for (int k = 0; k < 1000 && c.ok; ++k) {
      const Octonion p = random_octonion(rng, 4, 2), q = random_octonion(rng, 4, 2),
                     x = random_octonion(rng, 4, 2);
      const Octonion expected = associator(p, q, x) + mul(conj(commutator(p, q)), x);
      c.require(module_associator(p, q, ModuleElement(bar, {x})) ==
                    ModuleElement(bar, {expected}),
                "conjugate-module associator formula failed");
    }
  }
}

// --- criterion 4 -----------------------------------------------------------

void criterion_solver(Checker& c) {
  const auto t0 = std::chrono::steady_clock::now();
  struct Case {
    int n, m;
    SolveStatus expect;
  };
  for (const Case cs : {Case{1, 0, SolveStatus::Unique}, Case{2, 0, SolveStatus::Unique},
                        Case{0, 1, SolveStatus::Infeasible}, Case{1, 1, SolveStatus::Infeasible},
                        Case{0, 2, SolveStatus::Infeasible}}) {
    const ModuleSignature sig(cs.n, cs.m);
    std::ostringstream name;
    name << "(" << cs.n << "," << cs.m << ")";
    const SolveOutcome out = impose_quadratic(solve_linear_stage(sig));
    c.require(out.status == cs.expect,
              name.str() + " expected " + to_string(cs.expect) + ", got " +
                  to_string(out.status));
    if (out.status == SolveStatus::Unique) {
      const RightMultCandidate canon = canonical_bimodule(sig);
      bool equal = out.solutions.size() == 1;
      for (int i = 0; equal && i < 7; ++i) equal = out.solutions[0].R[i] == canon.R[i];
      c.require(equal, name.str() + " solution differs from canonical");
    }
    c.require(admits_bimodule(sig) == (cs.expect == SolveStatus::Unique),
              name.str() + " admits_bimodule disagrees with the solver");
  }
  const double elapsed = seconds_since(t0);
  c.require(elapsed < 60.0, "runtime exceeded 60 s");
}

// --- criterion 5 -----------------------------------------------------------

void criterion_real_part(Checker& c) {
  Rng rng(104);
  for (int n = 1; n <= 4 && c.ok; ++n) {
    const ModuleSignature sig(n, 0);
    const RealSubspace assoc = associative_part(sig);
    c.require(center(sig) == assoc, "center != associative part");

    // Re M as the span of re_part over the coordinate basis
    RealSubspace image(sig.real_dim());
    for (Eigen::Index v = 0; v < sig.real_dim(); ++v) {
      Vec e = Vec::Zero(sig.real_dim());
      e[v] = 1;
      image.insert(
          re_part(BimoduleElement(ModuleElement::unflatten(sig, e))).element().flatten());
    }
    c.require(image == assoc, "Re M != associative part");

    for (int k = 0; k < 250 && c.ok; ++k) {
      const ModuleElement x = random_element(rng, sig, 4, 2);
      const BimoduleElement xe(x);
      // re_part itself cross-asserts the two published formulas
      const BimoduleElement rx = re_part(xe);
      c.require(re_part(rx) == rx, "projector is not idempotent");
      ModuleElement recon = rx.element();
      for (int i = 1; i <= 7; ++i) {
        ModuleElement term =
            re_part(BimoduleElement(left_mul_basis(i, x))).element();
        term *= Rational(-1);
        recon += left_mul_basis(i, term);
      }
      c.require(recon == x, "x = Re x - sum e_i Re(e_i x) failed");
    }
  }
}

// --- criterion 6 -----------------------------------------------------------

void criterion_right_action(Checker& c) {
  for (int n = 1; n <= 4 && c.ok; ++n) {
    const ModuleSignature sig(n, 0);
    RightMultCandidate derived{sig, {}};
    for (int i = 1; i <= 7; ++i) derived.R[i - 1] = right_mul_matrix(sig, i);

    const RightMultCandidate canon = canonical_bimodule(sig);
    for (int i = 0; i < 7; ++i)
      c.require(derived.R[i] == canon.R[i], "derived action is not slotwise multiplication");

    const BimoduleVerifyReport rep = verify_bimodule(derived);
    std::ostringstream what;
    what << "derived action violates " << rep.violations.size()
         << " associator equalities on n=" << n;
    c.require(rep.pass(), what.str());
  }
}

// --- criterion 7 -----------------------------------------------------------

void criterion_worked_examples(Checker& c) {
  const ModuleSignature sig(3, 0);
  const Octonion one = Octonion::one(), zero;
  const Octonion e1 = Octonion::unit(1), e2 = Octonion::unit(2), e3 = Octonion::unit(3);

  auto orbit = [&](std::vector<ModuleElement> gens) {
    RealSubspace s(sig.real_dim());
    for (const auto& g : gens)
      for (int a = 0; a < 8; ++a) s.insert(left_mul_basis(a, g).flatten());
    return s;
  };

  {
    const BimoduleElement m(ModuleElement(sig, {e1, e2, e1 + e2}));
    c.require(length(m) == 2, "(e1,e2,e1+e2) length != 2");
    const RealSubspace gen = generated_submodule(m);
    c.require(gen.dim() == 16, "(e1,e2,e1+e2) submodule dim != 16");
    c.require(gen == orbit({ModuleElement(sig, {one, zero, one}),
                            ModuleElement(sig, {zero, one, one})}),
              "(e1,e2,e1+e2) submodule is not O(1,0,1) + O(0,1,1)");
  }
  {
    const BimoduleElement m(ModuleElement(sig, {e1, e2, e3}));
    c.require(length(m) == 3, "(e1,e2,e3) length != 3");
    const RealSubspace gen = generated_submodule(m);
    c.require(gen.dim() == 24, "(e1,e2,e3) does not generate O^3");
  }
  {
    const BimoduleElement m(ModuleElement(sig, {one, one + e1, e1}));
    c.require(length(m) == 2, "(1,1+e1,e1) length != 2");
    const RealSubspace gen = generated_submodule(m);
    c.require(gen.dim() == 16, "(1,1+e1,e1) submodule dim != 16");
    c.require(gen == orbit({ModuleElement(sig, {one, one, zero}),
                            ModuleElement(sig, {zero, one, one})}),
              "(1,1+e1,e1) submodule is not O(1,1,0) + O(0,1,1)");
  }
}

// --- criterion 8 -----------------------------------------------------------

void criterion_oracle_equivalence(Checker& c) {
  Rng rng(105);
  int tested = 0;
  for (int n = 1; n <= 8; ++n) {
    const ModuleSignature sig(n, 0);
    for (int k = 0; k < 125 && c.ok; ++k) {
      ModuleElement m(sig);
      if (k % 2 == 0) {
        m = random_nonzero_element(rng, sig, 2, 1);
      } else {
        m = random_element_of_length(rng, sig, 1 + k % std::min(8, n + 1));
        if (m.is_zero()) m = random_nonzero_element(rng, sig, 2, 1);
      }
      ++tested;
      const BimoduleElement mb(m);
      const RealSubspace closure = submodule_closure(m);
      const RealSubspace gen = generated_submodule(mb);
      c.require(gen == closure, "generated submodule != closure");
      c.require(8 * length(mb) == closure.dim(), "length != dim/8");
      c.require(closure.dim() <= 64, "closure dimension exceeds 64");
      c.require(commutes_with_octonions(mb) == (closure.dim() == 8),
                "Om = mO does not match cyclicity");
    }
  }
  c.require(tested == 1000, "expected 1000 elements");
}

// --- criterion 9 -----------------------------------------------------------

Mat right_mult_octonion_matrix(const Octonion& q) {
  Mat m(8, 8);
  for (int a = 0; a < 8; ++a) {
    const Octonion col = mul(Octonion::unit(a), q);
    for (int r = 0; r < 8; ++r) m(r, a) = col[r];
  }
  return m;
}

Mat left_mult_octonion_matrix(const Octonion& q) {
  Mat m(8, 8);
  for (int a = 0; a < 8; ++a) {
    const Octonion col = mul(q, Octonion::unit(a));
    for (int r = 0; r < 8; ++r) m(r, a) = col[r];
  }
  return m;
}

Eigen::Index twisted_commutant_dim(const std::vector<Mat>& p, const std::vector<Mat>& q) {
  const Eigen::Index conds = static_cast<Eigen::Index>(p.size());
  Mat stacked = Mat::Zero(conds * 64, 64);
  for (Eigen::Index t = 0; t < conds; ++t)
    for (Eigen::Index r = 0; r < 8; ++r)
      for (Eigen::Index col = 0; col < 8; ++col) {
        const Eigen::Index row = t * 64 + r * 8 + col;
        for (Eigen::Index b = 0; b < 8; ++b) {
          stacked(row, 8 * r + b) += p[t](b, col);
          stacked(row, 8 * b + col) -= q[t](r, b);
        }
      }
  return kernel_basis(stacked).rows();
}

void criterion_twisted_commutants(Checker& c) {
  std::vector<Mat> lp, lq_conj, rp, lq;
  for (int i = 1; i <= 7; ++i) {
    lp.push_back(left_mult_octonion_matrix(Octonion::unit(i)));
    lq_conj.push_back(left_mult_octonion_matrix(conj(Octonion::unit(i))));
    rp.push_back(right_mult_octonion_matrix(Octonion::unit(i)));
    lq.push_back(left_mult_octonion_matrix(Octonion::unit(i)));
  }
  c.require(twisted_commutant_dim(lp, lq_conj) == 0, "f(px) = conj(p) f(x) has solutions");
  c.require(twisted_commutant_dim(rp, lq) == 0, "f(xq) = q f(x) has solutions");

  for (int a = 0; a < 8; ++a) {
    const auto rec = classify_almost_linear(right_mult_octonion_matrix(Octonion::unit(a)));
    c.require(rec.has_value() && *rec == Octonion::unit(a),
              "right multiplication not recovered");
  }
  for (int i = 1; i <= 7; ++i)
    c.require(!classify_almost_linear(left_mult_octonion_matrix(Octonion::unit(i))).has_value(),
              "left multiplication wrongly accepted");
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    std::string name;
    std::function<void(Checker&)> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "epsilon contraction identities, exhaustive, < 1 s", criterion_identities},
      {2, "algebra laws on 10^4 random octonion tuples, < 10 s", criterion_algebra_laws},
      {3, "module laws on 10^3 random tuples per signature", criterion_module_laws},
      {4, "bimodule solver classification on five signatures, < 60 s", criterion_solver},
      {5, "real-part theorem on (1,0)..(4,0)", criterion_real_part},
      {6, "derived right action on (n,0), n <= 4", criterion_right_action},
      {7, "worked cyclic decompositions on O^3", criterion_worked_examples},
      {8, "closure oracle equivalence on 10^3 elements across (n,0), n <= 8",
       criterion_oracle_equivalence},
      {9, "twisted commutants vanish; almost-linear round trip", criterion_twisted_commutants},
  };

  int failures = 0;
  for (const auto& crit : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Checker c;
    try {
      crit.run(c);
    } catch (const std::exception& e) {
      c.require(false, std::string("exception: ") + e.what());
    }
    const double elapsed = seconds_since(t0);
    std::ostringstream line;
    line << (c.ok ? "[PASS]" : "[FAIL]") << " criterion " << crit.id << ": " << crit.name
         << " (" << elapsed << " s)";
    if (!c.ok) line << " -- " << c.log.str();
    std::cout << line.str() << "\n";
    if (!c.ok) ++failures;
  }
  std::cout << (failures == 0 ? "all criteria passed" : "FAILURES PRESENT") << "\n";
  return failures;
}
