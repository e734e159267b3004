#include "octomod/solver.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

namespace octomod {

namespace {

bool column_is_zero(const Mat& m, Eigen::Index v) {
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    if (!is_zero(m(r, v))) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Generic exact solver for matrix equations f(P_t x) = Q_t f(x) + C_t x with
// signed-permutation P_t, Q_t. Columns of f are parameterized by a spanning
// forest over the P_t edges, so the unknown count is (#roots * Db) rather
// than Da * Db.

struct MatrixConstraint {
  SignedPerm P;
  SignedPerm Q;
  Mat C;  // Db x Da; empty means zero
};

struct AffineMatFamily {
  bool feasible = false;
  Mat particular;
  std::vector<Mat> kernel;
};

AffineMatFamily solve_matrix_constraints(Eigen::Index da, Eigen::Index db,
                                         const std::vector<MatrixConstraint>& cons) {
  struct Origin {
    Eigen::Index constraint = -1;  // -1: root
    Eigen::Index source = -1;
    Eigen::Index root_slot = -1;
  };
  std::vector<Origin> origin(da);
  std::vector<bool> visited(da, false);
  std::vector<Eigen::Index> order;
  Eigen::Index roots = 0;
  for (Eigen::Index start = 0; start < da; ++start) {
    if (visited[start]) continue;
    visited[start] = true;
    origin[start] = {-1, -1, roots++};
    std::deque<Eigen::Index> queue{start};
    order.push_back(start);
    while (!queue.empty()) {
      const Eigen::Index v = queue.front();
      queue.pop_front();
      for (size_t t = 0; t < cons.size(); ++t) {
        const Eigen::Index w = cons[t].P.image[v];
        if (visited[w]) continue;
        visited[w] = true;
        origin[w] = {static_cast<Eigen::Index>(t), v, -1};
        order.push_back(w);
        queue.push_back(w);
      }
    }
  }

  const Eigen::Index nu = roots * db;
  std::vector<Mat> g(da);
  std::vector<Vec> d(da);
  for (const Eigen::Index v : order) {
    if (origin[v].constraint < 0) {
      g[v] = Mat::Zero(db, nu);
      for (Eigen::Index r = 0; r < db; ++r) g[v](r, origin[v].root_slot * db + r) = 1;
      d[v] = Vec::Zero(db);
    } else {
      const MatrixConstraint& c = cons[origin[v].constraint];
      const Eigen::Index src = origin[v].source;
      const Rational s(c.P.sign[src]);
      g[v] = c.Q.apply_left(g[src]) / s;
      Vec rhs = c.Q.apply(d[src]);
      if (c.C.size() != 0) rhs += c.C.col(src);
      d[v] = rhs / s;
    }
  }

  AffineSystem sys(nu);
  for (const auto& c : cons) {
    for (Eigen::Index v = 0; v < da; ++v) {
      const Eigen::Index w = c.P.image[v];
      const Rational s(c.P.sign[v]);
      const Mat lhs = s * g[w] - c.Q.apply_left(g[v]);
      Vec rhs = c.Q.apply(d[v]) - s * d[w];
      if (c.C.size() != 0) rhs += c.C.col(v);
      for (Eigen::Index r = 0; r < db; ++r) {
        if (!sys.feasible()) break;
        sys.add_equation(lhs.row(r).transpose(), rhs[r]);
      }
      if (!sys.feasible()) break;
    }
    if (!sys.feasible()) break;
  }

  AffineMatFamily fam;
  fam.feasible = sys.feasible();
  if (!fam.feasible) return fam;

  auto materialize = [&](const Vec& u, bool affine) {
    Mat f(db, da);
    for (Eigen::Index v = 0; v < da; ++v) {
      Vec col = g[v] * u;
      if (affine) col += d[v];
      f.col(v) = col;
    }
    return f;
  };

  fam.particular = materialize(sys.particular(), true);
  const Mat ker = sys.kernel();
  for (Eigen::Index r = 0; r < ker.rows(); ++r)
    fam.kernel.push_back(materialize(ker.row(r).transpose(), false));
  return fam;
}

// ---------------------------------------------------------------------------
// Sparse multivariate polynomials over Q for the quadratic stage. A monomial
// is the sorted multiset of parameter ids it contains.

using Monomial = std::vector<int>;

struct Poly {
  std::map<Monomial, Rational> terms;

  void add(Monomial mono, const Rational& c) {
    if (is_zero_q(c)) return;
    auto it = terms.find(mono);
    if (it == terms.end()) {
      terms.emplace(std::move(mono), c);
    } else {
      it->second += c;
      if (is_zero_q(it->second)) terms.erase(it);
    }
  }

  static bool is_zero_q(const Rational& c) { return sgn(c) == 0; }

  bool is_zero() const { return terms.empty(); }
  bool is_constant() const {
    return terms.empty() || (terms.size() == 1 && terms.begin()->first.empty());
  }

  int degree() const {
    int d = 0;
    for (const auto& [m, c] : terms) d = std::max<int>(d, static_cast<int>(m.size()));
    return d;
  }

  Poly operator*(const Poly& o) const {
    Poly out;
    for (const auto& [ma, ca] : terms)
      for (const auto& [mb, cb] : o.terms) {
        Monomial m = ma;
        m.insert(m.end(), mb.begin(), mb.end());
        std::sort(m.begin(), m.end());
        out.add(std::move(m), ca * cb);
      }
    return out;
  }

  Poly& operator+=(const Poly& o) {
    for (const auto& [m, c] : o.terms) add(m, c);
    return *this;
  }

  /// Replace parameter p by the polynomial expr.
  Poly substituted(int p, const Poly& expr) const {
    Poly out;
    for (const auto& [m, c] : terms) {
      const auto k = static_cast<int>(std::count(m.begin(), m.end(), p));
      if (k == 0) {
        out.add(m, c);
        continue;
      }
      Monomial rest;
      rest.reserve(m.size() - k);
      for (int id : m)
        if (id != p) rest.push_back(id);
      Poly term;
      term.add(std::move(rest), c);
      for (int rep = 0; rep < k; ++rep) term = term * expr;
      out += term;
    }
    return out;
  }

  /// Scales so the leading (map-largest) monomial has coefficient 1.
  Poly normalized() const {
    Poly out = *this;
    if (out.terms.empty()) return out;
    const Rational lead = out.terms.rbegin()->second;
    for (auto& [m, c] : out.terms) c /= lead;
    return out;
  }

  /// Ids occurring only in the degree-1 monomial {id} of this polynomial.
  bool occurs_linearly(int p) const {
    bool linear = false;
    for (const auto& [m, c] : terms) {
      const auto k = std::count(m.begin(), m.end(), p);
      if (k == 0) continue;
      if (m.size() == 1)
        linear = true;
      else
        return false;
    }
    return linear;
  }

  std::vector<int> parameters() const {
    std::set<int> ids;
    for (const auto& [m, c] : terms) ids.insert(m.begin(), m.end());
    return {ids.begin(), ids.end()};
  }

  std::string to_string() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
      const Rational& c = it->second;
      if (!first) os << (sgn(c) < 0 ? " - " : " + ");
      if (first && sgn(c) < 0) os << "-";
      first = false;
      Rational a = abs(c);
      const bool unit = (a == 1) && !it->first.empty();
      if (!unit) os << a.get_str();
      bool dot = !unit;
      for (int id : it->first) {
        if (dot) os << "*";
        os << "t" << id;
        dot = true;
      }
    }
    return os.str();
  }

  friend bool operator<(const Poly& a, const Poly& b) {
    auto ita = a.terms.begin(), itb = b.terms.begin();
    for (; ita != a.terms.end() && itb != b.terms.end(); ++ita, ++itb) {
      if (ita->first != itb->first) return ita->first < itb->first;
      const int c = cmp(ita->second, itb->second);
      if (c != 0) return c < 0;
    }
    return itb != b.terms.end();
  }
};

}  // namespace

// ---------------------------------------------------------------------------

RightMultCandidate canonical_bimodule(const ModuleSignature& sig) {
  if (sig.m != 0)
    throw DomainError(ErrorCode::ConjugateSlotsPresent,
                      "canonical bimodule requires m = 0");
  RightMultCandidate cand{sig, {}};
  for (int i = 1; i <= 7; ++i) cand.R[i - 1] = basis_right_perm(sig, i).to_matrix();
  return cand;
}

BimoduleVerifyReport verify_bimodule(const RightMultCandidate& cand) {
  const Eigen::Index d = cand.sig.real_dim();
  for (const Mat& r : cand.R)
    if (r.rows() != d || r.cols() != d)
      throw DomainError(ErrorCode::InvalidSignature, "candidate matrix size mismatch");

  const EpsilonTables& t = epsilon_tables();
  BimoduleVerifyReport report;
  for (int i = 1; i <= 7; ++i) {
    const Mat& ri = cand.R[i - 1];
    for (int j = 1; j <= 7; ++j) {
      const SignedPerm lj = basis_left_perm(cand.sig, j);
      const Mat assoc = associator_matrix(cand.sig, i, j);

      // middle: (e_j x) e_i - e_j (x e_i) = [e_i,e_j,x]
      Mat middle = -lj.apply_left(ri) - assoc;
      for (Eigen::Index v = 0; v < d; ++v) {
        const Eigen::Index w = lj.image[v];
        if (lj.sign[v] > 0)
          middle.col(v) += ri.col(w);
        else
          middle.col(v) -= ri.col(w);
      }
      for (Eigen::Index v = 0; v < d; ++v)
        if (!column_is_zero(middle, v)) report.violations.push_back({"middle", i, j, v});

      // outer: (x e_i) e_j - x (e_i e_j) = [e_i,e_j,x]
      Mat outer = cand.R[j - 1] * ri - assoc;
      for (int k = 1; k <= 7; ++k) {
        const int e = t.eps3(i, j, k);
        if (e != 0) outer -= Rational(e) * cand.R[k - 1];
      }
      if (i == j) outer += Mat::Identity(d, d);
      for (Eigen::Index v = 0; v < d; ++v)
        if (!column_is_zero(outer, v)) report.violations.push_back({"outer", i, j, v});
    }
  }
  return report;
}

LinearStageFamily solve_linear_stage(const ModuleSignature& sig) {
  LinearStageFamily family{sig, true, {}, {}};
  for (int i = 1; i <= 7; ++i) {
    std::vector<MatrixConstraint> cons;
    cons.reserve(7);
    for (int j = 1; j <= 7; ++j)
      cons.push_back({basis_left_perm(sig, j), basis_left_perm(sig, j),
                      associator_matrix(sig, i, j)});
    AffineMatFamily f = solve_matrix_constraints(sig.real_dim(), sig.real_dim(), cons);
    if (!f.feasible) {
      family.feasible = false;
      family.kernel.clear();
      return family;
    }
    family.particular[i - 1] = std::move(f.particular);
    for (Mat& k : f.kernel) family.kernel.emplace_back(i - 1, std::move(k));
  }
  return family;
}

const char* to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::Unique: return "Unique";
    case SolveStatus::Infeasible: return "Infeasible";
    case SolveStatus::Family: return "Family";
    case SolveStatus::Undecided: return "Undecided";
  }
  return "Undecided";
}

SolveOutcome impose_quadratic(const LinearStageFamily& family) {
  SolveOutcome outcome;
  if (!family.feasible) {
    outcome.status = SolveStatus::Infeasible;
    outcome.residual = "linear stage infeasible";
    return outcome;
  }

  const ModuleSignature sig = family.sig;
  const Eigen::Index d = sig.real_dim();
  const EpsilonTables& t = epsilon_tables();
  const int nparams = static_cast<int>(family.kernel.size());
  std::array<std::vector<int>, 7> params_of;
  for (int a = 0; a < nparams; ++a) params_of[family.kernel[a].first].push_back(a);

  // Outer condition R_j R_i - R_{e_i e_j} = [e_i,e_j,.] as polynomial
  // matrices; one matrix of coefficients per monomial.
  std::set<Poly> equations;
  for (int i = 1; i <= 7; ++i) {
    for (int j = 1; j <= 7; ++j) {
      std::map<Monomial, Mat> contrib;
      const Mat& pi = family.particular[i - 1];
      const Mat& pj = family.particular[j - 1];

      Mat constant = pj * pi - associator_matrix(sig, i, j);
      if (i == j) constant += Mat::Identity(d, d);
      for (int k = 1; k <= 7; ++k) {
        const int e = t.eps3(i, j, k);
        if (e != 0) constant -= Rational(e) * family.particular[k - 1];
      }
      contrib.emplace(Monomial{}, std::move(constant));

      for (int b : params_of[i - 1]) {
        Mat m = pj * family.kernel[b].second;
        auto it = contrib.find(Monomial{b});
        if (it == contrib.end())
          contrib.emplace(Monomial{b}, std::move(m));
        else
          it->second += m;
      }
      for (int a : params_of[j - 1]) {
        Mat m = family.kernel[a].second * pi;
        auto it = contrib.find(Monomial{a});
        if (it == contrib.end())
          contrib.emplace(Monomial{a}, std::move(m));
        else
          it->second += m;
      }
      for (int k = 1; k <= 7; ++k) {
        const int e = t.eps3(i, j, k);
        if (e == 0) continue;
        for (int c : params_of[k - 1]) {
          Mat m = Rational(-e) * family.kernel[c].second;
          auto it = contrib.find(Monomial{c});
          if (it == contrib.end())
            contrib.emplace(Monomial{c}, std::move(m));
          else
            it->second += m;
        }
      }
      for (int a : params_of[j - 1]) {
        for (int b : params_of[i - 1]) {
          Monomial mono{a, b};
          std::sort(mono.begin(), mono.end());
          Mat m = family.kernel[a].second * family.kernel[b].second;
          auto it = contrib.find(mono);
          if (it == contrib.end())
            contrib.emplace(std::move(mono), std::move(m));
          else
            it->second += m;
        }
      }

      for (Eigen::Index r = 0; r < d; ++r)
        for (Eigen::Index c = 0; c < d; ++c) {
          Poly p;
          for (const auto& [mono, mat] : contrib) p.add(mono, mat(r, c));
          if (!p.is_zero()) equations.insert(p.normalized());
        }
    }
  }

  // Iterated elimination: repeatedly solve for the lowest-index parameter
  // with a linear occurrence and substitute.
  std::vector<std::pair<int, Poly>> assignments;
  std::set<int> live;
  for (int a = 0; a < nparams; ++a) live.insert(a);

  auto find_contradiction = [&]() -> bool {
    for (const Poly& p : equations)
      if (p.is_constant() && !p.is_zero()) return true;
    return false;
  };

  while (true) {
    if (find_contradiction()) {
      outcome.status = SolveStatus::Infeasible;
      return outcome;
    }
    int chosen_param = -1;
    const Poly* chosen_eq = nullptr;
    for (int p : live) {
      for (const Poly& eq : equations) {
        if (eq.occurs_linearly(p)) {
          chosen_param = p;
          chosen_eq = &eq;
          break;
        }
      }
      if (chosen_param >= 0) break;
    }
    if (chosen_param < 0) break;

    // c * t + rest = 0  =>  t = -rest / c
    Poly expr;
    Rational c;
    for (const auto& [m, coeff] : chosen_eq->terms) {
      if (m.size() == 1 && m[0] == chosen_param)
        c = coeff;
      else
        expr.add(m, coeff);
    }
    for (auto& [m, coeff] : expr.terms) coeff = -coeff / c;
    assignments.emplace_back(chosen_param, expr);
    live.erase(chosen_param);

    std::set<Poly> next;
    for (const Poly& eq : equations) {
      Poly s = eq.substituted(chosen_param, expr);
      if (!s.is_zero()) next.insert(s.normalized());
    }
    equations = std::move(next);
  }

  if (!equations.empty()) {
    outcome.status = SolveStatus::Undecided;
    std::ostringstream os;
    bool first = true;
    for (const Poly& p : equations) {
      if (!first) os << "; ";
      first = false;
      os << p.to_string() << " = 0";
    }
    outcome.residual = os.str();
    return outcome;
  }

  // Resolve assignments bottom-up; free parameters stay at zero in the
  // reported representative.
  std::map<int, Poly> resolved;
  for (auto it = assignments.rbegin(); it != assignments.rend(); ++it) {
    Poly value = it->second;
    for (const auto& [p, v] : resolved) value = value.substituted(p, v);
    resolved.emplace(it->first, std::move(value));
  }

  std::vector<Rational> values(nparams, Rational(0));
  for (const auto& [p, v] : resolved) {
    Poly reduced = v;
    for (int freep : live) reduced = reduced.substituted(freep, Poly{});
    if (!reduced.is_constant())
      throw DomainError(ErrorCode::InternalFormulaMismatch,
                        "unresolved parameter after elimination");
    values[p] = reduced.terms.empty() ? Rational(0) : reduced.terms.begin()->second;
  }

  RightMultCandidate cand{sig, {}};
  for (int i = 0; i < 7; ++i) cand.R[i] = family.particular[i];
  for (int a = 0; a < nparams; ++a) {
    if (values[a] == 0) continue;
    cand.R[family.kernel[a].first] += values[a] * family.kernel[a].second;
  }
  outcome.solutions.push_back(std::move(cand));
  if (live.empty()) {
    outcome.status = SolveStatus::Unique;
  } else {
    outcome.status = SolveStatus::Family;
    std::ostringstream os;
    os << live.size() << " free parameter(s); representative has them at zero";
    outcome.residual = os.str();
  }
  return outcome;
}

bool admits_bimodule(const ModuleSignature& sig) { return sig.m == 0; }

std::optional<Octonion> classify_almost_linear(const Mat& f) {
  if (f.rows() != 8 || f.cols() != 8)
    throw DomainError(ErrorCode::ParseError, "classify_almost_linear expects an 8x8 matrix");
  // Condition (1) on the basis: Re(f(e_i e_a)) - Re(e_i f(e_a)) = 0, where
  // Re(e_i y) = -y_i for i >= 1.
  for (int i = 1; i <= 7; ++i)
    for (int a = 0; a < 8; ++a) {
      const BasisProduct p = kBasisTable[i][a];
      Rational residue = Rational(p.sign) * f(0, p.index) + f(i, a);
      if (residue != 0) return std::nullopt;
    }
  typename Octonion::Coeffs y;
  for (int a = 0; a < 8; ++a) y[a] = f(0, a);
  const Octonion q = conj(Octonion(y));
  for (int a = 0; a < 8; ++a) {
    const Octonion col = mul(Octonion::unit(a), q);
    for (int r = 0; r < 8; ++r)
      if (f(r, a) != col[r])
        throw DomainError(ErrorCode::InternalFormulaMismatch,
                          "condition (1) held but f is not a right multiplication");
  }
  return q;
}

Eigen::Index hom_space_dim(const ModuleSignature& a, const ModuleSignature& b, HomMode mode) {
  if (mode != HomMode::Left && (a.m != 0 || b.m != 0))
    throw DomainError(ErrorCode::ConjugateSlotsPresent,
                      "right/bi hom spaces require bimodule signatures");
  std::vector<MatrixConstraint> cons;
  if (mode == HomMode::Left || mode == HomMode::Bi)
    for (int j = 1; j <= 7; ++j)
      cons.push_back({basis_left_perm(a, j), basis_left_perm(b, j), Mat()});
  if (mode == HomMode::Right || mode == HomMode::Bi)
    for (int j = 1; j <= 7; ++j)
      cons.push_back({basis_right_perm(a, j), basis_right_perm(b, j), Mat()});
  const AffineMatFamily fam =
      solve_matrix_constraints(a.real_dim(), b.real_dim(), cons);
  if (!fam.feasible)
    throw DomainError(ErrorCode::InternalFormulaMismatch,
                      "homogeneous intertwiner system reported infeasible");
  return static_cast<Eigen::Index>(fam.kernel.size());
}

}  // namespace octomod
