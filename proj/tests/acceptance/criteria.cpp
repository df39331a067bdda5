#include "acceptance/criteria.hpp"

#include <climits>
#include <cstdlib>
#include <ostream>
#include <random>
#include <sstream>

#include "acceptance/corpus.hpp"
#include "oracles/state_sum.hpp"
#include "qtl/cube_oracle.hpp"
#include "qtl/projectors.hpp"
#include "qtl/stable.hpp"
#include "qtl/wrt.hpp"

namespace qtl::acceptance {

namespace {

using Ranks = std::map<std::pair<int, int>, int>;

struct Tally {
  int checked = 0;
  int failed = 0;
  std::string first_failure;
  void check(bool ok, const std::string& what) {
    ++checked;
    if (!ok && failed++ == 0) first_failure = what;
  }
  bool ok() const { return failed == 0; }
  std::string tail() const {
    return std::to_string(checked) + " checks" + (ok() ? "" : ", " + std::to_string(failed) + " failed, first: " + first_failure);
  }
};

bool n2_enabled() {
#ifdef QTL_N2_ACCEPTANCE
  return true;
#else
  const char* v = std::getenv("QTL_N2_ACCEPTANCE");
  return v && *v && std::string(v) != "0";
#endif
}

CriterionResult euler_commutativity() {
  Tally t;
  int small = 0;
  for (const auto& e : corpus()) {
    if (e.diagram.crossings() > 10) continue;
    ++small;
    t.check(RatFun(euler_char(scan_link(e.diagram))) == closure_s3(bracket(e.diagram)), e.name);
  }
  t.check(small >= 25, "corpus has fewer than 25 diagrams up to 10 crossings");
  return {1, t.ok(), "euler_char(scan_link) = closure of bracket on " + std::to_string(small) + " diagrams; " + t.tail()};
}

CriterionResult state_sum_oracle() {
  Tally t;
  for (const auto& e : corpus())
    if (e.diagram.crossings() <= 12) t.check(bracket(e.diagram) == oracle::state_sum(e.diagram), e.name);
  return {2, t.ok(), "bracket = 2^c state sum on the corpus; " + t.tail()};
}

CriterionResult jones_wenzl() {
  Tally t;
  for (int n = 1; n <= 6; ++n) {
    const SkeinElement& p = wenzl(n).element;
    for (int i = 0; i + 1 < n; ++i) {
      SkeinElement e(TLTangle::turnback(n, i));
      t.check((p * e).is_zero() && (e * p).is_zero(), "P_" + std::to_string(n) + " e_" + std::to_string(i + 1));
    }
    t.check(p * p == p, "P_" + std::to_string(n) + " idempotent");
  }
  for (int m = 0; m <= 8; ++m)
    t.check(closure_s3(wenzl(m).element) == RatFun(projector_closure_formula(m)), "closure of P_" + std::to_string(m));
  return {3, t.ok(), "P_n annihilated by e_i and idempotent for n <= 6, closures for m <= 8; " + t.tail()};
}

CriterionResult projector_family_checks() {
  Tally t;
  for (int n = 1; n <= 4; ++n) {
    std::vector<JWProjector> ps;
    SkeinElement sum(n, n);
    for (int m = n % 2; m <= n; m += 2) ps.push_back(projector_family(n, m));
    for (const auto& p : ps) {
      sum += p.element;
      for (const auto& p2 : ps) {
        SkeinElement prod = p.element * p2.element;
        t.check(p.m == p2.m ? prod == p.element : prod.is_zero(), "orthogonality n=" + std::to_string(n));
      }
      for (int m2 = n % 2; m2 <= n; m2 += 2)
        for (const auto& i : enumerate_words(n, m2))
          for (const auto& j : enumerate_words(n, m2)) {
            SkeinElement x = SkeinElement(cup_tangle(n, i)) * wenzl(m2).element * SkeinElement(cap_tangle(n, j));
            SkeinElement img = p.element * x;
            t.check(m2 == p.m ? img == x : img.is_zero(), "action n=" + std::to_string(n));
          }
      BMatrix b = b_matrix_family(n, p.m);
      auto words = enumerate_words(n, p.m);
      for (std::size_t i = 0; i < words.size(); ++i)
        for (std::size_t j = 0; j < words.size(); ++j) {
          SkeinElement x =
              SkeinElement(cup_tangle(n, words[i])) * wenzl(p.m).element * SkeinElement(cap_tangle(n, words[j]));
          t.check(projected_trace(x, p.m) == b.entries[j][i] * RatFun(projector_closure_formula(p.m)),
                  "trace n=" + std::to_string(n));
        }
    }
    t.check(sum == SkeinElement::identity(n), "completeness n=" + std::to_string(n));
  }
  int printed_differs = 0;
  for (int n = 1; n <= 3; ++n)
    for (int k = 0; k <= 2; ++k) {
      EigenReport r = eigen_checks(n, k);
      t.check(r.twist_ok, "twist eigenvalue n=" + std::to_string(n));
      t.check(r.expansion_ok, "meridian n=" + std::to_string(n) + " k=" + std::to_string(k));
      printed_differs += !r.stated_ok;
    }
  return {4, t.ok(),
          "orthogonality, completeness, action, trace for n <= 4; twist eigenvalue and meridian expansion for n <= 3, "
          "k <= 2 with coefficient (-1)^k[(k+1)(m+1)]/[m+1] (the sign (-1)^{k(m+1)} fails in " +
              std::to_string(printed_differs) + " odd k*n cases); " + t.tail()};
}

CriterionResult stable_wrt() {
  Tally t;
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 50; ++trial) {
    int strands = 2 * (1 + static_cast<int>(rng() % 3));
    int len = static_cast<int>(rng() % 9);
    int split = static_cast<int>(rng() % (len + 1));
    auto word = [&](int l) {
      std::vector<int> w;
      for (int i = 0; i < l; ++i) w.push_back((rng() % 2 ? 1 : -1) * (1 + static_cast<int>(rng() % (strands - 1))));
      return TangleDiagram::braid(strands, w);
    };
    TangleDiagram t1 = word(split), t2 = word(len - split);
    try {
      InvarianceReport r = invariance_suite(t1, t2);
      t.check(r.ok(), t1.str() + " / " + t2.str() + ": " + r.str());
    } catch (const PolynomialityViolation& e) {
      t.check(false, std::string("denominator: ") + e.what());
    }
  }
  t.check(stable_invariant(TangleDiagram::identity(2)).poly == HalfLaurent(1), "identity on 2 strands");
  return {5, t.ok(), "50 random words: polynomial, invariant under twist, rotation, cyclic exchange, flip; " + t.tail()};
}

CriterionResult twist_approx() {
  Tally t;
  int prev = INT_MIN;
  std::string thetas;
  for (int m = 1; m <= 4; ++m) {
    TwistApproximation a = twist_approximation(TangleDiagram::identity(2), m);
    t.check(a.first_difference2() >= a.theta2, "agreement below theta, m=" + std::to_string(m));
    t.check(a.theta2 > prev, "theta increasing at m=" + std::to_string(m));
    prev = a.theta2;
    thetas += (m > 1 ? "," : "") + half_str(a.theta2);
  }
  return {6, t.ok(), "n=1 coefficients agree below theta(1,m) = " + thetas + " for m=1..4; " + t.tail()};
}

CriterionResult khovanov_baseline() {
  Tally t;
  BettiTable unknot = scan_link(TangleDiagram::identity(1).closure());
  t.check(unknot.ranks == Ranks{{{0, -2}, 1}, {{0, 2}, 1}}, "unknot table");
  for (auto [name, w] : {std::pair<const char*, std::vector<int>>{"hopf", {1, 1}}, {"trefoil", {1, 1, 1}}}) {
    TangleDiagram d = TangleDiagram::braid(2, w).closure();
    BettiTable b = scan_link(d);
    t.check(b.total() == 4 && cube_oracle(d) == b, name);
  }
  int compared = 0;
  for (const auto& e : corpus()) {
    if (e.diagram.crossings() > 12) continue;
    ++compared;
    t.check(scan_link(e.diagram) == cube_oracle(e.diagram), e.name);
  }
  return {7, t.ok(), "unknot {(0,-1),(0,1)}, Hopf and trefoil rank 4, scan = cube on " + std::to_string(compared) +
                         " corpus diagrams; " + t.tail()};
}

/// Ranks in homological degrees -i for 0 <= i <= depth.
Ranks top_degrees(const BettiTable& b, int depth) {
  Ranks r;
  for (const auto& [k, v] : b.ranks)
    if (k.first <= 0 && k.first >= -2 * depth) r[k] = v;
  return r;
}

CriterionResult torus_stabilization() {
  Tally t;
  std::map<int, BettiTable> n1;
  for (int m = 2; m <= 4; ++m) n1[m] = scan_link(full_twist_diagram(2, m).closure());
  for (int a = 2; a <= 4; ++a)
    for (int b = a + 1; b <= 4; ++b)
      t.check(top_degrees(n1[a], 2 * a - 2) == top_degrees(n1[b], 2 * a - 2),
              "T(2," + std::to_string(2 * a) + ") vs T(2," + std::to_string(2 * b) + ")");
  std::string summary = "n=1: T(2,2m), m=2,3,4 agree for i <= 2m'-2";
  if (n2_enabled()) {
    BettiTable t44 = scan_link(full_twist_diagram(4, 1).closure());
    BettiTable t48 = scan_link(full_twist_diagram(4, 2).closure());
    BettiTable t412 = scan_link(full_twist_diagram(4, 3).closure());
    t.check(top_degrees(t44, 0) == top_degrees(t48, 0), "T(4,4) vs T(4,8), i <= 0");
    t.check(top_degrees(t48, 2) == top_degrees(t412, 2), "T(4,8) vs T(4,12), i <= 2");
    bool literal = top_degrees(t44, 2) == top_degrees(t48, 2);
    summary += "; n=2: T(4,4) vs T(4,8) agree for i <= 0 (2m'-2 with m'=1), T(4,8) vs T(4,12) agree for i <= 2; "
               "T(4,4) vs T(4,8) up to i = 2 " +
               std::string(literal ? "also agrees" : "does not agree (outside the guaranteed range)");
  } else {
    summary += "; n=2 skipped (set QTL_N2_ACCEPTANCE)";
  }
  return {8, t.ok(), summary + "; " + t.tail()};
}

CriterionResult conjecture_report() {
  Tally t;
  int rows = 0, matches = 0;
  try {
    ConjectureReport r = compare_conjecture(1, 4);
    rows = static_cast<int>(r.rows.size());
    matches = r.count("match");
    t.check(rows > 0, "empty report");
    for (const auto& row : r.rows)
      t.check(row.verdict == "match" || row.verdict == "mismatch" || row.verdict == "uncompared",
              "bad verdict " + row.verdict);
  } catch (const std::exception& e) {
    t.check(false, std::string("internal error: ") + e.what());
  }
  StableWindow w = hochschild_Hn(1, 4);
  DualityReport d = mirror_duality(w, TangleDiagram::identity(2));
  t.check(d.ok(), d.str());
  return {9, t.ok(), "n=1 depth 4 report with " + std::to_string(rows) + " rows (" + std::to_string(matches) +
                         " match); mirror duality on " + std::to_string(d.checked) + " bidegrees; " + t.tail()};
}

CriterionResult euler_window() {
  Tally t;
  int certified = 0;
  for (const TangleDiagram& tau : {TangleDiagram::identity(2), TangleDiagram::braid(2, {1, 1})})
    for (int depth = 1; depth <= 6; ++depth) {
      EulerWindowReport r = euler_window_check(tau, depth);
      certified += static_cast<int>(r.certified.size());
      t.check(r.ok(), tau.str() + " depth " + std::to_string(depth) + ": " + r.str());
    }
  return {10, t.ok(), "identity and s1^2, depths 1..6: " + std::to_string(certified) +
                          " certified q-coefficients match stable_invariant; " + t.tail()};
}

}  // namespace

CriterionResult run_criterion(int id) {
  try {
    switch (id) {
      case 1: return euler_commutativity();
      case 2: return state_sum_oracle();
      case 3: return jones_wenzl();
      case 4: return projector_family_checks();
      case 5: return stable_wrt();
      case 6: return twist_approx();
      case 7: return khovanov_baseline();
      case 8: return torus_stabilization();
      case 9: return conjecture_report();
      case 10: return euler_window();
      default: return {id, false, "no such criterion"};
    }
  } catch (const std::exception& e) {
    return {id, false, std::string("exception: ") + e.what()};
  }
}

int run_acceptance(std::ostream& out) {
  int failures = 0;
  for (int id = 1; id <= kCriteria; ++id) {
    CriterionResult r = run_criterion(id);
    failures += !r.pass;
    out << (r.pass ? "PASS" : "FAIL") << " criterion " << id << ": " << r.summary << std::endl;
  }
  return failures;
}

}  // namespace qtl::acceptance
