#pragma once

#include <string>
#include <vector>

#include "qtl/khcomplex.hpp"
#include "qtl/wrt.hpp"

namespace qtl {

/// Default ceiling on n for stable computations; QTL_STABLE_CEILING overrides.
inline constexpr int kStableCeiling = 2;
int stable_ceiling();
/// Default crossing budget for tau o twist^m; QTL_CROSSING_BUDGET overrides.
inline constexpr int kCrossingBudget = 64;
int crossing_budget();

/// Top homological degree of the framed complex of tau, doubled: one half per
/// crossing.
int h2_max_of(const TangleDiagram& tau);

/// Homology of the closure of tau o twist^m in the degrees [h_min_valid, h_max]
/// where it agrees with the stable homology.
struct StableWindow {
  int n = 0;
  int m_used = 0;
  int crossings = 0;  ///< of the closed diagram
  int h2_min_valid = 0;
  int h2_max = 0;
  BettiTable table;        ///< restricted to the window
  BettiTable provisional;  ///< the degree just below the window
  BettiTable full;         ///< everything computed
  /// Rows "h q rank status", status guaranteed or provisional.
  std::string str() const;
};

/// Smallest m with at least `depth` integer degrees below h_max guaranteed.
int twists_for_depth(int depth);
/// Throws DepthInfeasible past the budget, ValenceMismatch for odd or zero
/// strands, TooLarge past stable_ceiling().
StableWindow stable_homology(const TangleDiagram& tau, int depth, int budget = crossing_budget());
/// Same with m fixed.
StableWindow stable_window(const TangleDiagram& tau, int m, int budget = crossing_budget());

/// Window of HH_*(H_n): tau is the identity on 2n strands.
StableWindow hochschild_Hn(int n, int depth, int budget = crossing_budget());

/// Shifted angle A[k, l] with k = m t^2 / 2, l = k + m t - t/2 + n/2, in
/// doubled units.
struct AngleShape {
  int t = 0;
  int n = 0;
  int m = 1;
  int k2() const { return m * t * t; }
  int l2() const { return m * t * t + 2 * m * t - t + n; }
  /// (i, j) are doubled; tests i' >= 0 and i' <= j' <= 2 i' after the shift.
  bool contains(int i2, int j2) const;
  /// Least doubled j over members with doubled i >= i2.
  int min_j2(int i2) const;
};

/// Compares the window with the window of the mirror closure, where
/// H_{h,q}(mirror) must equal H_{-h,-q}.
struct DualityReport {
  int checked = 0;
  std::vector<std::string> mismatches;
  bool ok() const { return mismatches.empty(); }
  std::string str() const;
};
DualityReport mirror_duality(const StableWindow& w, const TangleDiagram& tau);

/// Alternating rank sums of the window against stable_invariant(tau), on the
/// q-degrees the angle shapes certify.
struct EulerWindowReport {
  int bound2 = 0;  ///< certified q2 < bound2
  std::vector<int> certified;  ///< q2 values compared
  std::vector<std::string> mismatches;
  /// Computed ranks below the window respect the angle bound.
  bool bound_respected = true;
  bool ok() const { return mismatches.empty() && bound_respected; }
  std::string str() const;
};
EulerWindowReport euler_window_check(const TangleDiagram& tau, int depth, int budget = crossing_budget());

/// Bigraded dimensions (h2, q2) of Q[x, a, theta]/I_rel for h <= h_depth:
/// x_1..x_2n (h 0, q 2), a_i (h 2i, q -2i-2), theta_i (h 2i-1, q -2i+2),
/// x_i^2 = 0, sum x = 0, a_i p = theta_i p = 0 for p of x-degree i.
using DimTable = std::map<std::pair<int, int>, int>;
DimTable conjecture_series(int n, int h_depth);

struct ConjectureRow {
  int h2 = 0;
  int q2 = 0;
  int computed = 0;
  int conjectured = 0;
  std::string verdict;  ///< match, mismatch, uncompared
};
struct ConjectureReport {
  int n = 0;
  int depth = 0;
  std::vector<ConjectureRow> rows;
  int count(const std::string& verdict) const;
  std::string str() const;
};
/// Dualizes the conjecture into homological coordinates, (h, q) -> (-h, 2n - q),
/// and compares with hochschild_Hn(n, depth) bidegree by bidegree.
ConjectureReport compare_conjecture(int n, int depth, int budget = crossing_budget());

}  // namespace qtl
