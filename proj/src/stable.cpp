#include "qtl/stable.hpp"

#include <algorithm>
#include <climits>
#include <cstdlib>
#include <sstream>

namespace qtl {

namespace {

int env_int(const char* name, int fallback) {
  const char* v = std::getenv(name);
  if (!v || !*v) return fallback;
  char* end = nullptr;
  long x = std::strtol(v, &end, 10);
  return (end && *end == 0 && x > 0 && x < INT_MAX) ? static_cast<int>(x) : fallback;
}

int sign_of(int h2, int mu2) {
  int e = h2 + mu2;
  int half = e >= 0 ? e / 2 : -((-e + 1) / 2);
  return half % 2 == 0 ? 1 : -1;
}

TangleDiagram twisted_closure(const TangleDiagram& tau, int m) {
  return tau.after(full_twist_diagram(tau.top(), m)).closure();
}

}  // namespace

int stable_ceiling() { return env_int("QTL_STABLE_CEILING", kStableCeiling); }
int crossing_budget() { return env_int("QTL_CROSSING_BUDGET", kCrossingBudget); }

int h2_max_of(const TangleDiagram& tau) { return tau.crossings(); }

int twists_for_depth(int depth) { return std::max(1, (depth + 2) / 2); }

StableWindow stable_window(const TangleDiagram& tau, int m, int budget) {
  if (tau.bottom() != tau.top() || tau.top() % 2 != 0 || tau.top() == 0)
    throw ValenceMismatch("stable homology needs a (2n,2n) tangle with n >= 1");
  if (m < 1) throw DepthInfeasible("twist count must be positive");
  const int n = tau.top() / 2;
  if (n > stable_ceiling())
    throw TooLarge("n = " + std::to_string(n) + " exceeds the stable ceiling " + std::to_string(stable_ceiling()));
  StableWindow w;
  w.n = n;
  w.m_used = m;
  w.crossings = tau.crossings() + 2 * n * (2 * n - 1) * m + 2 * n * m;
  if (w.crossings > budget)
    throw DepthInfeasible(std::to_string(m) + " twists need " + std::to_string(w.crossings) +
                          " crossings, budget is " + std::to_string(budget));
  w.h2_max = h2_max_of(tau);
  w.h2_min_valid = w.h2_max - 4 * m + 4;
  w.full = scan_link(twisted_closure(tau, m));
  w.table.mu2 = w.provisional.mu2 = w.full.mu2;
  for (const auto& [k, r] : w.full.ranks) {
    if (k.first > w.h2_max) throw InvariantViolation("homology above the top degree of tau");
    if (k.first >= w.h2_min_valid)
      w.table.ranks[k] = r;
    else if (k.first >= w.h2_min_valid - 2)
      w.provisional.ranks[k] = r;
  }
  return w;
}

StableWindow stable_homology(const TangleDiagram& tau, int depth, int budget) {
  if (depth < 0) throw DepthInfeasible("depth must be nonnegative");
  return stable_window(tau, twists_for_depth(depth), budget);
}

StableWindow hochschild_Hn(int n, int depth, int budget) {
  return stable_homology(TangleDiagram::identity(2 * n), depth, budget);
}

std::string StableWindow::str() const {
  std::ostringstream os;
  os << "n=" << n << " m=" << m_used << " crossings=" << crossings << " window h in [" << half_str(h2_min_valid)
     << ", " << half_str(h2_max) << "]\n";
  auto rows = [&](const BettiTable& b, const char* status) {
    for (const auto& [k, r] : b.ranks)
      os << half_str(k.first) << " " << half_str(k.second) << " " << r << " " << status << "\n";
  };
  rows(table, "guaranteed");
  rows(provisional, "provisional");
  return os.str();
}

// ------------------------------------------------------------ angle shapes

bool AngleShape::contains(int i2, int j2) const {
  int i = i2 - k2(), j = j2 - l2();
  return i >= 0 && i <= j && j <= 2 * i;
}

int AngleShape::min_j2(int i2) const { return std::max(i2, k2()) - k2() + l2(); }

// ------------------------------------------------------------ reports

DualityReport mirror_duality(const StableWindow& w, const TangleDiagram& tau) {
  DualityReport r;
  BettiTable mirror = scan_link(twisted_closure(tau, w.m_used).mirrored());
  auto in_window = [&](int h2) { return h2 >= w.h2_min_valid && h2 <= w.h2_max; };
  std::set<std::pair<int, int>> keys;
  for (const auto& [k, v] : w.table.ranks) keys.insert(k);
  for (const auto& [k, v] : mirror.ranks)
    if (in_window(-k.first)) keys.insert({-k.first, -k.second});
  for (const auto& k : keys) {
    ++r.checked;
    auto a = w.table.ranks.find(k);
    auto b = mirror.ranks.find({-k.first, -k.second});
    int x = a == w.table.ranks.end() ? 0 : a->second, y = b == mirror.ranks.end() ? 0 : b->second;
    if (x != y)
      r.mismatches.push_back("h=" + half_str(k.first) + " q=" + half_str(k.second) + ": " + std::to_string(x) +
                             " vs mirror " + std::to_string(y));
  }
  return r;
}

std::string DualityReport::str() const {
  std::ostringstream os;
  os << "mirror duality: " << checked << " bidegrees, " << mismatches.size() << " mismatches\n";
  for (const auto& m : mismatches) os << "  " << m << "\n";
  return os.str();
}

EulerWindowReport euler_window_check(const TangleDiagram& tau, int depth, int budget) {
  StableWindow w = stable_homology(tau, depth, budget);
  const int c = tau.crossings();
  // contributions below the window come from twist degrees i with
  // -i + h(tau) <= h_min_valid - 1, h(tau) >= -c/2
  const int i2 = std::max(0, 2 - c - w.h2_min_valid);
  EulerWindowReport r;
  r.bound2 = INT_MAX;
  for (int t = 0; t <= 2 * w.n; t += 2) {
    AngleShape a{t, w.n, w.m_used};
    // tau shifts q by at least -c/2; closing adds at most 2n circles
    r.bound2 = std::min(r.bound2, a.min_j2(i2) - c - 4 * w.n);
  }
  for (const auto& [k, v] : w.full.ranks)
    if (k.first < w.h2_min_valid && k.second < r.bound2) r.bound_respected = false;

  HalfLaurent target = stable_invariant(tau).poly;
  std::map<int, mpq_class> sums;
  for (const auto& [k, v] : w.table.ranks)
    if (k.second < r.bound2) sums[k.second] += sign_of(k.first, w.table.mu2) * v;
  for (const auto& [d2, cf] : target.terms())
    if (d2 < r.bound2) sums[d2];
  for (const auto& [q2, s] : sums) {
    r.certified.push_back(q2);
    if (s != target.coeff(q2))
      r.mismatches.push_back("q=" + half_str(q2) + ": window " + s.get_str() + ", invariant " +
                             target.coeff(q2).get_str());
  }
  return r;
}

std::string EulerWindowReport::str() const {
  std::ostringstream os;
  os << "euler window: certified q < " << half_str(bound2) << ", " << certified.size() << " degrees compared, "
     << mismatches.size() << " mismatches" << (bound_respected ? "" : ", angle bound violated") << "\n";
  for (const auto& m : mismatches) os << "  " << m << "\n";
  return os.str();
}

}  // namespace qtl
