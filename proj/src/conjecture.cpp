#include <functional>
#include <sstream>

#include "qtl/linalg.hpp"
#include "qtl/stable.hpp"

namespace qtl {

namespace {

using Mono = std::vector<int>;  // exponents of x_1..x_v

void monomials(int vars, int degree, Mono& cur, int at, std::vector<Mono>& out) {
  if (at == vars - 1) {
    cur[at] = degree;
    out.push_back(cur);
    return;
  }
  for (int e = degree; e >= 0; --e) {
    cur[at] = e;
    monomials(vars, degree - e, cur, at + 1, out);
  }
}

std::vector<Mono> monomials(int vars, int degree) {
  std::vector<Mono> out;
  if (degree < 0) return out;
  Mono cur(static_cast<std::size_t>(vars), 0);
  monomials(vars, degree, cur, 0, out);
  return out;
}

/// dim of degree d of Q[x_1..x_v]/(x_i^2, sum x_i), by rank of the relation
/// span inside the degree-d monomials.
int quotient_dim(int vars, int d) {
  std::vector<Mono> basis = monomials(vars, d);
  std::map<Mono, int> col;
  for (const Mono& m : basis) col.emplace(m, static_cast<int>(col.size()));
  std::vector<SparseRow> rows;
  for (const Mono& m : monomials(vars, d - 2))
    for (int i = 0; i < vars; ++i) {
      Mono r = m;
      r[i] += 2;
      rows.push_back({{col.at(r), mpz_class(1)}});
    }
  for (const Mono& m : monomials(vars, d - 1)) {
    std::map<int, mpz_class> row;
    for (int i = 0; i < vars; ++i) {
      Mono r = m;
      ++r[i];
      row[col.at(r)] += 1;
    }
    rows.emplace_back(row.begin(), row.end());
  }
  return static_cast<int>(basis.size()) - sparse_rank(std::move(rows), static_cast<int>(basis.size()));
}

}  // namespace

DimTable conjecture_series(int n, int h_depth) {
  DimTable out;
  if (n < 0 || h_depth < 0) return out;
  const int vars = 2 * n;
  std::vector<int> rdim;
  for (int d = 0; d <= vars; ++d) rdim.push_back(quotient_dim(vars, d));

  // a_i exponents and theta_i flags, by total homological degree
  std::vector<int> alpha(static_cast<std::size_t>(n) + 1, 0), eps(static_cast<std::size_t>(n) + 1, 0);
  std::function<void(int, int, int, int)> walk = [&](int i, int h, int q, int least) {
    if (i > n) {
      for (int d = 0; d < std::min(least, vars + 1); ++d)
        if (rdim[d]) out[{2 * h, 2 * (q + 2 * d)}] += rdim[d];
      return;
    }
    for (int e = 0; e <= 1; ++e) {
      int h1 = h + e * (2 * i - 1);
      if (h1 > h_depth) break;
      for (int a = 0;; ++a) {
        int h2 = h1 + a * 2 * i;
        if (h2 > h_depth) break;
        int used = (e || a) ? std::min(least, i) : least;
        walk(i + 1, h2, q + e * (-2 * i + 2) + a * (-2 * i - 2), used);
      }
    }
  };
  walk(1, 0, 0, vars + 1);
  for (auto it = out.begin(); it != out.end();) it = it->second ? std::next(it) : out.erase(it);
  return out;
}

int ConjectureReport::count(const std::string& verdict) const {
  int c = 0;
  for (const auto& r : rows) c += r.verdict == verdict;
  return c;
}

ConjectureReport compare_conjecture(int n, int depth, int budget) {
  ConjectureReport rep;
  rep.n = n;
  rep.depth = depth;
  if (depth <= 0) return rep;
  StableWindow w = hochschild_Hn(n, depth, budget);
  const int reach = (-w.h2_min_valid + 2) / 2;  // through the provisional degree
  DimTable conj = conjecture_series(n, reach);
  std::map<std::pair<int, int>, std::pair<int, int>> merged;
  for (const auto& [k, v] : w.table.ranks) merged[k].first = v;
  for (const auto& [k, v] : w.provisional.ranks) merged[k].first = v;
  for (const auto& [k, v] : conj) merged[{-k.first, 4 * n - k.second}].second = v;
  for (auto it = merged.rbegin(); it != merged.rend(); ++it) {
    const auto& [k, v] = *it;
    ConjectureRow row{k.first, k.second, v.first, v.second, ""};
    if (k.first < w.h2_min_valid)
      row.verdict = "uncompared";
    else
      row.verdict = v.first == v.second ? "match" : "mismatch";
    rep.rows.push_back(row);
  }
  return rep;
}

std::string ConjectureReport::str() const {
  std::ostringstream os;
  os << "conjecture comparison n=" << n << " depth=" << depth << ": " << count("match") << " match, "
     << count("mismatch") << " mismatch, " << count("uncompared") << " uncompared\n";
  if (rows.empty()) os << "(no bidegrees in range)\n";
  for (const auto& r : rows)
    os << "h=" << half_str(r.h2) << " q=" << half_str(r.q2) << " computed=" << r.computed
       << " conjectured=" << r.conjectured << " " << r.verdict << "\n";
  return os.str();
}

}  // namespace qtl
