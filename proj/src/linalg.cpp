#include "qtl/linalg.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace qtl {

namespace {

void divide_content(SparseRow& r) {
  mpz_class g = 0;
  for (const auto& [c, v] : r) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) return;
  }
  if (g > 1)
    for (auto& [c, v] : r) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

// a * x - b * y, merged by column.
SparseRow combine(const mpz_class& a, const SparseRow& x, const mpz_class& b, const SparseRow& y) {
  SparseRow out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      out.emplace_back(x[i].first, a * x[i].second);
      ++i;
    } else if (i == x.size() || y[j].first < x[i].first) {
      out.emplace_back(y[j].first, -b * y[j].second);
      ++j;
    } else {
      mpz_class v = a * x[i].second - b * y[j].second;
      if (v != 0) out.emplace_back(x[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

const mpz_class* find_col(const SparseRow& r, int c) {
  auto it = std::lower_bound(r.begin(), r.end(), c, [](const auto& e, int col) { return e.first < col; });
  if (it == r.end() || it->first != c) return nullptr;
  return &it->second;
}

}  // namespace

int sparse_rank(std::vector<SparseRow> rows, int ncols) {
  std::vector<std::set<int>> col_rows(static_cast<std::size_t>(ncols));
  std::set<std::pair<std::size_t, int>> by_len;  // (length, row)
  for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
    divide_content(rows[r]);
    for (const auto& [c, v] : rows[r]) col_rows[c].insert(r);
    if (!rows[r].empty()) by_len.emplace(rows[r].size(), r);
  }
  int rank = 0;
  while (!by_len.empty()) {
    auto [len, pr] = *by_len.begin();
    by_len.erase(by_len.begin());
    SparseRow prow = std::move(rows[pr]);
    rows[pr].clear();
    for (const auto& [c, v] : prow) col_rows[c].erase(pr);
    // pivot column: unit entry with the sparsest column, else sparsest column
    int pc = -1;
    std::size_t best = 0;
    bool best_unit = false;
    for (const auto& [c, v] : prow) {
      bool unit = abs(v) == 1;
      std::size_t cnt = col_rows[c].size();
      if (pc < 0 || (unit && !best_unit) || (unit == best_unit && cnt < best)) {
        pc = c;
        best = cnt;
        best_unit = unit;
      }
    }
    ++rank;
    const mpz_class piv = *find_col(prow, pc);
    std::vector<int> targets(col_rows[pc].begin(), col_rows[pc].end());
    for (int r : targets) {
      SparseRow& row = rows[r];
      by_len.erase({row.size(), r});
      for (const auto& [c, v] : row) col_rows[c].erase(r);
      mpz_class f = *find_col(row, pc);
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), f.get_mpz_t(), piv.get_mpz_t());
      row = combine(piv / g, row, f / g, prow);
      divide_content(row);
      for (const auto& [c, v] : row) col_rows[c].insert(r);
      if (!row.empty()) by_len.emplace(row.size(), r);
    }
  }
  return rank;
}

RatMatrix invert(RatMatrix a) {
  const std::size_t n = a.size();
  RatMatrix inv(n, std::vector<RatFun>(n));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = RatFun(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = n;
    for (std::size_t r = col; r < n; ++r)
      if (!a[r][col].is_zero()) {
        piv = r;
        break;
      }
    if (piv == n) throw Error("invert: singular matrix");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    RatFun s = a[col][col].inverse();
    for (std::size_t j = 0; j < n; ++j) {
      if (!a[col][j].is_zero()) a[col][j] *= s;
      if (!inv[col][j].is_zero()) inv[col][j] *= s;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      RatFun f = a[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        if (!a[col][j].is_zero()) a[r][j] -= f * a[col][j];
        if (!inv[col][j].is_zero()) inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

RatMatrix multiply(const RatMatrix& a, const RatMatrix& b) {
  if (a.empty()) return {};
  const std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  RatMatrix out(n, std::vector<RatFun>(m));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < k; ++t) {
      if (a[i][t].is_zero()) continue;
      for (std::size_t j = 0; j < m; ++j)
        if (!b[t][j].is_zero()) out[i][j] += a[i][t] * b[t][j];
    }
  return out;
}

std::vector<RatFun> solve_sparse(std::vector<RatRow> rows, int ncols) {
  using Row = std::map<int, RatFun>;
  std::vector<Row> m(rows.size());
  std::vector<RatFun> rhs(rows.size());
  std::vector<std::set<int>> col_rows(static_cast<std::size_t>(ncols));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (auto& [c, v] : rows[r].entries)
      if (!v.is_zero()) {
        m[r][c] = v;
        col_rows[c].insert(static_cast<int>(r));
      }
    rhs[r] = rows[r].rhs;
  }
  std::vector<int> pivot_row(static_cast<std::size_t>(ncols), -1);
  std::vector<char> done(rows.size(), 0);
  auto weight = [](const RatFun& v) { return v.num().size() + v.den().size(); };
  while (true) {
    int pr = -1;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (done[r] || m[r].empty()) continue;
      if (pr < 0 || m[r].size() < m[pr].size()) pr = static_cast<int>(r);
    }
    if (pr < 0) break;
    int pc = -1;
    std::size_t best_cnt = 0, best_w = 0;
    for (const auto& [c, v] : m[pr]) {
      std::size_t cnt = col_rows[c].size(), w = weight(v);
      if (pc < 0 || cnt < best_cnt || (cnt == best_cnt && w < best_w)) {
        pc = c;
        best_cnt = cnt;
        best_w = w;
      }
    }
    done[pr] = 1;
    pivot_row[pc] = pr;
    RatFun s = m[pr][pc].inverse();
    for (auto& [c, v] : m[pr]) v *= s;
    rhs[pr] *= s;
    std::vector<int> targets;
    for (int r : col_rows[pc])
      if (r != pr) targets.push_back(r);
    for (int r : targets) {
      RatFun f = m[r][pc];
      for (const auto& [c, v] : m[pr]) {
        auto it = m[r].find(c);
        RatFun nv = (it == m[r].end() ? RatFun() : it->second) - f * v;
        if (nv.is_zero()) {
          if (it != m[r].end()) m[r].erase(it);
          col_rows[c].erase(r);
        } else if (it == m[r].end()) {
          m[r].emplace(c, nv);
          col_rows[c].insert(r);
        } else {
          it->second = nv;
        }
      }
      rhs[r] -= f * rhs[pr];
    }
  }
  for (std::size_t r = 0; r < m.size(); ++r)
    if (m[r].empty() && !rhs[r].is_zero()) throw Error("solve_sparse: inconsistent system");
  std::vector<RatFun> x(static_cast<std::size_t>(ncols));
  for (int c = 0; c < ncols; ++c) {
    int r = pivot_row[c];
    if (r < 0) throw Error("solve_sparse: solution is not unique");
    if (m[r].size() != 1) throw Error("solve_sparse: elimination incomplete");
    x[c] = rhs[r];
  }
  return x;
}

}  // namespace qtl
