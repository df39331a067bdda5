#include "oracles/catalan.hpp"

namespace oracle {

std::vector<std::uint64_t> catalan(int n) {
  std::vector<std::uint64_t> c{1};
  for (int k = 0; k < n; ++k) {
    std::uint64_t s = 0;
    for (int i = 0; i <= k; ++i) s += c[i] * c[k - i];
    c.push_back(s);
  }
  return c;
}

namespace {

void pairings(std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  int first = -1;
  for (int i = 0; i < static_cast<int>(cur.size()); ++i)
    if (cur[i] < 0) {
      first = i;
      break;
    }
  if (first < 0) {
    out.push_back(cur);
    return;
  }
  for (int j = first + 1; j < static_cast<int>(cur.size()); ++j) {
    if (cur[j] >= 0) continue;
    cur[first] = j;
    cur[j] = first;
    pairings(cur, out);
    cur[first] = cur[j] = -1;
  }
}

}  // namespace

std::vector<std::vector<int>> noncrossing_bruteforce(int n) {
  std::vector<int> cur(2 * n, -1);
  std::vector<std::vector<int>> all, out;
  pairings(cur, all);
  for (const auto& p : all) {
    bool ok = true;
    for (int a = 0; a < 2 * n && ok; ++a)
      for (int c = 0; c < 2 * n && ok; ++c) {
        int b = p[a], d = p[c];
        if (a < c && c < b && b < d) ok = false;
      }
    if (ok) out.push_back(p);
  }
  return out;
}

}  // namespace oracle
