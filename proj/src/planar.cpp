#include "qtl/planar.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace qtl {

namespace {

// Position of a point on the boundary circle: bottom left to right, then top
// right to left.
int boundary_pos(int m, int n, int p) { return p < m ? p : m + (n - 1 - (p - m)); }

bool noncrossing(int m, int n, const std::vector<int>& partner) {
  const int total = m + n;
  std::vector<int> at(total);
  for (int p = 0; p < total; ++p) at[boundary_pos(m, n, p)] = p;
  std::vector<int> stack;
  for (int b = 0; b < total; ++b) {
    int p = at[b];
    int o = boundary_pos(m, n, partner[p]);
    if (o > b) {
      stack.push_back(b);
    } else {
      if (stack.empty() || stack.back() != o) return false;
      stack.pop_back();
    }
  }
  return stack.empty();
}

void gen_matchings(std::vector<int>& cur, int lo, int hi, std::vector<std::vector<int>>& out,
                   std::vector<std::pair<int, int>>& todo) {
  // Fill the interval [lo, hi) of boundary positions, then pending intervals.
  if (lo >= hi) {
    if (todo.empty()) {
      out.push_back(cur);
      return;
    }
    auto [a, b] = todo.back();
    todo.pop_back();
    gen_matchings(cur, a, b, out, todo);
    todo.emplace_back(a, b);
    return;
  }
  for (int j = lo + 1; j < hi; j += 2) {
    cur[lo] = j;
    cur[j] = lo;
    todo.emplace_back(j + 1, hi);
    gen_matchings(cur, lo + 1, j, out, todo);
    todo.pop_back();
  }
}

}  // namespace

TLTangle::TLTangle(int m, int n, std::vector<int> partner) : m_(m), n_(n), partner_(std::move(partner)) {
  if (m < 0 || n < 0 || static_cast<int>(partner_.size()) != m + n)
    throw MalformedDiagram("TL tangle: wrong number of points");
  for (int p = 0; p < m + n; ++p) {
    int o = partner_[p];
    if (o < 0 || o >= m + n || o == p || partner_[o] != p)
      throw MalformedDiagram("TL tangle: pairing is not an involution");
  }
  if (!noncrossing(m, n, partner_)) throw MalformedDiagram("TL tangle: pairing crosses");
}

TLTangle TLTangle::identity(int n) {
  std::vector<int> p(2 * n);
  for (int i = 0; i < n; ++i) {
    p[i] = n + i;
    p[n + i] = i;
  }
  TLTangle t;
  t.m_ = t.n_ = n;
  t.partner_ = std::move(p);
  return t;
}

TLTangle TLTangle::cup(int c, int i) {
  if (i < 0 || i > c) throw MalformedDiagram("cup position out of range");
  std::vector<int> p(2 * c + 2);
  for (int j = 0; j < c; ++j) {
    int top = c + (j < i ? j : j + 2);
    p[j] = top;
    p[top] = j;
  }
  p[c + i] = c + i + 1;
  p[c + i + 1] = c + i;
  TLTangle t;
  t.m_ = c;
  t.n_ = c + 2;
  t.partner_ = std::move(p);
  return t;
}

TLTangle TLTangle::cap(int c, int i) {
  if (c < 2 || i < 0 || i > c - 2) throw MalformedDiagram("cap position out of range");
  return flip(cup(c - 2, i));
}

TLTangle TLTangle::turnback(int c, int i) { return compose(cap(c, i), cup(c - 2, i)).tangle; }

int TLTangle::through_degree() const {
  int t = 0;
  for (int p = 0; p < m_; ++p)
    if (partner_[p] >= m_) ++t;
  return t;
}

bool TLTangle::is_identity() const {
  if (m_ != n_) return false;
  for (int p = 0; p < m_; ++p)
    if (partner_[p] != m_ + p) return false;
  return true;
}

std::string TLTangle::str() const {
  std::string s = std::to_string(m_) + "," + std::to_string(n_) + ":[";
  bool first = true;
  for (int p = 0; p < m_ + n_; ++p) {
    if (partner_[p] < p) continue;
    if (!first) s += ",";
    first = false;
    s += "(" + std::to_string(p + 1) + "," + std::to_string(partner_[p] + 1) + ")";
  }
  return s + "]";
}

TLTangle TLTangle::parse(std::string_view text) {
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto number = [&] {
    skip();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) throw ParseError("expected integer", pos);
    return std::stoi(std::string(text.substr(start, pos - start)));
  };
  auto expect = [&](char c) {
    skip();
    if (pos >= text.size() || text[pos] != c) throw ParseError(std::string("expected '") + c + "'", pos);
    ++pos;
  };
  int m = number();
  expect(',');
  int n = number();
  expect(':');
  expect('[');
  std::vector<int> partner(static_cast<std::size_t>(m + n), -1);
  skip();
  if (pos < text.size() && text[pos] == ']') {
    ++pos;
  } else {
    while (true) {
      expect('(');
      int a = number();
      expect(',');
      int b = number();
      expect(')');
      if (a < 1 || b < 1 || a > m + n || b > m + n) throw ParseError("point out of range", pos);
      partner[a - 1] = b - 1;
      partner[b - 1] = a - 1;
      skip();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      expect(']');
      break;
    }
  }
  skip();
  if (pos != text.size()) throw ParseError("trailing input", pos);
  return TLTangle(m, n, std::move(partner));
}

Composite compose(const TLTangle& lower, const TLTangle& upper) {
  if (lower.n() != upper.m())
    throw ValenceMismatch("compose: lower has " + std::to_string(lower.n()) + " top points, upper has " +
                          std::to_string(upper.m()) + " bottom points");
  const int l = lower.m(), m = lower.n(), n = upper.n();
  const auto& lp = lower.partner();
  const auto& up = upper.partner();
  std::vector<char> seen(m, 0);
  std::vector<int> out(l + n, -1);

  // Follows a strand entering the lower tangle at index idx (or the upper one).
  auto trace = [&](bool in_lower, int idx) {
    while (true) {
      if (in_lower) {
        int j = lp[idx];
        if (j < l) return j;
        seen[j - l] = 1;
        in_lower = false;
        idx = j - l;
      } else {
        int j = up[idx];
        if (j >= m) return l + (j - m);
        seen[j] = 1;
        in_lower = true;
        idx = l + j;
      }
    }
  };

  for (int b = 0; b < l; ++b)
    if (out[b] < 0) {
      int e = trace(true, b);
      out[b] = e;
      out[e] = b;
    }
  for (int t = 0; t < n; ++t)
    if (out[l + t] < 0) {
      int e = trace(false, m + t);
      out[l + t] = e;
      out[e] = l + t;
    }
  int circles = 0;
  for (int c = 0; c < m; ++c) {
    if (seen[c]) continue;
    ++circles;
    int cur = c;
    do {
      seen[cur] = 1;
      int j = up[cur];  // stays in the middle row
      seen[j] = 1;
      cur = lp[l + j] - l;
    } while (cur != c);
  }
  Composite r;
  r.tangle = TLTangle(l, n, std::move(out));
  r.circles = circles;
  return r;
}

int through_degree(const TLTangle& t) { return t.through_degree(); }

TLTangle flip(const TLTangle& t) {
  const int m = t.m(), n = t.n();
  auto map = [&](int p) { return p < m ? n + p : p - m; };
  std::vector<int> out(m + n);
  for (int p = 0; p < m + n; ++p) out[map(p)] = map(t.partner()[p]);
  return TLTangle(n, m, std::move(out));
}

std::vector<TLTangle> enumerate_tl(int m, int n) {
  std::vector<TLTangle> out;
  if ((m + n) % 2 != 0 || m < 0 || n < 0) return out;
  const int total = m + n;
  std::vector<std::vector<int>> raw;
  std::vector<int> cur(total, -1);
  std::vector<std::pair<int, int>> todo;
  gen_matchings(cur, 0, total, raw, todo);
  std::vector<int> at(total);
  for (int p = 0; p < total; ++p) at[boundary_pos(m, n, p)] = p;
  for (const auto& bm : raw) {
    std::vector<int> partner(total);
    for (int b = 0; b < total; ++b) partner[at[b]] = at[bm[b]];
    out.emplace_back(m, n, std::move(partner));
  }
  std::sort(out.begin(), out.end());
  return out;
}

TLTangle tensor(const TLTangle& a, const TLTangle& b) {
  const int m1 = a.m(), n1 = a.n(), m2 = b.m(), n2 = b.n(), M = m1 + m2;
  auto ma = [&](int p) { return p < m1 ? p : M + (p - m1); };
  auto mb = [&](int p) { return p < m2 ? m1 + p : M + n1 + (p - m2); };
  std::vector<int> partner(static_cast<std::size_t>(M + n1 + n2));
  for (int p = 0; p < m1 + n1; ++p) partner[ma(p)] = ma(a.partner()[p]);
  for (int p = 0; p < m2 + n2; ++p) partner[mb(p)] = mb(b.partner()[p]);
  return TLTangle(M, n1 + n2, std::move(partner));
}

std::vector<TLTangle> enumerate_matchings(int n) { return enumerate_tl(0, 2 * n); }

int closure_circles(const TLTangle& t) {
  if (t.m() != t.n()) throw ValenceMismatch("closure of a non-square tangle");
  const int n = t.n();
  std::vector<char> seen(2 * n, 0);
  int circles = 0;
  for (int s = 0; s < 2 * n; ++s) {
    if (seen[s]) continue;
    ++circles;
    int cur = s;
    do {
      seen[cur] = 1;
      int o = t.partner()[cur];
      seen[o] = 1;
      cur = o < n ? o + n : o - n;  // around the closure
    } while (!seen[cur]);
  }
  return circles;
}

TLTangle cap_tangle(int n, const CupCapWord& word) {
  TLTangle cur = TLTangle::identity(n);
  int c = n;
  for (int i : word) {
    if (i < 1 || i > c - 1) throw MalformedDiagram("cap word position out of range");
    cur = compose(cur, TLTangle::cap(c, i - 1)).tangle;
    c -= 2;
  }
  return cur;
}

TLTangle cup_tangle(int n, const CupCapWord& word) { return flip(cap_tangle(n, word)); }

bool is_canonical_word(int n, const CupCapWord& word) {
  for (std::size_t k = 0; k < word.size(); ++k) {
    int kk = static_cast<int>(k) + 1;
    if (word[k] < 1 || word[k] >= n - 2 * kk + 2) return false;
    if (k > 0 && word[k] < word[k - 1] - 1) return false;
  }
  return true;
}

std::vector<CupCapWord> enumerate_words(int n, int t) {
  std::vector<CupCapWord> out;
  if (t < 0 || t > n || (n - t) % 2 != 0) return out;
  const int d = (n - t) / 2;
  CupCapWord cur;
  auto rec = [&](auto&& self, int k) -> void {
    if (k > d) {
      out.push_back(cur);
      return;
    }
    int lo = cur.empty() ? 1 : std::max(1, cur.back() - 1);
    for (int i = lo; i < n - 2 * k + 2; ++i) {
      cur.push_back(i);
      self(self, k + 1);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

namespace {

// Greedy leftmost-innermost removal of arcs whose endpoints both lie in pts.
CupCapWord strip_arcs(const std::vector<int>& partner, std::vector<int> pts) {
  CupCapWord word;
  while (true) {
    bool found = false;
    for (std::size_t p = 0; p + 1 < pts.size(); ++p) {
      if (partner[pts[p]] == pts[p + 1]) {
        word.push_back(static_cast<int>(p) + 1);
        pts.erase(pts.begin() + static_cast<long>(p), pts.begin() + static_cast<long>(p) + 2);
        found = true;
        break;
      }
    }
    if (!found) break;
  }
  return word;
}

}  // namespace

std::pair<CupCapWord, CupCapWord> cup_cap_decompose(const TLTangle& t) {
  std::vector<int> bottom(t.m()), top(t.n());
  std::iota(bottom.begin(), bottom.end(), 0);
  std::iota(top.begin(), top.end(), t.m());
  return {strip_arcs(t.partner(), top), strip_arcs(t.partner(), bottom)};
}

std::string word_str(const CupCapWord& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(w[i]);
  }
  return s;
}

CupCapWord parse_word(std::string_view text) {
  CupCapWord w;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == ',')) ++pos;
    if (pos >= text.size()) break;
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) throw ParseError("expected positive integer", pos);
    w.push_back(std::stoi(std::string(text.substr(start, pos - start))));
    if (w.back() < 1) throw ParseError("word entries are positive", start);
  }
  return w;
}

}  // namespace qtl
