#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qtl/errors.hpp"

namespace qtl {

/// Crossingless (m,n)-tangle without closed components.
///
/// Boundary points are indexed from 0: bottom points 0..m-1 left to right,
/// then top points m..m+n-1 left to right. partner()[p] is the point joined
/// to p.
class TLTangle {
 public:
  TLTangle() = default;
  /// Validates the pairing; throws MalformedDiagram.
  TLTangle(int m, int n, std::vector<int> partner);

  static TLTangle identity(int n);
  /// (c, c+2)-tangle with a new arc joining top points i and i+1 (0-based).
  static TLTangle cup(int c, int i);
  /// (c, c-2)-tangle joining bottom points i and i+1 (0-based).
  static TLTangle cap(int c, int i);
  /// The turnback generator cup(c-2,i) o cap(c,i) on c strands.
  static TLTangle turnback(int c, int i);
  static TLTangle parse(std::string_view text);

  int m() const { return m_; }
  int n() const { return n_; }
  const std::vector<int>& partner() const { return partner_; }
  int through_degree() const;
  bool is_identity() const;
  std::string str() const;

  friend auto operator<=>(const TLTangle&, const TLTangle&) = default;
  friend bool operator==(const TLTangle&, const TLTangle&) = default;

 private:
  int m_ = 0;
  int n_ = 0;
  std::vector<int> partner_;
};

struct Composite {
  TLTangle tangle;
  int circles = 0;
};

/// Stacks upper on top of lower. Throws ValenceMismatch unless upper.m() == lower.n().
Composite compose(const TLTangle& lower, const TLTangle& upper);

int through_degree(const TLTangle& t);

/// Turns the tangle upside down; top and bottom trade places, left stays left.
TLTangle flip(const TLTangle& t);

/// Side by side, a on the left.
TLTangle tensor(const TLTangle& a, const TLTangle& b);

/// All (0,2n) crossingless matchings, sorted lexicographically by partner array.
std::vector<TLTangle> enumerate_matchings(int n);

/// All TL (m,n)-tangles, same ordering rule.
std::vector<TLTangle> enumerate_tl(int m, int n);

/// Number of circles in the closure joining top point i to bottom point i.
int closure_circles(const TLTangle& t);

/// Sequence of 1-based cap/cup positions.
using CupCapWord = std::vector<int>;

/// (n, n-2d) cap-tangle; i_1 acts first.
TLTangle cap_tangle(int n, const CupCapWord& word);
/// (n-2d, n) cup-tangle, the flip of the cap-tangle.
TLTangle cup_tangle(int n, const CupCapWord& word);

/// Position constraints plus i_{k+1} >= i_k - 1.
bool is_canonical_word(int n, const CupCapWord& word);

/// All canonical words of length (n-t)/2.
std::vector<CupCapWord> enumerate_words(int n, int t);

/// Unique (I, J) with t = cup_tangle(t.n(), I) o cap_tangle(t.m(), J).
std::pair<CupCapWord, CupCapWord> cup_cap_decompose(const TLTangle& t);

std::string word_str(const CupCapWord& w);
CupCapWord parse_word(std::string_view text);

}  // namespace qtl
