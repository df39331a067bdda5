#pragma once

#include <map>
#include <string>
#include <vector>

#include "qtl/coefficients.hpp"
#include "qtl/planar.hpp"

namespace qtl {

/// Linear combination of TL (m,n)-tangles over RatFun.
class SkeinElement {
 public:
  using Terms = std::map<TLTangle, RatFun>;

  SkeinElement(int m = 0, int n = 0) : m_(m), n_(n) {}
  SkeinElement(const TLTangle& t, const RatFun& c = RatFun(1));

  static SkeinElement identity(int n) { return SkeinElement(TLTangle::identity(n)); }

  int m() const { return m_; }
  int n() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  RatFun coeff(const TLTangle& t) const;
  /// True when every coefficient has denominator 1.
  bool is_polynomial() const;

  void add(const TLTangle& t, const RatFun& c);
  SkeinElement& operator+=(const SkeinElement& o);
  SkeinElement& operator-=(const SkeinElement& o);
  SkeinElement& operator*=(const RatFun& c);
  friend SkeinElement operator+(SkeinElement a, const SkeinElement& b) { return a += b; }
  friend SkeinElement operator-(SkeinElement a, const SkeinElement& b) { return a -= b; }
  friend SkeinElement operator*(const RatFun& c, SkeinElement a) { return a *= c; }
  friend bool operator==(const SkeinElement& a, const SkeinElement& b) {
    return a.m_ == b.m_ && a.n_ == b.n_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const SkeinElement& a, const SkeinElement& b) { return !(a == b); }

  std::string str() const;

 private:
  int m_, n_;
  Terms terms_;
};

/// a o b: b is placed below a. Every closed circle contributes -(q + q^{-1}).
SkeinElement skein_compose(const SkeinElement& a, const SkeinElement& b);
inline SkeinElement operator*(const SkeinElement& a, const SkeinElement& b) { return skein_compose(a, b); }

SkeinElement flip(const SkeinElement& x);
SkeinElement tensor(const SkeinElement& a, const SkeinElement& b);

/// Trace-like closure in S^3 of an (n,n) element.
RatFun closure_s3(const SkeinElement& x);

/// Matrix of left multiplication by x on the span of the (0,2n) matchings,
/// in enumerate_matchings order. Entry [row][col] is the coefficient of
/// matching row in x o matching col.
std::vector<std::vector<RatFun>> action_matrix(const SkeinElement& x, int n);

enum class SliceKind { cup, cap, pos, neg };

struct Slice {
  SliceKind kind;
  int pos;  ///< 0-based; crossings act on strands pos and pos+1
  friend bool operator==(const Slice&, const Slice&) = default;
};

/// Framed tangle diagram as a bottom-to-top sequence of elementary slices.
class TangleDiagram {
 public:
  TangleDiagram() = default;
  /// Throws MalformedDiagram if a slice position is out of range.
  TangleDiagram(int bottom, std::vector<Slice> slices);

  /// Braid on `strands` strands from signed 1-based generator indices.
  static TangleDiagram braid(int strands, const std::vector<int>& word);
  static TangleDiagram identity(int strands) { return TangleDiagram(strands, {}); }

  int bottom() const { return bottom_; }
  int top() const { return top_; }
  const std::vector<Slice>& slices() const { return slices_; }
  int crossings() const;
  int positive_crossings() const;
  /// Largest number of strands present at any level.
  int max_width() const;

  /// this o below: `below` is drawn first.
  TangleDiagram after(const TangleDiagram& below) const;
  /// Upside-down copy; cups and caps trade places, crossing types are kept.
  TangleDiagram flipped() const;
  /// All crossings switched.
  TangleDiagram mirrored() const;
  /// Adds a positive (or negative) curl on strand p at the top of the diagram.
  TangleDiagram with_kink(int p, bool positive = true) const;
  /// Closes an (n,n) diagram into a link, returning strands on the left.
  TangleDiagram closure() const;

  std::string str() const;
  friend bool operator==(const TangleDiagram&, const TangleDiagram&) = default;

 private:
  int bottom_ = 0;
  int top_ = 0;
  std::vector<Slice> slices_;
};

/// (s1 s2 ... s_{N-1})^N repeated m times; m < 0 gives the inverse.
std::vector<int> full_twist_word(int strands, int m);

/// Framed full twist: the braid plus one curl per strand per twist, curls
/// signed like m.
TangleDiagram full_twist_diagram(int strands, int m);

/// Kauffman bracket: pos crossings expand as q^{1/2} id + q^{-1/2} turnback,
/// neg crossings as the bar of that.
SkeinElement bracket(const TangleDiagram& d);

/// Convenience: closure_s3 of the bracket, for (n,n) diagrams; for closed
/// diagrams the coefficient of the empty tangle.
HalfLaurent closed_bracket(const TangleDiagram& d);

}  // namespace qtl
