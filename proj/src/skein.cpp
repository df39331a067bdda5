#include "qtl/skein.hpp"

#include <algorithm>

namespace qtl {

SkeinElement::SkeinElement(const TLTangle& t, const RatFun& c) : m_(t.m()), n_(t.n()) { add(t, c); }

RatFun SkeinElement::coeff(const TLTangle& t) const {
  auto it = terms_.find(t);
  return it == terms_.end() ? RatFun() : it->second;
}

bool SkeinElement::is_polynomial() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& kv) { return kv.second.is_polynomial(); });
}

void SkeinElement::add(const TLTangle& t, const RatFun& c) {
  if (t.m() != m_ || t.n() != n_) throw ValenceMismatch("skein element: tangle of wrong type " + t.str());
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(t, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

SkeinElement& SkeinElement::operator+=(const SkeinElement& o) {
  if (o.m_ != m_ || o.n_ != n_) throw ValenceMismatch("skein sum of different types");
  for (const auto& [t, c] : o.terms_) add(t, c);
  return *this;
}

SkeinElement& SkeinElement::operator-=(const SkeinElement& o) {
  if (o.m_ != m_ || o.n_ != n_) throw ValenceMismatch("skein difference of different types");
  for (const auto& [t, c] : o.terms_) add(t, -c);
  return *this;
}

SkeinElement& SkeinElement::operator*=(const RatFun& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [t, v] : terms_) v *= c;
  return *this;
}

std::string SkeinElement::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [t, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += "(" + c.str() + ")*<" + t.str() + ">";
  }
  return s;
}

namespace {

std::vector<RatFun> delta_powers(int upto) {
  std::vector<RatFun> p{RatFun(1)};
  for (int i = 1; i <= upto; ++i) p.push_back(p.back() * RatFun(HalfLaurent::delta()));
  return p;
}

const RatFun& delta_pow(int k) {
  static const std::vector<RatFun> cache = delta_powers(64);
  if (k < 0 || k >= static_cast<int>(cache.size())) throw Error("too many circles");
  return cache[static_cast<std::size_t>(k)];
}

}  // namespace

SkeinElement skein_compose(const SkeinElement& a, const SkeinElement& b) {
  if (b.n() != a.m())
    throw ValenceMismatch("skein_compose: (" + std::to_string(b.m()) + "," + std::to_string(b.n()) + ") below (" +
                          std::to_string(a.m()) + "," + std::to_string(a.n()) + ")");
  SkeinElement out(b.m(), a.n());
  for (const auto& [tb, cb] : b.terms())
    for (const auto& [ta, ca] : a.terms()) {
      Composite c = compose(tb, ta);
      out.add(c.tangle, ca * cb * delta_pow(c.circles));
    }
  return out;
}

SkeinElement flip(const SkeinElement& x) {
  SkeinElement out(x.n(), x.m());
  for (const auto& [t, c] : x.terms()) out.add(flip(t), c);
  return out;
}

SkeinElement tensor(const SkeinElement& a, const SkeinElement& b) {
  SkeinElement out(a.m() + b.m(), a.n() + b.n());
  for (const auto& [ta, ca] : a.terms())
    for (const auto& [tb, cb] : b.terms()) out.add(tensor(ta, tb), ca * cb);
  return out;
}

RatFun closure_s3(const SkeinElement& x) {
  if (x.m() != x.n()) throw ValenceMismatch("closure_s3 needs an (n,n) element");
  RatFun sum;
  for (const auto& [t, c] : x.terms()) sum += c * delta_pow(closure_circles(t));
  return sum;
}

std::vector<std::vector<RatFun>> action_matrix(const SkeinElement& x, int n) {
  if (x.m() != 2 * n || x.n() != 2 * n) throw ValenceMismatch("action_matrix needs a (2n,2n) element");
  auto basis = enumerate_matchings(n);
  std::map<TLTangle, std::size_t> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = i;
  std::vector<std::vector<RatFun>> mat(basis.size(), std::vector<RatFun>(basis.size()));
  for (std::size_t col = 0; col < basis.size(); ++col) {
    SkeinElement img = skein_compose(x, SkeinElement(basis[col]));
    for (const auto& [t, c] : img.terms()) mat[index.at(t)][col] = c;
  }
  return mat;
}

// ------------------------------------------------------------ TangleDiagram

TangleDiagram::TangleDiagram(int bottom, std::vector<Slice> slices) : bottom_(bottom), slices_(std::move(slices)) {
  if (bottom < 0) throw MalformedDiagram("negative strand count");
  int c = bottom;
  for (std::size_t k = 0; k < slices_.size(); ++k) {
    const Slice& s = slices_[k];
    auto bad = [&] {
      throw MalformedDiagram("slice " + std::to_string(k + 1) + " at position " + std::to_string(s.pos + 1) +
                             " is out of range for " + std::to_string(c) + " strands");
    };
    switch (s.kind) {
      case SliceKind::cup:
        if (s.pos < 0 || s.pos > c) bad();
        c += 2;
        break;
      case SliceKind::cap:
      case SliceKind::pos:
      case SliceKind::neg:
        if (s.pos < 0 || s.pos + 1 >= c) bad();
        if (s.kind == SliceKind::cap) c -= 2;
        break;
    }
  }
  top_ = c;
}

TangleDiagram TangleDiagram::braid(int strands, const std::vector<int>& word) {
  std::vector<Slice> sl;
  for (int g : word) {
    if (g == 0) throw MalformedDiagram("braid generators are nonzero");
    sl.push_back({g > 0 ? SliceKind::pos : SliceKind::neg, std::abs(g) - 1});
  }
  return TangleDiagram(strands, std::move(sl));
}

int TangleDiagram::crossings() const {
  return static_cast<int>(std::count_if(slices_.begin(), slices_.end(), [](const Slice& s) {
    return s.kind == SliceKind::pos || s.kind == SliceKind::neg;
  }));
}

int TangleDiagram::positive_crossings() const {
  return static_cast<int>(
      std::count_if(slices_.begin(), slices_.end(), [](const Slice& s) { return s.kind == SliceKind::pos; }));
}

int TangleDiagram::max_width() const {
  int c = bottom_, w = c;
  for (const auto& s : slices_) {
    if (s.kind == SliceKind::cup) c += 2;
    if (s.kind == SliceKind::cap) c -= 2;
    w = std::max(w, c);
  }
  return w;
}

TangleDiagram TangleDiagram::after(const TangleDiagram& below) const {
  if (below.top() != bottom_) throw ValenceMismatch("diagram composition: valences differ");
  std::vector<Slice> sl = below.slices_;
  sl.insert(sl.end(), slices_.begin(), slices_.end());
  return TangleDiagram(below.bottom_, std::move(sl));
}

TangleDiagram TangleDiagram::flipped() const {
  std::vector<Slice> sl;
  for (auto it = slices_.rbegin(); it != slices_.rend(); ++it) {
    Slice s = *it;
    if (s.kind == SliceKind::cup)
      s.kind = SliceKind::cap;
    else if (s.kind == SliceKind::cap)
      s.kind = SliceKind::cup;
    sl.push_back(s);
  }
  return TangleDiagram(top_, std::move(sl));
}

TangleDiagram TangleDiagram::mirrored() const {
  std::vector<Slice> sl = slices_;
  for (auto& s : sl) {
    if (s.kind == SliceKind::pos)
      s.kind = SliceKind::neg;
    else if (s.kind == SliceKind::neg)
      s.kind = SliceKind::pos;
  }
  return TangleDiagram(bottom_, std::move(sl));
}

TangleDiagram TangleDiagram::with_kink(int p, bool positive) const {
  if (p < 0 || p >= top_) throw MalformedDiagram("kink strand out of range");
  std::vector<Slice> sl = slices_;
  sl.push_back({SliceKind::cup, p + 1});
  sl.push_back({positive ? SliceKind::pos : SliceKind::neg, p});
  sl.push_back({SliceKind::cap, p + 1});
  return TangleDiagram(bottom_, std::move(sl));
}

TangleDiagram TangleDiagram::closure() const {
  if (bottom_ != top_) throw ValenceMismatch("closure of a non-square diagram");
  const int n = bottom_;
  std::vector<Slice> sl;
  for (int i = 0; i < n; ++i) sl.push_back({SliceKind::cup, i});
  for (Slice s : slices_) {
    s.pos += n;
    sl.push_back(s);
  }
  for (int i = n - 1; i >= 0; --i) sl.push_back({SliceKind::cap, i});
  return TangleDiagram(0, std::move(sl));
}

std::string TangleDiagram::str() const {
  std::string s = "strands " + std::to_string(bottom_) + ":";
  for (const auto& sl : slices_) {
    const char* name = sl.kind == SliceKind::cup ? "cup" : sl.kind == SliceKind::cap ? "cap"
                                                   : sl.kind == SliceKind::pos ? "x"
                                                                                : "X";
    s += " " + std::string(name) + "@" + std::to_string(sl.pos + 1);
  }
  return s;
}

std::vector<int> full_twist_word(int strands, int m) {
  std::vector<int> w;
  for (int t = 0; t < std::abs(m); ++t)
    for (int r = 0; r < strands; ++r)
      for (int g = 1; g < strands; ++g) w.push_back(m > 0 ? g : -g);
  if (m < 0) std::reverse(w.begin(), w.end());
  return w;
}

TangleDiagram full_twist_diagram(int strands, int m) {
  TangleDiagram d = TangleDiagram::braid(strands, full_twist_word(strands, m));
  for (int t = 0; t < std::abs(m); ++t)
    for (int p = 0; p < strands; ++p) d = d.with_kink(p, m > 0);
  return d;
}

// ----------------------------------------------------------------- bracket

SkeinElement bracket(const TangleDiagram& d) {
  using State = std::map<TLTangle, HalfLaurent>;
  State cur;
  cur.emplace(TLTangle::identity(d.bottom()), HalfLaurent(1));
  const HalfLaurent delta = HalfLaurent::delta();
  const HalfLaurent up = HalfLaurent::monomial(1, 1), down = HalfLaurent::monomial(1, -1);
  int c = d.bottom();
  for (const Slice& s : d.slices()) {
    State next;
    auto put = [&](const TLTangle& t, const HalfLaurent& v) {
      if (v.is_zero()) return;
      auto [it, ins] = next.try_emplace(t, v);
      if (!ins) {
        it->second += v;
        if (it->second.is_zero()) next.erase(it);
      }
    };
    if (s.kind == SliceKind::cup || s.kind == SliceKind::cap) {
      TLTangle e = s.kind == SliceKind::cup ? TLTangle::cup(c, s.pos) : TLTangle::cap(c, s.pos);
      for (const auto& [t, v] : cur) {
        Composite r = compose(t, e);
        put(r.tangle, r.circles ? v * delta.pow(static_cast<unsigned>(r.circles)) : v);
      }
      c = e.n();
    } else {
      TLTangle e = TLTangle::turnback(c, s.pos);
      const HalfLaurent& wid = s.kind == SliceKind::pos ? up : down;
      const HalfLaurent& wtb = s.kind == SliceKind::pos ? down : up;
      for (const auto& [t, v] : cur) {
        put(t, v * wid);
        Composite r = compose(t, e);
        put(r.tangle, r.circles ? v * wtb * delta.pow(static_cast<unsigned>(r.circles)) : v * wtb);
      }
    }
    cur = std::move(next);
  }
  SkeinElement out(d.bottom(), d.top());
  for (const auto& [t, v] : cur) out.add(t, RatFun(v));
  return out;
}

HalfLaurent closed_bracket(const TangleDiagram& d) {
  SkeinElement b = bracket(d);
  if (d.bottom() == 0 && d.top() == 0) return b.coeff(TLTangle::identity(0)).as_polynomial();
  return closure_s3(b).as_polynomial();
}

}  // namespace qtl
