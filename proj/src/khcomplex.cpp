#include "qtl/khcomplex.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

#include "qtl/linalg.hpp"

namespace qtl {

// ------------------------------------------------------------ KhComplex

int KhComplex::add_slot(const KhSlot& s) {
  slots_.push_back(s);
  alive_.push_back(1);
  out_.emplace_back();
  in_.emplace_back();
  ++live_;
  return static_cast<int>(slots_.size()) - 1;
}

void KhComplex::add_entry(int src, int tgt, Labeling l, const mpq_class& c) {
  if (c == 0) return;
  auto& row = out_[src];
  auto it = row.find(tgt);
  if (it == row.end()) {
    row[tgt][l] = c;
    in_[tgt].insert(src);
    return;
  }
  add_to(it->second, l, c);
  if (it->second.empty()) {
    row.erase(it);
    in_[tgt].erase(src);
  }
}

void KhComplex::add_entry(int src, int tgt, const Morphism& f) {
  for (const auto& [l, c] : f) add_entry(src, tgt, l, c);
}

void KhComplex::remove_slot(int s) {
  if (!alive_[s]) return;
  for (const auto& [t, f] : out_[s]) in_[t].erase(s);
  for (int x : in_[s]) out_[x].erase(s);
  out_[s].clear();
  in_[s].clear();
  alive_[s] = 0;
  --live_;
}

std::size_t KhComplex::entry_count() const {
  std::size_t n = 0;
  for (const auto& row : out_) n += row.size();
  return n;
}

int KhComplex::points() const {
  for (std::size_t s = 0; s < slots_.size(); ++s)
    if (alive_[s]) return matching(slots_[s].match).n();
  return -1;
}

KhComplex unit_complex() {
  KhComplex c;
  c.add_slot({matching_id(TLTangle::identity(0)), {}});
  return c;
}

std::pair<KhSlot, KhSlot> deloop(const KhSlot& s) {
  KhSlot plus = s, minus = s;
  plus.shift.q2 += 2;
  plus.shift.mu2 += 2;
  minus.shift.q2 -= 2;
  minus.shift.mu2 += 2;
  return {plus, minus};
}

// ------------------------------------------------------------ slices

namespace {

TLTangle cup_at(const TLTangle& a, int i) { return compose(a, TLTangle::cup(a.n(), i)).tangle; }

/// New slots for an old one: either a single slot or a delooped pair.
struct Image {
  int single = -1;
  int plus = -1;   // q + 1 half
  int minus = -1;  // q - 1 half
  /// Source side: label x comes from the q-1 half, label one from the q+1 half.
  int source(int label) const { return label < 0 ? single : label == 1 ? minus : plus; }
  /// Target side: label one goes to the q-1 half, label x to the q+1 half.
  int target(int label) const { return label < 0 ? single : label == 0 ? minus : plus; }
};

Image place(KhComplex& out, int match, GradedShift sh, bool circle) {
  Image im;
  if (!circle) {
    im.single = out.add_slot({match, sh});
  } else {
    auto [p, m] = deloop({match, sh});
    im.plus = out.add_slot(p);
    im.minus = out.add_slot(m);
  }
  return im;
}

int floor_half(int v) { return v >= 0 ? v / 2 : -((-v + 1) / 2); }

/// cap_i then cup_i on both ends of every entry of `c`, written into `out`
/// between the images `im`.
void transport_turnback(const KhComplex& c, int i, const std::vector<Image>& im, KhComplex& out) {
  for (int s = 0; s < c.capacity(); ++s) {
    if (!c.alive(s)) continue;
    for (const auto& [t, f] : c.out(s))
      for (const auto& [l, v] : f) {
        const CapResult& r = cap_morphism(c.slot(s).match, c.slot(t).match, i, l);
        for (const BandTerm& bt : r.terms)
          out.add_entry(im[s].source(bt.a), im[t].target(bt.b), cup_labels(r.source, r.target, i, bt.labels),
                        v * bt.coeff);
      }
  }
}

}  // namespace

KhComplex apply_cup(const KhComplex& c, int i) {
  KhComplex out;
  std::vector<int> id(static_cast<std::size_t>(c.capacity()), -1);
  for (int s = 0; s < c.capacity(); ++s) {
    if (!c.alive(s)) continue;
    const TLTangle& a = matching(c.slot(s).match);
    if (i < 0 || i > a.n()) throw MalformedDiagram("cup position out of range");
    id[s] = out.add_slot({matching_id(cup_at(a, i)), c.slot(s).shift});
  }
  for (int s = 0; s < c.capacity(); ++s) {
    if (!c.alive(s)) continue;
    for (const auto& [t, f] : c.out(s))
      for (const auto& [l, v] : f)
        out.add_entry(id[s], id[t], cup_labels(c.slot(s).match, c.slot(t).match, i, l), v);
  }
  return out;
}

KhComplex apply_cap(const KhComplex& c, int i) {
  KhComplex out;
  std::vector<Image> im(static_cast<std::size_t>(c.capacity()));
  for (int s = 0; s < c.capacity(); ++s) {
    if (!c.alive(s)) continue;
    const TLTangle& a = matching(c.slot(s).match);
    if (i < 0 || i + 1 >= a.n()) throw MalformedDiagram("cap position out of range");
    Composite r = compose(a, TLTangle::cap(a.n(), i));
    im[s] = place(out, matching_id(r.tangle), c.slot(s).shift, r.circles > 0);
  }
  for (int s = 0; s < c.capacity(); ++s) {
    if (!c.alive(s)) continue;
    for (const auto& [t, f] : c.out(s))
      for (const auto& [l, v] : f) {
        const CapResult& r = cap_morphism(c.slot(s).match, c.slot(t).match, i, l);
        for (const BandTerm& bt : r.terms)
          out.add_entry(im[s].source(bt.a), im[t].target(bt.b), bt.labels, v * bt.coeff);
      }
  }
  return out;
}

KhComplex apply_crossing(const KhComplex& c, int i, bool positive) {
  KhComplex out;
  const int cap = c.capacity();
  std::vector<Image> same(static_cast<std::size_t>(cap)), turned(static_cast<std::size_t>(cap));
  for (int s = 0; s < cap; ++s) {
    if (!c.alive(s)) continue;
    const KhSlot& x = c.slot(s);
    if (i < 0 || i + 1 >= matching(x.match).n()) throw MalformedDiagram("crossing position out of range");
    const SaddleResult& sr = saddle_morphism(x.match, i, positive);
    GradedShift lo{x.shift.h2 - 1, x.shift.q2 + 1, x.shift.mu2 + 1};
    GradedShift hi{x.shift.h2 + 1, x.shift.q2 - 1, x.shift.mu2 - 1};
    if (positive) {
      same[s] = place(out, x.match, lo, false);
      turned[s] = place(out, sr.other, hi, sr.circle);
    } else {
      turned[s] = place(out, sr.other, lo, sr.circle);
      same[s] = place(out, x.match, hi, false);
    }
  }
  for (int s = 0; s < cap; ++s) {
    if (!c.alive(s)) continue;
    for (const auto& [t, f] : c.out(s)) out.add_entry(same[s].single, same[t].single, f);
  }
  transport_turnback(c, i, turned, out);
  for (int s = 0; s < cap; ++s) {
    if (!c.alive(s)) continue;
    const KhSlot& x = c.slot(s);
    const mpq_class sign = floor_half(x.shift.h2) % 2 == 0 ? 1 : -1;
    const SaddleResult& sr = saddle_morphism(x.match, i, positive);
    for (const BandTerm& bt : sr.terms) {
      if (positive)
        out.add_entry(same[s].single, turned[s].target(bt.b), bt.labels, sign * bt.coeff);
      else
        out.add_entry(turned[s].source(bt.a), same[s].single, bt.labels, sign * bt.coeff);
    }
  }
  return out;
}

KhComplex crossing_cone(bool positive) {
  KhComplex c = apply_cup(apply_cup(unit_complex(), 0), 2);
  return apply_crossing(c, 1, positive);
}

// ------------------------------------------------------------ elimination

namespace {

bool is_iso(const KhComplex& c, int s, int t, const Morphism& f) {
  const KhSlot& a = c.slot(s);
  const KhSlot& b = c.slot(t);
  return a.match == b.match && a.shift.q2 == b.shift.q2 && f.size() == 1 && f.begin()->first == 0;
}

}  // namespace

int gauss_eliminate(KhComplex& c) {
  std::set<std::pair<int, int>> cand;
  for (int s = 0; s < c.capacity(); ++s) {
    if (!c.alive(s)) continue;
    for (const auto& [t, f] : c.out(s))
      if (is_iso(c, s, t, f)) cand.emplace(s, t);
  }
  int removed = 0;
  while (!cand.empty()) {
    std::vector<std::tuple<std::size_t, int, int>> order;
    for (auto [s, t] : cand)
      order.emplace_back((c.in(t).size() - 1) * (c.out(s).size() - 1), s, t);
    cand.clear();
    std::sort(order.begin(), order.end());
    for (auto [cost, s, t] : order) {
      if (!c.alive(s) || !c.alive(t)) continue;
      auto it = c.out(s).find(t);
      if (it == c.out(s).end() || !is_iso(c, s, t, it->second)) continue;
      const mpq_class inv = -1 / it->second.begin()->second;
      std::vector<std::pair<int, Morphism>> ins, outs;
      for (int x : c.in(t))
        if (x != s) ins.emplace_back(x, c.out(x).at(t));
      for (const auto& [y, g] : c.out(s))
        if (y != t) outs.emplace_back(y, g);
      const int mid = c.slot(t).match;
      c.remove_slot(s);
      c.remove_slot(t);
      for (const auto& [x, delta] : ins)
        for (const auto& [y, gamma] : outs) {
          Morphism m = compose(c.slot(x).match, mid, c.slot(y).match, delta, gamma);
          if (m.empty()) continue;
          c.add_entry(x, y, scaled(m, inv));
          auto e = c.out(x).find(y);
          if (e != c.out(x).end() && is_iso(c, x, y, e->second)) cand.emplace(x, y);
        }
      ++removed;
    }
  }
  return removed;
}

KhComplex scan(const TangleDiagram& d, bool eliminate) {
  if (d.bottom() != 0) throw MalformedDiagram("scan needs a diagram with no bottom endpoints");
  KhComplex c = unit_complex();
  for (const Slice& s : d.slices()) {
    switch (s.kind) {
      case SliceKind::cup:
        c = apply_cup(c, s.pos);
        break;
      case SliceKind::cap:
        c = apply_cap(c, s.pos);
        break;
      case SliceKind::pos:
      case SliceKind::neg:
        c = apply_crossing(c, s.pos, s.kind == SliceKind::pos);
        break;
    }
    if (eliminate) gauss_eliminate(c);
  }
  return c;
}

// ------------------------------------------------------------ homology

int BettiTable::total() const {
  int t = 0;
  for (const auto& [k, r] : ranks) t += r;
  return t;
}

std::string BettiTable::str() const {
  if (ranks.empty()) return "(zero)\n";
  std::set<int> hs, qs;
  for (const auto& [k, r] : ranks) {
    hs.insert(k.first);
    qs.insert(k.second);
  }
  std::ostringstream os;
  const int w = 7;
  auto pad = [&](const std::string& s) { return std::string(static_cast<std::size_t>(std::max(0, w - static_cast<int>(s.size()))), ' ') + s; };
  os << pad("q\\h");
  for (int h : hs) os << pad(half_str(h));
  os << "\n";
  for (auto qi = qs.rbegin(); qi != qs.rend(); ++qi) {
    os << pad(half_str(*qi));
    for (int h : hs) {
      auto it = ranks.find({h, *qi});
      os << pad(it == ranks.end() ? "." : std::to_string(it->second));
    }
    os << "\n";
  }
  return os.str();
}

BettiTable homology(const KhComplex& c) {
  BettiTable b;
  // blocks by q2, then by h2
  std::map<int, std::map<int, std::vector<int>>> blocks;
  bool have_mu = false;
  for (int s = 0; s < c.capacity(); ++s) {
    if (!c.alive(s)) continue;
    const KhSlot& x = c.slot(s);
    if (matching(x.match).n() != 0) throw InvariantViolation("homology needs a complex of empty matchings");
    int mu = ((x.shift.mu2 % 4) + 4) % 4;
    if (!have_mu) {
      b.mu2 = mu;
      have_mu = true;
    } else if (mu != b.mu2) {
      throw InvariantViolation("deg_2 is not homogeneous over the complex");
    }
    blocks[x.shift.q2][x.shift.h2].push_back(s);
  }
  for (const auto& [q2, byh] : blocks) {
    std::map<int, int> rank_out;
    for (const auto& [h2, srcs] : byh) {
      auto nt = byh.find(h2 + 2);
      if (nt == byh.end()) continue;
      std::map<int, int> col;
      for (int t : nt->second) col.emplace(t, static_cast<int>(col.size()));
      std::vector<SparseRow> rows;
      for (int s : srcs) {
        std::vector<std::pair<int, mpq_class>> entries;
        mpz_class den = 1;
        for (const auto& [t, f] : c.out(s)) {
          auto ci = col.find(t);
          if (ci == col.end()) continue;
          auto it = f.find(0);
          if (it == f.end() || f.size() != 1) throw InvariantViolation("non-scalar entry between empty matchings");
          entries.emplace_back(ci->second, it->second);
          mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), it->second.get_den_mpz_t());
        }
        std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        SparseRow row;
        for (const auto& [j, v] : entries) {
          mpq_class w = v * den;
          row.emplace_back(j, w.get_num());
        }
        rows.push_back(std::move(row));
      }
      rank_out[h2] = sparse_rank(std::move(rows), static_cast<int>(col.size()));
    }
    for (const auto& [h2, srcs] : byh) {
      int r = static_cast<int>(srcs.size()) - rank_out[h2] - (rank_out.count(h2 - 2) ? rank_out[h2 - 2] : 0);
      if (r > 0) b.ranks[{h2, q2}] = r;
    }
  }
  return b;
}

BettiTable scan_link(const TangleDiagram& d) {
  if (d.bottom() != 0 || d.top() != 0) throw MalformedDiagram("scan_link needs a closed diagram");
  return homology(scan(d, true));
}

HalfLaurent euler_char(const BettiTable& b) {
  HalfLaurent e;
  for (const auto& [k, r] : b.ranks) {
    int sgn = floor_half(k.first + b.mu2) % 2 == 0 ? 1 : -1;
    e += HalfLaurent::monomial(sgn * r, k.second);
  }
  return e;
}

SkeinElement k0(const KhComplex& c) {
  int pts = c.points();
  SkeinElement out(0, pts < 0 ? 0 : pts);
  for (int s = 0; s < c.capacity(); ++s) {
    if (!c.alive(s)) continue;
    const KhSlot& x = c.slot(s);
    int sgn = floor_half(x.shift.h2 + x.shift.mu2) % 2 == 0 ? 1 : -1;
    out.add(matching(x.match), RatFun(HalfLaurent::monomial(sgn, x.shift.q2)));
  }
  return out;
}

bool degrees_ok(const KhComplex& c) {
  for (int s = 0; s < c.capacity(); ++s) {
    if (!c.alive(s)) continue;
    const KhSlot& a = c.slot(s);
    for (const auto& [t, f] : c.out(s)) {
      const KhSlot& b = c.slot(t);
      if (b.shift.h2 != a.shift.h2 + 2) return false;
      if ((a.shift.q2 - b.shift.q2) % 2 != 0) return false;
      for (const auto& [l, v] : f)
        if (generator_degree(a.match, b.match, l) != (a.shift.q2 - b.shift.q2) / 2) return false;
    }
  }
  return true;
}

bool d_squared_zero(const KhComplex& c) {
  for (int s = 0; s < c.capacity(); ++s) {
    if (!c.alive(s)) continue;
    std::map<int, Morphism> acc;
    for (const auto& [t, f] : c.out(s))
      for (const auto& [u, g] : c.out(t)) {
        Morphism m = compose(c.slot(s).match, c.slot(t).match, c.slot(u).match, f, g);
        for (const auto& [l, v] : m) add_to(acc[u], l, v);
      }
    for (const auto& [u, m] : acc)
      if (!m.empty()) return false;
  }
  return true;
}

}  // namespace qtl
