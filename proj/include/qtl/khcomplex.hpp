#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "qtl/frobenius.hpp"
#include "qtl/skein.hpp"

namespace qtl {

/// Doubled degrees: h2 = 2 deg_h, q2 = 2 deg_q, mu2 = 2 deg_2.
struct GradedShift {
  int h2 = 0;
  int q2 = 0;
  int mu2 = 0;
  friend bool operator==(const GradedShift&, const GradedShift&) = default;
};

struct KhSlot {
  int match = 0;  ///< matching id, see matching()
  GradedShift shift;
};

/// Chain complex over (0,2k) matchings. Slots are never reindexed; removed
/// slots stay as dead entries so that ids held by callers remain valid.
class KhComplex {
 public:
  int add_slot(const KhSlot& s);
  /// Accumulates f into the entry src -> tgt, dropping it if it cancels.
  void add_entry(int src, int tgt, const Morphism& f);
  void add_entry(int src, int tgt, Labeling l, const mpq_class& c);
  void remove_slot(int s);

  bool alive(int s) const { return alive_[s] != 0; }
  int capacity() const { return static_cast<int>(slots_.size()); }
  int size() const { return live_; }
  const KhSlot& slot(int s) const { return slots_[s]; }
  const std::map<int, Morphism>& out(int s) const { return out_[s]; }
  const std::set<int>& in(int t) const { return in_[t]; }
  std::size_t entry_count() const;
  /// Number of top points of the matchings (2k); -1 if empty.
  int points() const;

 private:
  std::vector<KhSlot> slots_;
  std::vector<char> alive_;
  std::vector<std::map<int, Morphism>> out_;
  std::vector<std::set<int>> in_;
  int live_ = 0;
};

/// Complex of the empty diagram: one empty matching in degree zero.
KhComplex unit_complex();

KhComplex apply_cup(const KhComplex& c, int i);
/// Caps at i; a closed circle is delooped at once into shifts [0, +1, 1] and
/// [0, -1, 1].
KhComplex apply_cap(const KhComplex& c, int i);
/// Tensors with the crossing cone at strands i, i+1. Positive: identity
/// smoothing at [-1/2, 1/2, 1/2], turnback at [1/2, -1/2, -1/2]; negative has
/// the two smoothings exchanged. The saddle gets the sign (-1)^floor(h2/2).
KhComplex apply_crossing(const KhComplex& c, int i, bool positive);

/// Two-term complex of a crossing bent into a (0,4) tangle (cups at 1 and 3).
KhComplex crossing_cone(bool positive);

/// Shifts a slot by [0, +1, 1] and [0, -1, 1], the two halves of a circle.
std::pair<KhSlot, KhSlot> deloop(const KhSlot& s);

/// Cancels identity entries (same matching, same q-degree) until none is
/// left, choosing pivots of least fill-in first. Returns the number of pairs
/// removed.
int gauss_eliminate(KhComplex& c);

/// Scans the slices of a diagram with bottom 0. With eliminate set, runs
/// gauss_eliminate after every slice.
KhComplex scan(const TangleDiagram& d, bool eliminate = true);

struct BettiTable {
  std::map<std::pair<int, int>, int> ranks;  ///< (h2, q2) -> rank
  int mu2 = 0;  ///< common deg_2 class of all generators, doubled, mod 4
  int total() const;
  /// (-1)^{h + z2_offset} is the sign of a generator in degree h (integer h).
  int z2_offset() const { return ((mu2 % 4) + 4) % 4 / 2; }
  std::string str() const;
  friend bool operator==(const BettiTable&, const BettiTable&) = default;
};

/// Homology of a complex whose matchings are all empty. Throws
/// InvariantViolation if the deg_2 classes disagree.
BettiTable homology(const KhComplex& c);

/// Khovanov homology of a closed diagram; MalformedDiagram unless (0,0).
BettiTable scan_link(const TangleDiagram& d);

/// Sum over (h2,q2) of rank (-1)^{(h2 + mu2)/2} q^{q2/2}.
HalfLaurent euler_char(const BettiTable& b);

/// Decategorification: sum of (-1)^{(h2+mu2)/2} q^{q2/2} <matching> over slots.
SkeinElement k0(const KhComplex& c);

/// Every entry raises h2 by 2 and each labeled generator has degree
/// (q2_src - q2_tgt)/2.
bool degrees_ok(const KhComplex& c);
bool d_squared_zero(const KhComplex& c);

}  // namespace qtl
