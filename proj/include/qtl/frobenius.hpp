#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "qtl/planar.hpp"

namespace qtl {

/// Interned (0,2k) crossingless matchings; ids are stable for the process.
int matching_id(const TLTangle& t);
const TLTangle& matching(int id);

/// Circles of the closed diagram flip(beta) o alpha. Middle point j is the
/// j-th top point of both matchings; circles are numbered by their smallest
/// middle point.
struct HomCircles {
  int count = 0;
  std::vector<int> circle_of_point;
  std::vector<int> arcs;  ///< alpha arcs on each circle
};
const HomCircles& hom_circles(int alpha, int beta);

/// Bit c set means circle c carries x, clear means 1.
using Labeling = std::uint32_t;

/// Rational combination of labelings in one Hom space.
using Morphism = std::map<Labeling, mpq_class>;

void add_to(Morphism& f, Labeling l, const mpq_class& c);
Morphism scaled(const Morphism& f, const mpq_class& c);

/// q-degree of a labeled generator: k - #one + #x, k = number of arcs.
int generator_degree(int alpha, int beta, Labeling l);

struct CobGenerator {
  int source = 0;
  int target = 0;
  Labeling labels = 0;
  int degree() const { return generator_degree(source, target, labels); }
  std::string str() const;
  friend auto operator<=>(const CobGenerator&, const CobGenerator&) = default;
};

/// Identity of alpha: every circle of the closure labeled one.
inline Labeling identity_labeling() { return 0; }

/// g o f for f: alpha -> beta and g: beta -> gamma. Memoized per generator pair.
Morphism compose(int alpha, int beta, int gamma, const Morphism& f, const Morphism& g);

/// Generator form; throws MiddleMismatch if f.target != g.source.
std::vector<std::pair<CobGenerator, mpq_class>> frobenius_compose(const CobGenerator& f, const CobGenerator& g);

/// Swaps source and target, keeping the label of every circle.
CobGenerator reverse(const CobGenerator& g);

/// One term of a band move: labels on the resulting closure plus the labels
/// of the free circles that split off on the source (a) or target (b) side.
struct BandTerm {
  Labeling labels = 0;
  int a = -1;  ///< -1 no source circle, 0 labeled one, 1 labeled x
  int b = -1;
  mpq_class coeff;
};

/// cap_i applied to both ends of f: alpha -> beta.
struct CapResult {
  int source = 0;  ///< cap_i alpha
  int target = 0;
  bool source_circle = false;
  bool target_circle = false;
  std::vector<BandTerm> terms;
};
const CapResult& cap_morphism(int alpha, int beta, int i, Labeling f);

/// The saddle alpha -> cup_i cap_i alpha (pos = true), or the reverse
/// cup_i cap_i alpha -> alpha. A free circle appears when alpha joins i and i+1.
struct SaddleResult {
  int other = 0;  ///< cup_i cap_i alpha
  bool circle = false;
  std::vector<BandTerm> terms;
};
const SaddleResult& saddle_morphism(int alpha, int i, bool pos);

/// cup_i applied to both ends of f; the new circle is labeled one.
Labeling cup_labels(int alpha, int beta, int i, Labeling f);

/// Arc algebra H_n as the sum of Hom spaces between (0,2n) matchings.
struct HAlgebra {
  int n = 0;
  std::vector<int> matchings;
  std::vector<CobGenerator> basis;
  std::map<int, int> graded_dim;  ///< q-degree -> dimension
  std::map<CobGenerator, int> index;
  /// a * b = a o b (b acts first); zero unless b.target == a.source.
  std::vector<std::pair<int, mpq_class>> multiply(int a, int b) const;
  int unit_count() const { return static_cast<int>(matchings.size()); }
};
HAlgebra h_algebra(int n);

}  // namespace qtl
