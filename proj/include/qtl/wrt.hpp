#pragma once

#include <climits>
#include <complex>
#include <string>
#include <vector>

#include "qtl/projectors.hpp"
#include "qtl/skein.hpp"

namespace qtl {

struct StableInvariant {
  int n = 0;  ///< half the strand count
  HalfLaurent poly;
  std::string str() const { return poly.str(); }
  friend bool operator==(const StableInvariant&, const StableInvariant&) = default;
};

/// closure_s3(P_{2n,0} o <tau>). Throws ValenceMismatch for an odd or
/// non-square tangle, PolynomialityViolation if a denominator survives.
StableInvariant stable_invariant(const TangleDiagram& tau);

/// Strand 1 travels around the other 2n-1 strands and back,
/// s1 s2 ... s_{N-1} s_{N-1} ... s1, with two positive curls on it.
TangleDiagram rotation_generator(int strands);

struct InvarianceReport {
  bool rotation = false;
  bool twist = false;
  bool cyclic = false;
  bool flip = false;
  bool ok() const { return rotation && twist && cyclic && flip; }
  std::string str() const;
};

/// Compares stable_invariant(t1 o t2) with its images under the rotation
/// generator, the framed full twist, t2 o t1 and the flipped diagram.
InvarianceReport invariance_suite(const TangleDiagram& t1, const TangleDiagram& t2);

/// Value at q = exp(i pi / r). Writes a warning to stderr when r < n + 2,
/// where the equality with the WRT invariant is not claimed.
std::complex<double> wrt_at_level(const StableInvariant& s, int r);
bool wrt_level_claimed(const StableInvariant& s, int r);

struct TwistApproximation {
  int n = 0, m = 0;
  HalfLaurent value;  ///< closure of tau o (framed full twist)^m
  HalfLaurent stable;
  /// Coefficients of doubled exponent < theta2 must agree; INT_MAX when every
  /// non-leading channel vanishes.
  int theta2 = INT_MAX;
  /// closure(P_{2n,2k} o <tau>) for k = 0..n
  std::vector<HalfLaurent> channels;
  /// Lowest doubled exponent where value and stable differ (INT_MAX if none).
  int first_difference2() const;
};

TwistApproximation twist_approximation(const TangleDiagram& tau, int m);

}  // namespace qtl
