#pragma once

#include <string>
#include <vector>

#include "qtl/linalg.hpp"
#include "qtl/planar.hpp"
#include "qtl/skein.hpp"

namespace qtl {

/// Default largest n accepted by projector_family; QTL_PROJECTOR_CEILING overrides.
inline constexpr int kProjectorCeiling = 6;
int projector_ceiling();

struct JWProjector {
  int n = 0;
  int m = 0;  ///< through channel; m == n for the classical projector
  SkeinElement element;
};

/// Square matrix indexed either by canonical cup/cap words (labels are
/// word_str) or, for the split projector, by (0,2n) matchings.
struct BMatrix {
  int n = 0;
  int m = 0;
  std::vector<std::string> labels;
  RatMatrix entries;
};

/// Classical projector, by solving e_i o P = 0 in the TL basis. Memoized.
const JWProjector& wenzl(int n);

BMatrix b_matrix_split(int n);
/// P_{2n,0} from matchings: sum of B^{-1}_{ab} <b o flip(a)>.
JWProjector projector_split(int n);

BMatrix b_matrix_family(int n, int m);
/// Throws InvalidParity unless 0 <= m <= n and n - m even; TooLarge above the ceiling.
JWProjector projector_family(int n, int m, int ceiling = projector_ceiling());

/// (-1)^m [m+1].
HalfLaurent projector_closure_formula(int m);

/// closure_s3(P_{n,m} o x); the trace of x acting on cup^I o P_m is computed
/// on the side and compared. Throws InvariantViolation if they differ.
RatFun projected_trace(const SkeinElement& x, int m);

/// Meridian around n strands, cabled k times with P_k inserted in the cable.
SkeinElement meridian_element(int n, int k);

/// (-1)^{k(m+1)} [(k+1)(m+1)] / [m+1], a sign variant of
/// meridian_coefficient; the two agree when k m is even.
RatFun meridian_coefficient_stated(int k, int m);
/// (-1)^k [(k+1)(m+1)] / [m+1], the value produced by a 0-framed meridian
/// with circle value -(q + q^{-1}).
RatFun meridian_coefficient(int k, int m);

struct EigenLine {
  int m;
  RatFun observed;  ///< scalar by which the meridian acts on P_{n,m}
  RatFun stated;
  RatFun expected;
};

struct EigenReport {
  int n = 0, k = 0;
  bool twist_ok = false;  ///< full twist acts on P_n by (-1)^n q^{n(n+2)/2}
  bool expansion_ok = false;  ///< meridian == sum expected * P_{n,m}
  bool stated_ok = false;  ///< meridian == sum stated * P_{n,m}
  std::vector<EigenLine> lines;
  std::string str() const;
};

EigenReport eigen_checks(int n, int k);

}  // namespace qtl
