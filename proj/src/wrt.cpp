#include "qtl/wrt.hpp"

#include <iostream>
#include <map>
#include <sstream>

namespace qtl {

namespace {

const SkeinElement& split_projector(int n) {
  static std::map<int, SkeinElement> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, projector_split(n).element).first;
  return it->second;
}

int half_strands(const TangleDiagram& tau) {
  if (tau.bottom() != tau.top() || tau.bottom() % 2 != 0)
    throw ValenceMismatch("stable invariant needs a (2n,2n) tangle, got (" + std::to_string(tau.bottom()) + "," +
                          std::to_string(tau.top()) + ")");
  return tau.bottom() / 2;
}

}  // namespace

StableInvariant stable_invariant(const TangleDiagram& tau) {
  const int n = half_strands(tau);
  RatFun v = closure_s3(split_projector(n) * bracket(tau));
  if (!v.is_polynomial())
    throw PolynomialityViolation("stable invariant has a denominator: " + v.str() + " for " + tau.str());
  return {n, v.num()};
}

TangleDiagram rotation_generator(int strands) {
  std::vector<int> w;
  for (int g = 1; g < strands; ++g) w.push_back(g);
  for (int g = strands - 1; g >= 1; --g) w.push_back(g);
  return TangleDiagram::braid(strands, w).with_kink(0).with_kink(0);
}

InvarianceReport invariance_suite(const TangleDiagram& t1, const TangleDiagram& t2) {
  InvarianceReport r;
  TangleDiagram tau = t1.after(t2);
  const int strands = tau.bottom();
  StableInvariant base = stable_invariant(tau);
  r.rotation = stable_invariant(tau.after(rotation_generator(strands))) == base;
  r.twist = stable_invariant(tau.after(full_twist_diagram(strands, 1))) == base;
  r.cyclic = stable_invariant(t2.after(t1)) == base;
  r.flip = stable_invariant(tau.flipped()) == base;
  return r;
}

std::string InvarianceReport::str() const {
  std::ostringstream os;
  os << "rotation " << (rotation ? "ok" : "FAIL") << ", twist " << (twist ? "ok" : "FAIL") << ", cyclic "
     << (cyclic ? "ok" : "FAIL") << ", flip " << (flip ? "ok" : "FAIL");
  return os.str();
}

bool wrt_level_claimed(const StableInvariant& s, int r) { return r >= s.n + 2; }

std::complex<double> wrt_at_level(const StableInvariant& s, int r) {
  if (r < 1) throw Error("wrt_at_level: level must be positive");
  if (!wrt_level_claimed(s, r))
    std::cerr << "warning: level r=" << r << " is below n+2=" << s.n + 2
              << "; agreement with the WRT invariant is not claimed there\n";
  return s.poly.eval_at_root(r);
}

int TwistApproximation::first_difference2() const {
  HalfLaurent d = value - stable;
  return d.is_zero() ? INT_MAX : d.min_exp2();
}

TwistApproximation twist_approximation(const TangleDiagram& tau, int m) {
  if (m < 1) throw Error("twist_approximation: m must be positive");
  const int n = half_strands(tau);
  TwistApproximation t;
  t.n = n;
  t.m = m;
  SkeinElement b = bracket(tau);
  t.value = closure_s3(bracket(tau.after(full_twist_diagram(2 * n, m)))).as_polynomial();
  t.stable = stable_invariant(tau).poly;
  HalfLaurent recombined;
  for (int k = 0; k <= n; ++k) {
    JWProjector p = projector_family(2 * n, 2 * k);
    RatFun c = closure_s3(p.element * b);
    if (!c.is_polynomial()) throw PolynomialityViolation("channel closure has a denominator: " + c.str());
    t.channels.push_back(c.num());
    const int shift2 = 4 * m * k * (k + 1);
    recombined += c.num().shifted(shift2);
    if (k >= 1 && !c.is_zero()) t.theta2 = std::min(t.theta2, shift2 + c.num().min_exp2());
  }
  if (recombined != t.value)
    throw InvariantViolation("twisted closure does not match its channel expansion");
  if (t.channels[0] != t.stable) throw InvariantViolation("channel 0 differs from the stable invariant");
  return t;
}

}  // namespace qtl
