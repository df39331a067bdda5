#pragma once

#include <complex>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "qtl/errors.hpp"

namespace qtl {

/// Laurent polynomial in s = q^{1/2} with rational coefficients.
/// Keys are doubled q-exponents: the key d stands for q^{d/2}.
class HalfLaurent {
 public:
  using Terms = std::map<int, mpq_class>;

  HalfLaurent() = default;
  HalfLaurent(long c);  // NOLINT: constants convert implicitly
  explicit HalfLaurent(const mpq_class& c);

  static HalfLaurent monomial(const mpq_class& c, int d2);
  /// q^e for integer e.
  static HalfLaurent q(int e = 1) { return monomial(1, 2 * e); }
  /// The circle value -(q + q^{-1}).
  static HalfLaurent delta();
  static HalfLaurent parse(std::string_view text);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_constant() const;
  int min_exp2() const;
  int max_exp2() const;
  mpq_class coeff(int d2) const;
  std::size_t size() const { return terms_.size(); }

  HalfLaurent bar() const;
  /// Multiplies by q^{d2/2}.
  HalfLaurent shifted(int d2) const;
  HalfLaurent pow(unsigned e) const;

  HalfLaurent& operator+=(const HalfLaurent& o);
  HalfLaurent& operator-=(const HalfLaurent& o);
  HalfLaurent& operator*=(const HalfLaurent& o);
  HalfLaurent& operator*=(const mpq_class& c);
  HalfLaurent operator-() const;

  friend HalfLaurent operator+(HalfLaurent a, const HalfLaurent& b) { return a += b; }
  friend HalfLaurent operator-(HalfLaurent a, const HalfLaurent& b) { return a -= b; }
  friend HalfLaurent operator*(const HalfLaurent& a, const HalfLaurent& b);
  friend HalfLaurent operator*(HalfLaurent a, const mpq_class& c) { return a *= c; }
  friend bool operator==(const HalfLaurent& a, const HalfLaurent& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const HalfLaurent& a, const HalfLaurent& b) { return !(a == b); }
  friend bool operator<(const HalfLaurent& a, const HalfLaurent& b) { return a.terms_ < b.terms_; }

  std::string str() const;
  std::complex<double> eval_at_root(int r) const;

 private:
  void add_term(int d2, const mpq_class& c);
  Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const HalfLaurent& a);

/// Renders a doubled exponent as an exact half ("3", "-3/2").
std::string half_str(int d2);

/// Quotient of HalfLaurents. The denominator is stored as a primitive
/// integer polynomial in s with positive leading coefficient and nonzero
/// constant term, which makes the representation canonical.
class RatFun {
 public:
  RatFun() : den_(1) {}
  RatFun(long c) : num_(c), den_(1) {}  // NOLINT
  RatFun(const HalfLaurent& p) : num_(p), den_(1) {}  // NOLINT
  RatFun(const mpq_class& c) : num_(c), den_(1) {}  // NOLINT

  static RatFun normalize(const HalfLaurent& n, const HalfLaurent& d);

  const HalfLaurent& num() const { return num_; }
  const HalfLaurent& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_one(); }
  /// Throws PolynomialityViolation unless the denominator is 1.
  const HalfLaurent& as_polynomial() const;

  RatFun inverse() const;
  RatFun bar() const;

  RatFun& operator+=(const RatFun& o);
  RatFun& operator-=(const RatFun& o);
  RatFun& operator*=(const RatFun& o);
  RatFun& operator/=(const RatFun& o) { return *this *= o.inverse(); }
  RatFun operator-() const;

  friend RatFun operator+(RatFun a, const RatFun& b) { return a += b; }
  friend RatFun operator-(RatFun a, const RatFun& b) { return a -= b; }
  friend RatFun operator*(RatFun a, const RatFun& b) { return a *= b; }
  friend RatFun operator/(RatFun a, const RatFun& b) { return a /= b; }
  friend bool operator==(const RatFun& a, const RatFun& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFun& a, const RatFun& b) { return !(a == b); }

  std::string str() const;
  std::complex<double> eval_at_root(int r) const;

 private:
  HalfLaurent num_;
  HalfLaurent den_;
};

std::ostream& operator<<(std::ostream& os, const RatFun& a);

enum class ArithOp { add, sub, mul };

HalfLaurent hl_arith(const HalfLaurent& a, const HalfLaurent& b, ArithOp op);
HalfLaurent bar(const HalfLaurent& a);
RatFun rf_normalize(const HalfLaurent& n, const HalfLaurent& d);
std::complex<double> eval_at_root(const HalfLaurent& a, int r);

/// Balanced quantum integer [k] = (q^k - q^{-k}) / (q - q^{-1}).
HalfLaurent quantum_int(int k);

namespace poly {

/// Dense integer polynomial in s, index = power.
using ZPoly = std::vector<mpz_class>;

ZPoly gcd(ZPoly a, ZPoly b);
ZPoly primitive(const ZPoly& a);
mpz_class content(const ZPoly& a);
/// Exact quotient; throws InvariantViolation if b does not divide a.
ZPoly divexact(const ZPoly& a, const ZPoly& b);

}  // namespace poly

}  // namespace qtl
