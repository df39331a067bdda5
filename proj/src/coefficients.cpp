#include "qtl/coefficients.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <ostream>
#include <sstream>

namespace qtl {

// ---------------------------------------------------------------- HalfLaurent

HalfLaurent::HalfLaurent(long c) {
  if (c != 0) terms_.emplace(0, mpq_class(c));
}

HalfLaurent::HalfLaurent(const mpq_class& c) {
  if (sgn(c) != 0) {
    mpq_class v = c;
    v.canonicalize();
    terms_.emplace(0, std::move(v));
  }
}

HalfLaurent HalfLaurent::monomial(const mpq_class& c, int d2) {
  HalfLaurent r;
  if (sgn(c) != 0) {
    mpq_class v = c;
    v.canonicalize();
    r.terms_.emplace(d2, std::move(v));
  }
  return r;
}

HalfLaurent HalfLaurent::delta() { return monomial(-1, 2) + monomial(-1, -2); }

bool HalfLaurent::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
}

bool HalfLaurent::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

int HalfLaurent::min_exp2() const {
  if (terms_.empty()) throw Error("min_exp2 of zero polynomial");
  return terms_.begin()->first;
}

int HalfLaurent::max_exp2() const {
  if (terms_.empty()) throw Error("max_exp2 of zero polynomial");
  return terms_.rbegin()->first;
}

mpq_class HalfLaurent::coeff(int d2) const {
  auto it = terms_.find(d2);
  return it == terms_.end() ? mpq_class(0) : it->second;
}

void HalfLaurent::add_term(int d2, const mpq_class& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(d2, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

HalfLaurent HalfLaurent::bar() const {
  HalfLaurent r;
  for (const auto& [d, c] : terms_) r.terms_.emplace_hint(r.terms_.begin(), -d, c);
  return r;
}

HalfLaurent HalfLaurent::shifted(int d2) const {
  HalfLaurent r;
  for (const auto& [d, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), d + d2, c);
  return r;
}

HalfLaurent HalfLaurent::pow(unsigned e) const {
  HalfLaurent r(1), b = *this;
  while (e) {
    if (e & 1u) r *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return r;
}

HalfLaurent& HalfLaurent::operator+=(const HalfLaurent& o) {
  for (const auto& [d, c] : o.terms_) add_term(d, c);
  return *this;
}

HalfLaurent& HalfLaurent::operator-=(const HalfLaurent& o) {
  for (const auto& [d, c] : o.terms_) add_term(d, -c);
  return *this;
}

HalfLaurent operator*(const HalfLaurent& a, const HalfLaurent& b) {
  HalfLaurent r;
  if (a.is_zero() || b.is_zero()) return r;
  for (const auto& [da, ca] : a.terms_)
    for (const auto& [db, cb] : b.terms_) r.add_term(da + db, ca * cb);
  return r;
}

HalfLaurent& HalfLaurent::operator*=(const HalfLaurent& o) { return *this = *this * o; }

HalfLaurent& HalfLaurent::operator*=(const mpq_class& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [d, v] : terms_) v *= c;
  return *this;
}

HalfLaurent HalfLaurent::operator-() const {
  HalfLaurent r = *this;
  for (auto& [d, v] : r.terms_) v = -v;
  return r;
}

std::string half_str(int d2) {
  if (d2 % 2 == 0) return std::to_string(d2 / 2);
  return std::to_string(d2) + "/2";
}

std::string HalfLaurent::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [d, c] : terms_) {
    mpq_class a = abs(c);
    bool neg = sgn(c) < 0;
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    if (d == 0) {
      out += a.get_str();
      continue;
    }
    if (a != 1) out += a.get_str() + "*";
    out += "q";
    if (d != 2) out += "^" + half_str(d);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const HalfLaurent& a) { return os << a.str(); }

std::complex<double> HalfLaurent::eval_at_root(int r) const {
  std::complex<double> sum = 0;
  for (const auto& [d, c] : terms_) {
    double ang = std::numbers::pi * d / (2.0 * r);
    sum += c.get_d() * std::complex<double>(std::cos(ang), std::sin(ang));
  }
  return sum;
}

namespace {

class HLParser {
 public:
  explicit HLParser(std::string_view s) : s_(s) {}

  HalfLaurent run() {
    HalfLaurent out;
    skip();
    if (pos_ == s_.size()) throw ParseError("empty polynomial", pos_);
    bool first = true;
    while (pos_ < s_.size()) {
      int sign = 1;
      if (s_[pos_] == '+' || s_[pos_] == '-') {
        sign = s_[pos_] == '-' ? -1 : 1;
        ++pos_;
        skip();
      } else if (!first) {
        throw ParseError("expected '+' or '-'", pos_);
      }
      first = false;
      out += term() * mpq_class(sign);
      skip();
    }
    return out;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  mpz_class integer() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected digits", pos_);
    return mpz_class(std::string(s_.substr(start, pos_ - start)));
  }

  HalfLaurent term() {
    mpq_class coef = 1;
    bool have_coef = false;
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      mpz_class num = integer();
      mpz_class den = 1;
      if (pos_ < s_.size() && s_[pos_] == '/') {
        ++pos_;
        den = integer();
        if (den == 0) throw ParseError("zero denominator in coefficient", pos_);
      }
      coef = mpq_class(num, den);
      coef.canonicalize();
      have_coef = true;
      skip();
      if (pos_ < s_.size() && s_[pos_] == '*') {
        ++pos_;
        skip();
        if (pos_ >= s_.size() || s_[pos_] != 'q') throw ParseError("expected 'q'", pos_);
      }
    }
    if (pos_ < s_.size() && s_[pos_] == 'q') {
      ++pos_;
      int d2 = 2;
      if (pos_ < s_.size() && s_[pos_] == '^') {
        ++pos_;
        int sg = 1;
        if (pos_ < s_.size() && s_[pos_] == '-') {
          sg = -1;
          ++pos_;
        }
        mpz_class e = integer();
        if (pos_ < s_.size() && s_[pos_] == '/') {
          ++pos_;
          std::size_t at = pos_;
          if (integer() != 2) throw ParseError("exponent denominator must be 2", at);
          d2 = sg * static_cast<int>(e.get_si());
        } else {
          d2 = sg * 2 * static_cast<int>(e.get_si());
        }
      }
      return HalfLaurent::monomial(coef, d2);
    }
    if (!have_coef) throw ParseError("expected term", pos_);
    return HalfLaurent(coef);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

HalfLaurent HalfLaurent::parse(std::string_view text) { return HLParser(text).run(); }

// ----------------------------------------------------------------- ZPoly

namespace poly {

namespace {

void trim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Pseudo-remainder of a by b.
ZPoly prem(ZPoly a, const ZPoly& b) {
  const std::size_t db = b.size() - 1;
  const mpz_class& lb = b.back();
  while (a.size() >= b.size()) {
    mpz_class la = a.back();
    std::size_t shift = a.size() - b.size();
    for (auto& c : a) c *= lb;
    for (std::size_t i = 0; i <= db; ++i) a[i + shift] -= la * b[i];
    trim(a);
  }
  return a;
}

}  // namespace

mpz_class content(const ZPoly& a) {
  mpz_class g = 0;
  for (const auto& c : a) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

ZPoly primitive(const ZPoly& a) {
  ZPoly r = a;
  trim(r);
  if (r.empty()) return r;
  mpz_class g = content(r);
  if (r.back() < 0) g = -g;
  if (g != 1)
    for (auto& c : r) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return r;
}

ZPoly gcd(ZPoly a, ZPoly b) {
  a = primitive(a);
  b = primitive(b);
  if (a.empty()) return b;
  if (b.empty()) return a;
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    if (b.size() == 1) return ZPoly{1};
    ZPoly r = prem(a, b);
    a = std::move(b);
    b = primitive(r);
  }
  return a;
}

ZPoly divexact(const ZPoly& a, const ZPoly& b) {
  ZPoly r = a;
  trim(r);
  if (r.empty()) return r;
  if (b.empty() || r.size() < b.size()) throw InvariantViolation("divexact: degree");
  ZPoly q(r.size() - b.size() + 1);
  for (std::size_t k = q.size(); k-- > 0;) {
    mpz_class c = r[k + b.size() - 1];
    if (c == 0) continue;
    if (!mpz_divisible_p(c.get_mpz_t(), b.back().get_mpz_t()))
      throw InvariantViolation("divexact: not divisible");
    mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), b.back().get_mpz_t());
    q[k] = c;
    for (std::size_t i = 0; i < b.size(); ++i) r[k + i] -= c * b[i];
  }
  trim(r);
  if (!r.empty()) throw InvariantViolation("divexact: nonzero remainder");
  return q;
}

}  // namespace poly

// ----------------------------------------------------------------- RatFun

namespace {

// a = scale * s^shift * P(s) with P primitive, P(0) != 0, positive lead.
struct Split {
  int shift = 0;
  mpq_class scale;
  poly::ZPoly p;
};

Split split(const HalfLaurent& a) {
  Split out;
  out.shift = a.min_exp2();
  const int top = a.max_exp2();
  mpz_class lcm = 1;
  for (const auto& [d, c] : a.terms()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
  out.p.assign(static_cast<std::size_t>(top - out.shift + 1), 0);
  for (const auto& [d, c] : a.terms()) {
    mpz_class v = lcm / c.get_den();
    out.p[static_cast<std::size_t>(d - out.shift)] = v * c.get_num();
  }
  mpz_class g = poly::content(out.p);
  if (out.p.back() < 0) g = -g;
  for (auto& c : out.p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  out.scale = mpq_class(g, lcm);
  out.scale.canonicalize();
  return out;
}

HalfLaurent from_poly(const poly::ZPoly& p, int shift, const mpq_class& scale) {
  HalfLaurent r;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != 0) r += HalfLaurent::monomial(scale * p[i], shift + static_cast<int>(i));
  return r;
}

}  // namespace

RatFun RatFun::normalize(const HalfLaurent& n, const HalfLaurent& d) {
  if (d.is_zero()) throw ZeroDenominator();
  RatFun r;
  if (n.is_zero()) return r;
  Split sd = split(d);
  if (sd.p.size() == 1) {
    r.num_ = n.shifted(-sd.shift) * mpq_class(1 / sd.scale);
    return r;
  }
  Split sn = split(n);
  poly::ZPoly g = poly::gcd(sn.p, sd.p);
  if (g.size() > 1) {
    sn.p = poly::divexact(sn.p, g);
    sd.p = poly::divexact(sd.p, g);
  }
  mpq_class sc = sn.scale / sd.scale;
  r.num_ = from_poly(sn.p, sn.shift - sd.shift, sc);
  r.den_ = from_poly(sd.p, 0, 1);
  return r;
}

const HalfLaurent& RatFun::as_polynomial() const {
  if (!is_polynomial()) throw PolynomialityViolation("nontrivial denominator: " + str());
  return num_;
}

RatFun RatFun::inverse() const {
  if (is_zero()) throw ZeroDenominator();
  return normalize(den_, num_);
}

RatFun RatFun::bar() const { return normalize(num_.bar(), den_.bar()); }

RatFun& RatFun::operator+=(const RatFun& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_.is_one() && o.den_.is_one()) {
    num_ += o.num_;
    return *this;
  }
  if (den_ == o.den_) return *this = normalize(num_ + o.num_, den_);
  return *this = normalize(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFun& RatFun::operator-=(const RatFun& o) { return *this += -o; }

RatFun& RatFun::operator*=(const RatFun& o) {
  if (is_zero() || o.is_zero()) return *this = RatFun();
  if (den_.is_one() && o.den_.is_one()) {
    num_ *= o.num_;
    return *this;
  }
  if (o.num_.is_constant() && o.den_.is_one()) {
    num_ *= o.num_.coeff(0);
    return *this;
  }
  return *this = normalize(num_ * o.num_, den_ * o.den_);
}

RatFun RatFun::operator-() const {
  RatFun r = *this;
  r.num_ = -r.num_;
  return r;
}

std::string RatFun::str() const {
  if (den_.is_one()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

std::complex<double> RatFun::eval_at_root(int r) const {
  return num_.eval_at_root(r) / den_.eval_at_root(r);
}

std::ostream& operator<<(std::ostream& os, const RatFun& a) { return os << a.str(); }

// ------------------------------------------------------------ free functions

HalfLaurent hl_arith(const HalfLaurent& a, const HalfLaurent& b, ArithOp op) {
  switch (op) {
    case ArithOp::add:
      return a + b;
    case ArithOp::sub:
      return a - b;
    case ArithOp::mul:
      return a * b;
  }
  return {};
}

HalfLaurent bar(const HalfLaurent& a) { return a.bar(); }

RatFun rf_normalize(const HalfLaurent& n, const HalfLaurent& d) { return RatFun::normalize(n, d); }

std::complex<double> eval_at_root(const HalfLaurent& a, int r) { return a.eval_at_root(r); }

HalfLaurent quantum_int(int k) {
  HalfLaurent r;
  int a = std::abs(k);
  for (int j = -(a - 1); j <= a - 1; j += 2) r += HalfLaurent::q(j);
  return k < 0 ? -r : r;
}

}  // namespace qtl
