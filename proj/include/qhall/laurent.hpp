/*
  laurent.hpp

  Exact Laurent polynomials in the formal variable v over Q, plus the
  quantum integers, factorials and binomial coefficients built from them.
  Coefficients are GMP rationals, so all arithmetic is exact.
*/

#pragma once

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>

namespace qhall {

using Rat = mpq_class;

// canonical "p" or "p/q" with q > 0
inline std::string rat_str(const Rat& r) {
  Rat c = r;
  c.canonicalize();
  return c.get_str();
}

inline Rat rat_pow(const Rat& base, long e) {
  if (e == 0) return Rat(1);
  Rat b = e > 0 ? base : Rat(1) / base;
  long n = e > 0 ? e : -e;
  Rat acc(1);
  while (n > 0) {
    if (n & 1) acc *= b;
    b *= b;
    n >>= 1;
  }
  return acc;
}

class Laurent {
 public:
  Laurent() = default;

  static Laurent zero() { return Laurent(); }
  static Laurent one() { return term(Rat(1), 0); }
  static Laurent constant(const Rat& c) { return term(c, 0); }
  static Laurent v_pow(long e) { return term(Rat(1), e); }

  static Laurent term(const Rat& c, long e) {
    Laurent p;
    if (c != 0) p.t_[e] = c;
    return p;
  }

  bool is_zero() const { return t_.empty(); }
  bool is_one() const { return t_.size() == 1 && t_.begin()->first == 0 && t_.begin()->second == 1; }
  const std::map<long, Rat>& terms() const { return t_; }

  long min_exp() const { require_nonzero(); return t_.begin()->first; }
  long max_exp() const { require_nonzero(); return t_.rbegin()->first; }

  Rat coeff(long e) const {
    auto it = t_.find(e);
    return it == t_.end() ? Rat(0) : it->second;
  }

  Laurent& operator+=(const Laurent& o) {
    for (const auto& [e, c] : o.t_) {
      Rat& slot = t_[e];
      slot += c;
      if (slot == 0) t_.erase(e);
    }
    return *this;
  }
  Laurent operator+(const Laurent& o) const { Laurent r = *this; r += o; return r; }

  Laurent operator-() const {
    Laurent r = *this;
    for (auto& [e, c] : r.t_) c = -c;
    return r;
  }
  Laurent& operator-=(const Laurent& o) { return *this += -o; }
  Laurent operator-(const Laurent& o) const { Laurent r = *this; r -= o; return r; }

  Laurent operator*(const Laurent& o) const {
    Laurent r;
    for (const auto& [e1, c1] : t_)
      for (const auto& [e2, c2] : o.t_) {
        Rat& slot = r.t_[e1 + e2];
        slot += c1 * c2;
        if (slot == 0) r.t_.erase(e1 + e2);
      }
    return r;
  }
  Laurent& operator*=(const Laurent& o) { *this = *this * o; return *this; }

  Laurent scaled(const Rat& c) const {
    if (c == 0) return zero();
    Laurent r = *this;
    for (auto& [e, co] : r.t_) co *= c;
    return r;
  }

  Laurent shifted(long e) const {  // multiply by v^e
    Laurent r;
    for (const auto& [ex, c] : t_) r.t_[ex + e] = c;
    return r;
  }

  Laurent pow(unsigned long n) const {
    Laurent acc = one(), b = *this;
    while (n > 0) {
      if (n & 1) acc *= b;
      b *= b;
      n >>= 1;
    }
    return acc;
  }

  Laurent bar() const {  // v -> v^{-1}
    Laurent r;
    for (const auto& [e, c] : t_) r.t_[-e] = c;
    return r;
  }

  Rat eval_one() const {  // value at v = 1
    Rat s(0);
    for (const auto& [e, c] : t_) s += c;
    return s;
  }

  bool operator==(const Laurent& o) const { return t_ == o.t_; }
  bool operator!=(const Laurent& o) const { return !(*this == o); }

  // exact division: a = q*b with no remainder; returns false if inexact
  static bool try_div(const Laurent& a, const Laurent& b, Laurent& quot) {
    if (b.is_zero()) throw std::domain_error("Laurent::try_div: division by zero");
    quot = zero();
    if (a.is_zero()) return true;
    Laurent rem = a;
    long span = (a.max_exp() - a.min_exp()) + 1;
    for (long step = 0; step <= span && !rem.is_zero(); ++step) {
      long e = rem.max_exp() - b.max_exp();
      Rat c = rem.coeff(rem.max_exp()) / b.terms().rbegin()->second;
      Laurent t = term(c, e);
      quot += t;
      rem -= t * b;
    }
    return rem.is_zero();
  }

  static Laurent div_exact(const Laurent& a, const Laurent& b) {
    Laurent q;
    if (!try_div(a, b, q)) throw std::domain_error("Laurent::div_exact: inexact division");
    return q;
  }

  // sparse "c*v^e" sums with decreasing exponents; "0" for zero
  std::string str() const {
    if (t_.empty()) return "0";
    std::string s;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
      if (!s.empty()) s += " + ";
      s += rat_str(it->second) + "*v^" + std::to_string(it->first);
    }
    return s;
  }

  static Laurent parse(const std::string& s);

 private:
  std::map<long, Rat> t_;  // exponent -> coefficient, no zero entries

  void require_nonzero() const {
    if (t_.empty()) throw std::domain_error("Laurent: zero polynomial has no degree");
  }
};

inline Laurent Laurent::parse(const std::string& s) {
  auto fail = [&]() -> Laurent { throw std::invalid_argument("Laurent::parse: bad input '" + s + "'"); };
  std::string in = s;
  if (in == "0") return zero();
  Laurent out;
  size_t pos = 0;
  while (pos < in.size()) {
    size_t next = in.find(" + ", pos);
    std::string piece = in.substr(pos, next == std::string::npos ? next : next - pos);
    size_t star = piece.find("*v^");
    if (star == std::string::npos) return fail();
    Rat c(piece.substr(0, star));
    c.canonicalize();
    long e = std::stol(piece.substr(star + 3));
    out += term(c, e);
    if (next == std::string::npos) break;
    pos = next + 3;
  }
  return out;
}

// [n] at v^d: (v^{dn} - v^{-dn}) / (v^d - v^{-d}); [-n] = -[n]
inline Laurent qint(long n, long d = 1) {
  if (d <= 0) throw std::invalid_argument("qint: scale d must be positive");
  if (n == 0) return Laurent::zero();
  if (n < 0) return -qint(-n, d);
  Laurent p;
  for (long k = 0; k < n; ++k) p += Laurent::v_pow(d * (n - 1 - 2 * k));
  return p;
}

inline Laurent qfact(long n, long d = 1) {
  if (n < 0) throw std::invalid_argument("qfact: negative argument");
  Laurent p = Laurent::one();
  for (long k = 1; k <= n; ++k) p *= qint(k, d);
  return p;
}

// generalized top: product formula, total in the top argument
inline Laurent qbinom(long m, long t, long d = 1) {
  if (t < 0) throw std::invalid_argument("qbinom: negative bottom argument");
  Laurent num = Laurent::one();
  for (long s = 1; s <= t; ++s) num *= qint(m - s + 1, d);
  return Laurent::div_exact(num, qfact(t, d));
}

}  // namespace qhall
