/*
  ratfun.hpp

  Rational functions in v over Q, stored as Laurent fraction pairs.
  Every value is kept in a canonical reduced form (denominator a true
  polynomial with nonzero constant term, monic in its top coefficient,
  coprime to the numerator), so equality is componentwise; the defining
  notion of equality is still cross-multiplication and is exposed for
  property tests.
*/

#pragma once

#include "qhall/laurent.hpp"

namespace qhall {

namespace detail {

// gcd of two nonzero ordinary polynomials (min_exp >= 0), monic result
inline Laurent poly_gcd(Laurent a, Laurent b) {
  auto degree = [](const Laurent& p) { return p.max_exp(); };
  while (!b.is_zero()) {
    // remainder of a by b
    Laurent r = a;
    while (!r.is_zero() && degree(r) >= degree(b)) {
      Rat c = r.terms().rbegin()->second / b.terms().rbegin()->second;
      r -= Laurent::term(c, degree(r) - degree(b)) * b;
    }
    a = b;
    b = r;
  }
  Rat lead = a.terms().rbegin()->second;
  return a.scaled(Rat(1) / lead);
}

}  // namespace detail

class RatFun {
 public:
  RatFun() : num_(Laurent::zero()), den_(Laurent::one()) {}
  RatFun(const Rat& c) : num_(Laurent::constant(c)), den_(Laurent::one()) {}
  RatFun(const Laurent& n) : num_(n), den_(Laurent::one()) {}
  RatFun(const Laurent& n, const Laurent& d) : num_(n), den_(d) {
    if (den_.is_zero()) throw std::domain_error("RatFun: zero denominator");
    reduce();
  }

  static RatFun zero() { return RatFun(); }
  static RatFun one() { return RatFun(Laurent::one()); }
  static RatFun v_pow(long e) { return RatFun(Laurent::v_pow(e)); }

  const Laurent& num() const { return num_; }
  const Laurent& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RatFun operator+(const RatFun& o) const {
    return RatFun(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  }
  RatFun operator-() const { RatFun r = *this; r.num_ = -r.num_; return r; }
  RatFun operator-(const RatFun& o) const { return *this + (-o); }
  RatFun operator*(const RatFun& o) const { return RatFun(num_ * o.num_, den_ * o.den_); }
  RatFun operator/(const RatFun& o) const {
    if (o.is_zero()) throw std::domain_error("RatFun: division by zero");
    return RatFun(num_ * o.den_, den_ * o.num_);
  }
  RatFun& operator+=(const RatFun& o) { *this = *this + o; return *this; }
  RatFun& operator-=(const RatFun& o) { *this = *this - o; return *this; }
  RatFun& operator*=(const RatFun& o) { *this = *this * o; return *this; }
  RatFun& operator/=(const RatFun& o) { *this = *this / o; return *this; }

  RatFun scaled(const Rat& c) const { return RatFun(num_.scaled(c), den_); }
  RatFun bar() const { return RatFun(num_.bar(), den_.bar()); }

  bool operator==(const RatFun& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const RatFun& o) const { return !(*this == o); }

  static bool cross_equal(const RatFun& x, const RatFun& y) {
    return x.num_ * y.den_ == y.num_ * x.den_;
  }

  std::string str() const { return "(" + num_.str() + ")/(" + den_.str() + ")"; }

  static RatFun parse(const std::string& s) {
    size_t mid = s.find(")/(");
    if (s.size() < 5 || s.front() != '(' || s.back() != ')' || mid == std::string::npos)
      throw std::invalid_argument("RatFun::parse: bad input '" + s + "'");
    Laurent n = Laurent::parse(s.substr(1, mid - 1));
    Laurent d = Laurent::parse(s.substr(mid + 3, s.size() - mid - 4));
    return RatFun(n, d);
  }

 private:
  Laurent num_, den_;

  void reduce() {
    if (num_.is_zero()) {
      den_ = Laurent::one();
      return;
    }
    // strip v-powers so both parts are polynomials with nonzero constant term
    long a = num_.min_exp(), b = den_.min_exp();
    Laurent p = num_.shifted(-a), r = den_.shifted(-b);
    Laurent g = detail::poly_gcd(p, r);
    if (!g.is_one()) {
      p = Laurent::div_exact(p, g);
      r = Laurent::div_exact(r, g);
    }
    Rat lead = r.terms().rbegin()->second;
    p = p.scaled(Rat(1) / lead);
    r = r.scaled(Rat(1) / lead);
    num_ = p.shifted(a - b);
    den_ = r;
  }
};

}  // namespace qhall
