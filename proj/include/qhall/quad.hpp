/*
  quad.hpp

  The quadratic ring Q[v]/(v^2 - q) for a fixed prime q: values a + b*v
  with v playing the role of sqrt(q).  Since q is prime, v is irrational
  and the ring is a field; inverses exist for every nonzero element.
  Evaluation of rational functions at v = sqrt(q) lands here.
*/

#pragma once

#include "qhall/ratfun.hpp"

namespace qhall {

struct Quad {
  long q = 0;  // the prime; 0 marks an uninitialized value
  Rat a, b;    // value a + b*v

  Quad() = default;
  Quad(long q_, const Rat& a_, const Rat& b_) : q(q_), a(a_), b(b_) {}

  static Quad zero(long q) { return Quad(q, 0, 0); }
  static Quad one(long q) { return Quad(q, 1, 0); }
  static Quad of_rat(long q, const Rat& r) { return Quad(q, r, 0); }
  static Quad v(long q) { return Quad(q, 0, 1); }

  // v^e for any integer e; v^2 = q, v^{-1} = v/q
  static Quad v_pow(long q, long e) {
    long k = (e >= 0) ? e / 2 : -((-e + 1) / 2);  // floor(e/2)
    if (2 * k == e) return Quad(q, rat_pow(Rat(q), k), 0);
    return Quad(q, 0, rat_pow(Rat(q), k));  // e = 2k+1
  }

  bool is_zero() const { return a == 0 && b == 0; }

  Quad operator+(const Quad& o) const { check(o); return Quad(q, a + o.a, b + o.b); }
  Quad operator-() const { return Quad(q, -a, -b); }
  Quad operator-(const Quad& o) const { check(o); return *this + (-o); }
  Quad operator*(const Quad& o) const {
    check(o);
    return Quad(q, a * o.a + Rat(q) * b * o.b, a * o.b + b * o.a);
  }
  Quad& operator+=(const Quad& o) { *this = *this + o; return *this; }
  Quad& operator-=(const Quad& o) { *this = *this - o; return *this; }
  Quad& operator*=(const Quad& o) { *this = *this * o; return *this; }

  Quad inverse() const {
    // (a + bv)(a - bv) = a^2 - q b^2, nonzero for (a,b) != 0 since q is not a square
    Rat n = a * a - Rat(q) * b * b;
    if (n == 0) throw std::domain_error("Quad: inverse of zero");
    return Quad(q, a / n, -b / n);
  }
  Quad operator/(const Quad& o) const { return *this * o.inverse(); }

  Quad scaled(const Rat& c) const { return Quad(q, a * c, b * c); }

  bool operator==(const Quad& o) const { return q == o.q && a == o.a && b == o.b; }
  bool operator!=(const Quad& o) const { return !(*this == o); }

  std::string str() const {
    if (b == 0) return rat_str(a);
    std::string vs = rat_str(b) + "*v";
    if (a == 0) return vs;
    return rat_str(a) + (sgn(b) < 0 ? "" : "+") + vs;
  }

  static Quad parse(long q, const std::string& s) {
    size_t star = s.find("*v");
    if (star == std::string::npos) {
      Rat a(s);
      a.canonicalize();
      return Quad(q, a, 0);
    }
    // split "<a>+<b>*v" / "<a>-<b>*v" / "<b>*v" at the sign that starts <b>
    std::string head = s.substr(0, star);
    size_t cut = std::string::npos;
    for (size_t i = 1; i < head.size(); ++i)
      if ((head[i] == '+' || head[i] == '-') && head[i - 1] != '/' && isdigit(head[i - 1]))
        cut = i;
    Rat a(0), b;
    if (cut == std::string::npos) {
      b = Rat(head);
    } else {
      a = Rat(head.substr(0, cut));
      b = Rat(head[cut] == '+' ? head.substr(cut + 1) : head.substr(cut));
    }
    a.canonicalize();
    b.canonicalize();
    return Quad(q, a, b);
  }

 private:
  void check(const Quad& o) const {
    if (q != o.q) throw std::logic_error("Quad: mixed base primes");
  }
};

// evaluation v -> sqrt(q) of a Laurent polynomial
inline Quad specialize(const Laurent& p, long q) {
  Quad out = Quad::zero(q);
  for (const auto& [e, c] : p.terms()) out += Quad::v_pow(q, e).scaled(c);
  return out;
}

// evaluation of a rational function; requires the denominator not to vanish
inline Quad specialize(const RatFun& f, long q) {
  Quad d = specialize(f.den(), q);
  if (d.is_zero()) throw std::domain_error("specialize: denominator vanishes at v = sqrt(q)");
  return specialize(f.num(), q) / d;
}

}  // namespace qhall
