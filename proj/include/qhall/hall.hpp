/*
  hall.hpp

  The twisted Ringel-Hall algebra of a quiver over a fixed prime field:
  basis u_[M] indexed by iso classes, the v^{<dim M, dim N>}-twisted
  product, the normalized basis <M>, divided powers of the simples,
  the two derivation-like maps r and r', and the diagonal bilinear form.

  Elements are stored as coefficient maps on the u-basis; scalars live in
  Q[v]/(v^2 - q).
*/

#pragma once

#include "qhall/quad.hpp"
#include "qhall/quiver.hpp"

namespace qhall {

using HallElem = std::map<ClassId, Quad>;

class HallAlgebra {
 public:
  HallAlgebra(RepTable& table) : T_(&table), q_(table.field()) {}

  RepTable& table() const { return *T_; }
  const ValuedQuiver& quiver() const { return T_->quiver(); }
  int field() const { return q_; }

  Quad scalar(const Rat& r) const { return Quad::of_rat(q_, r); }
  Quad v_pow(long e) const { return Quad::v_pow(q_, e); }

  HallElem zero() const { return {}; }
  HallElem unit() { return u(T_->zero_class()); }
  HallElem u(const ClassId& c) const { return {{c, Quad::one(q_)}}; }
  HallElem u_simple(int i) { return u(T_->simple(i)); }

  static void add_to(HallElem& x, const ClassId& c, const Quad& s);
  HallElem add(const HallElem& x, const HallElem& y) const;
  HallElem scale(const HallElem& x, const Quad& s) const;

  HallElem mul(const HallElem& x, const HallElem& y);
  HallElem mul_basis(const ClassId& M, const ClassId& N);

  // <M> = v^{-dim M + dim End M} u_[M]; conversion factors between bases
  Quad norm_factor(const ClassId& c);
  HallElem bracket(const ClassId& c);             // <M> as a u-basis element
  std::map<ClassId, Quad> bracket_coords(const HallElem& x);

  HallElem divided_power(int i, long t);  // u_i^{(t)}

  // r_a(<M(l)>)  = sum_b v^{<b,a>+(b,a)} g^l_{b a} (a_b a_a / a_l) <M(b)>
  // r'_a(<M(l)>) = sum_b v^{<a,b>+(b,a)} g^l_{a b} (a_a a_b / a_l) <M(b)>
  HallElem r_map(const ClassId& alpha, const ClassId& lam);
  HallElem r_prime_map(const ClassId& alpha, const ClassId& lam);

  // diagonal form psi(<M(b)>, <M(b')>) = q^{dim_k V_b} / a_b * delta
  Quad psi(const HallElem& x, const HallElem& y);

  long euler_cc(const ClassId& a, const ClassId& b) const;
  long sym_cc(const ClassId& a, const ClassId& b) const;

  static bool equal(const HallElem& x, const HallElem& y);
  static std::string str(const HallElem& x);

 private:
  RepTable* T_;
  int q_;
  std::map<std::pair<ClassId, ClassId>, HallElem> mul_memo_;
};

}  // namespace qhall
