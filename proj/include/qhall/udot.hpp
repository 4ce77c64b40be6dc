/*
  udot.hpp

  The modified quantized enveloping algebra attached to a Cartan datum,
  presented by plus-left normal-form monomials  x^+ 1_z x'^-  with x, x'
  reduced words of the Serre quotient and z a weight.  Multiplication
  moves every minus-before-plus generator pair across the idempotent with
  the defining exchange relations (letter swap for distinct vertices, the
  quantum-integer correction for equal ones) and re-reduces the words.

  The symmetries attached to simple reflections act on generators by the
  standard closed formulas and extend multiplicatively; the braid checker
  compares the two alternating composites of length m(i,j).
*/

#pragma once

#include <map>

#include "qhall/cartan.hpp"
#include "qhall/fquot.hpp"

namespace qhall {

struct UdotMono {
  FWord plus;
  Weight zeta;  // middle idempotent of the plus-left form
  FWord minus;

  auto operator<=>(const UdotMono&) const = default;
};

using UdotElem = std::map<UdotMono, RatFun>;

class UdotAlgebra {
 public:
  explicit UdotAlgebra(FAlgebra& f) : f_(&f), cd_(&f.cartan()) {}

  const CartanDatum& cartan() const { return *cd_; }
  FAlgebra& fquot() const { return *f_; }

  Weight word_wt(const FWord& w) const;
  Weight left_idem(const UdotMono& m) const { return m.zeta + word_wt(m.plus); }
  Weight right_idem(const UdotMono& m) const { return m.zeta + word_wt(m.minus); }

  UdotElem idem(const Weight& z) const { return {{UdotMono{{}, z, {}}, RatFun::one()}}; }
  // E_i 1_z and F_i 1_z with 1_z the displayed right idempotent
  UdotElem e_gen(int i, const Weight& z) const;
  UdotElem f_gen(int i, const Weight& z) const;

  static void add_to(UdotElem& x, const UdotMono& m, const RatFun& c);
  UdotElem add(const UdotElem& x, const UdotElem& y) const;
  UdotElem scale(const UdotElem& x, const RatFun& c) const;

  // bilinear assembly of (plus f-element) 1_z (minus f-element)
  UdotElem combine(const FElem& plus, const Weight& z, const FElem& minus) const;

  UdotElem mul(const UdotElem& x, const UdotElem& y);

  UdotElem symmetry(int i, const UdotElem& x);  // the reflection symmetry T_i

  struct BraidReport {
    bool applicable = false;
    long order = 0;
    bool equal = false;
  };
  BraidReport braid_check(int i, int j, const UdotElem& gen);

  // canonical form of  (minus word)^- 1_xi (plus word)^+
  UdotElem straighten(const FWord& minus, const Weight& xi, const FWord& plus);

  long rewrite_steps() const { return steps_; }
  void reset_rewrite_steps() { steps_ = 0; }

  static std::string str(const UdotElem& x);

 private:
  FAlgebra* f_;
  const CartanDatum* cd_;
  long steps_ = 0;
  std::map<std::tuple<FWord, IntVec, FWord>, UdotElem> straighten_memo_;

  struct MovedTerm {
    FWord plus;
    Weight z;
    FWord minus;  // empty or a single letter
    RatFun c;
  };
  std::vector<MovedTerm> move_letter(int i, const Weight& xi, const FWord& plus);

  UdotElem symmetry_factor(int i, bool raising, int letter, const Weight& right_idem);
};

}  // namespace qhall
