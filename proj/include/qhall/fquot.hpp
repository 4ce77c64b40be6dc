/*
  fquot.hpp

  The free algebra on generators theta_i modulo the quantum Serre ideal,
  graded by NI.  Normal forms are computed one weight at a time: the
  relation subspace of a weight component is spanned by all two-sided
  monomial framings of the Serre elements, echelonized against the
  degree-lex word order (letters compared by vertex index, larger index
  greater, leftmost letter first).  Representatives are fully reduced
  coset normal forms, so equality in the quotient is map equality.
*/

#pragma once

#include <map>
#include <vector>

#include "qhall/cartan.hpp"
#include "qhall/ratfun.hpp"

namespace qhall {

using FWord = std::vector<int>;
using FWeight = std::vector<long>;  // letter multiplicities
using FElem = std::map<FWord, RatFun>;

FWeight word_weight(size_t rank, const FWord& w);

class FAlgebra {
 public:
  FAlgebra(CartanDatum cd, long weight_cap) : cd_(std::move(cd)), cap_(weight_cap) {}

  const CartanDatum& cartan() const { return cd_; }
  long cap() const { return cap_; }

  FElem zero() const { return {}; }
  FElem one() const { return {{FWord{}, RatFun::one()}}; }
  FElem theta(int i) const { return {{FWord{i}, RatFun::one()}}; }
  FElem divided_power(int i, long n) const;
  FElem serre_element(int i, int j) const;  // integral form, weight (1-a_ij) e_i + e_j

  static void add_to(FElem& x, const FWord& w, const RatFun& c);
  FElem add(const FElem& x, const FElem& y) const;
  FElem scale(const FElem& x, const RatFun& c) const;

  FElem normal_form(const FElem& x);
  FElem mul(const FElem& x, const FElem& y);

  long dim_weight(const FWeight& nu);  // dimension of the weight component
  std::vector<FWord> basis_words(const FWeight& nu);

  static std::string str(const FElem& x);

 private:
  struct Row {
    FWord lead;
    std::map<FWord, Laurent> terms;
  };
  struct Table {
    std::map<FWord, Row, std::greater<FWord>> rows;  // keyed by leading word
    long word_count = 0;
  };

  CartanDatum cd_;
  long cap_;
  std::map<FWeight, Table> tables_;

  const Table& table(const FWeight& nu);
  std::vector<FWord> words_of_weight(const FWeight& nu) const;
  void check_cap(const FWeight& nu) const;
};

}  // namespace qhall
