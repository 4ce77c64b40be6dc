/*
  quiver.hpp

  Valued quivers, their representations over prime fields, and the
  classification engine: complete iso-class lists per dimension vector
  (orbit decomposition under the product of general linear groups),
  automorphism counts, Hom/Ext dimensions, Euler forms, and submodule
  counts g^L_{MN} by exhaustive enumeration.

  Convention for g^L_{MN}: the number of subrepresentations W of L with
  W isomorphic to N and L/W isomorphic to M.
*/

#pragma once

#include <gmpxx.h>

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qhall/cartan.hpp"
#include "qhall/fqmat.hpp"

namespace qhall {

using DimVec = std::vector<int>;

struct Arrow {
  int src = 0, dst = 0;
  int d = 1;  // d_{src,dst}
};

class ValuedQuiver {
 public:
  ValuedQuiver(int n, IntVec eps, std::vector<Arrow> arrows);

  int n() const { return n_; }
  long eps(int i) const { return eps_[i]; }
  const IntVec& eps() const { return eps_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }

  bool simply_laced() const;
  bool is_sink(int i) const;
  bool is_source(int i) const;

  ValuedQuiver reversed_at(int i) const;  // flip every arrow at vertex i

  long euler(const DimVec& a, const DimVec& b) const;
  long sym(const DimVec& a, const DimVec& b) const { return euler(a, b) + euler(b, a); }

  DimVec reflect_dimvec(int i, const DimVec& d) const;  // s_i on dimension vectors

  CartanDatum cartan() const;  // a_ij = -d_ji for i != j

  std::string orientation_key() const;  // canonical arrow-set encoding

 private:
  int n_;
  IntVec eps_;
  std::vector<Arrow> arrows_;
};

struct Rep {
  int q = 2;
  DimVec dims;
  std::vector<FqMat> mats;  // one per arrow, shape dims[dst] x dims[src]

  long total_dim() const {
    long s = 0;
    for (int d : dims) s += d;
    return s;
  }
  std::vector<uint8_t> encode() const;
};

struct ClassId {
  DimVec dv;
  int idx = 0;

  auto operator<=>(const ClassId&) const = default;
  bool is_zero() const {
    for (int d : dv)
      if (d) return false;
    return true;
  }
  std::string str() const {
    std::string s;
    for (size_t i = 0; i < dv.size(); ++i) s += (i ? "," : "") + std::to_string(dv[i]);
    return s + "#" + std::to_string(idx);
  }
  static ClassId parse(const std::string& s);
};

class RepTable {
 public:
  struct ClassInfo {
    ClassId id;
    mpz_class aut;   // order of the automorphism group
    int endo = 0;    // dim_k End
    Rep canon;       // lexicographically minimal representative
  };

  RepTable(const ValuedQuiver& Q, int q, long dim_cap);

  const ValuedQuiver& quiver() const { return *Q_; }
  int field() const { return q_; }
  long dim_cap() const { return cap_; }

  const std::vector<ClassInfo>& classes(const DimVec& dv);
  const ClassInfo& info(const ClassId& id);
  ClassId class_of(const Rep& r);

  ClassId zero_class();
  ClassId simple(int i);

  long dim_k(const ClassId& id) const;  // sum of eps-weighted dims
  long trace(const ClassId& id) const;  // plain coordinate sum

  long hall_number(const ClassId& L, const ClassId& M, const ClassId& N);

  long hom_dim(const Rep& V, const Rep& W) const;
  long ext_dim(const Rep& V, const Rep& W) const;

  std::vector<ClassId> all_classes_up_to(long total);
  std::vector<DimVec> dimvecs_up_to(long total) const;

  // all (sub, quot) splittings: sums g^L_{M N} over iso types, for census checks
  long invariant_subspace_count(const ClassId& L, const DimVec& sub_dv);

 private:
  std::shared_ptr<const ValuedQuiver> Q_;
  int q_;
  long cap_;
  std::map<DimVec, std::vector<ClassInfo>> classes_;
  std::map<DimVec, std::map<std::vector<uint8_t>, int>> orbit_index_;
  std::map<std::tuple<ClassId, ClassId, ClassId>, long> hall_memo_;

  void classify(const DimVec& dv);
  Rep decode(const DimVec& dv, size_t code) const;
  mpz_class gl_order(int d) const;
  mpz_class group_order(const DimVec& dv) const;
};

}  // namespace qhall
