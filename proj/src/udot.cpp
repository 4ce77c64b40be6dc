#include "qhall/udot.hpp"

namespace qhall {

Weight UdotAlgebra::word_wt(const FWord& w) const {
  IntVec counts(cd_->rank(), 0);
  for (int letter : w) counts[letter]++;
  return cd_->weight_of_rootvec(counts);
}

UdotElem UdotAlgebra::e_gen(int i, const Weight& z) const {
  return {{UdotMono{FWord{i}, z, {}}, RatFun::one()}};
}

UdotElem UdotAlgebra::f_gen(int i, const Weight& z) const {
  // F_i 1_z = 1_{z - alpha_i} F_i
  return {{UdotMono{{}, z - cd_->simple_root(i), FWord{i}}, RatFun::one()}};
}

void UdotAlgebra::add_to(UdotElem& x, const UdotMono& m, const RatFun& c) {
  if (c.is_zero()) return;
  auto it = x.find(m);
  if (it == x.end()) {
    x.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) x.erase(it);
}

UdotElem UdotAlgebra::add(const UdotElem& x, const UdotElem& y) const {
  UdotElem r = x;
  for (const auto& [m, c] : y) add_to(r, m, c);
  return r;
}

UdotElem UdotAlgebra::scale(const UdotElem& x, const RatFun& c) const {
  UdotElem r;
  if (c.is_zero()) return r;
  for (const auto& [m, co] : x) r.emplace(m, co * c);
  return r;
}

UdotElem UdotAlgebra::combine(const FElem& plus, const Weight& z, const FElem& minus) const {
  UdotElem out;
  for (const auto& [wp, cp] : plus)
    for (const auto& [wm, cm] : minus) add_to(out, UdotMono{wp, z, wm}, cp * cm);
  return out;
}

std::vector<UdotAlgebra::MovedTerm> UdotAlgebra::move_letter(int i, const Weight& xi,
                                                             const FWord& plus) {
  ++steps_;
  std::vector<MovedTerm> out;
  Weight ai = cd_->simple_root(i);
  if (plus.empty()) {
    out.push_back({FWord{}, xi - ai, FWord{i}, RatFun::one()});
    return out;
  }
  int j = plus.front();
  FWord rest(plus.begin() + 1, plus.end());
  if (j != i) {
    // i^- 1_xi j^+ = j^+ 1_{xi - a_i - a_j} i^-, and the slid letter continues
    // across the rest at the idempotent xi - a_j
    for (auto& t : move_letter(i, xi - cd_->simple_root(j), rest)) {
      FWord w{j};
      w.insert(w.end(), t.plus.begin(), t.plus.end());
      out.push_back({std::move(w), t.z, t.minus, t.c});
    }
  } else {
    // i^- 1_xi i^+ = i^+ 1_{xi - 2 a_i} i^- + [2 - xi(h_i)] 1_{xi - a_i}
    for (auto& t : move_letter(i, xi - ai, rest)) {
      FWord w{i};
      w.insert(w.end(), t.plus.begin(), t.plus.end());
      out.push_back({std::move(w), t.z, t.minus, t.c});
    }
    RatFun c(qint(2 - xi[size_t(i)], cd_->eps(i)));
    if (!c.is_zero()) out.push_back({rest, (xi - ai) - word_wt(rest), FWord{}, c});
  }
  return out;
}

UdotElem UdotAlgebra::straighten(const FWord& minus, const Weight& xi, const FWord& plus) {
  if (minus.empty()) {
    FElem p = f_->normal_form({{plus, RatFun::one()}});
    return combine(p, xi - word_wt(plus), f_->one());
  }
  if (plus.empty()) {
    FElem m = f_->normal_form({{minus, RatFun::one()}});
    return combine(f_->one(), xi - word_wt(minus), m);
  }
  auto key = std::make_tuple(minus, xi.val, plus);
  auto hit = straighten_memo_.find(key);
  if (hit != straighten_memo_.end()) return hit->second;

  int i = minus.back();
  FWord head(minus.begin(), minus.end() - 1);
  UdotElem out;
  for (const auto& t : move_letter(i, xi, plus)) {
    UdotElem inner = straighten(head, t.z + word_wt(t.plus), t.plus);
    if (t.minus.empty()) {
      for (const auto& [m, c] : inner) add_to(out, m, c * t.c);
    } else {
      for (const auto& [m, c] : inner) {
        FWord cat = m.minus;
        cat.insert(cat.end(), t.minus.begin(), t.minus.end());
        FElem red = f_->normal_form({{cat, RatFun::one()}});
        for (const auto& [wm, cm] : red) add_to(out, UdotMono{m.plus, m.zeta, wm}, c * t.c * cm);
      }
    }
  }
  straighten_memo_.emplace(key, out);
  return out;
}

UdotElem UdotAlgebra::mul(const UdotElem& x, const UdotElem& y) {
  UdotElem out;
  for (const auto& [m1, c1] : x)
    for (const auto& [m2, c2] : y) {
      if (right_idem(m1) != left_idem(m2)) continue;
      UdotElem core = straighten(m1.minus, right_idem(m1), m2.plus);
      RatFun c12 = c1 * c2;
      for (const auto& [mc, cc] : core) {
        // (p1 pc)^+ 1_z (mc m2)^-
        FElem pl = f_->mul({{m1.plus, RatFun::one()}}, {{mc.plus, RatFun::one()}});
        FElem mi = f_->mul({{mc.minus, RatFun::one()}}, {{m2.minus, RatFun::one()}});
        for (const auto& [wp, cp] : pl)
          for (const auto& [wm, cm] : mi)
            add_to(out, UdotMono{wp, mc.zeta, wm}, c12 * cc * cp * cm);
      }
    }
  return out;
}

UdotElem UdotAlgebra::symmetry_factor(int i, bool raising, int letter, const Weight& lam) {
  // image of E_j 1_lam (raising) or F_j 1_lam (lowering) under T_i
  Weight sl = cd_->reflect(i, lam);
  long eps = cd_->eps(i);
  if (raising && letter == i) {
    // -v_i^{-lam(h_i)} F_i 1_{s_i lam}
    UdotElem f = f_gen(i, sl);
    return scale(f, -RatFun::v_pow(-eps * lam[size_t(i)]));
  }
  if (!raising && letter == i) {
    // -v_i^{-(2-lam(h_i))} E_i 1_{s_i lam}
    UdotElem e = e_gen(i, sl);
    return scale(e, -RatFun::v_pow(-eps * (2 - lam[size_t(i)])));
  }
  long b = -cd_->a(i, letter);
  if (raising) {
    // sum over r+s=b: (-1)^r v_i^{-r} E_i^{(s)} E_j E_i^{(r)} 1_{s_i lam}
    FElem total;
    for (long r = 0; r <= b; ++r) {
      long s = b - r;
      FWord w(size_t(s), i);
      w.push_back(letter);
      w.insert(w.end(), size_t(r), i);
      RatFun c = RatFun::v_pow(-eps * r) / (RatFun(qfact(s, eps)) * RatFun(qfact(r, eps)));
      if (r % 2) c = -c;
      FAlgebra::add_to(total, w, c);
    }
    return combine(f_->normal_form(total), sl, f_->one());
  }
  // lowering: sum over r+s=b: (-1)^r v_i^{r} F_i^{(r)} F_j F_i^{(s)} 1_{s_i lam}
  FElem total;
  for (long r = 0; r <= b; ++r) {
    long s = b - r;
    FWord w(size_t(r), i);
    w.push_back(letter);
    w.insert(w.end(), size_t(s), i);
    RatFun c = RatFun::v_pow(eps * r) / (RatFun(qfact(s, eps)) * RatFun(qfact(r, eps)));
    if (r % 2) c = -c;
    FAlgebra::add_to(total, w, c);
  }
  FElem red = f_->normal_form(total);
  UdotElem out2;
  for (const auto& [w, c] : red)
    add_to(out2, UdotMono{{}, sl - word_wt(w), w}, c);
  return out2;
}

UdotElem UdotAlgebra::symmetry(int i, const UdotElem& x) {
  UdotElem out;
  for (const auto& [m, c] : x) {
    // peel the monomial into generator factors and multiply their images
    UdotElem acc;
    bool have = false;
    // plus letters, left to right; factor l has displayed idempotent
    // zeta + (weight of the remaining plus letters to its right)
    for (size_t l = 0; l < m.plus.size(); ++l) {
      FWord tail(m.plus.begin() + long(l) + 1, m.plus.end());
      Weight lam = m.zeta + word_wt(tail);
      UdotElem img = symmetry_factor(i, true, m.plus[l], lam);
      acc = have ? mul(acc, img) : img;
      have = true;
    }
    for (size_t r = 0; r < m.minus.size(); ++r) {
      FWord head(m.minus.begin(), m.minus.begin() + long(r) + 1);
      Weight lam = m.zeta + word_wt(head);
      UdotElem img = symmetry_factor(i, false, m.minus[r], lam);
      acc = have ? mul(acc, img) : img;
      have = true;
    }
    if (!have) acc = idem(cd_->reflect(i, m.zeta));
    for (const auto& [mm, cc] : acc) add_to(out, mm, cc * c);
  }
  return out;
}

UdotAlgebra::BraidReport UdotAlgebra::braid_check(int i, int j, const UdotElem& gen) {
  BraidReport rep;
  rep.order = cd_->braid_order(i, j);
  if (rep.order == 0) return rep;  // infinite order: not applicable
  rep.applicable = true;
  UdotElem lhs = gen, rhs = gen;
  // alternating words of length m starting with i resp. j, applied right to left
  for (long k = 0; k < rep.order; ++k) {
    long pos = rep.order - 1 - k;  // position in the braid word, 0 = leftmost
    int li = (pos % 2 == 0) ? i : j;
    int ri = (pos % 2 == 0) ? j : i;
    lhs = symmetry(li, lhs);
    rhs = symmetry(ri, rhs);
  }
  rep.equal = (lhs == rhs);
  return rep;
}

std::string UdotAlgebra::str(const UdotElem& x) {
  if (x.empty()) return "0";
  std::string s;
  for (const auto& [m, c] : x) {
    if (!s.empty()) s += " + ";
    s += c.str() + "*(";
    for (size_t k = 0; k < m.plus.size(); ++k) s += "E" + std::to_string(m.plus[k]);
    s += "1" + m.zeta.str();
    for (size_t k = 0; k < m.minus.size(); ++k) s += "F" + std::to_string(m.minus[k]);
    s += ")";
  }
  return s;
}

}  // namespace qhall
