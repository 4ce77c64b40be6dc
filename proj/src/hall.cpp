#include "qhall/hall.hpp"

namespace qhall {

void HallAlgebra::add_to(HallElem& x, const ClassId& c, const Quad& s) {
  if (s.is_zero()) return;
  auto it = x.find(c);
  if (it == x.end()) {
    x.emplace(c, s);
    return;
  }
  it->second += s;
  if (it->second.is_zero()) x.erase(it);
}

HallElem HallAlgebra::add(const HallElem& x, const HallElem& y) const {
  HallElem r = x;
  for (const auto& [c, s] : y) add_to(r, c, s);
  return r;
}

HallElem HallAlgebra::scale(const HallElem& x, const Quad& s) const {
  HallElem r;
  if (s.is_zero()) return r;
  for (const auto& [c, co] : x) r.emplace(c, co * s);
  return r;
}

HallElem HallAlgebra::mul_basis(const ClassId& M, const ClassId& N) {
  auto key = std::make_pair(M, N);
  auto it = mul_memo_.find(key);
  if (it != mul_memo_.end()) return it->second;
  DimVec sum(M.dv.size());
  for (size_t i = 0; i < sum.size(); ++i) sum[i] = M.dv[i] + N.dv[i];
  Quad twist = v_pow(quiver().euler(M.dv, N.dv));
  HallElem out;
  for (const auto& L : T_->classes(sum)) {
    long g = T_->hall_number(L.id, M, N);
    if (g) add_to(out, L.id, twist.scaled(Rat(g)));
  }
  mul_memo_[key] = out;
  return out;
}

HallElem HallAlgebra::mul(const HallElem& x, const HallElem& y) {
  HallElem out;
  for (const auto& [cm, sm] : x)
    for (const auto& [cn, sn] : y) {
      Quad s = sm * sn;
      for (const auto& [cl, sl] : mul_basis(cm, cn)) add_to(out, cl, sl * s);
    }
  return out;
}

Quad HallAlgebra::norm_factor(const ClassId& c) {
  return v_pow(-T_->dim_k(c) + T_->info(c).endo);
}

HallElem HallAlgebra::bracket(const ClassId& c) { return {{c, norm_factor(c)}}; }

std::map<ClassId, Quad> HallAlgebra::bracket_coords(const HallElem& x) {
  std::map<ClassId, Quad> out;
  for (const auto& [c, s] : x) out.emplace(c, s / norm_factor(c));
  return out;
}

HallElem HallAlgebra::divided_power(int i, long t) {
  if (t < 0) throw std::invalid_argument("divided_power: negative exponent");
  HallElem acc = unit();
  HallElem ui = u_simple(i);
  for (long k = 0; k < t; ++k) acc = mul(acc, ui);
  Quad denom = specialize(qfact(t, quiver().eps(i)), q_);
  return scale(acc, denom.inverse());
}

HallElem HallAlgebra::r_map(const ClassId& alpha, const ClassId& lam) {
  HallElem out;
  Rat a_alpha(T_->info(alpha).aut), a_lam(T_->info(lam).aut);
  DimVec bdv(lam.dv.size());
  for (size_t i = 0; i < bdv.size(); ++i) {
    bdv[i] = lam.dv[i] - alpha.dv[i];
    if (bdv[i] < 0) return out;
  }
  for (const auto& beta : T_->classes(bdv)) {
    long g = T_->hall_number(lam, beta.id, alpha);  // sub = alpha, quotient = beta
    if (!g) continue;
    Quad coef = v_pow(euler_cc(beta.id, alpha) + sym_cc(beta.id, alpha))
                    .scaled(Rat(g) * Rat(beta.aut) * a_alpha / a_lam);
    // emit in the u-basis: coef * <M(beta)>
    add_to(out, beta.id, coef * norm_factor(beta.id));
  }
  return out;
}

HallElem HallAlgebra::r_prime_map(const ClassId& alpha, const ClassId& lam) {
  HallElem out;
  Rat a_alpha(T_->info(alpha).aut), a_lam(T_->info(lam).aut);
  DimVec bdv(lam.dv.size());
  for (size_t i = 0; i < bdv.size(); ++i) {
    bdv[i] = lam.dv[i] - alpha.dv[i];
    if (bdv[i] < 0) return out;
  }
  for (const auto& beta : T_->classes(bdv)) {
    long g = T_->hall_number(lam, alpha, beta.id);  // sub = beta, quotient = alpha
    if (!g) continue;
    Quad coef = v_pow(euler_cc(alpha, beta.id) + sym_cc(beta.id, alpha))
                    .scaled(Rat(g) * a_alpha * Rat(beta.aut) / a_lam);
    add_to(out, beta.id, coef * norm_factor(beta.id));
  }
  return out;
}

Quad HallAlgebra::psi(const HallElem& x, const HallElem& y) {
  auto bx = bracket_coords(x), by = bracket_coords(y);
  Quad s = Quad::zero(q_);
  for (const auto& [c, cx] : bx) {
    auto it = by.find(c);
    if (it == by.end()) continue;
    Quad val = v_pow(2 * T_->dim_k(c)).scaled(Rat(1) / Rat(T_->info(c).aut));
    s += cx * it->second * val;
  }
  return s;
}

long HallAlgebra::euler_cc(const ClassId& a, const ClassId& b) const {
  return quiver().euler(a.dv, b.dv);
}

long HallAlgebra::sym_cc(const ClassId& a, const ClassId& b) const {
  return quiver().sym(a.dv, b.dv);
}

bool HallAlgebra::equal(const HallElem& x, const HallElem& y) { return x == y; }

std::string HallAlgebra::str(const HallElem& x) {
  if (x.empty()) return "0";
  std::string s;
  for (const auto& [c, co] : x) {
    if (!s.empty()) s += " + ";
    s += "(" + co.str() + ")*u[" + c.str() + "]";
  }
  return s;
}

}  // namespace qhall
