/*
  cartan.hpp

  Cartan data: a symmetrizable generalized Cartan matrix A with
  symmetrizers eps, the coweight basis {h_i} u {d_s} of size 2n - rank(A),
  weights as integer value tuples on that basis, simple reflections,
  the symmetric form on root combinations, and braid orders m(i,j).
*/

#pragma once

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace qhall {

using IntVec = std::vector<long>;

// a weight, stored as its values on the coweight basis (h_1..h_n, d_1..d_m)
struct Weight {
  IntVec val;

  Weight() = default;
  explicit Weight(IntVec v) : val(std::move(v)) {}

  long operator[](size_t i) const { return val[i]; }
  size_t size() const { return val.size(); }

  Weight operator+(const Weight& o) const {
    Weight r = *this;
    for (size_t i = 0; i < val.size(); ++i) r.val[i] += o.val[i];
    return r;
  }
  Weight operator-(const Weight& o) const {
    Weight r = *this;
    for (size_t i = 0; i < val.size(); ++i) r.val[i] -= o.val[i];
    return r;
  }
  Weight scaled(long c) const {
    Weight r = *this;
    for (auto& x : r.val) x *= c;
    return r;
  }

  auto operator<=>(const Weight&) const = default;

  std::string str() const {
    std::string s = "(";
    for (size_t i = 0; i < val.size(); ++i) s += (i ? "," : "") + std::to_string(val[i]);
    return s + ")";
  }
};

class CartanDatum {
 public:
  // alpha_on_d[j][s] = value of the j-th simple root on d_s (0 or 1)
  CartanDatum(std::vector<std::vector<long>> A, IntVec eps,
              std::vector<IntVec> alpha_on_d = {})
      : A_(std::move(A)), eps_(std::move(eps)) {
    n_ = A_.size();
    if (eps_.size() != n_) throw std::invalid_argument("CartanDatum: eps size mismatch");
    for (size_t i = 0; i < n_; ++i) {
      if (A_[i].size() != n_) throw std::invalid_argument("CartanDatum: A not square");
      if (A_[i][i] != 2) throw std::invalid_argument("CartanDatum: diagonal must be 2");
      if (eps_[i] <= 0) throw std::invalid_argument("CartanDatum: eps must be positive");
      for (size_t j = 0; j < n_; ++j) {
        if (i != j && A_[i][j] > 0) throw std::invalid_argument("CartanDatum: positive off-diagonal");
        if ((A_[i][j] == 0) != (A_[j][i] == 0))
          throw std::invalid_argument("CartanDatum: zero pattern not symmetric");
        if (eps_[i] * A_[i][j] != eps_[j] * A_[j][i])
          throw std::invalid_argument("CartanDatum: not symmetrizable by eps");
      }
    }
    size_t m = n_ - rank_of_A();
    if (alpha_on_d.empty()) alpha_on_d.assign(n_, IntVec(m, 0));
    if (alpha_on_d.size() != n_)
      throw std::invalid_argument("CartanDatum: alpha_on_d size mismatch");
    for (auto& row : alpha_on_d) {
      if (row.size() != m) throw std::invalid_argument("CartanDatum: alpha_on_d width mismatch");
      for (long x : row)
        if (x != 0 && x != 1) throw std::invalid_argument("CartanDatum: alpha(d) must be 0 or 1");
    }
    alpha_on_d_ = std::move(alpha_on_d);
    num_d_ = m;
    if (!roots_independent())
      throw std::invalid_argument("CartanDatum: simple-root tuples are dependent");
  }

  size_t rank() const { return n_; }
  size_t dim() const { return n_ + num_d_; }  // coweight basis size
  long a(size_t i, size_t j) const { return A_[i][j]; }
  long eps(size_t i) const { return eps_[i]; }

  // value tuple of alpha_j: (a_{1j}, ..., a_{nj}, alpha_j(d_1), ...)
  Weight simple_root(size_t j) const {
    IntVec v(dim());
    for (size_t i = 0; i < n_; ++i) v[i] = A_[i][j];
    for (size_t s = 0; s < num_d_; ++s) v[n_ + s] = alpha_on_d_[j][s];
    return Weight(std::move(v));
  }

  Weight weight_of_rootvec(const IntVec& c) const {  // sum c_j * alpha_j
    IntVec v(dim(), 0);
    for (size_t j = 0; j < n_; ++j) {
      Weight aj = simple_root(j);
      for (size_t k = 0; k < dim(); ++k) v[k] += c[j] * aj.val[k];
    }
    return Weight(std::move(v));
  }

  // symmetric form on root combinations: (alpha_i, alpha_j) = eps_i a_ij
  long sym(const IntVec& x, const IntVec& y) const {
    long s = 0;
    for (size_t i = 0; i < n_; ++i)
      for (size_t j = 0; j < n_; ++j) s += x[i] * y[j] * eps_[i] * A_[i][j];
    return s;
  }

  // (lambda, alpha_i) = eps_i * lambda(h_i) for a weight lambda
  long sym_weight_root(const Weight& lam, size_t i) const { return eps_[i] * lam.val[i]; }

  // pairing lambda(mu) for a coweight mu given on the same basis
  long pair(const Weight& lam, const IntVec& mu) const {
    long s = 0;
    for (size_t k = 0; k < dim(); ++k) s += lam.val[k] * mu[k];
    return s;
  }

  // alpha_i(mu) for a coweight mu
  long root_on_coweight(size_t i, const IntVec& mu) const {
    long s = 0;
    for (size_t j = 0; j < n_; ++j) s += mu[j] * A_[j][i];
    for (size_t t = 0; t < num_d_; ++t) s += mu[n_ + t] * alpha_on_d_[i][t];
    return s;
  }

  Weight reflect(size_t i, const Weight& lam) const {  // s_i(lambda)
    return lam - simple_root(i).scaled(lam.val[i]);
  }

  IntVec reflect_coweight(size_t i, const IntVec& mu) const {  // s_i(mu) = mu - alpha_i(mu) h_i
    IntVec r = mu;
    r[i] -= root_on_coweight(i, mu);
    return r;
  }

  IntVec reflect_rootvec(size_t i, const IntVec& c) const {  // s_i on Z-span of roots
    long t = 0;
    for (size_t j = 0; j < n_; ++j) t += A_[i][j] * c[j];
    IntVec r = c;
    r[i] -= t;
    return r;
  }

  // order of s_i s_j; 0 encodes infinity
  long braid_order(size_t i, size_t j) const {
    if (i == j) throw std::invalid_argument("braid_order: indices must differ");
    long d = A_[i][j] * A_[j][i];
    switch (d) {
      case 0: return 2;
      case 1: return 3;
      case 2: return 4;
      case 3: return 6;
      default: return 0;
    }
  }

  Weight zero_weight() const { return Weight(IntVec(dim(), 0)); }

 private:
  size_t n_ = 0, num_d_ = 0;
  std::vector<std::vector<long>> A_;
  IntVec eps_;
  std::vector<IntVec> alpha_on_d_;

  size_t rank_of_A() const {
    // integer matrix rank by fraction-free elimination
    std::vector<std::vector<double>> m(n_, std::vector<double>(n_));
    for (size_t i = 0; i < n_; ++i)
      for (size_t j = 0; j < n_; ++j) m[i][j] = double(A_[i][j]);
    size_t r = 0;
    for (size_t col = 0; col < n_ && r < n_; ++col) {
      size_t piv = r;
      for (size_t i = r; i < n_; ++i)
        if (std::abs(m[i][col]) > std::abs(m[piv][col])) piv = i;
      if (std::abs(m[piv][col]) < 1e-9) continue;
      std::swap(m[r], m[piv]);
      for (size_t i = r + 1; i < n_; ++i) {
        double f = m[i][col] / m[r][col];
        for (size_t j = col; j < n_; ++j) m[i][j] -= f * m[r][j];
      }
      ++r;
    }
    return r;
  }

  bool roots_independent() const {
    // rank over Q of the n x dim() matrix of simple-root tuples
    std::vector<std::vector<double>> m;
    for (size_t j = 0; j < n_; ++j) {
      Weight a = simple_root(j);
      m.emplace_back(a.val.begin(), a.val.end());
    }
    size_t r = 0;
    for (size_t col = 0; col < dim() && r < n_; ++col) {
      size_t piv = r;
      for (size_t i = r; i < n_; ++i)
        if (std::abs(m[i][col]) > std::abs(m[piv][col])) piv = i;
      if (std::abs(m[piv][col]) < 1e-9) continue;
      std::swap(m[r], m[piv]);
      for (size_t i = r + 1; i < n_; ++i) {
        double f = m[i][col] / m[r][col];
        for (size_t j = col; j < dim(); ++j) m[i][j] -= f * m[r][j];
      }
      ++r;
    }
    return r == n_;
  }
};

// built-in rank-2 data plus the linear A3
inline CartanDatum cartan_preset(const std::string& name) {
  if (name == "A1xA1") return CartanDatum({{2, 0}, {0, 2}}, {1, 1});
  if (name == "A2") return CartanDatum({{2, -1}, {-1, 2}}, {1, 1});
  if (name == "B2") return CartanDatum({{2, -2}, {-1, 2}}, {1, 2});
  if (name == "G2") return CartanDatum({{2, -3}, {-1, 2}}, {1, 3});
  if (name == "A3") return CartanDatum({{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}, {1, 1, 1});
  throw std::invalid_argument("cartan_preset: unknown preset '" + name + "'");
}

}  // namespace qhall
