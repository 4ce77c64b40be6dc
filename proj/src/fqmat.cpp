#include "qhall/fqmat.hpp"

namespace qhall {

FqMat FqMat::hstack(const std::vector<FqMat>& blocks, int q, int rows) {
  int cols = 0;
  for (const auto& b : blocks) cols += b.cols;
  FqMat r(q, rows, cols);
  int off = 0;
  for (const auto& b : blocks) {
    for (int i = 0; i < b.rows; ++i)
      for (int j = 0; j < b.cols; ++j) r.at(i, off + j) = b.at(i, j);
    off += b.cols;
  }
  return r;
}

FqMat FqMat::vstack(const std::vector<FqMat>& blocks, int q, int cols) {
  int rows = 0;
  for (const auto& b : blocks) rows += b.rows;
  FqMat r(q, rows, cols);
  int off = 0;
  for (const auto& b : blocks) {
    for (int i = 0; i < b.rows; ++i)
      for (int j = 0; j < b.cols; ++j) r.at(off + i, j) = b.at(i, j);
    off += b.rows;
  }
  return r;
}

int fq_inv(int q, int x) {
  x %= q;
  for (int y = 1; y < q; ++y)
    if ((x * y) % q == 1) return y;
  throw std::domain_error("fq_inv: not invertible");
}

std::vector<int> fq_rref(FqMat& m) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    int piv = -1;
    for (int i = r; i < m.rows; ++i)
      if (m.at(i, c)) { piv = i; break; }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(r, j));
    int inv = fq_inv(m.q, m.at(r, c));
    for (int j = 0; j < m.cols; ++j) m.at(r, j) = uint8_t((m.at(r, j) * inv) % m.q);
    for (int i = 0; i < m.rows; ++i) {
      if (i == r || !m.at(i, c)) continue;
      int f = m.at(i, c);
      for (int j = 0; j < m.cols; ++j)
        m.at(i, j) = uint8_t(((m.at(i, j) + (m.q - f) * m.at(r, j)) % m.q));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

int fq_rank(FqMat m) { return int(fq_rref(m).size()); }

FqMat fq_nullspace(const FqMat& m) {
  FqMat r = m;
  std::vector<int> piv = fq_rref(r);
  std::vector<bool> is_piv(m.cols, false);
  for (int c : piv) is_piv[c] = true;
  int k = m.cols - int(piv.size());
  FqMat ns(m.q, m.cols, k);
  int col = 0;
  for (int free = 0; free < m.cols; ++free) {
    if (is_piv[free]) continue;
    ns.at(free, col) = 1;
    for (size_t i = 0; i < piv.size(); ++i)
      ns.at(piv[i], col) = uint8_t((m.q - r.at(int(i), free)) % m.q);
    ++col;
  }
  return ns;
}

FqMat fq_solve(const FqMat& A, const FqMat& b) {
  if (A.rows != b.rows) throw std::logic_error("fq_solve: shape mismatch");
  FqMat aug(A.q, A.rows, A.cols + b.cols);
  for (int i = 0; i < A.rows; ++i) {
    for (int j = 0; j < A.cols; ++j) aug.at(i, j) = A.at(i, j);
    for (int j = 0; j < b.cols; ++j) aug.at(i, A.cols + j) = b.at(i, j);
  }
  std::vector<int> piv = fq_rref(aug);
  for (int c : piv)
    if (c >= A.cols) throw std::domain_error("fq_solve: inconsistent system");
  FqMat x(A.q, A.cols, b.cols);
  for (size_t i = 0; i < piv.size(); ++i)
    for (int j = 0; j < b.cols; ++j) x.at(piv[i], j) = aug.at(int(i), A.cols + j);
  return x;
}

FqMat fq_inverse(const FqMat& m) {
  if (m.rows != m.cols) throw std::logic_error("fq_inverse: not square");
  return fq_solve(m, FqMat::identity(m.q, m.rows));
}

FqMat fq_row_basis(const FqMat& m) {
  FqMat r = m;
  std::vector<int> piv = fq_rref(r);
  FqMat out(m.q, int(piv.size()), m.cols);
  for (size_t i = 0; i < piv.size(); ++i)
    for (int j = 0; j < m.cols; ++j) out.at(int(i), j) = r.at(int(i), j);
  return out;
}

bool fq_rows_contained(const FqMat& space, const FqMat& sub) {
  FqMat stacked = FqMat::vstack({space, sub}, space.q, space.cols);
  return fq_rank(space) == fq_rank(stacked);
}

std::vector<FqMat> fq_subspaces(int q, int n, int k) {
  std::vector<FqMat> out;
  if (k < 0 || k > n) return out;
  if (k == 0) {
    out.emplace_back(q, 0, n);
    return out;
  }
  // choose pivot columns, then fill free entries (RREF normal form)
  std::vector<int> piv(k);
  auto fill = [&](auto&& self, int pos, int start) -> void {
    if (pos == k) {
      // free entries: row i, columns c > piv[i], c not a pivot
      std::vector<std::pair<int, int>> free_slots;
      std::vector<bool> is_piv(n, false);
      for (int c : piv) is_piv[c] = true;
      for (int i = 0; i < k; ++i)
        for (int c = piv[i] + 1; c < n; ++c)
          if (!is_piv[c]) free_slots.emplace_back(i, c);
      size_t total = 1;
      for (size_t s = 0; s < free_slots.size(); ++s) total *= size_t(q);
      for (size_t code = 0; code < total; ++code) {
        FqMat m(q, k, n);
        for (int i = 0; i < k; ++i) m.at(i, piv[i]) = 1;
        size_t c = code;
        for (auto [i, col] : free_slots) {
          m.at(i, col) = uint8_t(c % q);
          c /= q;
        }
        out.push_back(std::move(m));
      }
      return;
    }
    for (int c = start; c <= n - (k - pos); ++c) {
      piv[pos] = c;
      self(self, pos + 1, c + 1);
    }
  };
  fill(fill, 0, 0);
  return out;
}

}  // namespace qhall
