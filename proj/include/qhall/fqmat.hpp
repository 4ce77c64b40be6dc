/*
  fqmat.hpp

  Small dense matrices over a prime field F_q (q <= 251) with the linear
  algebra the representation engine needs: products, row reduction, rank,
  null space, column-space completion and inverses.
*/

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qhall {

struct FqMat {
  int q = 2;
  int rows = 0, cols = 0;
  std::vector<uint8_t> a;  // row-major

  FqMat() = default;
  FqMat(int q_, int r, int c) : q(q_), rows(r), cols(c), a(size_t(r) * c, 0) {}

  static FqMat identity(int q, int n) {
    FqMat m(q, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  uint8_t& at(int r, int c) { return a[size_t(r) * cols + c]; }
  uint8_t at(int r, int c) const { return a[size_t(r) * cols + c]; }

  bool operator==(const FqMat& o) const {
    return q == o.q && rows == o.rows && cols == o.cols && a == o.a;
  }

  FqMat operator*(const FqMat& o) const {
    if (cols != o.rows || q != o.q) throw std::logic_error("FqMat: bad product shape");
    FqMat r(q, rows, o.cols);
    for (int i = 0; i < rows; ++i)
      for (int k = 0; k < cols; ++k) {
        int x = at(i, k);
        if (!x) continue;
        for (int j = 0; j < o.cols; ++j)
          r.at(i, j) = uint8_t((r.at(i, j) + x * o.at(k, j)) % q);
      }
    return r;
  }

  // horizontal / vertical stacking
  static FqMat hstack(const std::vector<FqMat>& blocks, int q, int rows);
  static FqMat vstack(const std::vector<FqMat>& blocks, int q, int cols);
};

int fq_inv(int q, int x);

// reduced row echelon form in place; returns pivot column list
std::vector<int> fq_rref(FqMat& m);

int fq_rank(FqMat m);

// basis of the right null space, returned as columns of a cols x k matrix
FqMat fq_nullspace(const FqMat& m);

// solve A x = b for each column of b; throws if inconsistent
FqMat fq_solve(const FqMat& A, const FqMat& b);

FqMat fq_inverse(const FqMat& m);

// returns row-echelon basis of the row space of m
FqMat fq_row_basis(const FqMat& m);

// true if each row of sub lies in the row space of space
bool fq_rows_contained(const FqMat& space, const FqMat& sub);

// enumerate all k-dimensional subspaces of F_q^n as RREF basis matrices (k x n)
std::vector<FqMat> fq_subspaces(int q, int n, int k);

}  // namespace qhall
