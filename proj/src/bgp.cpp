#include "qhall/bgp.hpp"

namespace qhall {

namespace {

FqMat transpose(const FqMat& m) {
  FqMat t(m.q, m.cols, m.rows);
  for (int r = 0; r < m.rows; ++r)
    for (int c = 0; c < m.cols; ++c) t.at(c, r) = m.at(r, c);
  return t;
}

// greedily extend the rows of `base` to a basis of F_q^d with standard vectors
FqMat complete_basis(const FqMat& base, int d, int q) {
  FqMat full = base;
  for (int e = 0; e < d && full.rows < d; ++e) {
    FqMat row(q, 1, d);
    row.at(0, e) = 1;
    FqMat test = FqMat::vstack({full, row}, q, d);
    if (fq_rank(test) > full.rows) full = test;
  }
  return full;
}

}  // namespace

Rep reflect_plus(const ValuedQuiver& Q, int i, const Rep& V) {
  if (!Q.is_sink(i)) throw std::invalid_argument("reflect_plus: vertex is not a sink");
  int q = V.q;
  std::vector<size_t> in_arrows;
  for (size_t ai = 0; ai < Q.arrows().size(); ++ai)
    if (Q.arrows()[ai].dst == i) in_arrows.push_back(ai);

  // stacked map  (+)_{j->i} V_j -> V_i  given by the rows of the incoming maps
  std::vector<FqMat> blocks;
  int width = 0;
  for (size_t ai : in_arrows) {
    blocks.push_back(V.mats[ai]);
    width += V.mats[ai].cols;
  }
  FqMat stacked = blocks.empty() ? FqMat(q, V.dims[i], 0) : FqMat::hstack(blocks, q, V.dims[i]);
  FqMat kernel = fq_nullspace(stacked);  // width x k

  Rep W;
  W.q = q;
  W.dims = V.dims;
  W.dims[i] = kernel.cols;
  W.mats.resize(V.mats.size());
  // per-slot row offsets of the kernel inclusion
  std::map<size_t, int> slot_offset;
  {
    int off = 0;
    for (size_t ai : in_arrows) {
      slot_offset[ai] = off;
      off += V.mats[ai].cols;
    }
  }
  for (size_t ai = 0; ai < Q.arrows().size(); ++ai) {
    const Arrow& a = Q.arrows()[ai];
    if (a.dst != i) {
      W.mats[ai] = V.mats[ai];
      continue;
    }
    // reversed arrow i -> a.src: component of the kernel inclusion
    int dj = V.dims[a.src];
    FqMat comp(q, dj, kernel.cols);
    for (int r = 0; r < dj; ++r)
      for (int c = 0; c < kernel.cols; ++c) comp.at(r, c) = kernel.at(slot_offset[ai] + r, c);
    W.mats[ai] = std::move(comp);
  }
  return W;
}

Rep reflect_minus(const ValuedQuiver& Q, int i, const Rep& V) {
  if (!Q.is_source(i)) throw std::invalid_argument("reflect_minus: vertex is not a source");
  int q = V.q;
  std::vector<size_t> out_arrows;
  for (size_t ai = 0; ai < Q.arrows().size(); ++ai)
    if (Q.arrows()[ai].src == i) out_arrows.push_back(ai);

  std::vector<FqMat> blocks;
  int height = 0;
  for (size_t ai : out_arrows) {
    blocks.push_back(V.mats[ai]);
    height += V.mats[ai].rows;
  }
  FqMat stacked = blocks.empty() ? FqMat(q, 0, V.dims[i]) : FqMat::vstack(blocks, q, V.dims[i]);

  // cokernel of V_i -> (+)_{i->j} V_j: basis [image; complement], projection = tail coords
  FqMat img_rows = fq_row_basis(transpose(stacked));  // rank x height
  FqMat full = complete_basis(img_rows, height, q);
  int c = height - img_rows.rows;
  FqMat proj(q, c, height);
  if (height > 0) {
    FqMat PinvT = transpose(fq_inverse(full));
    for (int r = 0; r < c; ++r)
      for (int col = 0; col < height; ++col) proj.at(r, col) = PinvT.at(img_rows.rows + r, col);
  }

  Rep W;
  W.q = q;
  W.dims = V.dims;
  W.dims[i] = c;
  W.mats.resize(V.mats.size());
  std::map<size_t, int> slot_offset;
  {
    int off = 0;
    for (size_t ai : out_arrows) {
      slot_offset[ai] = off;
      off += V.mats[ai].rows;
    }
  }
  for (size_t ai = 0; ai < Q.arrows().size(); ++ai) {
    const Arrow& a = Q.arrows()[ai];
    if (a.src != i) {
      W.mats[ai] = V.mats[ai];
      continue;
    }
    // reversed arrow a.dst -> i: include the slot, then project to the cokernel
    int dj = V.dims[a.dst];
    FqMat m(q, c, dj);
    for (int r = 0; r < c; ++r)
      for (int col = 0; col < dj; ++col) m.at(r, col) = proj.at(r, slot_offset[ai] + col);
    W.mats[ai] = std::move(m);
  }
  return W;
}

SimpleSplit split_simple_summand(const ValuedQuiver& Q, int i, const Rep& V) {
  int q = V.q, d = V.dims[i];
  SimpleSplit out;
  out.rest = V;
  if (d == 0) return out;

  // K = joint kernel of outgoing maps at i, In = joint image of incoming maps
  std::vector<FqMat> outs, ins;
  for (size_t ai = 0; ai < Q.arrows().size(); ++ai) {
    const Arrow& a = Q.arrows()[ai];
    if (a.src == i) outs.push_back(V.mats[ai]);
    if (a.dst == i) ins.push_back(transpose(V.mats[ai]));
  }
  FqMat K = outs.empty() ? FqMat::identity(q, d)
                         : fq_nullspace(FqMat::vstack(outs, q, d));  // d x dim K (columns)
  FqMat Krows = transpose(K);
  FqMat In(q, 0, d);
  if (!ins.empty()) In = fq_row_basis(FqMat::vstack(ins, q, d));

  // t = dim K - dim(K n In): rank([K; In]) = dim K + dim In - dim(K n In)
  int dimK = Krows.rows, dimIn = In.rows;
  int joint = fq_rank(FqMat::vstack({Krows, In}, q, d));
  out.t = dimK - (dimK + dimIn - joint);
  if (out.t == 0) return out;

  // summand basis T: rows of K independent modulo In
  FqMat T(q, 0, d);
  FqMat span = In;
  for (int r = 0; r < Krows.rows && T.rows < out.t; ++r) {
    FqMat row(q, 1, d);
    for (int cc = 0; cc < d; ++cc) row.at(0, cc) = Krows.at(r, cc);
    FqMat test = FqMat::vstack({span, row}, q, d);
    if (fq_rank(test) > fq_rank(span)) {
      T = FqMat::vstack({T, row}, q, d);
      span = test;
    }
  }
  // complement C with In inside it and V_i = T + C
  FqMat C = In;
  for (int e = 0; e < d && T.rows + C.rows < d; ++e) {
    FqMat row(q, 1, d);
    row.at(0, e) = 1;
    FqMat test = FqMat::vstack({T, C, row}, q, d);
    if (fq_rank(test) > T.rows + C.rows) C = FqMat::vstack({C, row}, q, d);
  }
  FqMat P = FqMat::vstack({T, C}, q, d);
  FqMat PinvT = transpose(fq_inverse(P));

  Rep& R = out.rest;
  R.dims[i] = d - out.t;
  for (size_t ai = 0; ai < Q.arrows().size(); ++ai) {
    const Arrow& a = Q.arrows()[ai];
    if (a.src == i) {
      // restrict to C: columns become phi * (C rows as columns)
      FqMat Ct = transpose(C);
      R.mats[ai] = V.mats[ai] * Ct;
    } else if (a.dst == i) {
      // express image in the [T; C] basis and keep the C part
      FqMat x = PinvT * V.mats[ai];
      FqMat m(q, d - out.t, V.dims[a.src]);
      for (int r = 0; r < d - out.t; ++r)
        for (int cc = 0; cc < V.dims[a.src]; ++cc) m.at(r, cc) = x.at(out.t + r, cc);
      R.mats[ai] = std::move(m);
    }
  }
  return out;
}

bool no_simple_summand(const ValuedQuiver& Q, int i, const Rep& V) {
  return split_simple_summand(Q, i, V).t == 0;
}

}  // namespace qhall
