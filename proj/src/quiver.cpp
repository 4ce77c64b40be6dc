#include "qhall/quiver.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <set>
#include <sstream>

namespace qhall {

ValuedQuiver::ValuedQuiver(int n, IntVec eps, std::vector<Arrow> arrows)
    : n_(n), eps_(std::move(eps)), arrows_(std::move(arrows)) {
  if (int(eps_.size()) != n_) throw std::invalid_argument("ValuedQuiver: eps size mismatch");
  for (long e : eps_)
    if (e <= 0) throw std::invalid_argument("ValuedQuiver: eps must be positive");
  std::set<std::pair<int, int>> seen;
  for (const auto& a : arrows_) {
    if (a.src < 0 || a.src >= n_ || a.dst < 0 || a.dst >= n_)
      throw std::invalid_argument("ValuedQuiver: arrow endpoint out of range");
    if (a.src == a.dst) throw std::invalid_argument("ValuedQuiver: loops are not allowed");
    if (a.d <= 0) throw std::invalid_argument("ValuedQuiver: edge value must be positive");
    // d_{ij} eps_j = d_{ji} eps_i must have an integer solution d_{ji}
    if ((long(a.d) * eps_[a.dst]) % eps_[a.src] != 0)
      throw std::invalid_argument("ValuedQuiver: edge values incompatible with eps");
    if (!seen.insert({std::min(a.src, a.dst), std::max(a.src, a.dst)}).second)
      throw std::invalid_argument("ValuedQuiver: parallel edges are not supported");
  }
  // no directed cycles (longest-path style check; n is tiny)
  std::vector<int> indeg(n_, 0);
  for (const auto& a : arrows_) indeg[a.dst]++;
  std::deque<int> ready;
  for (int i = 0; i < n_; ++i)
    if (!indeg[i]) ready.push_back(i);
  int removed = 0;
  std::vector<int> deg = indeg;
  while (!ready.empty()) {
    int v = ready.front();
    ready.pop_front();
    ++removed;
    for (const auto& a : arrows_)
      if (a.src == v && --deg[a.dst] == 0) ready.push_back(a.dst);
  }
  if (removed != n_) throw std::invalid_argument("ValuedQuiver: orientation has a cycle");
  // connected as an undirected graph
  if (n_ > 1) {
    std::vector<bool> vis(n_, false);
    std::deque<int> bfs{0};
    vis[0] = true;
    int count = 1;
    while (!bfs.empty()) {
      int v = bfs.front();
      bfs.pop_front();
      for (const auto& a : arrows_) {
        int other = a.src == v ? a.dst : (a.dst == v ? a.src : -1);
        if (other >= 0 && !vis[other]) {
          vis[other] = true;
          ++count;
          bfs.push_back(other);
        }
      }
    }
    if (count != n_) throw std::invalid_argument("ValuedQuiver: graph is not connected");
  }
}

bool ValuedQuiver::simply_laced() const {
  for (const auto& a : arrows_)
    if (a.d != 1) return false;
  for (long e : eps_)
    if (e != 1) return false;
  return true;
}

bool ValuedQuiver::is_sink(int i) const {
  for (const auto& a : arrows_)
    if (a.src == i) return false;
  return true;
}

bool ValuedQuiver::is_source(int i) const {
  for (const auto& a : arrows_)
    if (a.dst == i) return false;
  return true;
}

ValuedQuiver ValuedQuiver::reversed_at(int i) const {
  std::vector<Arrow> rev = arrows_;
  for (auto& a : rev)
    if (a.src == i || a.dst == i) {
      // flipped arrow carries d_{dst,src} = d_{src,dst} eps_dst / eps_src
      long nd = (long(a.d) * eps_[a.dst]) / eps_[a.src];
      std::swap(a.src, a.dst);
      a.d = int(nd);
    }
  return ValuedQuiver(n_, eps_, rev);
}

long ValuedQuiver::euler(const DimVec& a, const DimVec& b) const {
  long s = 0;
  for (int i = 0; i < n_; ++i) s += eps_[i] * long(a[i]) * b[i];
  for (const auto& ar : arrows_) s -= long(ar.d) * eps_[ar.dst] * a[ar.src] * b[ar.dst];
  return s;
}

DimVec ValuedQuiver::reflect_dimvec(int i, const DimVec& d) const {
  // s_i(d) = d - (sum_j a_ij d_j) e_i with a_ij = -d_ji
  long t = 2 * long(d[i]);
  for (const auto& a : arrows_) {
    if (a.src == i) t -= (long(a.d) * eps_[a.dst] / eps_[a.src]) * d[a.dst];
    if (a.dst == i) t -= long(a.d) * d[a.src];
  }
  DimVec r = d;
  r[i] -= int(t);
  return r;
}

CartanDatum ValuedQuiver::cartan() const {
  std::vector<std::vector<long>> A(n_, std::vector<long>(n_, 0));
  for (int i = 0; i < n_; ++i) A[i][i] = 2;
  for (const auto& a : arrows_) {
    long dij = a.d;                                   // d_{src,dst}
    long dji = long(a.d) * eps_[a.dst] / eps_[a.src];  // d_{dst,src}
    A[a.src][a.dst] = -dji;
    A[a.dst][a.src] = -dij;
  }
  return CartanDatum(A, eps_);
}

std::string ValuedQuiver::orientation_key() const {
  std::vector<std::string> parts;
  for (const auto& a : arrows_)
    parts.push_back(std::to_string(a.src) + ">" + std::to_string(a.dst) + ":" + std::to_string(a.d));
  std::sort(parts.begin(), parts.end());
  std::string s;
  for (const auto& p : parts) s += p + ";";
  return s;
}

std::vector<uint8_t> Rep::encode() const {
  std::vector<uint8_t> out;
  for (const auto& m : mats) out.insert(out.end(), m.a.begin(), m.a.end());
  return out;
}

ClassId ClassId::parse(const std::string& s) {
  size_t hash = s.find('#');
  if (hash == std::string::npos) throw std::invalid_argument("ClassId::parse: bad input");
  ClassId id;
  std::stringstream ss(s.substr(0, hash));
  std::string tok;
  while (std::getline(ss, tok, ',')) id.dv.push_back(std::stoi(tok));
  id.idx = std::stoi(s.substr(hash + 1));
  return id;
}

RepTable::RepTable(const ValuedQuiver& Q, int q, long dim_cap)
    : Q_(std::make_shared<ValuedQuiver>(Q)), q_(q), cap_(dim_cap) {
  for (int p : {2, 3, 5, 7, 11, 13})
    if (q == p) return;
  throw std::invalid_argument("RepTable: field size must be a small prime");
}

mpz_class RepTable::gl_order(int d) const {
  mpz_class o = 1, qd = 1;
  for (int k = 0; k < d; ++k) qd *= q_;
  mpz_class qk = 1;
  for (int k = 0; k < d; ++k) {
    o *= (qd - qk);
    qk *= q_;
  }
  return o;
}

mpz_class RepTable::group_order(const DimVec& dv) const {
  mpz_class o = 1;
  for (int d : dv) o *= gl_order(d);
  return o;
}

Rep RepTable::decode(const DimVec& dv, size_t code) const {
  Rep r;
  r.q = q_;
  r.dims = dv;
  for (const auto& a : Q_->arrows()) {
    FqMat m(q_, dv[a.dst], dv[a.src]);
    for (auto& e : m.a) {
      e = uint8_t(code % q_);
      code /= q_;
    }
    r.mats.push_back(std::move(m));
  }
  return r;
}

void RepTable::classify(const DimVec& dv) {
  if (classes_.count(dv)) return;
  if (!Q_->simply_laced())
    throw std::invalid_argument("RepTable: classification needs a simply-laced quiver");
  long total = 0;
  for (int d : dv) {
    if (d < 0) throw std::invalid_argument("RepTable: negative dimension");
    total += d;
  }
  if (total > cap_) throw std::invalid_argument("RepTable: dimension cap exceeded");

  size_t entries = 0;
  for (const auto& a : Q_->arrows()) entries += size_t(dv[a.src]) * dv[a.dst];
  double space = std::pow(double(q_), double(entries));
  if (space > double(1 << 24)) throw std::invalid_argument("RepTable: representation space too large");
  size_t nreps = size_t(space + 0.5);

  // one-vertex generator sets for the product group action
  std::vector<std::vector<std::pair<FqMat, FqMat>>> gens(Q_->n());
  int prim = 1;
  if (q_ > 2) {  // smallest primitive root mod q
    for (int g = 2; g < q_; ++g) {
      int x = g % q_, ord = 1;
      while (x != 1) { x = (x * g) % q_; ++ord; }
      if (ord == q_ - 1) { prim = g; break; }
    }
  }
  for (int v = 0; v < Q_->n(); ++v) {
    int d = dv[v];
    if (d == 0) continue;
    std::vector<FqMat> gs;
    FqMat sc = FqMat::identity(q_, d);
    sc.at(0, 0) = uint8_t(prim);
    if (q_ > 2) gs.push_back(sc);
    for (int r = 0; r < d; ++r)
      for (int c = 0; c < d; ++c)
        if (r != c) {
          FqMat t = FqMat::identity(q_, d);
          t.at(r, c) = 1;
          gs.push_back(t);
        }
    for (auto& g : gs) gens[v].emplace_back(g, fq_inverse(g));
  }

  std::vector<int> orbit_of(nreps, -1);
  std::vector<ClassInfo> found;
  std::vector<std::vector<uint8_t>> canon_codes;
  mpz_class G = group_order(dv);

  auto encode_code = [&](const Rep& r) -> size_t {
    size_t code = 0, base = 1;
    for (const auto& m : r.mats)
      for (uint8_t e : m.a) {
        code += size_t(e) * base;
        base *= q_;
      }
    return code;
  };

  for (size_t seed = 0; seed < nreps; ++seed) {
    if (orbit_of[seed] >= 0) continue;
    int cls = int(found.size());
    std::deque<size_t> queue{seed};
    orbit_of[seed] = cls;
    size_t orbit_size = 1, best = seed;
    while (!queue.empty()) {
      size_t cur = queue.front();
      queue.pop_front();
      Rep r = decode(dv, cur);
      for (int v = 0; v < Q_->n(); ++v) {
        for (const auto& [g, ginv] : gens[v]) {
          Rep s = r;
          for (size_t ai = 0; ai < s.mats.size(); ++ai) {
            const Arrow& a = Q_->arrows()[ai];
            if (a.dst == v) s.mats[ai] = g * s.mats[ai];
            if (a.src == v) s.mats[ai] = s.mats[ai] * ginv;
          }
          size_t code = encode_code(s);
          if (orbit_of[code] < 0) {
            orbit_of[code] = cls;
            ++orbit_size;
            if (code < best) best = code;
            queue.push_back(code);
          }
        }
      }
    }
    ClassInfo info;
    info.canon = decode(dv, best);
    info.aut = G / mpz_class(long(orbit_size));
    info.endo = int(hom_dim(info.canon, info.canon));
    found.push_back(std::move(info));
  }

  // sort classes by canonical representative for stable ids
  std::vector<int> order(found.size());
  for (size_t i = 0; i < order.size(); ++i) order[int(i)] = int(i);
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    return found[x].canon.encode() < found[y].canon.encode();
  });
  std::vector<int> rank_of(found.size());
  std::vector<ClassInfo> sorted;
  for (size_t k = 0; k < order.size(); ++k) {
    rank_of[order[k]] = int(k);
    ClassInfo ci = std::move(found[order[k]]);
    ci.id = ClassId{dv, int(k)};
    sorted.push_back(std::move(ci));
  }
  auto& index = orbit_index_[dv];
  for (size_t code = 0; code < nreps; ++code)
    index[decode(dv, code).encode()] = rank_of[orbit_of[code]];
  classes_[dv] = std::move(sorted);
}

const std::vector<RepTable::ClassInfo>& RepTable::classes(const DimVec& dv) {
  classify(dv);
  return classes_.at(dv);
}

const RepTable::ClassInfo& RepTable::info(const ClassId& id) {
  classify(id.dv);
  return classes_.at(id.dv).at(id.idx);
}

ClassId RepTable::class_of(const Rep& r) {
  classify(r.dims);
  return ClassId{r.dims, orbit_index_.at(r.dims).at(r.encode())};
}

ClassId RepTable::zero_class() {
  DimVec dv(Q_->n(), 0);
  classify(dv);
  return ClassId{dv, 0};
}

ClassId RepTable::simple(int i) {
  DimVec dv(Q_->n(), 0);
  dv[i] = 1;
  classify(dv);
  return ClassId{dv, 0};
}

long RepTable::dim_k(const ClassId& id) const {
  long s = 0;
  for (int i = 0; i < Q_->n(); ++i) s += Q_->eps(i) * id.dv[i];
  return s;
}

long RepTable::trace(const ClassId& id) const {
  long s = 0;
  for (int d : id.dv) s += d;
  return s;
}

long RepTable::hom_dim(const Rep& V, const Rep& W) const {
  size_t vars = 0;
  std::vector<size_t> offset(Q_->n());
  for (int i = 0; i < Q_->n(); ++i) {
    offset[i] = vars;
    vars += size_t(V.dims[i]) * W.dims[i];
  }
  size_t eqs = 0;
  for (const auto& a : Q_->arrows()) eqs += size_t(V.dims[a.src]) * W.dims[a.dst];
  if (eqs == 0) return long(vars);
  FqMat M(q_, int(eqs), int(vars));
  size_t row0 = 0;
  for (size_t ai = 0; ai < Q_->arrows().size(); ++ai) {
    const Arrow& a = Q_->arrows()[ai];
    int di = V.dims[a.src], djW = W.dims[a.dst];
    const FqMat& phi = V.mats[ai];  // W-side map of V
    const FqMat& psi = W.mats[ai];
    // equation block: psi * f_src - f_dst * phi = 0, entries (r, c): r < djW, c < di
    for (int r = 0; r < djW; ++r)
      for (int c = 0; c < di; ++c) {
        size_t row = row0 + size_t(r) * di + c;
        // psi[r][s] * f_src[s][c]
        for (int s = 0; s < W.dims[a.src]; ++s)
          M.at(int(row), int(offset[a.src] + size_t(c) * W.dims[a.src] + s)) =
              uint8_t((M.at(int(row), int(offset[a.src] + size_t(c) * W.dims[a.src] + s)) + psi.at(r, s)) % q_);
        // - f_dst[r][t] * phi[t][c]
        for (int t = 0; t < V.dims[a.dst]; ++t)
          M.at(int(row), int(offset[a.dst] + size_t(t) * W.dims[a.dst] + r)) =
              uint8_t((M.at(int(row), int(offset[a.dst] + size_t(t) * W.dims[a.dst] + r)) + (q_ - phi.at(t, c))) % q_);
      }
    row0 += size_t(V.dims[a.src]) * djW;
  }
  return long(vars) - fq_rank(M);
}

long RepTable::ext_dim(const Rep& V, const Rep& W) const {
  size_t vars = 0;
  for (int i = 0; i < Q_->n(); ++i) vars += size_t(V.dims[i]) * W.dims[i];
  size_t eqs = 0;
  for (const auto& a : Q_->arrows()) eqs += size_t(V.dims[a.src]) * W.dims[a.dst];
  long hom = hom_dim(V, W);
  long rank = long(vars) - hom;
  return long(eqs) - rank;
}

std::vector<DimVec> RepTable::dimvecs_up_to(long total) const {
  std::vector<DimVec> out;
  DimVec cur(Q_->n(), 0);
  auto rec = [&](auto&& self, int pos, long left) -> void {
    if (pos == Q_->n()) {
      out.push_back(cur);
      return;
    }
    for (int d = 0; d <= left; ++d) {
      cur[pos] = d;
      self(self, pos + 1, left - d);
    }
    cur[pos] = 0;
  };
  rec(rec, 0, total);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ClassId> RepTable::all_classes_up_to(long total) {
  std::vector<ClassId> out;
  for (const auto& dv : dimvecs_up_to(total))
    for (const auto& c : classes(dv)) out.push_back(c.id);
  return out;
}

long RepTable::hall_number(const ClassId& L, const ClassId& M, const ClassId& N) {
  for (size_t i = 0; i < L.dv.size(); ++i)
    if (L.dv[i] != M.dv[i] + N.dv[i]) return 0;
  auto key = std::make_tuple(L, M, N);
  auto it = hall_memo_.find(key);
  if (it != hall_memo_.end()) return it->second;

  const Rep& rL = info(L).canon;
  int n = Q_->n();

  // per-vertex subspace candidates of the right dimension
  std::vector<std::vector<FqMat>> cand(n);
  for (int i = 0; i < n; ++i) cand[i] = fq_subspaces(q_, L.dv[i], N.dv[i]);

  // fill the memo for every (M', N') with this L and these sub-dimensions
  std::map<std::tuple<ClassId, ClassId, ClassId>, long> counts;
  std::vector<int> pick(n, 0);
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == n) {
      // arrow-invariance: phi_a rows(W_src)^T must land in rowspace(W_dst)
      std::vector<FqMat> images(Q_->arrows().size());
      for (size_t ai = 0; ai < Q_->arrows().size(); ++ai) {
        const Arrow& a = Q_->arrows()[ai];
        const FqMat& B = cand[a.src][pick[a.src]];
        FqMat Bt(q_, L.dv[a.src], B.rows);
        for (int r = 0; r < B.rows; ++r)
          for (int c = 0; c < B.cols; ++c) Bt.at(c, r) = B.at(r, c);
        FqMat img = rL.mats[ai] * Bt;  // L.dv[dst] x k_src
        FqMat imgT(q_, img.cols, img.rows);
        for (int r = 0; r < img.rows; ++r)
          for (int c = 0; c < img.cols; ++c) imgT.at(c, r) = img.at(r, c);
        if (!fq_rows_contained(cand[a.dst][pick[a.dst]], imgT)) return;
        images[ai] = img;
      }
      // build sub and quotient representations
      Rep sub, quot;
      sub.q = quot.q = q_;
      sub.dims = N.dv;
      quot.dims = M.dv;
      std::vector<FqMat> P(n), Pinv(n);  // [W-basis; complement] per vertex
      for (int i = 0; i < n; ++i) {
        const FqMat& B = cand[i][pick[i]];
        int d = L.dv[i];
        FqMat full = B;
        std::vector<FqMat> rows_list{B};
        for (int e = 0; e < d && full.rows < d; ++e) {
          FqMat cand_row(q_, 1, d);
          cand_row.at(0, e) = 1;
          FqMat test = FqMat::vstack({full, cand_row}, q_, d);
          if (fq_rank(test) > full.rows) full = test;
        }
        P[i] = full;  // d x d, first N.dv[i] rows span W
        if (d > 0) Pinv[i] = fq_inverse(full);
        else Pinv[i] = FqMat(q_, 0, 0);
      }
      for (size_t ai = 0; ai < Q_->arrows().size(); ++ai) {
        const Arrow& a = Q_->arrows()[ai];
        int ks = N.dv[a.src], kd = N.dv[a.dst];
        int ms = M.dv[a.src], md = M.dv[a.dst];
        // coordinates of phi(sub basis) and phi(complement) in the [W; C] basis:
        // x = P^{-T} * phi * [basis columns]
        FqMat PinvT(q_, L.dv[a.dst], L.dv[a.dst]);
        for (int r = 0; r < PinvT.rows; ++r)
          for (int c = 0; c < PinvT.cols; ++c) PinvT.at(r, c) = Pinv[a.dst].at(c, r);
        FqMat Pt(q_, L.dv[a.src], L.dv[a.src]);
        for (int r = 0; r < Pt.rows; ++r)
          for (int c = 0; c < Pt.cols; ++c) Pt.at(r, c) = P[a.src].at(c, r);
        FqMat coords = PinvT * (rL.mats[ai] * Pt);  // d_dst x d_src in new bases
        FqMat sm(q_, kd, ks), qm(q_, md, ms);
        for (int r = 0; r < kd; ++r)
          for (int c = 0; c < ks; ++c) sm.at(r, c) = coords.at(r, c);
        for (int r = 0; r < md; ++r)
          for (int c = 0; c < ms; ++c) qm.at(r, c) = coords.at(kd + r, ks + c);
        sub.mats.push_back(std::move(sm));
        quot.mats.push_back(std::move(qm));
      }
      ClassId subId = class_of(sub), quotId = class_of(quot);
      counts[std::make_tuple(L, quotId, subId)]++;
      return;
    }
    for (size_t k = 0; k < cand[pos].size(); ++k) {
      pick[pos] = int(k);
      self(self, pos + 1);
    }
  };
  rec(rec, 0);

  for (auto& [k, v] : counts) hall_memo_[k] = v;
  if (!hall_memo_.count(key)) hall_memo_[key] = 0;
  return hall_memo_.at(key);
}

long RepTable::invariant_subspace_count(const ClassId& L, const DimVec& sub_dv) {
  long total = 0;
  DimVec quot_dv(L.dv.size());
  for (size_t i = 0; i < L.dv.size(); ++i) {
    quot_dv[i] = L.dv[i] - sub_dv[i];
    if (quot_dv[i] < 0) return 0;
  }
  for (const auto& m : classes(quot_dv))
    for (const auto& nn : classes(sub_dv)) total += hall_number(L, m.id, nn.id);
  return total;
}

}  // namespace qhall
