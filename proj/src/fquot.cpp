#include "qhall/fquot.hpp"

#include <algorithm>

namespace qhall {

FWeight word_weight(size_t rank, const FWord& w) {
  FWeight nu(rank, 0);
  for (int letter : w) nu[letter]++;
  return nu;
}

void FAlgebra::add_to(FElem& x, const FWord& w, const RatFun& c) {
  if (c.is_zero()) return;
  auto it = x.find(w);
  if (it == x.end()) {
    x.emplace(w, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) x.erase(it);
}

FElem FAlgebra::add(const FElem& x, const FElem& y) const {
  FElem r = x;
  for (const auto& [w, c] : y) add_to(r, w, c);
  return r;
}

FElem FAlgebra::scale(const FElem& x, const RatFun& c) const {
  FElem r;
  if (c.is_zero()) return r;
  for (const auto& [w, co] : x) r.emplace(w, co * c);
  return r;
}

FElem FAlgebra::divided_power(int i, long n) const {
  if (n < 0) throw std::invalid_argument("divided_power: negative exponent");
  FWord w(size_t(n), i);
  return {{w, RatFun::one() / RatFun(qfact(n, cd_.eps(i)))}};
}

FElem FAlgebra::serre_element(int i, int j) const {
  if (i == j) throw std::invalid_argument("serre_element: indices must differ");
  long b = 1 - cd_.a(i, j);
  FElem out;
  for (long k = 0; k <= b; ++k) {
    FWord w;
    w.insert(w.end(), size_t(k), i);
    w.push_back(j);
    w.insert(w.end(), size_t(b - k), i);
    Laurent c = qbinom(b, k, cd_.eps(i));
    add_to(out, w, RatFun((k % 2) ? -c : c));
  }
  return out;
}

void FAlgebra::check_cap(const FWeight& nu) const {
  long total = 0;
  for (long x : nu) total += x;
  if (total > cap_) throw std::invalid_argument("FAlgebra: weight cap exceeded");
}

std::vector<FWord> FAlgebra::words_of_weight(const FWeight& nu) const {
  FWord sorted;
  for (size_t i = 0; i < nu.size(); ++i) sorted.insert(sorted.end(), size_t(nu[i]), int(i));
  std::vector<FWord> out;
  do {
    out.push_back(sorted);
  } while (std::next_permutation(sorted.begin(), sorted.end()));
  return out;
}

const FAlgebra::Table& FAlgebra::table(const FWeight& nu) {
  auto it = tables_.find(nu);
  if (it != tables_.end()) return it->second;
  check_cap(nu);

  Table tab;
  tab.word_count = long(words_of_weight(nu).size());

  // relation rows: all monomial framings w1 * S(i,j) * w2 inside this weight
  std::vector<std::map<FWord, Laurent>> rows;
  size_t n = cd_.rank();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      if (i == j) continue;  // a_ij = 0 still contributes the plain commutator
      long b = 1 - cd_.a(int(i), int(j));
      FWeight ws(n, 0);
      ws[i] = b;
      ws[j] += 1;
      FWeight rest(n);
      bool fits = true;
      for (size_t k = 0; k < n; ++k) {
        rest[k] = nu[k] - ws[k];
        if (rest[k] < 0) fits = false;
      }
      if (!fits) continue;
      FElem S = serre_element(int(i), int(j));
      // split the leftover weight between the two frames
      FWeight left(n, 0);
      auto rec = [&](auto&& self, size_t pos) -> void {
        if (pos == n) {
          FWeight right(n);
          for (size_t k = 0; k < n; ++k) right[k] = rest[k] - left[k];
          for (const FWord& w1 : words_of_weight(left))
            for (const FWord& w2 : words_of_weight(right)) {
              std::map<FWord, Laurent> row;
              for (const auto& [w, c] : S) {
                FWord full = w1;
                full.insert(full.end(), w.begin(), w.end());
                full.insert(full.end(), w2.begin(), w2.end());
                // Serre coefficients are Laurent with denominator 1
                row[full] = c.num();
              }
              rows.push_back(std::move(row));
            }
          return;
        }
        for (long t = 0; t <= rest[pos]; ++t) {
          left[pos] = t;
          self(self, pos + 1);
        }
        left[pos] = 0;
      };
      rec(rec, 0);
    }

  // keep coefficient degrees in check: strip common v-powers and poly gcd
  auto normalize_row = [](std::map<FWord, Laurent>& row) {
    if (row.empty()) return;
    Laurent g;
    for (const auto& [w, c] : row) {
      Laurent p = c.shifted(-c.min_exp());
      g = g.is_zero() ? p : detail::poly_gcd(g, p);
      if (g.is_one()) break;
    }
    long shift = 0;
    bool first = true;
    for (const auto& [w, c] : row) {
      shift = first ? c.min_exp() : std::min(shift, c.min_exp());
      first = false;
    }
    for (auto& [w, c] : row) c = Laurent::div_exact(c.shifted(-shift), g);
  };

  // p*row - c*piv over the union of both supports
  auto eliminate = [](const std::map<FWord, Laurent>& row, const Laurent& p,
                      const Laurent& c, const std::map<FWord, Laurent>& piv) {
    std::map<FWord, Laurent> next;
    for (const auto& [w, co] : row) next[w] = co * p;
    for (const auto& [w, co] : piv) {
      Laurent x = next.count(w) ? next[w] - c * co : -(c * co);
      if (x.is_zero())
        next.erase(w);
      else
        next[w] = x;
    }
    return next;
  };

  // echelonize with cross-multiplication elimination (coefficients stay Laurent)
  auto reduce_row = [&](std::map<FWord, Laurent>& row) {
    bool progress = true;
    while (progress && !row.empty()) {
      progress = false;
      FWord lead = row.rbegin()->first;
      auto hit = tab.rows.find(lead);
      if (hit != tab.rows.end()) {
        const Row& piv = hit->second;
        row = eliminate(row, piv.terms.at(piv.lead), row.rbegin()->second, piv.terms);
        progress = true;
      }
    }
  };

  for (auto& raw : rows) {
    std::map<FWord, Laurent> row = raw;
    reduce_row(row);
    if (row.empty()) continue;
    normalize_row(row);
    Row r;
    r.lead = row.rbegin()->first;
    r.terms = std::move(row);
    tab.rows.emplace(r.lead, std::move(r));
  }

  // full back-substitution so each row mentions no other row's lead
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto& [lead, row] : tab.rows) {
      for (auto it2 = row.terms.begin(); it2 != row.terms.end();) {
        const FWord& w = it2->first;
        if (w != lead && tab.rows.count(w)) {
          const Row& piv = tab.rows.at(w);
          auto next = eliminate(row.terms, piv.terms.at(piv.lead), it2->second, piv.terms);
          normalize_row(next);
          row.terms = std::move(next);
          changed = true;
          it2 = row.terms.begin();
        } else {
          ++it2;
        }
      }
    }
  }

  return tables_.emplace(nu, std::move(tab)).first->second;
}

FElem FAlgebra::normal_form(const FElem& x) {
  // group terms by weight, reduce each component against its table
  FElem out;
  std::map<FWeight, FElem> comps;
  for (const auto& [w, c] : x) comps[word_weight(cd_.rank(), w)][w] = c;
  for (auto& [nu, comp] : comps) {
    const Table& tab = table(nu);
    bool progress = true;
    while (progress) {
      progress = false;
      for (auto it = comp.rbegin(); it != comp.rend(); ++it) {
        auto hit = tab.rows.find(it->first);
        if (hit == tab.rows.end()) continue;
        const Row& piv = hit->second;
        RatFun factor = it->second / RatFun(piv.terms.at(piv.lead));
        for (const auto& [w, co] : piv.terms) add_to(comp, w, -(factor * RatFun(co)));
        progress = true;
        break;
      }
    }
    for (const auto& [w, c] : comp) add_to(out, w, c);
  }
  return out;
}

FElem FAlgebra::mul(const FElem& x, const FElem& y) {
  FElem raw;
  for (const auto& [w1, c1] : x)
    for (const auto& [w2, c2] : y) {
      FWord w = w1;
      w.insert(w.end(), w2.begin(), w2.end());
      add_to(raw, w, c1 * c2);
    }
  return normal_form(raw);
}

long FAlgebra::dim_weight(const FWeight& nu) {
  const Table& tab = table(nu);
  return tab.word_count - long(tab.rows.size());
}

std::vector<FWord> FAlgebra::basis_words(const FWeight& nu) {
  const Table& tab = table(nu);
  std::vector<FWord> out;
  for (const FWord& w : words_of_weight(nu))
    if (!tab.rows.count(w)) out.push_back(w);
  std::sort(out.begin(), out.end());
  return out;
}

std::string FAlgebra::str(const FElem& x) {
  if (x.empty()) return "0";
  std::string s;
  for (const auto& [w, c] : x) {
    if (!s.empty()) s += " + ";
    s += c.str() + "*[";
    for (size_t k = 0; k < w.size(); ++k) s += (k ? " " : "") + std::to_string(w[k]);
    s += "]";
  }
  return s;
}

}  // namespace qhall
