#include "kummer/tensor.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "kummer/frobenius.hpp"

namespace kummer {

TensorClass TensorClass::monomial(Key k, const Rational& c) {
  TensorClass t((int)k.size());
  t.add(k, c);
  return t;
}

void TensorClass::add(const Key& k, const Rational& c) {
  if ((int)k.size() != factors_) throw std::invalid_argument("TensorClass: factor mismatch");
  if (c.is_zero()) return;
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(k, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TensorClass& TensorClass::operator+=(const TensorClass& o) {
  if (o.factors_ != factors_) throw std::invalid_argument("TensorClass: factor mismatch");
  for (const auto& [k, c] : o.terms_) add(k, c);
  return *this;
}

TensorClass TensorClass::scaled(const Rational& c) const {
  TensorClass out(factors_);
  if (c.is_zero()) return out;
  for (const auto& [k, v] : terms_) out.terms_.emplace(k, v * c);
  return out;
}

int koszul_reorder_sign(const std::vector<int>& source_parity, const std::vector<int>& pos) {
  int inv = 0;
  for (size_t t1 = 0; t1 < pos.size(); ++t1)
    for (size_t t2 = t1 + 1; t2 < pos.size(); ++t2)
      if (pos[t1] > pos[t2] && source_parity[pos[t1]] && source_parity[pos[t2]]) inv++;
  return inv % 2 ? -1 : 1;
}

TensorClass tensor_multiply(const FrobeniusAlgebra& alg, const TensorClass& a,
                            const TensorClass& b) {
  if (a.factors() != b.factors()) throw std::invalid_argument("tensor_multiply: factor mismatch");
  int k = a.factors();
  TensorClass out(k);
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      // sign from moving y_i left past x_{i+1}..x_k
      int crossings = 0;
      for (int i = 0; i < k; ++i)
        if (alg.basis(kb[i]).parity)
          for (int j = i + 1; j < k; ++j) crossings += alg.basis(ka[j]).parity;
      Rational coeff = ca * cb;
      if (crossings % 2) coeff = -coeff;
      // componentwise products, expanded sparsely
      std::vector<std::pair<TensorClass::Key, Rational>> partial{{{}, coeff}};
      for (int i = 0; i < k && !partial.empty(); ++i) {
        const AlgebraClass& prod = alg.multiply(ka[i], kb[i]);
        std::vector<std::pair<TensorClass::Key, Rational>> next;
        for (const auto& [key, c] : partial)
          for (const auto& [idx, pc] : prod.terms()) {
            auto nk = key;
            nk.push_back((std::uint8_t)idx);
            next.emplace_back(std::move(nk), c * pc);
          }
        partial = std::move(next);
      }
      for (auto& [key, c] : partial) out.add(key, c);
    }
  }
  return out;
}

TensorClass tensor_concat(const TensorClass& a, const TensorClass& b) {
  TensorClass out(a.factors() + b.factors());
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) {
      TensorClass::Key k = ka;
      k.insert(k.end(), kb.begin(), kb.end());
      out.add(k, ca * cb);
    }
  return out;
}

Rational tensor_counit(const FrobeniusAlgebra& alg, const TensorClass& a) {
  Rational r(0);
  for (const auto& [k, c] : a.terms()) {
    Rational v = c;
    for (auto idx : k) v *= alg.counit(idx);
    r += v;
  }
  return r;
}

Rational tensor_pairing(const FrobeniusAlgebra& alg, const TensorClass& a,
                        const TensorClass& b) {
  if (a.factors() != b.factors()) throw std::invalid_argument("tensor_pairing: factor mismatch");
  int k = a.factors();
  Rational r(0);
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) {
      Rational v = ca * cb;
      for (int i = 0; i < k && !v.is_zero(); ++i)
        v *= alg.counit(alg.multiply(ka[i], kb[i]));
      if (v.is_zero()) continue;
      int crossings = 0;
      for (int j = 0; j < k; ++j)
        if (alg.basis(ka[j]).parity)
          for (int i = 0; i < j; ++i) crossings += alg.basis(kb[i]).parity;
      if (crossings % 2) v = -v;
      r += v;
    }
  return r;
}

TensorClass comultiply(const FrobeniusAlgebra& alg, const AlgebraClass& a, int k) {
  if (k < 1) throw std::invalid_argument("comultiply: k must be >= 1");
  TensorClass cur(1);
  for (const auto& [i, c] : a.terms()) cur.add({(std::uint8_t)i}, c);
  for (int step = 1; step < k; ++step) {
    TensorClass next(step + 1);
    for (const auto& [key, c] : cur.terms())
      for (const auto& ct : alg.comult(key[0])) {
        TensorClass::Key nk;
        nk.reserve(key.size() + 1);
        nk.push_back((std::uint8_t)ct.left);
        nk.push_back((std::uint8_t)ct.right);
        nk.insert(nk.end(), key.begin() + 1, key.end());
        next.add(nk, c * ct.coeff);
      }
    cur = std::move(next);
  }
  return cur;
}

TensorClass tensor_symmetrize(const FrobeniusAlgebra& alg, const TensorClass& a) {
  int k = a.factors();
  std::vector<int> pos(k);
  std::iota(pos.begin(), pos.end(), 0);
  TensorClass acc(k);
  long long count = 0;
  do {
    for (const auto& [key, c] : a.terms()) {
      std::vector<int> par(k);
      for (int i = 0; i < k; ++i) par[i] = alg.basis(key[i]).parity;
      TensorClass::Key nk(k);
      for (int t = 0; t < k; ++t) nk[t] = key[pos[t]];
      acc.add(nk, c * Rational(koszul_reorder_sign(par, pos)));
    }
    count++;
  } while (std::next_permutation(pos.begin(), pos.end()));
  TensorClass out(k);
  for (const auto& [key, c] : acc.terms()) out.add(key, c / Rational(count));
  return out;
}

int tensor_degree(const FrobeniusAlgebra& alg, const TensorClass& a) {
  int d = 0;
  for (const auto& [k, c] : a.terms()) {
    int s = 0;
    for (auto idx : k) s += alg.basis(idx).degree;
    d = std::max(d, s);
  }
  return d;
}

int tensor_perversity(const FrobeniusAlgebra& alg, const TensorClass& a) {
  int p = 0;
  for (const auto& [k, c] : a.terms()) {
    int s = 0;
    for (auto idx : k) s += alg.basis(idx).perversity;
    p = std::max(p, s);
  }
  return p;
}

std::string tensor_str(const FrobeniusAlgebra& alg, const TensorClass& a) {
  if (a.is_zero()) return "0";
  std::string s;
  for (const auto& [k, c] : a.terms()) {
    if (!s.empty()) s += " + ";
    if (!(c == Rational(1))) s += c.str() + "*";
    for (size_t i = 0; i < k.size(); ++i) {
      if (i) s += "(x)";
      s += alg.basis(k[i]).name;
    }
  }
  return s;
}

}  // namespace kummer
