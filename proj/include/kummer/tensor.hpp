#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "kummer/rational.hpp"

namespace kummer {

class FrobeniusAlgebra;
class AlgebraClass;

// Sparse element of the k-fold tensor power of an algebra; keys are tuples of
// basis indices. Signs live in the free functions below, which follow the
// Koszul rule throughout.
class TensorClass {
 public:
  using Key = std::vector<std::uint8_t>;

  explicit TensorClass(int factors = 0) : factors_(factors) {}
  static TensorClass monomial(Key k, const Rational& c = Rational(1));

  int factors() const { return factors_; }
  const std::map<Key, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const Key& k, const Rational& c);
  TensorClass& operator+=(const TensorClass& o);
  TensorClass scaled(const Rational& c) const;
  friend bool operator==(const TensorClass& a, const TensorClass& b) {
    return a.factors_ == b.factors_ && a.terms_ == b.terms_;
  }

 private:
  int factors_;
  std::map<Key, Rational> terms_;
};

// Componentwise product with crossing signs:
// ((x)x_i)((x)y_i) = prod_{i<j} (-1)^{|y_i||x_j|} (x)(x_i y_i).
TensorClass tensor_multiply(const FrobeniusAlgebra& alg, const TensorClass& a,
                            const TensorClass& b);

// Concatenation a (x) b, no signs.
TensorClass tensor_concat(const TensorClass& a, const TensorClass& b);

// Product of factorwise counits.
Rational tensor_counit(const FrobeniusAlgebra& alg, const TensorClass& a);

// <(x)x_i, (x)y_i> = prod_{i<j} (-1)^{|x_j||y_i|} prod_i <x_i,y_i>.
Rational tensor_pairing(const FrobeniusAlgebra& alg, const TensorClass& a,
                        const TensorClass& b);

// Iterated comultiplication Delta^(k): A -> A^{(x)k}; Delta^(1) = id.
TensorClass comultiply(const FrobeniusAlgebra& alg, const AlgebraClass& a, int k);

// Average over all factor permutations with Koszul reorder signs.
TensorClass tensor_symmetrize(const FrobeniusAlgebra& alg, const TensorClass& a);

int tensor_degree(const FrobeniusAlgebra& alg, const TensorClass& a);      // max over terms
int tensor_perversity(const FrobeniusAlgebra& alg, const TensorClass& a);  // max over terms

std::string tensor_str(const FrobeniusAlgebra& alg, const TensorClass& a);

// Koszul sign of rearranging a sequence of parities: target position t takes
// source position pos[t]; each inverted pair of odd elements contributes -1.
int koszul_reorder_sign(const std::vector<int>& source_parity, const std::vector<int>& pos);

}  // namespace kummer
