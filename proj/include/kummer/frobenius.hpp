#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "kummer/rational.hpp"

namespace kummer {

// Sparse linear combination of algebra basis elements.
class AlgebraClass {
 public:
  AlgebraClass() = default;
  static AlgebraClass basis(int i) { return AlgebraClass(i, Rational(1)); }
  AlgebraClass(int i, const Rational& c) {
    if (!c.is_zero()) terms_[i] = c;
  }

  const std::map<int, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(int i, const Rational& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(i);
    if (it == terms_.end()) {
      terms_[i] = c;
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  AlgebraClass& operator+=(const AlgebraClass& o) {
    for (const auto& [i, c] : o.terms_) add(i, c);
    return *this;
  }
  AlgebraClass scaled(const Rational& c) const {
    AlgebraClass out;
    if (c.is_zero()) return out;
    for (const auto& [i, v] : terms_) out.terms_[i] = v * c;
    return out;
  }
  friend bool operator==(const AlgebraClass& a, const AlgebraClass& b) {
    return a.terms_ == b.terms_;
  }

 private:
  std::map<int, Rational> terms_;
};

struct AxiomCheck {
  std::string axiom;
  bool pass;
  std::string witness;  // empty when pass
};

struct ValidationReport {
  std::vector<AxiomCheck> checks;
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

// Graded Frobenius algebra given by structure constants. The comultiplication
// is the adjoint of the multiplication under the pairing <a,b> = counit(ab)
// with the Koszul rule <x(x)y, z(x)w> = (-1)^{|y||z|} <x,z><y,w>; it is solved
// from that equation at construction, so the sign conventions are pinned by
// the axiom suite rather than by a formula with hand-placed signs.
class FrobeniusAlgebra {
 public:
  struct BasisElement {
    std::string name;
    int degree = 0;
    int parity = 0;     // 0 even, 1 odd
    int perversity = 0; // filtration metadata, not an algebra axiom
  };
  struct CoTerm {
    int left, right;
    Rational coeff;
  };

  struct AlgebraData {
    std::vector<BasisElement> basis;
    std::vector<std::vector<AlgebraClass>> mult;
    std::vector<Rational> counit;
    int unit = 0;
  };
  // General constructor; solves the comultiplication and sets
  // euler = multiply(Delta(1)).
  static FrobeniusAlgebra from_data(AlgebraData d);

  // Exterior algebra on odd degree-1 generators carrying the given
  // perversities; basis indexed by subset bitmask, counit dual to the top
  // monomial.
  static FrobeniusAlgebra exterior(const std::vector<int>& generator_perversities);
  // The compact abelian surface preset: exterior({0,0,1,1}), euler = 0.
  static FrobeniusAlgebra abelian_surface();
  // One-dimensional even algebra with counit = identity.
  static FrobeniusAlgebra ground_field();

  int dim() const { return (int)basis_.size(); }
  const BasisElement& basis(int i) const { return basis_[i]; }
  int unit_index() const { return unit_; }
  const AlgebraClass& euler() const { return euler_; }

  const AlgebraClass& multiply(int i, int j) const { return mult_[i][j]; }
  AlgebraClass multiply(const AlgebraClass& a, const AlgebraClass& b) const;
  Rational counit(const AlgebraClass& a) const;
  Rational counit(int i) const { return counit_[i]; }
  Rational pairing(const AlgebraClass& a, const AlgebraClass& b) const {
    return counit(multiply(a, b));
  }
  const std::vector<CoTerm>& comult(int i) const { return comult_[i]; }

  int degree_of(const AlgebraClass& a) const;      // max over terms
  int perversity_of(const AlgebraClass& a) const;  // max over terms
  std::string class_str(const AlgebraClass& a) const;

  // Test-injection copies; derived data is deliberately left stale so that
  // validate() can detect the inconsistency.
  FrobeniusAlgebra with_counit(const std::vector<Rational>& counit) const;
  FrobeniusAlgebra with_euler(const AlgebraClass& e) const;
  FrobeniusAlgebra with_perversities(const std::vector<int>& basis_perversity) const;

  ValidationReport validate() const;

  FrobeniusAlgebra() = default;  // empty; populate through the factories

 private:
  void solve_comultiplication();

  std::vector<BasisElement> basis_;
  std::vector<std::vector<AlgebraClass>> mult_;
  std::vector<Rational> counit_;
  int unit_ = 0;
  AlgebraClass euler_;
  std::vector<std::vector<CoTerm>> comult_;
};

}  // namespace kummer
