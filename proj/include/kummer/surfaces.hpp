#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kummer/bigraded.hpp"
#include "kummer/frobenius.hpp"
#include "kummer/tensor.hpp"

namespace kummer {

class UnsupportedModelError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

enum class SurfaceCase {
  AbelianOverElliptic,
  EllipticTimesLine,
  EllipticTimesTorusQuotient,
};

// Element of the torsion group A[m]: a tuple of residues j/d (mod 1), stored
// reduced. Componentwise addition mod 1.
class TorsionElement {
 public:
  static TorsionElement zero(int rank);
  TorsionElement(std::vector<std::pair<long long, long long>> residues);  // (num, den)

  int rank() const { return (int)res_.size(); }
  bool is_zero() const;
  bool is_m_torsion(long long m) const;  // m * sigma == 0
  TorsionElement operator+(const TorsionElement& o) const;
  TorsionElement operator-() const;

  friend bool operator==(const TorsionElement& a, const TorsionElement& b) {
    return a.res_ == b.res_;
  }
  friend bool operator<(const TorsionElement& a, const TorsionElement& b) {
    return a.res_ < b.res_;
  }

  std::string str() const;  // "(1/2,0,0,0)"

 private:
  TorsionElement() = default;
  std::vector<std::pair<long long, long long>> res_;  // reduced, den >= 1, 0 <= num < den
};

struct SurfaceConfig {
  SurfaceCase surface_case = SurfaceCase::AbelianOverElliptic;
  std::optional<int> torsion_rank;
  // Invariant factors of the full torsion subgroup, one entry per component:
  // 0 = divisible component (m-torsion Z/m), d > 0 = cyclic Z/d component
  // (m-torsion Z/gcd(m,d)). Default: torsion_rank copies of 0.
  std::vector<long long> torsion_factors;
};

// One of the three fibered group-surface cases. Cohomology is the exterior
// algebra on the listed degree-1 generators; the perversity pattern and the
// torsion rank are the case data.
class SurfaceModel {
 public:
  static SurfaceModel make(SurfaceCase c);
  static SurfaceModel make(const SurfaceConfig& cfg);
  static std::optional<SurfaceCase> parse_case(const std::string& name);
  static std::string case_name(SurfaceCase c);

  SurfaceCase surface_case() const { return case_; }
  std::string name() const { return case_name(case_); }
  bool compact() const { return compact_; }
  int torsion_rank() const { return (int)torsion_factors_.size(); }
  int defect() const { return 1; }  // r(f)
  int generator_count() const { return (int)generator_perversity_.size(); }
  const std::vector<int>& generator_perversity() const { return generator_perversity_; }
  const FrobeniusAlgebra& algebra() const { return algebra_; }

  PerversePolynomial cohomology_pp() const;
  AlgebraClass product(const AlgebraClass& x, const AlgebraClass& y) const {
    return algebra_.multiply(x, y);
  }

  long long torsion_count(long long m) const;               // |A[m]|
  std::vector<TorsionElement> torsion_group(long long m) const;

  // Poincare duality on A^n (componentwise complement with the orientation
  // integral(x1 x2 x3 x4) = 1 per factor); compact model only.
  TensorClass poincare_dual(const TensorClass& x) const;

  // Pullback along the summation map A^n -> A: ring homomorphism determined
  // by g -> sum_k 1 (x) .. (x) g (x) .. (x) 1 on degree-1 generators.
  TensorClass summation_pullback(const AlgebraClass& x, int n) const;

 private:
  SurfaceModel() = default;
  SurfaceCase case_;
  bool compact_ = false;
  std::vector<int> generator_perversity_;
  std::vector<long long> torsion_factors_;
  FrobeniusAlgebra algebra_;
};

}  // namespace kummer
