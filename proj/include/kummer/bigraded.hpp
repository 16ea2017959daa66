#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "kummer/partitions.hpp"

namespace kummer {

using BigInt = boost::multiprecision::cpp_int;

// Thrown by exact_divide when the quotient would need a remainder or a
// negative coefficient; upstream decompositions guarantee neither occurs.
class DivisibilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bigraded dimension series sum c(d,p) q^d t^p with c(d,p) >= 0,
// d = cohomological degree, p = perversity.
class PerversePolynomial {
 public:
  using Key = std::pair<int, int>;  // (d, p)

  PerversePolynomial() = default;
  static PerversePolynomial unit() { return monomial(0, 0, 1); }
  static PerversePolynomial monomial(int d, int p, BigInt c = 1);

  void add(int d, int p, const BigInt& c);
  BigInt at(int d, int p) const;
  bool is_zero() const { return terms_.empty(); }
  const std::map<Key, BigInt>& terms() const { return terms_; }

  int max_degree() const;
  int max_perversity() const;

  PerversePolynomial shifted(int dd, int dp) const;
  std::vector<BigInt> betti() const;  // t = 1 specialization, index = degree
  BigInt total() const;               // q = t = 1

  friend PerversePolynomial operator+(const PerversePolynomial&, const PerversePolynomial&);
  friend PerversePolynomial operator*(const PerversePolynomial&, const PerversePolynomial&);
  PerversePolynomial& operator+=(const PerversePolynomial& o) { return *this = *this + o; }
  PerversePolynomial scaled(const BigInt& c) const;

  friend bool operator==(const PerversePolynomial& a, const PerversePolynomial& b) {
    return a.terms_ == b.terms_;
  }

  // Canonical text form: "c*q^d*t^p + ..." sorted by (d,p).
  std::string str() const;
  // {"terms":[{"d":..,"p":..,"c":..}]} sorted by (d,p).
  std::string json() const;

 private:
  std::map<Key, BigInt> terms_;
};

// Coefficient of x^n in
//   prod_{d even} (1 - q^d t^p x)^{-c(d,p)} * prod_{d odd} (1 + q^d t^p x)^{c(d,p)}.
PerversePolynomial super_symmetric_power(const PerversePolynomial& a, int n);

// prod_i super_symmetric_power(a, a_i) over the multiplicities of nu.
PerversePolynomial sym_partition(const PerversePolynomial& a, const Partition& nu);

// Quotient c with c*b = a exactly; requires b(0,0) != 0, throws
// DivisibilityError on remainder or negative quotient coefficient.
PerversePolynomial exact_divide(const PerversePolynomial& a, const PerversePolynomial& b);

// Relative hard Lefschetz symmetry c(d,p) == c(d + 2(r-p), 2r-p).
bool hard_lefschetz_symmetric(const PerversePolynomial& a, int r);

}  // namespace kummer
