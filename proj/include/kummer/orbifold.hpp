#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "kummer/frobenius.hpp"
#include "kummer/partitions.hpp"
#include "kummer/rational.hpp"
#include "kummer/tensor.hpp"

namespace kummer {

class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Class on A^(nu): labels per part (parts in canonical weakly-decreasing
// order), stored in canonical form: within each run of equal parts labels are
// sorted ascending, with the Koszul sign of the sort folded into the
// coefficient; a repeated odd label is zero.
class PartitionLabels {
 public:
  PartitionLabels(const FrobeniusAlgebra* alg, Partition nu);

  const Partition& nu() const { return nu_; }
  const std::map<std::vector<std::uint8_t>, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  // Folds an arbitrary tuple into canonical form.
  void add(const std::vector<std::uint8_t>& labels, const Rational& c);
  friend bool operator==(const PartitionLabels& a, const PartitionLabels& b) {
    return a.nu_ == b.nu_ && a.terms_ == b.terms_;
  }

  int degree() const;      // max over tuples of sum deg(label)
  int perversity() const;  // max over tuples of sum p(label)
  std::string str() const;

 private:
  const FrobeniusAlgebra* alg_;
  Partition nu_;
  std::map<std::vector<std::uint8_t>, Rational> terms_;
};

// One model term coeff * (pi, labels); labels are algebra basis indices, one
// per pi-orbit, orbits ordered by least element.
struct LabeledTerm {
  std::uint16_t perm = 0;  // rank within S_n
  std::vector<std::uint8_t> labels;
  Rational coeff = Rational(1);
};

// The symmetric-orbifold model of H*(A^[n]): elements are linear combinations
// of labeled permutations, the product is blockwise Frobenius multiplication,
// Euler-class defect powers, and comultiplication onto product orbits.
class OrbifoldRing {
 public:
  OrbifoldRing(const FrobeniusAlgebra& alg, int n);

  // Term key <-> (perm rank, labels)
  std::uint64_t key(std::uint16_t perm, const std::vector<std::uint8_t>& labels) const;
  LabeledTerm decode(std::uint64_t k, const Rational& c) const;

  using Element = std::map<std::uint64_t, Rational>;

  int n() const { return n_; }
  const FrobeniusAlgebra& algebra() const { return *alg_; }
  int group_order() const { return (int)perms_.size(); }
  const Perm& perm(int rank) const { return perms_[rank]; }
  std::uint16_t rank_of(const Perm& p) const;
  const std::vector<std::vector<int>>& orbits_of(int rank) const { return orbits_[rank]; }
  const std::vector<Partition>& partitions() const { return partitions_; }
  int type_of_rank(int rank) const { return type_of_[rank]; }

  static void add_term(Element& e, std::uint64_t k, const Rational& c);

  int term_degree(const LabeledTerm& t) const;
  int term_perversity(const LabeledTerm& t) const;

  Element multiply_labeled(const LabeledTerm& x, const LabeledTerm& y) const;
  Element multiply(const Element& a, const Element& b) const;
  Element symmetrize(const Element& a) const;  // average over conjugation
  bool is_invariant(const Element& a) const;

  // Dictionary with the Goettsche decomposition
  Element nu_class(const PartitionLabels& payload) const;
  PartitionLabels project_to_nu(const Element& x, const Partition& lambda) const;
  std::map<Partition, PartitionLabels> hilbert_product(const Element& a, const Element& b) const;

  struct BasisClass {
    Partition nu;
    std::vector<std::uint8_t> labels;
    int degree;
    int perversity;
  };
  std::vector<BasisClass> invariant_basis() const;
  Element materialize(const BasisClass& b) const;
  std::string basis_str(const BasisClass& b) const;

  Element unit() const;
  std::string element_str(const Element& e) const;

 private:
  const FrobeniusAlgebra* alg_;
  int n_;
  std::vector<Perm> perms_;                         // rank order
  std::map<std::vector<int>, std::uint16_t> rank_;  // image vector -> rank
  std::vector<std::vector<std::vector<int>>> orbits_;
  std::vector<std::vector<int>> orbit_of_;  // [rank][point] -> orbit index
  std::vector<int> canonical_rank_by_type_;  // partition index -> rank of canonical perm
  std::vector<Partition> partitions_;
  std::vector<int> type_of_;  // [rank] -> partition index
};

}  // namespace kummer
