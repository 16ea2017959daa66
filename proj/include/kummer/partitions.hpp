#pragma once

#include <string>
#include <vector>

namespace kummer {

// Partition of n with parts sorted weakly decreasing, all >= 1.
class Partition {
 public:
  explicit Partition(std::vector<int> parts);

  int n() const { return n_; }
  int length() const { return (int)parts_.size(); }
  int gcd() const { return gcd_; }
  const std::vector<int>& parts() const { return parts_; }

  // a_1..a_n with sum i*a_i = n; index 0 corresponds to part size 1.
  std::vector<int> multiplicities() const;

  std::string str() const;  // "(3,1,1)"

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.parts_ == b.parts_;
  }
  friend bool operator<(const Partition& a, const Partition& b) {
    return a.parts_ < b.parts_;
  }

 private:
  std::vector<int> parts_;
  int n_;
  int gcd_;
};

// All partitions of n, reverse-lexicographic on parts: (n) first, (1^n) last.
// n = 0 is an empty-input error.
std::vector<Partition> enumerate_partitions(int n);

// n! / prod_i (i^{a_i} a_i!), the size of the conjugacy class of cycle type nu.
long long conjugacy_class_size(const Partition& nu);

// Permutation of {0,..,n-1} stored as the image sequence.
// Composition convention: (a*b)(x) = a(b(x)).
class Perm {
 public:
  explicit Perm(std::vector<int> images);
  static Perm identity(int n);
  // Cycle notation on 1-based points, e.g. {{1,2},{3,4,5}}.
  static Perm from_cycles(int n, const std::vector<std::vector<int>>& cycles);

  int n() const { return (int)img_.size(); }
  int operator()(int x) const { return img_[x]; }

  Perm compose(const Perm& other) const;  // this after other
  Perm inverse() const;

  Partition cycle_type() const;
  // Cycles as blocks; blocks sorted by least element, elements ascending.
  std::vector<std::vector<int>> orbits() const;

  friend bool operator==(const Perm& a, const Perm& b) { return a.img_ == b.img_; }
  friend bool operator<(const Perm& a, const Perm& b) { return a.img_ < b.img_; }

  std::string str() const;  // cycle notation, 1-based

 private:
  std::vector<int> img_;
};

// Orbits of the subgroup generated by p and r, same block conventions as
// Perm::orbits().
std::vector<std::vector<int>> joint_orbits(const Perm& p, const Perm& r);

}  // namespace kummer
