#include "kummer/partitions.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace kummer {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw std::invalid_argument("Partition: no parts");
  std::sort(parts_.begin(), parts_.end(), std::greater<int>());
  if (parts_.back() < 1) throw std::invalid_argument("Partition: parts must be >= 1");
  n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
  gcd_ = 0;
  for (int p : parts_) gcd_ = std::gcd(gcd_, p);
}

std::vector<int> Partition::multiplicities() const {
  std::vector<int> a(n_, 0);
  for (int p : parts_) a[p - 1]++;
  return a;
}

std::string Partition::str() const {
  std::string s = "(";
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

std::vector<Partition> enumerate_partitions(int n) {
  if (n < 1) throw std::invalid_argument("enumerate_partitions: n must be >= 1");
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rest, int maxpart) {
    if (rest == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(rest, maxpart); p >= 1; --p) {
      cur.push_back(p);
      rec(rest - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

long long conjugacy_class_size(const Partition& nu) {
  int n = nu.n();
  if (n > 20) throw std::overflow_error("conjugacy_class_size: n! exceeds 64 bits");
  long long size = 1;
  for (int i = 2; i <= n; ++i) size *= i;
  auto mult = nu.multiplicities();
  for (int i = 1; i <= n; ++i) {
    for (int j = 0; j < mult[i - 1]; ++j) {
      size /= i;
      size /= (j + 1);
    }
  }
  return size;
}

Perm::Perm(std::vector<int> images) : img_(std::move(images)) {
  std::vector<char> seen(img_.size(), 0);
  for (int v : img_) {
    if (v < 0 || v >= (int)img_.size() || seen[v])
      throw std::invalid_argument("Perm: not a bijection");
    seen[v] = 1;
  }
}

Perm Perm::identity(int n) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  return Perm(std::move(img));
}

Perm Perm::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  for (const auto& c : cycles) {
    for (size_t i = 0; i < c.size(); ++i) {
      int from = c[i] - 1;
      int to = c[(i + 1) % c.size()] - 1;
      if (from < 0 || from >= n || to < 0 || to >= n)
        throw std::invalid_argument("Perm::from_cycles: point out of range");
      img[from] = to;
    }
  }
  return Perm(std::move(img));
}

Perm Perm::compose(const Perm& other) const {
  if (n() != other.n()) throw std::invalid_argument("Perm::compose: size mismatch");
  std::vector<int> img(n());
  for (int x = 0; x < n(); ++x) img[x] = img_[other.img_[x]];
  return Perm(std::move(img));
}

Perm Perm::inverse() const {
  std::vector<int> img(n());
  for (int x = 0; x < n(); ++x) img[img_[x]] = x;
  return Perm(std::move(img));
}

std::vector<std::vector<int>> Perm::orbits() const {
  std::vector<std::vector<int>> blocks;
  std::vector<char> seen(n(), 0);
  for (int s = 0; s < n(); ++s) {
    if (seen[s]) continue;
    std::vector<int> blk;
    int x = s;
    do {
      seen[x] = 1;
      blk.push_back(x);
      x = img_[x];
    } while (x != s);
    std::sort(blk.begin(), blk.end());
    blocks.push_back(std::move(blk));
  }
  return blocks;  // discovery order = ascending least element
}

Partition Perm::cycle_type() const {
  std::vector<int> sizes;
  for (const auto& b : orbits()) sizes.push_back((int)b.size());
  return Partition(std::move(sizes));
}

std::string Perm::str() const {
  std::vector<char> seen(n(), 0);
  std::string s;
  for (int start = 0; start < n(); ++start) {
    if (seen[start] || img_[start] == start) {
      seen[start] = 1;
      continue;
    }
    s += "(";
    int x = start;
    bool first = true;
    do {
      seen[x] = 1;
      if (!first) s += " ";
      s += std::to_string(x + 1);
      first = false;
      x = img_[x];
    } while (x != start);
    s += ")";
  }
  return s.empty() ? "id" : s;
}

std::vector<std::vector<int>> joint_orbits(const Perm& p, const Perm& r) {
  if (p.n() != r.n()) throw std::invalid_argument("joint_orbits: size mismatch");
  int n = p.n();
  // union-find over {0..n-1}
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
  for (int x = 0; x < n; ++x) {
    unite(x, p(x));
    unite(x, r(x));
  }
  std::vector<std::vector<int>> by_root(n);
  for (int x = 0; x < n; ++x) by_root[find(x)].push_back(x);
  std::vector<std::vector<int>> blocks;
  for (auto& b : by_root)
    if (!b.empty()) blocks.push_back(std::move(b));
  return blocks;
}

}  // namespace kummer
