#include "kummer/orbifold.hpp"

#include <algorithm>
#include <numeric>

namespace kummer {

PartitionLabels::PartitionLabels(const FrobeniusAlgebra* alg, Partition nu)
    : alg_(alg), nu_(std::move(nu)) {}

void PartitionLabels::add(const std::vector<std::uint8_t>& labels, const Rational& c) {
  if ((int)labels.size() != nu_.length())
    throw ShapeError("PartitionLabels: one label per part required");
  if (c.is_zero()) return;
  std::vector<std::uint8_t> key = labels;
  int sign = 1;
  const auto& parts = nu_.parts();
  size_t run = 0;
  while (run < parts.size()) {
    size_t end = run;
    while (end < parts.size() && parts[end] == parts[run]) ++end;
    // stable sort of labels[run..end); the Koszul sign is the product over
    // strict inversion pairs of the original sequence
    for (size_t i = run; i < end; ++i)
      for (size_t j = i + 1; j < end; ++j) {
        if (key[i] == key[j] && alg_->basis(key[i]).parity)
          return;  // odd label squared along equal parts
        if (key[i] > key[j] && alg_->basis(key[i]).parity && alg_->basis(key[j]).parity)
          sign = -sign;
      }
    std::sort(key.begin() + run, key.begin() + end);
    run = end;
  }
  auto it = terms_.find(key);
  Rational v = c * Rational(sign);
  if (it == terms_.end()) {
    terms_.emplace(std::move(key), v);
  } else {
    it->second += v;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

int PartitionLabels::degree() const {
  int d = 0;
  for (const auto& [k, c] : terms_) {
    int s = 0;
    for (auto l : k) s += alg_->basis(l).degree;
    d = std::max(d, s);
  }
  return d;
}

int PartitionLabels::perversity() const {
  int p = 0;
  for (const auto& [k, c] : terms_) {
    int s = 0;
    for (auto l : k) s += alg_->basis(l).perversity;
    p = std::max(p, s);
  }
  return p;
}

std::string PartitionLabels::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [k, c] : terms_) {
    if (!s.empty()) s += " + ";
    if (!(c == Rational(1))) s += c.str() + "*";
    for (size_t i = 0; i < k.size(); ++i) {
      if (i) s += "|";
      s += alg_->basis(k[i]).name;
    }
  }
  return s;
}

namespace {

Perm canonical_perm_of(const Partition& nu, int n) {
  std::vector<std::vector<int>> cycles;
  int next = 1;
  for (int part : nu.parts()) {
    std::vector<int> c(part);
    std::iota(c.begin(), c.end(), next);
    next += part;
    cycles.push_back(std::move(c));
  }
  return Perm::from_cycles(n, cycles);
}

}  // namespace

OrbifoldRing::OrbifoldRing(const FrobeniusAlgebra& alg, int n) : alg_(&alg), n_(n) {
  if (n < 1 || n > 6) throw std::invalid_argument("OrbifoldRing: n must be in 1..6");
  if (alg.dim() > 256) throw std::invalid_argument("OrbifoldRing: algebra too large for term keys");
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  do {
    rank_.emplace(img, (std::uint16_t)perms_.size());
    perms_.emplace_back(img);
  } while (std::next_permutation(img.begin(), img.end()));

  partitions_ = enumerate_partitions(n);
  canonical_rank_by_type_.resize(partitions_.size());
  for (size_t t = 0; t < partitions_.size(); ++t)
    canonical_rank_by_type_[t] = rank_of(canonical_perm_of(partitions_[t], n));

  orbits_.reserve(perms_.size());
  orbit_of_.reserve(perms_.size());
  type_of_.resize(perms_.size());
  for (size_t r = 0; r < perms_.size(); ++r) {
    orbits_.push_back(perms_[r].orbits());
    std::vector<int> of(n);
    for (size_t b = 0; b < orbits_.back().size(); ++b)
      for (int x : orbits_.back()[b]) of[x] = (int)b;
    orbit_of_.push_back(std::move(of));
    Partition ct = perms_[r].cycle_type();
    type_of_[r] = (int)(std::find(partitions_.begin(), partitions_.end(), ct) - partitions_.begin());
  }
}

std::uint16_t OrbifoldRing::rank_of(const Perm& p) const {
  std::vector<int> img(p.n());
  for (int i = 0; i < p.n(); ++i) img[i] = p(i);
  return rank_.at(img);
}

std::uint64_t OrbifoldRing::key(std::uint16_t perm, const std::vector<std::uint8_t>& labels) const {
  std::uint64_t k = perm;
  for (size_t i = 0; i < labels.size(); ++i) k |= (std::uint64_t)labels[i] << (16 + 8 * i);
  return k;
}

LabeledTerm OrbifoldRing::decode(std::uint64_t k, const Rational& c) const {
  LabeledTerm t;
  t.perm = (std::uint16_t)(k & 0xffff);
  size_t cnt = orbits_[t.perm].size();
  t.labels.resize(cnt);
  for (size_t i = 0; i < cnt; ++i) t.labels[i] = (std::uint8_t)((k >> (16 + 8 * i)) & 0xff);
  t.coeff = c;
  return t;
}

void OrbifoldRing::add_term(Element& e, std::uint64_t k, const Rational& c) {
  if (c.is_zero()) return;
  auto it = e.find(k);
  if (it == e.end()) {
    e.emplace(k, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) e.erase(it);
  }
}

int OrbifoldRing::term_degree(const LabeledTerm& t) const {
  int d = 2 * (n_ - (int)t.labels.size());
  for (auto l : t.labels) d += alg_->basis(l).degree;
  return d;
}

int OrbifoldRing::term_perversity(const LabeledTerm& t) const {
  int p = n_ - (int)t.labels.size();
  for (auto l : t.labels) p += alg_->basis(l).perversity;
  return p;
}

OrbifoldRing::Element OrbifoldRing::multiply_labeled(const LabeledTerm& x,
                                                     const LabeledTerm& y) const {
  Element out;
  if (x.coeff.is_zero() || y.coeff.is_zero()) return out;
  const Perm& pi = perms_[x.perm];
  const Perm& rho = perms_[y.perm];
  if ((int)x.labels.size() != (int)orbits_[x.perm].size() ||
      (int)y.labels.size() != (int)orbits_[y.perm].size())
    throw ShapeError("multiply_labeled: one label per orbit required");

  std::uint16_t prod_rank = rank_of(pi.compose(rho));
  const auto& xorb = orbits_[x.perm];
  const auto& yorb = orbits_[y.perm];
  const auto& zorb = orbits_[prod_rank];
  int r = (int)xorb.size(), s = (int)yorb.size(), z = (int)zorb.size();

  auto blocks = joint_orbits(pi, rho);
  int nb = (int)blocks.size();
  std::vector<int> block_of(n_);
  for (int b = 0; b < nb; ++b)
    for (int pt : blocks[b]) block_of[pt] = b;

  // orbit indices per block (ascending since orbit lists are min-ordered)
  std::vector<std::vector<int>> bx(nb), by(nb), bz(nb);
  for (int o = 0; o < r; ++o) bx[block_of[xorb[o][0]]].push_back(o);
  for (int o = 0; o < s; ++o) by[block_of[yorb[o][0]]].push_back(o);
  for (int o = 0; o < z; ++o) bz[block_of[zorb[o][0]]].push_back(o);

  // Koszul sign of regrouping (x labels, y labels) into per-block order
  std::vector<int> source_parity(r + s);
  for (int o = 0; o < r; ++o) source_parity[o] = alg_->basis(x.labels[o]).parity;
  for (int o = 0; o < s; ++o) source_parity[r + o] = alg_->basis(y.labels[o]).parity;
  std::vector<int> gather;
  gather.reserve(r + s);
  for (int b = 0; b < nb; ++b) {
    for (int o : bx[b]) gather.push_back(o);
    for (int o : by[b]) gather.push_back(r + o);
  }
  Rational coeff = x.coeff * y.coeff * Rational(koszul_reorder_sign(source_parity, gather));

  // per-block: multiply labels, apply euler defect power, comultiply
  std::vector<TensorClass> block_out;
  block_out.reserve(nb);
  for (int b = 0; b < nb; ++b) {
    int numer = (int)blocks[b].size() + 2 - (int)bx[b].size() - (int)by[b].size() - (int)bz[b].size();
    if (numer < 0 || numer % 2)
      throw std::logic_error("multiply_labeled: graph defect must be a nonnegative integer");
    int defect = numer / 2;
    AlgebraClass acc = AlgebraClass::basis(alg_->unit_index());
    for (int o : bx[b]) acc = alg_->multiply(acc, AlgebraClass::basis(x.labels[o]));
    for (int o : by[b]) acc = alg_->multiply(acc, AlgebraClass::basis(y.labels[o]));
    for (int i = 0; i < defect && !acc.is_zero(); ++i) acc = alg_->multiply(acc, alg_->euler());
    if (acc.is_zero()) return out;
    block_out.push_back(comultiply(*alg_, acc, (int)bz[b].size()));
    if (block_out.back().is_zero()) return out;
  }

  // assemble the cartesian product across blocks
  std::vector<int> concat_orbit;  // concat position -> global z-orbit index
  for (int b = 0; b < nb; ++b)
    for (int o : bz[b]) concat_orbit.push_back(o);
  std::vector<int> srcpos(z);  // global orbit -> concat position
  for (int pos = 0; pos < z; ++pos) srcpos[concat_orbit[pos]] = pos;

  std::vector<std::pair<std::vector<std::uint8_t>, Rational>> partial{{{}, coeff}};
  for (int b = 0; b < nb; ++b) {
    std::vector<std::pair<std::vector<std::uint8_t>, Rational>> next;
    for (const auto& [labels, c] : partial)
      for (const auto& [bk, bc] : block_out[b].terms()) {
        auto nl = labels;
        nl.insert(nl.end(), bk.begin(), bk.end());
        next.emplace_back(std::move(nl), c * bc);
      }
    partial = std::move(next);
  }
  for (const auto& [concat_labels, c] : partial) {
    std::vector<int> par(z);
    for (int pos = 0; pos < z; ++pos) par[pos] = alg_->basis(concat_labels[pos]).parity;
    int sign = koszul_reorder_sign(par, srcpos);
    std::vector<std::uint8_t> labels(z);
    for (int o = 0; o < z; ++o) labels[o] = concat_labels[srcpos[o]];
    add_term(out, key(prod_rank, labels), c * Rational(sign));
  }
  return out;
}

OrbifoldRing::Element OrbifoldRing::multiply(const Element& a, const Element& b) const {
  Element out;
  for (const auto& [ka, ca] : a) {
    LabeledTerm ta = decode(ka, ca);
    for (const auto& [kb, cb] : b) {
      LabeledTerm tb = decode(kb, cb);
      for (const auto& [k, c] : multiply_labeled(ta, tb)) add_term(out, k, c);
    }
  }
  return out;
}

OrbifoldRing::Element OrbifoldRing::symmetrize(const Element& a) const {
  Element acc;
  int order = group_order();
  for (int sr = 0; sr < order; ++sr) {
    const Perm& sigma = perms_[sr];
    Perm sigma_inv = sigma.inverse();
    for (const auto& [k, c] : a) {
      LabeledTerm t = decode(k, c);
      Perm conj = sigma.compose(perms_[t.perm]).compose(sigma_inv);
      std::uint16_t cr = rank_of(conj);
      const auto& corb = orbits_[cr];
      int m = (int)corb.size();
      std::vector<int> srcpos(m);
      for (int j = 0; j < m; ++j) srcpos[j] = orbit_of_[t.perm][sigma_inv(corb[j][0])];
      std::vector<int> par(m);
      for (int i = 0; i < m; ++i) par[i] = alg_->basis(t.labels[i]).parity;
      int sign = koszul_reorder_sign(par, srcpos);
      std::vector<std::uint8_t> labels(m);
      for (int j = 0; j < m; ++j) labels[j] = t.labels[srcpos[j]];
      add_term(acc, key(cr, labels), c * Rational(sign));
    }
  }
  Element out;
  for (const auto& [k, c] : acc) add_term(out, k, c / Rational(order));
  return out;
}

bool OrbifoldRing::is_invariant(const Element& a) const {
  return symmetrize(a) == a;
}

OrbifoldRing::Element OrbifoldRing::nu_class(const PartitionLabels& payload) const {
  int type = (int)(std::find(partitions_.begin(), partitions_.end(), payload.nu()) -
                   partitions_.begin());
  if (type == (int)partitions_.size()) throw ShapeError("nu_class: partition size mismatch");
  int rank = canonical_rank_by_type_[type];
  Element raw;
  for (const auto& [labels, c] : payload.terms()) add_term(raw, key(rank, labels), c);
  return symmetrize(raw);
}

PartitionLabels OrbifoldRing::project_to_nu(const Element& x, const Partition& lambda) const {
  auto it = std::find(partitions_.begin(), partitions_.end(), lambda);
  if (it == partitions_.end()) throw ShapeError("project_to_nu: partition size mismatch");
  int rank = canonical_rank_by_type_[it - partitions_.begin()];
  Rational cs((long long)conjugacy_class_size(lambda));
  PartitionLabels out(alg_, lambda);
  for (const auto& [k, c] : x) {
    if ((int)(k & 0xffff) != rank) continue;
    LabeledTerm t = decode(k, c);
    out.add(t.labels, c * cs);
  }
  return out;
}

std::map<Partition, PartitionLabels> OrbifoldRing::hilbert_product(const Element& a,
                                                                   const Element& b) const {
  Element prod = multiply(a, b);
  std::map<Partition, PartitionLabels> out;
  for (const auto& lambda : partitions_) {
    PartitionLabels comp = project_to_nu(prod, lambda);
    if (!comp.is_zero()) out.emplace(lambda, std::move(comp));
  }
  return out;
}

std::vector<OrbifoldRing::BasisClass> OrbifoldRing::invariant_basis() const {
  std::vector<BasisClass> out;
  int dim = alg_->dim();
  for (const auto& nu : partitions_) {
    const auto& parts = nu.parts();
    std::vector<std::vector<std::uint8_t>> tuples{{}};
    size_t run = 0;
    while (run < parts.size()) {
      size_t end = run;
      while (end < parts.size() && parts[end] == parts[run]) ++end;
      size_t count = end - run;
      // nondecreasing label sequences of the run length; odd labels never repeat
      std::vector<std::vector<std::uint8_t>> runs;
      std::vector<std::uint8_t> cur;
      auto rec = [&](auto&& self, int min_label) -> void {
        if (cur.size() == count) {
          runs.push_back(cur);
          return;
        }
        for (int l = min_label; l < dim; ++l) {
          if (!cur.empty() && cur.back() == l && alg_->basis(l).parity) continue;
          cur.push_back((std::uint8_t)l);
          self(self, l);
          cur.pop_back();
        }
      };
      rec(rec, 0);
      std::vector<std::vector<std::uint8_t>> next;
      next.reserve(tuples.size() * runs.size());
      for (const auto& t : tuples)
        for (const auto& rlabels : runs) {
          auto nt = t;
          nt.insert(nt.end(), rlabels.begin(), rlabels.end());
          next.push_back(std::move(nt));
        }
      tuples = std::move(next);
      run = end;
    }
    for (auto& t : tuples) {
      BasisClass b{nu, std::move(t), 0, 0};
      b.degree = 2 * (n_ - nu.length());
      b.perversity = n_ - nu.length();
      for (auto l : b.labels) {
        b.degree += alg_->basis(l).degree;
        b.perversity += alg_->basis(l).perversity;
      }
      out.push_back(std::move(b));
    }
  }
  return out;
}

OrbifoldRing::Element OrbifoldRing::materialize(const BasisClass& b) const {
  PartitionLabels payload(alg_, b.nu);
  payload.add(b.labels, Rational(1));
  return nu_class(payload);
}

std::string OrbifoldRing::basis_str(const BasisClass& b) const {
  std::string s = "nu=" + b.nu.str() + " label=";
  for (size_t i = 0; i < b.labels.size(); ++i) {
    if (i) s += "|";
    s += alg_->basis(b.labels[i]).name;
  }
  return s;
}

OrbifoldRing::Element OrbifoldRing::unit() const {
  std::vector<std::uint8_t> labels(n_, (std::uint8_t)alg_->unit_index());
  Element e;
  add_term(e, key(rank_of(Perm::identity(n_)), labels), Rational(1));
  return e;
}

std::string OrbifoldRing::element_str(const Element& e) const {
  if (e.empty()) return "0";
  std::string s;
  for (const auto& [k, c] : e) {
    LabeledTerm t = decode(k, c);
    if (!s.empty()) s += " + ";
    s += c.str() + "*(" + perms_[t.perm].str() + "; ";
    for (size_t i = 0; i < t.labels.size(); ++i) {
      if (i) s += "|";
      s += alg_->basis(t.labels[i]).name;
    }
    s += ")";
  }
  return s;
}

}  // namespace kummer
