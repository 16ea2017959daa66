#include "kummer/surfaces.hpp"

#include <algorithm>
#include <numeric>

namespace kummer {

TorsionElement TorsionElement::zero(int rank) {
  TorsionElement t;
  t.res_.assign(rank, {0, 1});
  return t;
}

TorsionElement::TorsionElement(std::vector<std::pair<long long, long long>> residues)
    : res_(std::move(residues)) {
  for (auto& [num, den] : res_) {
    if (den <= 0) throw std::invalid_argument("TorsionElement: denominator must be positive");
    num %= den;
    if (num < 0) num += den;
    long long g = std::gcd(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    if (num == 0) den = 1;
  }
}

bool TorsionElement::is_zero() const {
  for (const auto& [num, den] : res_)
    if (num != 0) return false;
  return true;
}

bool TorsionElement::is_m_torsion(long long m) const {
  if (m < 1) throw std::domain_error("is_m_torsion: m must be >= 1");
  // reduced j/d is killed by m iff d divides m
  for (const auto& [num, den] : res_)
    if (m % den != 0) return false;
  return true;
}

TorsionElement TorsionElement::operator+(const TorsionElement& o) const {
  if (o.rank() != rank()) throw std::invalid_argument("TorsionElement: rank mismatch");
  std::vector<std::pair<long long, long long>> sum(res_.size());
  for (size_t i = 0; i < res_.size(); ++i) {
    long long den = std::lcm(res_[i].second, o.res_[i].second);
    long long num = res_[i].first * (den / res_[i].second) +
                    o.res_[i].first * (den / o.res_[i].second);
    sum[i] = {num, den};
  }
  return TorsionElement(std::move(sum));
}

TorsionElement TorsionElement::operator-() const {
  std::vector<std::pair<long long, long long>> neg(res_.size());
  for (size_t i = 0; i < res_.size(); ++i) neg[i] = {-res_[i].first, res_[i].second};
  return TorsionElement(std::move(neg));
}

std::string TorsionElement::str() const {
  std::string s = "(";
  for (size_t i = 0; i < res_.size(); ++i) {
    if (i) s += ",";
    if (res_[i].first == 0)
      s += "0";
    else
      s += std::to_string(res_[i].first) + "/" + std::to_string(res_[i].second);
  }
  return s + ")";
}

SurfaceModel SurfaceModel::make(SurfaceCase c) {
  SurfaceConfig cfg;
  cfg.surface_case = c;
  return make(cfg);
}

SurfaceModel SurfaceModel::make(const SurfaceConfig& cfg) {
  SurfaceModel m;
  m.case_ = cfg.surface_case;
  int default_rank = 0;
  switch (cfg.surface_case) {
    case SurfaceCase::AbelianOverElliptic:
      m.generator_perversity_ = {0, 0, 1, 1};
      m.compact_ = true;
      default_rank = 4;
      break;
    case SurfaceCase::EllipticTimesLine:
      m.generator_perversity_ = {1, 1};
      m.compact_ = false;
      default_rank = 2;
      break;
    case SurfaceCase::EllipticTimesTorusQuotient:
      m.generator_perversity_ = {0, 1, 1};
      m.compact_ = false;
      default_rank = 3;
      break;
  }
  int rank = cfg.torsion_rank.value_or(default_rank);
  if (rank < 0) throw std::invalid_argument("SurfaceModel: torsion rank must be >= 0");
  if (cfg.torsion_factors.empty()) {
    m.torsion_factors_.assign(rank, 0);
  } else {
    if (cfg.torsion_rank && (int)cfg.torsion_factors.size() != rank)
      throw std::invalid_argument("SurfaceModel: torsion_factors size contradicts torsion_rank");
    m.torsion_factors_ = cfg.torsion_factors;
    for (long long f : m.torsion_factors_)
      if (f < 0) throw std::invalid_argument("SurfaceModel: torsion factor must be >= 0");
  }
  m.algebra_ = FrobeniusAlgebra::exterior(m.generator_perversity_);
  return m;
}

std::optional<SurfaceCase> SurfaceModel::parse_case(const std::string& name) {
  if (name == "abelian") return SurfaceCase::AbelianOverElliptic;
  if (name == "e-times-line") return SurfaceCase::EllipticTimesLine;
  if (name == "e-times-torus-quotient") return SurfaceCase::EllipticTimesTorusQuotient;
  return std::nullopt;
}

std::string SurfaceModel::case_name(SurfaceCase c) {
  switch (c) {
    case SurfaceCase::AbelianOverElliptic: return "abelian";
    case SurfaceCase::EllipticTimesLine: return "e-times-line";
    case SurfaceCase::EllipticTimesTorusQuotient: return "e-times-torus-quotient";
  }
  return "?";
}

PerversePolynomial SurfaceModel::cohomology_pp() const {
  PerversePolynomial pp;
  for (int i = 0; i < algebra_.dim(); ++i)
    pp.add(algebra_.basis(i).degree, algebra_.basis(i).perversity, 1);
  return pp;
}

long long SurfaceModel::torsion_count(long long m) const {
  if (m < 1) throw std::domain_error("torsion_count: m must be >= 1");
  long long count = 1;
  for (long long f : torsion_factors_) {
    long long order = (f == 0) ? m : std::gcd(m, f);
    if (count > (1LL << 56) / std::max(order, 1LL))
      throw std::overflow_error("torsion_count: overflow");
    count *= order;
  }
  return count;
}

std::vector<TorsionElement> SurfaceModel::torsion_group(long long m) const {
  if (m < 1) throw std::domain_error("torsion_group: m must be >= 1");
  std::vector<long long> orders;
  for (long long f : torsion_factors_) orders.push_back(f == 0 ? m : std::gcd(m, f));
  std::vector<TorsionElement> group;
  std::vector<long long> idx(orders.size(), 0);
  while (true) {
    std::vector<std::pair<long long, long long>> res(orders.size());
    for (size_t i = 0; i < orders.size(); ++i) res[i] = {idx[i], orders[i]};
    group.push_back(TorsionElement(std::move(res)));
    size_t pos = 0;
    while (pos < orders.size() && ++idx[pos] == orders[pos]) idx[pos++] = 0;
    if (pos == orders.size()) break;
  }
  return group;
}

TensorClass SurfaceModel::poincare_dual(const TensorClass& x) const {
  if (!compact_)
    throw UnsupportedModelError("poincare_dual: model is non-compact, no Poincare pairing");
  int top = algebra_.dim() - 1;  // full generator set
  TensorClass out(x.factors());
  for (const auto& [key, c] : x.terms()) {
    TensorClass::Key comp(key.size());
    for (size_t i = 0; i < key.size(); ++i) comp[i] = (std::uint8_t)(top ^ key[i]);
    // <key, comp> is +-1; the dual carries that sign so the pairing is 1
    Rational s = tensor_pairing(algebra_, TensorClass::monomial(key),
                                TensorClass::monomial(comp));
    out.add(comp, c * s);
  }
  return out;
}

TensorClass SurfaceModel::summation_pullback(const AlgebraClass& x, int n) const {
  if (n < 1) throw std::invalid_argument("summation_pullback: n must be >= 1");
  TensorClass out(n);
  TensorClass::Key unit_key(n, (std::uint8_t)algebra_.unit_index());
  for (const auto& [mono, c] : x.terms()) {
    TensorClass acc = TensorClass::monomial(unit_key, c);
    for (int g = 0; g < generator_count(); ++g) {
      if (!((mono >> g) & 1)) continue;
      TensorClass factor(n);
      for (int slot = 0; slot < n; ++slot) {
        TensorClass::Key k = unit_key;
        k[slot] = (std::uint8_t)(1u << g);
        factor.add(k, Rational(1));
      }
      acc = tensor_multiply(algebra_, acc, factor);
    }
    out += acc;
  }
  return out;
}

}  // namespace kummer
