#include "kummer/bigraded.hpp"

#include <algorithm>
#include <sstream>

namespace kummer {

PerversePolynomial PerversePolynomial::monomial(int d, int p, BigInt c) {
  PerversePolynomial out;
  out.add(d, p, c);
  return out;
}

void PerversePolynomial::add(int d, int p, const BigInt& c) {
  if (d < 0 || p < 0) throw std::invalid_argument("PerversePolynomial: negative grading");
  if (c == 0) return;
  auto it = terms_.find({d, p});
  if (it == terms_.end()) {
    terms_.emplace(Key{d, p}, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BigInt PerversePolynomial::at(int d, int p) const {
  auto it = terms_.find({d, p});
  return it == terms_.end() ? BigInt(0) : it->second;
}

int PerversePolynomial::max_degree() const {
  int m = 0;
  for (const auto& [k, c] : terms_) m = std::max(m, k.first);
  return m;
}

int PerversePolynomial::max_perversity() const {
  int m = 0;
  for (const auto& [k, c] : terms_) m = std::max(m, k.second);
  return m;
}

PerversePolynomial PerversePolynomial::shifted(int dd, int dp) const {
  if (dd < 0 || dp < 0) throw std::invalid_argument("shift: offsets must be nonnegative");
  if (dd % 2 != 0) throw std::invalid_argument("shift: degree offset must be even");
  PerversePolynomial out;
  for (const auto& [k, c] : terms_) out.add(k.first + dd, k.second + dp, c);
  return out;
}

std::vector<BigInt> PerversePolynomial::betti() const {
  std::vector<BigInt> b(terms_.empty() ? 0 : max_degree() + 1, BigInt(0));
  for (const auto& [k, c] : terms_) b[k.first] += c;
  return b;
}

BigInt PerversePolynomial::total() const {
  BigInt t = 0;
  for (const auto& [k, c] : terms_) t += c;
  return t;
}

PerversePolynomial operator+(const PerversePolynomial& a, const PerversePolynomial& b) {
  PerversePolynomial out = a;
  for (const auto& [k, c] : b.terms_) out.add(k.first, k.second, c);
  return out;
}

PerversePolynomial operator*(const PerversePolynomial& a, const PerversePolynomial& b) {
  PerversePolynomial out;
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_)
      out.add(ka.first + kb.first, ka.second + kb.second, ca * cb);
  return out;
}

PerversePolynomial PerversePolynomial::scaled(const BigInt& c) const {
  PerversePolynomial out;
  if (c == 0) return out;
  for (const auto& [k, v] : terms_) out.add(k.first, k.second, v * c);
  return out;
}

std::string PerversePolynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) os << " + ";
    os << c << "*q^" << k.first << "*t^" << k.second;
    first = false;
  }
  return os.str();
}

std::string PerversePolynomial::json() const {
  std::ostringstream os;
  os << "{\"terms\":[";
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) os << ",";
    os << "{\"d\":" << k.first << ",\"p\":" << k.second << ",\"c\":" << c << "}";
    first = false;
  }
  os << "]}";
  return os.str();
}

namespace {

// x-truncated series with PerversePolynomial coefficients.
using XSeries = std::vector<PerversePolynomial>;

XSeries xmul(const XSeries& a, const XSeries& b, int n) {
  XSeries out(n + 1);
  for (int i = 0; i <= n; ++i)
    for (int j = 0; i + j <= n; ++j)
      if (!a[i].is_zero() && !b[j].is_zero()) out[i + j] += a[i] * b[j];
  return out;
}

}  // namespace

PerversePolynomial super_symmetric_power(const PerversePolynomial& a, int n) {
  if (n < 0) throw std::invalid_argument("super_symmetric_power: n must be >= 0");
  XSeries acc(n + 1);
  acc[0] = PerversePolynomial::unit();
  for (const auto& [k, c] : a.terms()) {
    auto [d, p] = k;
    XSeries factor(n + 1);
    factor[0] = PerversePolynomial::unit();
    PerversePolynomial mono = PerversePolynomial::monomial(d, p, 1);
    PerversePolynomial mpow = PerversePolynomial::unit();
    BigInt binom = 1;
    for (int j = 1; j <= n; ++j) {
      if (d % 2 == 0) {
        binom = binom * (c + j - 1) / j;  // C(c+j-1, j), exact at each step
      } else {
        if (j > c) break;
        binom = binom * (c - j + 1) / j;  // C(c, j)
      }
      mpow = mpow * mono;
      factor[j] = mpow.scaled(binom);
    }
    acc = xmul(acc, factor, n);
  }
  return acc[n];
}

PerversePolynomial sym_partition(const PerversePolynomial& a, const Partition& nu) {
  PerversePolynomial out = PerversePolynomial::unit();
  for (int m : nu.multiplicities())
    if (m > 0) out = out * super_symmetric_power(a, m);
  return out;
}

PerversePolynomial exact_divide(const PerversePolynomial& a, const PerversePolynomial& b) {
  if (b.at(0, 0) == 0)
    throw DivisibilityError("exact_divide: divisor has no constant term");
  BigInt b0 = b.at(0, 0);
  PerversePolynomial rem = a;
  PerversePolynomial quot;
  while (!rem.is_zero()) {
    auto [key, c] = *rem.terms().begin();  // (d,p)-lex least term
    if (c % b0 != 0)
      throw DivisibilityError("exact_divide: nonintegral quotient coefficient at q^" +
                              std::to_string(key.first) + " t^" + std::to_string(key.second));
    BigInt q = c / b0;
    if (q < 0)
      throw DivisibilityError("exact_divide: negative quotient coefficient at q^" +
                              std::to_string(key.first) + " t^" + std::to_string(key.second));
    quot.add(key.first, key.second, q);
    for (const auto& [kb, cb] : b.terms())
      rem.add(key.first + kb.first, key.second + kb.second, -q * cb);
  }
  return quot;
}

bool hard_lefschetz_symmetric(const PerversePolynomial& a, int r) {
  for (const auto& [k, c] : a.terms()) {
    auto [d, p] = k;
    int dd = d + 2 * (r - p);
    int pp = 2 * r - p;
    if (dd < 0 || pp < 0 || a.at(dd, pp) != c) return false;
  }
  return true;
}

}  // namespace kummer
