#include "kummer/frobenius.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "kummer/tensor.hpp"

namespace kummer {

namespace {

// Sign of merging two disjoint generator sets: (-1)^{#{(s,t) in S x T : s > t}}.
int ext_merge_sign(unsigned s, unsigned t) {
  int crossings = 0;
  for (unsigned bit = 0; s >> bit; ++bit)
    if ((s >> bit) & 1u) crossings += std::popcount(t & ((1u << bit) - 1u));
  return crossings % 2 ? -1 : 1;
}

using Matrix = std::vector<std::vector<Rational>>;

// Inverse by Gauss-Jordan; returns false when singular.
bool invert(Matrix m, Matrix& inv) {
  int d = (int)m.size();
  inv.assign(d, std::vector<Rational>(d, Rational(0)));
  for (int i = 0; i < d; ++i) inv[i][i] = Rational(1);
  for (int col = 0; col < d; ++col) {
    int pivot = -1;
    for (int r = col; r < d; ++r)
      if (!m[r][col].is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) return false;
    std::swap(m[pivot], m[col]);
    std::swap(inv[pivot], inv[col]);
    Rational inv_p = Rational(1) / m[col][col];
    for (int c = 0; c < d; ++c) {
      m[col][c] *= inv_p;
      inv[col][c] *= inv_p;
    }
    for (int r = 0; r < d; ++r) {
      if (r == col || m[r][col].is_zero()) continue;
      Rational f = m[r][col];
      for (int c = 0; c < d; ++c) {
        m[r][c] -= f * m[col][c];
        inv[r][c] -= f * inv[col][c];
      }
    }
  }
  return true;
}

}  // namespace

FrobeniusAlgebra FrobeniusAlgebra::from_data(AlgebraData d) {
  size_t dim = d.basis.size();
  if (dim == 0 || d.mult.size() != dim || d.counit.size() != dim)
    throw std::invalid_argument("from_data: inconsistent table sizes");
  for (const auto& row : d.mult)
    if (row.size() != dim) throw std::invalid_argument("from_data: inconsistent table sizes");
  if (d.unit < 0 || (size_t)d.unit >= dim) throw std::invalid_argument("from_data: bad unit index");
  FrobeniusAlgebra a;
  a.basis_ = std::move(d.basis);
  a.mult_ = std::move(d.mult);
  a.counit_ = std::move(d.counit);
  a.unit_ = d.unit;
  a.solve_comultiplication();
  AlgebraClass e;
  for (const auto& ct : a.comult_[a.unit_]) e += a.mult_[ct.left][ct.right].scaled(ct.coeff);
  a.euler_ = e;
  return a;
}

FrobeniusAlgebra FrobeniusAlgebra::exterior(const std::vector<int>& generator_perversities) {
  int g = (int)generator_perversities.size();
  if (g < 1 || g > 8) throw std::invalid_argument("exterior: 1..8 generators");
  FrobeniusAlgebra a;
  int d = 1 << g;
  a.basis_.resize(d);
  for (int s = 0; s < d; ++s) {
    auto& b = a.basis_[s];
    b.degree = std::popcount((unsigned)s);
    b.parity = b.degree % 2;
    b.perversity = 0;
    if (s == 0) {
      b.name = "1";
    } else {
      for (int i = 0; i < g; ++i)
        if ((s >> i) & 1) {
          b.name += "x" + std::to_string(i + 1);
          b.perversity += generator_perversities[i];
        }
    }
  }
  a.unit_ = 0;
  a.mult_.assign(d, std::vector<AlgebraClass>(d));
  for (int s = 0; s < d; ++s)
    for (int t = 0; t < d; ++t)
      if (!(s & t)) a.mult_[s][t] = AlgebraClass(s | t, Rational(ext_merge_sign(s, t)));
  a.counit_.assign(d, Rational(0));
  a.counit_[d - 1] = Rational(1);
  a.solve_comultiplication();
  AlgebraClass e;  // multiply(Delta(1))
  for (const auto& ct : a.comult_[a.unit_]) e += a.mult_[ct.left][ct.right].scaled(ct.coeff);
  a.euler_ = e;
  return a;
}

FrobeniusAlgebra FrobeniusAlgebra::abelian_surface() {
  return exterior({0, 0, 1, 1});
}

FrobeniusAlgebra FrobeniusAlgebra::ground_field() {
  FrobeniusAlgebra a;
  a.basis_ = {{"1", 0, 0, 0}};
  a.unit_ = 0;
  a.mult_ = {{AlgebraClass::basis(0)}};
  a.counit_ = {Rational(1)};
  a.solve_comultiplication();
  a.euler_ = AlgebraClass::basis(0);
  return a;
}

// Solve <Delta(b_m), b_k (x) b_l> = <b_m, b_k b_l> for all (k,l). Writing
// Delta(b_m) = sum D^{ij} b_i (x) b_j, the left side is
// sum_{ij} D^{ij} (-1)^{|b_j||b_k|} g_{ik} g_{jl} with g the pairing matrix,
// which two applications of g^{-1} unwind.
void FrobeniusAlgebra::solve_comultiplication() {
  int d = dim();
  Matrix g(d, std::vector<Rational>(d));
  for (int i = 0; i < d; ++i)
    for (int k = 0; k < d; ++k) g[i][k] = counit(mult_[i][k]);
  Matrix ginv;
  if (!invert(g, ginv))
    throw std::domain_error("FrobeniusAlgebra: degenerate pairing, comultiplication undefined");

  comult_.assign(d, {});
  for (int m = 0; m < d; ++m) {
    Matrix M(d, std::vector<Rational>(d));
    for (int k = 0; k < d; ++k)
      for (int l = 0; l < d; ++l) M[k][l] = counit(multiply(AlgebraClass::basis(m), mult_[k][l]));
    // N = M ginv ; P_{kj} = (-1)^{|b_j||b_k|} N_{kj} ; D = ginv^T P
    Matrix P(d, std::vector<Rational>(d, Rational(0)));
    for (int k = 0; k < d; ++k)
      for (int j = 0; j < d; ++j) {
        Rational n(0);
        for (int l = 0; l < d; ++l)
          if (!M[k][l].is_zero()) n += M[k][l] * ginv[l][j];
        if (basis_[j].parity && basis_[k].parity) n = -n;
        P[k][j] = n;
      }
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        Rational v(0);
        for (int k = 0; k < d; ++k)
          if (!P[k][j].is_zero()) v += ginv[k][i] * P[k][j];
        if (!v.is_zero()) comult_[m].push_back({i, j, v});
      }
  }
}

AlgebraClass FrobeniusAlgebra::multiply(const AlgebraClass& a, const AlgebraClass& b) const {
  AlgebraClass out;
  for (const auto& [i, ci] : a.terms())
    for (const auto& [j, cj] : b.terms()) out += mult_[i][j].scaled(ci * cj);
  return out;
}

Rational FrobeniusAlgebra::counit(const AlgebraClass& a) const {
  Rational r(0);
  for (const auto& [i, c] : a.terms()) r += counit_[i] * c;
  return r;
}

int FrobeniusAlgebra::degree_of(const AlgebraClass& a) const {
  int d = 0;
  for (const auto& [i, c] : a.terms()) d = std::max(d, basis_[i].degree);
  return d;
}

int FrobeniusAlgebra::perversity_of(const AlgebraClass& a) const {
  int p = 0;
  for (const auto& [i, c] : a.terms()) p = std::max(p, basis_[i].perversity);
  return p;
}

std::string FrobeniusAlgebra::class_str(const AlgebraClass& a) const {
  if (a.is_zero()) return "0";
  std::string s;
  for (const auto& [i, c] : a.terms()) {
    if (!s.empty()) s += " + ";
    if (!(c == Rational(1))) s += c.str() + "*";
    s += basis_[i].name;
  }
  return s;
}

FrobeniusAlgebra FrobeniusAlgebra::with_counit(const std::vector<Rational>& counit) const {
  if ((int)counit.size() != dim()) throw std::invalid_argument("with_counit: size mismatch");
  FrobeniusAlgebra a = *this;
  a.counit_ = counit;
  return a;
}

FrobeniusAlgebra FrobeniusAlgebra::with_euler(const AlgebraClass& e) const {
  FrobeniusAlgebra a = *this;
  a.euler_ = e;
  return a;
}

FrobeniusAlgebra FrobeniusAlgebra::with_perversities(const std::vector<int>& basis_perversity) const {
  if ((int)basis_perversity.size() != dim())
    throw std::invalid_argument("with_perversities: size mismatch");
  FrobeniusAlgebra a = *this;
  for (int i = 0; i < dim(); ++i) a.basis_[i].perversity = basis_perversity[i];
  return a;
}

ValidationReport FrobeniusAlgebra::validate() const {
  ValidationReport rep;
  int d = dim();
  auto record = [&](const std::string& axiom, bool pass, const std::string& witness) {
    rep.checks.push_back({axiom, pass, pass ? "" : witness});
  };

  {
    bool ok = true;
    std::string w;
    for (int i = 0; i < d && ok; ++i)
      if (!(mult_[unit_][i] == AlgebraClass::basis(i)) ||
          !(mult_[i][unit_] == AlgebraClass::basis(i))) {
        ok = false;
        w = "unit fails on " + basis_[i].name;
      }
    record("unit", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (int i = 0; i < d && ok; ++i)
      for (int j = 0; j < d && ok; ++j)
        for (const auto& [k, c] : mult_[i][j].terms())
          if (basis_[k].degree != basis_[i].degree + basis_[j].degree) {
            ok = false;
            w = basis_[i].name + "*" + basis_[j].name + " not degree-homogeneous";
            break;
          }
    record("grading", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (int i = 0; i < d && ok; ++i)
      for (int j = 0; j < d && ok; ++j) {
        int sign = (basis_[i].parity && basis_[j].parity) ? -1 : 1;
        if (!(mult_[i][j] == mult_[j][i].scaled(Rational(sign)))) {
          ok = false;
          w = basis_[i].name + "*" + basis_[j].name;
        }
      }
    record("graded_commutativity", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (int i = 0; i < d && ok; ++i)
      for (int j = 0; j < d && ok; ++j)
        for (int k = 0; k < d && ok; ++k) {
          AlgebraClass left = multiply(mult_[i][j], AlgebraClass::basis(k));
          AlgebraClass right = multiply(AlgebraClass::basis(i), mult_[j][k]);
          if (!(left == right)) {
            ok = false;
            w = "(" + basis_[i].name + "*" + basis_[j].name + ")*" + basis_[k].name;
          }
        }
    record("associativity", ok, w);
  }
  {
    Matrix g(d, std::vector<Rational>(d));
    for (int i = 0; i < d; ++i)
      for (int k = 0; k < d; ++k) g[i][k] = counit(mult_[i][k]);
    Matrix unused;
    record("nondegeneracy", invert(g, unused), "pairing matrix is singular");
  }
  {
    bool ok = true;
    std::string w;
    for (int m = 0; m < d && ok; ++m) {
      TensorClass delta(2);
      for (const auto& ct : comult_[m])
        delta.add({(std::uint8_t)ct.left, (std::uint8_t)ct.right}, ct.coeff);
      for (int k = 0; k < d && ok; ++k)
        for (int l = 0; l < d && ok; ++l) {
          TensorClass bk(2);
          bk.add({(std::uint8_t)k, (std::uint8_t)l}, Rational(1));
          Rational lhs = tensor_pairing(*this, delta, bk);
          Rational rhs = counit(multiply(AlgebraClass::basis(m), mult_[k][l]));
          if (!(lhs == rhs)) {
            ok = false;
            w = "<Delta(" + basis_[m].name + "), " + basis_[k].name + "(x)" + basis_[l].name + ">";
          }
        }
    }
    record("adjointness", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (int m = 0; m < d && ok; ++m) {
      TensorClass left = comultiply(*this, AlgebraClass::basis(m), 3);
      // (id (x) Delta) Delta: expand the second factor
      TensorClass right(3);
      for (const auto& ct : comult_[m])
        for (const auto& inner : comult_[ct.right])
          right.add({(std::uint8_t)ct.left, (std::uint8_t)inner.left, (std::uint8_t)inner.right},
                    ct.coeff * inner.coeff);
      if (!(left == right)) {
        ok = false;
        w = "Delta^(3)(" + basis_[m].name + ") bracket-dependent";
      }
    }
    record("coassociativity", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (int m = 0; m < d && ok; ++m) {
      TensorClass delta_a(2);
      for (const auto& ct : comult_[m])
        delta_a.add({(std::uint8_t)ct.left, (std::uint8_t)ct.right}, ct.coeff);
      for (int b = 0; b < d && ok; ++b) {
        AlgebraClass ab = mult_[m][b];
        TensorClass lhs(2);
        for (const auto& [i, c] : ab.terms())
          for (const auto& ct : comult_[i])
            lhs.add({(std::uint8_t)ct.left, (std::uint8_t)ct.right}, ct.coeff * c);
        TensorClass one_b(2);
        one_b.add({(std::uint8_t)unit_, (std::uint8_t)b}, Rational(1));
        TensorClass rhs = tensor_multiply(*this, delta_a, one_b);
        if (!(lhs == rhs)) {
          ok = false;
          w = "Delta(" + basis_[m].name + "*" + basis_[b].name + ") != Delta(" +
              basis_[m].name + ")*(1(x)" + basis_[b].name + ")";
        }
      }
    }
    record("frobenius_condition", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (int m = 0; m < d && ok; ++m) {
      AlgebraClass back;  // (counit (x) id) Delta(b_m)
      for (const auto& ct : comult_[m]) back.add(ct.right, counit_[ct.left] * ct.coeff);
      if (!(back == AlgebraClass::basis(m))) {
        ok = false;
        w = "(counit(x)id)Delta(" + basis_[m].name + ")";
      }
    }
    record("counit_axiom", ok, w);
  }
  return rep;
}

}  // namespace kummer
