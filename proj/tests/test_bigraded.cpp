#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <vector>

#include "kummer/bigraded.hpp"

using namespace kummer;

namespace {

PerversePolynomial mono(int d, int p, long long c = 1) {
  return PerversePolynomial::monomial(d, p, c);
}

// the abelian surface series with the (0,0,1,1) perversity pattern
PerversePolynomial abelian_pp() {
  PerversePolynomial a = mono(0, 0);
  a += mono(1, 0, 2);
  a += mono(1, 1, 2);
  a += mono(2, 0, 1);
  a += mono(2, 1, 4);
  a += mono(2, 2, 1);
  a += mono(3, 1, 2);
  a += mono(3, 2, 2);
  a += mono(4, 2, 1);
  return a;
}

// Brute-force oracle: expand a into (d,p) slots with multiplicity, enumerate
// slot-count selections of total n where odd-degree slots never exceed their
// multiplicity (exterior rule) and even slots count multisets.
PerversePolynomial brute_super_power(const PerversePolynomial& a, int n) {
  struct Slot {
    int d, p;
    long long mult;
  };
  std::vector<Slot> slots;
  for (const auto& [k, c] : a.terms())
    slots.push_back({k.first, k.second, c.convert_to<long long>()});
  PerversePolynomial out;
  std::vector<int> counts(slots.size(), 0);
  auto binom = [](long long top, long long k) {
    BigInt b = 1;
    for (long long i = 1; i <= k; ++i) b = b * (top - i + 1) / i;
    return b;
  };
  auto rec = [&](auto&& self, size_t idx, int remaining) -> void {
    if (idx == slots.size()) {
      if (remaining) return;
      BigInt ways = 1;
      int d = 0, p = 0;
      for (size_t i = 0; i < slots.size(); ++i) {
        int cnt = counts[i];
        if (!cnt) continue;
        d += slots[i].d * cnt;
        p += slots[i].p * cnt;
        if (slots[i].d % 2) {
          if (cnt > slots[i].mult) return;
          ways *= binom(slots[i].mult, cnt);
        } else {
          ways *= binom(slots[i].mult + cnt - 1, cnt);
        }
      }
      out.add(d, p, ways);
      return;
    }
    for (int cnt = 0; cnt <= remaining; ++cnt) {
      counts[idx] = cnt;
      self(self, idx + 1, remaining - cnt);
      counts[idx] = 0;
    }
  };
  rec(rec, 0, n);
  return out;
}

PerversePolynomial random_pp(std::mt19937& gen, int max_terms = 5, int max_d = 4,
                             long long max_c = 3) {
  PerversePolynomial a;
  int terms = 1 + (int)(gen() % max_terms);
  for (int i = 0; i < terms; ++i)
    a.add((int)(gen() % (max_d + 1)), (int)(gen() % 3), 1 + (long long)(gen() % max_c));
  return a;
}

}  // namespace

TEST_CASE("multiply unit and monomials") {
  PerversePolynomial a = abelian_pp();
  CHECK(a * PerversePolynomial::unit() == a);
  CHECK(mono(1, 1) * mono(1, 1) == mono(2, 2));
}

TEST_CASE("abelian square has betti (1+q)^8") {
  auto sq = abelian_pp() * abelian_pp();
  std::vector<BigInt> expect{1, 8, 28, 56, 70, 56, 28, 8, 1};
  CHECK(sq.betti() == expect);
}

TEST_CASE("multiply commutative and associative on random triples") {
  std::mt19937 gen(42);
  for (int trial = 0; trial < 50; ++trial) {
    auto a = random_pp(gen), b = random_pp(gen), c = random_pp(gen);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
  }
}

TEST_CASE("shift") {
  CHECK(PerversePolynomial::unit().shifted(2, 1) == mono(2, 1));
  PerversePolynomial e = mono(0, 0) + mono(1, 1, 2) + mono(2, 2);
  PerversePolynomial expect = mono(2, 1) + mono(3, 2, 2) + mono(4, 3);
  CHECK(e.shifted(2, 1) == expect);
  CHECK(e.shifted(0, 0) == e);
  CHECK_THROWS_AS(e.shifted(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(e.shifted(-2, 0), std::invalid_argument);
}

TEST_CASE("super symmetric power basics") {
  PerversePolynomial point = PerversePolynomial::unit();
  for (int n = 0; n <= 5; ++n) CHECK(super_symmetric_power(point, n) == point);

  // odd line squares to zero
  CHECK(super_symmetric_power(mono(1, 1), 2).is_zero());

  // n = 0 is the unit series
  CHECK(super_symmetric_power(abelian_pp(), 0) == PerversePolynomial::unit());
}

TEST_CASE("Sym^2 of the abelian model against the brute-force oracle") {
  auto sym2 = super_symmetric_power(abelian_pp(), 2);
  CHECK(sym2 == brute_super_power(abelian_pp(), 2));
  std::vector<BigInt> expect{1, 4, 12, 28, 38, 28, 12, 4, 1};
  CHECK(sym2.betti() == expect);
  CHECK(sym2.total() == 128);
}

TEST_CASE("super power agrees with brute-force enumeration up to n=5") {
  std::mt19937 gen(7);
  for (int trial = 0; trial < 25; ++trial) {
    auto a = random_pp(gen);
    for (int n = 0; n <= 5; ++n)
      CHECK(super_symmetric_power(a, n) == brute_super_power(a, n));
  }
}

TEST_CASE("t=1 specialization commutes with the super power") {
  // same betti, different perversity split
  PerversePolynomial a = mono(1, 0, 2) + mono(2, 1, 1);
  PerversePolynomial b = mono(1, 1, 2) + mono(2, 0, 1);
  for (int n = 1; n <= 4; ++n)
    CHECK(super_symmetric_power(a, n).betti() == super_symmetric_power(b, n).betti());
}

TEST_CASE("sym_partition") {
  auto a = abelian_pp();
  CHECK(sym_partition(a, Partition({1, 1, 1})) == super_symmetric_power(a, 3));
  CHECK(sym_partition(a, Partition({3})) == a);
  auto s21 = sym_partition(a, Partition({2, 1}));
  CHECK(s21 == a * a);  // both multiplicities are 1
  std::vector<BigInt> expect{1, 8, 28, 56, 70, 56, 28, 8, 1};
  CHECK(s21.betti() == expect);
}

TEST_CASE("exact divide") {
  auto a = abelian_pp();
  CHECK(exact_divide(a, PerversePolynomial::unit()) == a);
  std::mt19937 gen(11);
  for (int trial = 0; trial < 30; ++trial) {
    auto x = random_pp(gen);
    auto b = PerversePolynomial::unit() + random_pp(gen);
    CHECK(exact_divide(x * b, b) == x);
  }
  // divisor without constant term
  CHECK_THROWS_AS(exact_divide(a, mono(1, 0)), DivisibilityError);
  // genuine non-divisibility
  CHECK_THROWS_AS(exact_divide(mono(0, 0) + mono(1, 0), PerversePolynomial::unit() + mono(1, 1)),
                  DivisibilityError);
}

TEST_CASE("serialization") {
  PerversePolynomial e = mono(0, 0) + mono(2, 1, 22);
  CHECK(e.str() == "1*q^0*t^0 + 22*q^2*t^1");
  CHECK(e.json() == "{\"terms\":[{\"d\":0,\"p\":0,\"c\":1},{\"d\":2,\"p\":1,\"c\":22}]}");
  CHECK(PerversePolynomial().str() == "0");
}

TEST_CASE("hard Lefschetz symmetry detector") {
  CHECK(hard_lefschetz_symmetric(abelian_pp(), 1));
  PerversePolynomial broken = abelian_pp() + mono(1, 0);
  CHECK(!hard_lefschetz_symmetric(broken, 1));
}
