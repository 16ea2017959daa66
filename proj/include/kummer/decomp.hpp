#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "kummer/bigraded.hpp"
#include "kummer/orbifold.hpp"
#include "kummer/surfaces.hpp"

namespace kummer {

// Perverse series of the Hilbert scheme A^[n] for h: A^[n] -> C^(n):
// sum over nu of sym_partition(pp_A, nu) shifted by (2(n-l), n-l).
PerversePolynomial hilbert_pp(const SurfaceModel& model, int n);

// Perverse series of A^[[n]] x A for h' x f: the Hilbert summands weighted by
// |A[gcd(nu)]|.
PerversePolynomial kummer_pp(const SurfaceModel& model, int n);

// Series of A^[[n]] alone, obtained by exact division by the surface series.
PerversePolynomial kummer_quotient_pp(const SurfaceModel& model, int n);

// Decomposition class alpha_{nu,sigma} on A^[[n]] x A: a torsion label
// sigma in A[gcd(nu)] attached to a class on A^(nu).
class KummerClass {
 public:
  KummerClass(Partition nu, TorsionElement sigma, PartitionLabels payload);

  const Partition& nu() const { return nu_; }
  const TorsionElement& sigma() const { return sigma_; }
  const PartitionLabels& payload() const { return payload_; }
  int n() const { return nu_.n(); }
  int perversity() const { return payload_.perversity() + nu_.n() - nu_.length(); }
  int degree() const { return payload_.degree() + 2 * (nu_.n() - nu_.length()); }

 private:
  Partition nu_;
  TorsionElement sigma_;
  PartitionLabels payload_;
};

// alpha_{nu,sigma} * beta_{mu,tau} -> components (lambda, sigma+tau); a
// component is dropped when sigma+tau is not gcd(lambda)-torsion.
std::map<std::pair<Partition, TorsionElement>, PartitionLabels> kummer_product(
    const OrbifoldRing& ring, const SurfaceModel& model, const KummerClass& a,
    const KummerClass& b);

enum class CheckMode { Exhaustive, Sampled };

struct CheckOptions {
  int jobs = 0;  // 0 = hardware concurrency
  std::uint64_t seed = 20240801;
  long long samples = 10000;
  // Self-test fault injection: grade the *inputs* of the multiplicativity
  // sweep with this basis perversity table while products are graded by the
  // true one. Empty = no injection.
  std::vector<int> corrupt_input_perversity;
};

struct Violation {
  std::string alpha, beta, lambda, sigma_tau;
  int p_alpha = 0, p_beta = 0, p_gamma = 0;
};

struct CheckReport {
  std::string check;
  std::string model;
  int n = 0;
  std::string mode;
  long long pairs_checked = 0;
  std::vector<Violation> violations;
  long long elapsed_ms = 0;
  bool passed() const { return violations.empty(); }
  std::string json() const;
};

// Sweep over pairs of torsion-labeled basis classes; multiplicativity asserts
// p(gamma) <= p(alpha) + p(beta) on every surviving component, strong
// splitting asserts purity at exactly p(alpha) + p(beta).
CheckReport check_multiplicativity(const SurfaceModel& model, int n, CheckMode mode,
                                   const CheckOptions& opts = {});
CheckReport check_strong_splitting(const SurfaceModel& model, int n, CheckMode mode,
                                   const CheckOptions& opts = {});

// Poincare duality p(x) + p(dual x) = 2k on A^k for k <= n, the vanishing
// <a,b> = 0 below complementary perversity, and the graph/anti-diagonal
// pushforward bound p(Gamma_* gamma) <= p(gamma) + 2 for a <= n.
CheckReport check_duality(int n, const CheckOptions& opts = {});

// Diagonal estimate p(sym Delta^(k)(b)) <= p(b) + 2(k-1) for k <= n.
CheckReport check_diagonal(int n, const CheckOptions& opts = {});

// Associativity and graded commutativity on random basis triples.
CheckReport check_ring_axioms(const SurfaceModel& model, int n, const CheckOptions& opts = {});

// Frobenius axiom suite on the model's algebra.
CheckReport check_frobenius(const SurfaceModel& model);

// Gamma_*(gamma) = sum_i (gamma . a_i) (x) h_*(a^i) for the graph of the
// negated summation map h = -m : A^{a-1} -> A, with h_* adjoint to h^*.
TensorClass graph_pushforward(const SurfaceModel& model, const TensorClass& gamma);

}  // namespace kummer
