#include "kummer/decomp.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <numeric>
#include <random>
#include <thread>

#include "json.hpp"

namespace kummer {

namespace {

long long now_ms() {
  using namespace std::chrono;
  return duration_cast<milliseconds>(steady_clock::now().time_since_epoch()).count();
}

int thread_count(const CheckOptions& opts) {
  if (opts.jobs > 0) return opts.jobs;
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? (int)hw : 1;
}

constexpr size_t kMaxViolations = 1000;

void push_violation(std::vector<Violation>& v, Violation viol) {
  if (v.size() < kMaxViolations) v.push_back(std::move(viol));
}

}  // namespace

PerversePolynomial hilbert_pp(const SurfaceModel& model, int n) {
  if (n < 1) throw std::invalid_argument("hilbert_pp: n must be >= 1");
  PerversePolynomial pp_a = model.cohomology_pp();
  PerversePolynomial out;
  for (const auto& nu : enumerate_partitions(n)) {
    int shift = n - nu.length();
    out += sym_partition(pp_a, nu).shifted(2 * shift, shift);
  }
  return out;
}

PerversePolynomial kummer_pp(const SurfaceModel& model, int n) {
  if (n < 1) throw std::invalid_argument("kummer_pp: n must be >= 1");
  PerversePolynomial pp_a = model.cohomology_pp();
  PerversePolynomial out;
  for (const auto& nu : enumerate_partitions(n)) {
    int shift = n - nu.length();
    BigInt count = model.torsion_count(nu.gcd());
    out += sym_partition(pp_a, nu).shifted(2 * shift, shift).scaled(count);
  }
  return out;
}

PerversePolynomial kummer_quotient_pp(const SurfaceModel& model, int n) {
  return exact_divide(kummer_pp(model, n), model.cohomology_pp());
}

KummerClass::KummerClass(Partition nu, TorsionElement sigma, PartitionLabels payload)
    : nu_(std::move(nu)), sigma_(std::move(sigma)), payload_(std::move(payload)) {
  if (!(payload_.nu() == nu_)) throw ShapeError("KummerClass: payload shape mismatch");
  if (!sigma_.is_m_torsion(nu_.gcd()))
    throw std::invalid_argument("KummerClass: sigma is not gcd(nu)-torsion");
}

std::map<std::pair<Partition, TorsionElement>, PartitionLabels> kummer_product(
    const OrbifoldRing& ring, const SurfaceModel& model, const KummerClass& a,
    const KummerClass& b) {
  if (a.n() != b.n() || a.n() != ring.n())
    throw std::invalid_argument("kummer_product: size mismatch");
  if (a.sigma().rank() != model.torsion_rank() || b.sigma().rank() != model.torsion_rank())
    throw std::invalid_argument("kummer_product: torsion labels from a different group");
  TorsionElement st = a.sigma() + b.sigma();
  auto components = ring.hilbert_product(ring.nu_class(a.payload()), ring.nu_class(b.payload()));
  std::map<std::pair<Partition, TorsionElement>, PartitionLabels> out;
  for (auto& [lambda, cls] : components) {
    if (!st.is_m_torsion(lambda.gcd())) continue;  // zero label slot
    out.emplace(std::make_pair(lambda, st), std::move(cls));
  }
  return out;
}

std::string CheckReport::json() const {
  nlohmann::ordered_json j;
  j["check"] = check;
  j["model"] = model;
  j["n"] = n;
  j["mode"] = mode;
  j["pairs_checked"] = pairs_checked;
  j["violations"] = nlohmann::ordered_json::array();
  for (const auto& v : violations) {
    nlohmann::ordered_json jv;
    jv["alpha"] = v.alpha;
    jv["beta"] = v.beta;
    jv["lambda"] = v.lambda;
    jv["sigma_tau"] = v.sigma_tau;
    jv["p_alpha"] = v.p_alpha;
    jv["p_beta"] = v.p_beta;
    jv["p_gamma"] = v.p_gamma;
    j["violations"].push_back(std::move(jv));
  }
  j["elapsed_ms"] = elapsed_ms;
  return j.dump(2);
}

namespace {

// Payload-pair product summary, one entry per surviving cycle type.
struct Component {
  int type;
  long long gcd;
  int p_min, p_max;
};

struct SweepContext {
  const SurfaceModel* model;
  OrbifoldRing ring;
  std::vector<OrbifoldRing::BasisClass> basis;
  std::vector<LabeledTerm> raw;                 // unsymmetrized generators
  std::vector<OrbifoldRing::Element> elements;  // materialized invariant classes
  std::vector<int> p_true;
  std::vector<int> p_input;  // possibly corrupted grading for sweep inputs
  std::vector<int> payload_type;
  std::vector<std::vector<TorsionElement>> torsion;  // per partition type
  std::vector<long long> type_gcd;

  SweepContext(const SurfaceModel& m, int n, const CheckOptions& opts)
      : model(&m), ring(m.algebra(), n) {
    basis = ring.invariant_basis();
    for (const auto& b : basis) {
      LabeledTerm t;
      std::vector<std::vector<int>> cycles;
      int next = 1;
      for (int part : b.nu.parts()) {
        std::vector<int> c(part);
        std::iota(c.begin(), c.end(), next);
        next += part;
        cycles.push_back(std::move(c));
      }
      t.perm = ring.rank_of(Perm::from_cycles(n, cycles));
      t.labels = b.labels;
      t.coeff = Rational(1);
      raw.push_back(std::move(t));
      elements.push_back(ring.materialize(b));
      p_true.push_back(b.perversity);
      if (opts.corrupt_input_perversity.empty()) {
        p_input.push_back(b.perversity);
      } else {
        int p = n - b.nu.length();
        for (auto l : b.labels) p += opts.corrupt_input_perversity[l];
        p_input.push_back(p);
      }
      payload_type.push_back(
          (int)(std::find(ring.partitions().begin(), ring.partitions().end(), b.nu) -
                ring.partitions().begin()));
    }
    for (const auto& nu : ring.partitions()) {
      torsion.push_back(m.torsion_group(nu.gcd()));
      type_gcd.push_back(nu.gcd());
    }
  }

  // alpha_i * beta_j via Sym(x_i * beta_j), summarized per cycle type.
  std::vector<Component> product_summary(int i, int j) const {
    OrbifoldRing::Element prod_raw;
    for (const auto& [k, c] : elements[j]) {
      LabeledTerm t = ring.decode(k, c);
      for (const auto& [pk, pc] : ring.multiply_labeled(raw[i], t))
        OrbifoldRing::add_term(prod_raw, pk, pc);
    }
    OrbifoldRing::Element prod = ring.symmetrize(prod_raw);
    std::vector<Component> comps;
    for (const auto& [k, c] : prod) {
      LabeledTerm t = ring.decode(k, c);
      int type = ring.type_of_rank(t.perm);
      int p = ring.term_perversity(t);
      auto it = std::find_if(comps.begin(), comps.end(),
                             [&](const Component& cm) { return cm.type == type; });
      if (it == comps.end()) {
        comps.push_back({type, type_gcd[type], p, p});
      } else {
        it->p_min = std::min(it->p_min, p);
        it->p_max = std::max(it->p_max, p);
      }
    }
    return comps;
  }

  std::string class_name(int i, const TorsionElement& s) const {
    return "nu=" + basis[i].nu.str() + " sigma=" + s.str() + " " +
           ring.basis_str(basis[i]).substr(ring.basis_str(basis[i]).find("label="));
  }
};

struct PairOutcome {
  long long pairs = 0;
  std::vector<Violation> mult, split;
};

// Evaluate the torsion-labeled checks for one payload pair given its summary.
void evaluate_pair(const SweepContext& ctx, int i, int j, const std::vector<Component>& comps,
                   const TorsionElement& sigma, const TorsionElement& tau, PairOutcome& out) {
  out.pairs++;
  int pa = ctx.p_input[i], pb = ctx.p_input[j];
  TorsionElement st = sigma + tau;
  for (const auto& c : comps) {
    if (!st.is_m_torsion(c.gcd)) continue;
    const Partition& lambda = ctx.ring.partitions()[c.type];
    if (c.p_max > pa + pb)
      push_violation(out.mult, {ctx.class_name(i, sigma), ctx.class_name(j, tau), lambda.str(),
                                st.str(), pa, pb, c.p_max});
    if (c.p_min != pa + pb || c.p_max != pa + pb)
      push_violation(out.split, {ctx.class_name(i, sigma), ctx.class_name(j, tau), lambda.str(),
                                 st.str(), pa, pb, c.p_min != pa + pb ? c.p_min : c.p_max});
  }
}

struct SweepResult {
  CheckReport mult, split;
};

SweepResult run_sweep(const SurfaceModel& model, int n, CheckMode mode,
                      const CheckOptions& opts) {
  long long t0 = now_ms();
  SweepContext ctx(model, n, opts);
  int P = (int)ctx.basis.size();
  std::vector<PairOutcome> rows;

  if (mode == CheckMode::Exhaustive) {
    rows.resize(P);
    std::atomic<int> next{0};
    auto worker = [&] {
      for (;;) {
        int i = next.fetch_add(1);
        if (i >= P) return;
        PairOutcome& row = rows[i];
        for (int j = i; j < P; ++j) {
          auto comps = ctx.product_summary(i, j);
          const auto& gi = ctx.torsion[ctx.payload_type[i]];
          const auto& gj = ctx.torsion[ctx.payload_type[j]];
          for (size_t s = 0; s < gi.size(); ++s) {
            size_t t_begin = (i == j) ? s : 0;  // unordered labeled pairs
            for (size_t t = t_begin; t < gj.size(); ++t)
              evaluate_pair(ctx, i, j, comps, gi[s], gj[t], row);
          }
        }
      }
    };
    std::vector<std::thread> pool;
    for (int w = 0; w < thread_count(opts); ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  } else {
    // fixed-seed sample of labeled pairs; payload products computed per
    // distinct payload pair
    std::vector<std::pair<int, int>> labeled;  // (payload, torsion index)
    for (int i = 0; i < P; ++i)
      for (size_t s = 0; s < ctx.torsion[ctx.payload_type[i]].size(); ++s)
        labeled.push_back({i, (int)s});
    std::mt19937_64 gen(opts.seed);
    std::vector<std::pair<size_t, size_t>> sampled(opts.samples);
    for (auto& pr : sampled) {
      pr.first = (size_t)(gen() % labeled.size());
      pr.second = (size_t)(gen() % labeled.size());
    }
    std::map<std::pair<int, int>, size_t> payload_pairs;
    std::vector<std::pair<int, int>> order;
    for (const auto& [I, J] : sampled) {
      auto key = std::minmax(labeled[I].first, labeled[J].first);
      if (payload_pairs.emplace(std::pair<int, int>(key.first, key.second), order.size()).second)
        order.push_back({key.first, key.second});
    }
    std::vector<std::vector<Component>> summaries(order.size());
    std::atomic<size_t> next{0};
    auto worker = [&] {
      for (;;) {
        size_t k = next.fetch_add(1);
        if (k >= order.size()) return;
        summaries[k] = ctx.product_summary(order[k].first, order[k].second);
      }
    };
    std::vector<std::thread> pool;
    for (int w = 0; w < thread_count(opts); ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    rows.resize(1);
    for (const auto& [I, J] : sampled) {
      auto [i, s] = labeled[I];
      auto [j, t] = labeled[J];
      auto key = std::minmax(i, j);
      const auto& comps = summaries[payload_pairs[std::pair<int, int>(key.first, key.second)]];
      // evaluate with (i,j) in payload-pair-normalized order for summary reuse
      if (i <= j)
        evaluate_pair(ctx, i, j, comps, ctx.torsion[ctx.payload_type[i]][s],
                      ctx.torsion[ctx.payload_type[j]][t], rows[0]);
      else
        evaluate_pair(ctx, j, i, comps, ctx.torsion[ctx.payload_type[j]][t],
                      ctx.torsion[ctx.payload_type[i]][s], rows[0]);
    }
  }

  SweepResult res;
  std::string mode_str = mode == CheckMode::Exhaustive
                             ? "exhaustive"
                             : "sampled(" + std::to_string(opts.samples) + ")";
  for (CheckReport* rep : {&res.mult, &res.split}) {
    rep->model = model.name();
    rep->n = n;
    rep->mode = mode_str;
  }
  res.mult.check = "multiplicativity";
  res.split.check = "strong-splitting";
  for (const auto& row : rows) {
    res.mult.pairs_checked += row.pairs;
    res.split.pairs_checked += row.pairs;
    for (const auto& v : row.mult) push_violation(res.mult.violations, v);
    for (const auto& v : row.split) push_violation(res.split.violations, v);
  }
  long long dt = now_ms() - t0;
  res.mult.elapsed_ms = dt;
  res.split.elapsed_ms = dt;
  return res;
}

}  // namespace

CheckReport check_multiplicativity(const SurfaceModel& model, int n, CheckMode mode,
                                   const CheckOptions& opts) {
  return run_sweep(model, n, mode, opts).mult;
}

CheckReport check_strong_splitting(const SurfaceModel& model, int n, CheckMode mode,
                                   const CheckOptions& opts) {
  return run_sweep(model, n, mode, opts).split;
}

namespace {

// Raw monomial pairing on A^k without TensorClass overhead.
Rational pairing_keys(const FrobeniusAlgebra& alg, const std::vector<std::uint8_t>& a,
                      const std::vector<std::uint8_t>& b) {
  Rational v(1);
  for (size_t i = 0; i < a.size() && !v.is_zero(); ++i)
    v *= alg.counit(alg.multiply((int)a[i], (int)b[i]));
  if (v.is_zero()) return v;
  int crossings = 0;
  for (size_t j = 0; j < a.size(); ++j)
    if (alg.basis(a[j]).parity)
      for (size_t i = 0; i < j; ++i) crossings += alg.basis(b[i]).parity;
  return crossings % 2 ? -v : v;
}

std::string key_str(const FrobeniusAlgebra& alg, const std::vector<std::uint8_t>& k) {
  std::string s;
  for (size_t i = 0; i < k.size(); ++i) {
    if (i) s += "(x)";
    s += alg.basis(k[i]).name;
  }
  return s;
}

}  // namespace

TensorClass graph_pushforward(const SurfaceModel& model, const TensorClass& gamma) {
  if (!model.compact())
    throw UnsupportedModelError("graph_pushforward: compact model required");
  const FrobeniusAlgebra& alg = model.algebra();
  int src = gamma.factors();  // a - 1
  if (src < 1) throw std::invalid_argument("graph_pushforward: at least one source factor");
  int d = alg.dim();

  // h^*(dual(b_m)) for h = -m, used to read off h_* by adjointness
  std::vector<TensorClass> hpull;
  hpull.reserve(d);
  for (int m = 0; m < d; ++m) {
    TensorClass dual = model.poincare_dual(TensorClass::monomial({(std::uint8_t)m}));
    AlgebraClass dual_cls;
    for (const auto& [k, c] : dual.terms()) dual_cls.add(k[0], c);
    TensorClass pull = model.summation_pullback(dual_cls, src);
    int deg = alg.degree_of(dual_cls);
    hpull.push_back(deg % 2 ? pull.scaled(Rational(-1)) : pull);
  }

  TensorClass out(src + 1);
  // iterate the monomial basis of A^{src}
  std::vector<std::uint8_t> mono(src, 0);
  for (;;) {
    TensorClass alpha = TensorClass::monomial(mono);
    TensorClass alpha_dual = model.poincare_dual(alpha);
    TensorClass left = tensor_multiply(alg, gamma, alpha);
    if (!left.is_zero()) {
      AlgebraClass push;  // h_*(alpha^i)
      for (int m = 0; m < d; ++m) {
        Rational c = tensor_pairing(alg, alpha_dual, hpull[m]);
        push.add(m, c);
      }
      if (!push.is_zero()) {
        TensorClass right(1);
        for (const auto& [i, c] : push.terms()) right.add({(std::uint8_t)i}, c);
        out += tensor_concat(left, right);
      }
    }
    int pos = 0;
    while (pos < src && ++mono[pos] == d) mono[pos++] = 0;
    if (pos == src) break;
  }
  return out;
}

CheckReport check_duality(int n, const CheckOptions& opts) {
  (void)opts;
  long long t0 = now_ms();
  SurfaceModel model = SurfaceModel::make(SurfaceCase::AbelianOverElliptic);
  const FrobeniusAlgebra& alg = model.algebra();
  int d = alg.dim();
  CheckReport rep;
  rep.check = "duality";
  rep.model = model.name();
  rep.n = n;
  rep.mode = "exhaustive";

  for (int k = 1; k <= n; ++k) {
    std::vector<std::vector<std::uint8_t>> monos;
    std::vector<std::uint8_t> mono(k, 0);
    for (;;) {
      monos.push_back(mono);
      int pos = 0;
      while (pos < k && ++mono[pos] == d) mono[pos++] = 0;
      if (pos == k) break;
    }
    auto pvty = [&](const std::vector<std::uint8_t>& key) {
      int p = 0;
      for (auto i : key) p += alg.basis(i).perversity;
      return p;
    };
    std::vector<int> pv(monos.size());
    std::vector<std::vector<std::uint8_t>> duals(monos.size());
    for (size_t i = 0; i < monos.size(); ++i) {
      pv[i] = pvty(monos[i]);
      TensorClass dual = model.poincare_dual(TensorClass::monomial(monos[i]));
      rep.pairs_checked++;
      if (dual.terms().size() != 1)
        push_violation(rep.violations, {key_str(alg, monos[i]), "", "", "", pv[i], 0, 0});
      duals[i] = dual.terms().begin()->first;
      Rational pair = pairing_keys(alg, monos[i], duals[i]);
      int psum = pv[i] + pvty(duals[i]);
      Rational expect = dual.terms().begin()->second * pair;  // <x, dual(x)> = 1
      if (!(expect == Rational(1)) || psum != 2 * k) {
        push_violation(rep.violations, {key_str(alg, monos[i]), key_str(alg, duals[i]),
                                        "A^" + std::to_string(k), "", pv[i], pvty(duals[i]),
                                        psum});
      }
    }
    // vanishing below complementary perversity
    for (size_t i = 0; i < monos.size(); ++i)
      for (size_t j = 0; j < monos.size(); ++j) {
        if (pv[i] + pv[j] >= 2 * k) continue;
        rep.pairs_checked++;
        if (!pairing_keys(alg, monos[i], monos[j]).is_zero())
          push_violation(rep.violations, {key_str(alg, monos[i]), key_str(alg, monos[j]),
                                          "A^" + std::to_string(k), "", pv[i], pv[j],
                                          pv[i] + pv[j]});
      }
  }

  // graph of the negated summation map raises perversity by at most 2
  for (int a = 2; a <= n; ++a) {
    int src = a - 1;
    std::vector<std::uint8_t> mono(src, 0);
    for (;;) {
      TensorClass gamma = TensorClass::monomial(mono);
      int p_gamma = tensor_perversity(alg, gamma);
      TensorClass push = graph_pushforward(model, gamma);
      rep.pairs_checked++;
      int p_push = tensor_perversity(alg, push);
      if (push.is_zero() || p_push > p_gamma + 2)
        push_violation(rep.violations,
                       {key_str(alg, mono), "graph_pushforward", "A^" + std::to_string(a), "",
                        p_gamma, 2, p_push});
      int pos = 0;
      while (pos < src && ++mono[pos] == d) mono[pos++] = 0;
      if (pos == src) break;
    }
  }

  rep.elapsed_ms = now_ms() - t0;
  return rep;
}

CheckReport check_diagonal(int n, const CheckOptions& opts) {
  (void)opts;
  long long t0 = now_ms();
  SurfaceModel model = SurfaceModel::make(SurfaceCase::AbelianOverElliptic);
  const FrobeniusAlgebra& alg = model.algebra();
  CheckReport rep;
  rep.check = "diagonal";
  rep.model = model.name();
  rep.n = n;
  rep.mode = "exhaustive";
  for (int k = 2; k <= n; ++k)
    for (int b = 0; b < alg.dim(); ++b) {
      rep.pairs_checked++;
      TensorClass diag = comultiply(alg, AlgebraClass::basis(b), k);
      TensorClass sym = tensor_symmetrize(alg, diag);
      int p = tensor_perversity(alg, sym);
      int bound = alg.basis(b).perversity + 2 * (k - 1) * model.defect();
      if (sym.is_zero() || p > bound)
        push_violation(rep.violations, {alg.basis(b).name, "Delta^(" + std::to_string(k) + ")",
                                        "", "", alg.basis(b).perversity, bound, p});
    }
  rep.elapsed_ms = now_ms() - t0;
  return rep;
}

CheckReport check_ring_axioms(const SurfaceModel& model, int n, const CheckOptions& opts) {
  long long t0 = now_ms();
  CheckReport rep;
  rep.check = "ring-axioms";
  rep.model = model.name();
  rep.n = n;
  rep.mode = "sampled(" + std::to_string(opts.samples) + ")";
  OrbifoldRing ring(model.algebra(), n);
  auto basis = ring.invariant_basis();
  std::vector<LabeledTerm> raw(basis.size());
  std::vector<OrbifoldRing::Element> elems(basis.size());
  for (size_t i = 0; i < basis.size(); ++i) {
    elems[i] = ring.materialize(basis[i]);
    std::vector<std::vector<int>> cycles;
    int next = 1;
    for (int part : basis[i].nu.parts()) {
      std::vector<int> c(part);
      std::iota(c.begin(), c.end(), next);
      next += part;
      cycles.push_back(std::move(c));
    }
    raw[i].perm = ring.rank_of(Perm::from_cycles(n, cycles));
    raw[i].labels = basis[i].labels;
    raw[i].coeff = Rational(1);
  }

  auto times_invariant = [&](const LabeledTerm& x, const OrbifoldRing::Element& inv) {
    OrbifoldRing::Element out;
    for (const auto& [k, c] : inv) {
      LabeledTerm t = ring.decode(k, c);
      for (const auto& [pk, pc] : ring.multiply_labeled(x, t))
        OrbifoldRing::add_term(out, pk, pc);
    }
    return out;
  };
  auto scale = [&](const OrbifoldRing::Element& e, const Rational& c) {
    OrbifoldRing::Element out;
    for (const auto& [k, v] : e) out.emplace(k, v * c);
    return out;
  };

  // random products vanish for degree reasons most of the time; draw half the
  // samples from the low-degree classes so the axioms are exercised on
  // nonzero products as well
  std::vector<size_t> low_degree;
  for (size_t i = 0; i < basis.size(); ++i)
    if (basis[i].degree <= 2 * n - 2) low_degree.push_back(i);
  std::mt19937_64 gen(opts.seed);
  auto draw = [&]() -> size_t {
    if (!low_degree.empty() && gen() % 2) return low_degree[gen() % low_degree.size()];
    return gen() % basis.size();
  };
  for (long long trial = 0; trial < opts.samples; ++trial) {
    size_t ia = draw(), ib = draw(), ic = draw();
    rep.pairs_checked++;
    // associativity: Sym((x_a b) c) vs Sym(x_a (bc))
    OrbifoldRing::Element ab_raw = times_invariant(raw[ia], elems[ib]);
    OrbifoldRing::Element left_raw = ring.multiply(ab_raw, elems[ic]);
    OrbifoldRing::Element left = ring.symmetrize(left_raw);
    OrbifoldRing::Element bc = ring.symmetrize(times_invariant(raw[ib], elems[ic]));
    OrbifoldRing::Element right = ring.symmetrize(times_invariant(raw[ia], bc));
    if (!(left == right))
      push_violation(rep.violations,
                     {ring.basis_str(basis[ia]), ring.basis_str(basis[ib]),
                      ring.basis_str(basis[ic]), "associativity", 0, 0, 0});
    // graded commutativity on the (a,b) pair
    OrbifoldRing::Element ab = ring.symmetrize(ab_raw);
    OrbifoldRing::Element ba = ring.symmetrize(times_invariant(raw[ib], elems[ia]));
    int sign = (basis[ia].degree % 2 && basis[ib].degree % 2) ? -1 : 1;
    if (!(ab == scale(ba, Rational(sign))))
      push_violation(rep.violations,
                     {ring.basis_str(basis[ia]), ring.basis_str(basis[ib]), "",
                      "graded-commutativity", 0, 0, 0});
  }
  rep.elapsed_ms = now_ms() - t0;
  return rep;
}

CheckReport check_frobenius(const SurfaceModel& model) {
  long long t0 = now_ms();
  CheckReport rep;
  rep.check = "frobenius";
  rep.model = model.name();
  rep.n = 1;
  rep.mode = "exhaustive";
  ValidationReport val = model.algebra().validate();
  for (const auto& c : val.checks) {
    rep.pairs_checked++;
    if (!c.pass) push_violation(rep.violations, {c.axiom, c.witness, "", "", 0, 0, 0});
  }
  rep.elapsed_ms = now_ms() - t0;
  return rep;
}

}  // namespace kummer
