#include "cycsub/counting.hpp"

#include <bit>
#include <cmath>

#include "cycsub/errors.hpp"
#include "cycsub/hamiltonicity.hpp"
#include "cycsub/numerics.hpp"
#include "cycsub/parallel.hpp"
#include "cycsub/rng.hpp"
#include "cycsub/structures.hpp"

namespace cycsub {

mpq_class CycReport::p_exact() const {
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 2, static_cast<unsigned long>(vertices));
  mpz_class num;
  mpz_set_ui(num.get_mpz_t(), cyclic_count);
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

CycReport cyc_count_exact(const Graph& g, const CountOptions& opts) {
  const int m = g.order();
  if (opts.max_vertices > kExactHamMaxVertices) {
    throw PreconditionError("cyc_count_exact: max_vertices cannot exceed " + std::to_string(kExactHamMaxVertices));
  }
  if (m > opts.max_vertices) {
    throw BudgetExceeded("cyc_count_exact: " + std::to_string(m) + " vertices exceeds the enumeration budget of " +
                         std::to_string(opts.max_vertices));
  }
  CycReport rep;
  rep.vertices = m;
  rep.total_subsets = std::uint64_t{1} << m;
  rep.per_size.assign(m + 1, 0);

  std::vector<std::vector<std::uint64_t>> hist(m, std::vector<std::uint64_t>(m + 1, 0));
  parallel_for(m, opts.workers, [&](std::int64_t a) {
    std::vector<int> locals;
    for (int v = static_cast<int>(a) + 1; v < m; ++v) locals.push_back(v);
    const ReachTable t = build_reach_table(g, static_cast<int>(a), locals);
    auto& h = hist[a];
    for (std::uint32_t mask = 0; mask < t.reach.size(); ++mask) {
      if ((t.reach[mask] & t.anchor_adj) != 0 && std::popcount(mask) >= 2) ++h[std::popcount(mask) + 1];
    }
  });
  for (const auto& h : hist) {
    for (int s = 0; s <= m; ++s) rep.per_size[s] += h[s];
  }
  for (auto c : rep.per_size) rep.cyclic_count += c;
  return rep;
}

mpq_class p_exact_extremal(int n, std::span<const int> cycle_lengths) {
  if (n < 2 || n > kExtremalExactMaxN) throw PreconditionError("p_exact_extremal: n must lie in [2, 1000]");
  int total = 0;
  for (int len : cycle_lengths) {
    if (len < 3) throw PreconditionError("p_exact_extremal: cycle length below 3");
    total += len;
  }
  if (total != n + 1) throw PreconditionError("p_exact_extremal: cycle lengths must sum to n + 1");

  // runs[R] = number of T within part A whose induced subgraph has R path
  // components once each fully chosen cycle is counted as one run. Then
  // maxLF(T) = |T| - R. Per cycle of length l with 0 < c < l chosen, the
  // subsets with r runs number (l / r) C(l - 1, 2r - 1).
  std::vector<mpz_class> runs{1};
  for (int len : cycle_lengths) {
    std::vector<mpz_class> d(len / 2 + 1);
    d[0] = 1;
    for (int r = 1; r <= len / 2; ++r) {
      mpz_bin_uiui(d[r].get_mpz_t(), len - 1, 2 * r - 1);
      d[r] *= len;
      mpz_divexact_ui(d[r].get_mpz_t(), d[r].get_mpz_t(), r);
    }
    d[1] += 1;  // the whole cycle
    std::vector<mpz_class> next(runs.size() + d.size() - 1);
    for (std::size_t i = 0; i < runs.size(); ++i) {
      for (std::size_t j = 0; j < d.size(); ++j) next[i + j] += runs[i] * d[j];
    }
    runs = std::move(next);
  }

  // With b = |B cap S| >= 1 the subset is cyclic iff R <= b <= t, and
  // R <= n - 1 always, so the count over b is prefix(min(t, n-1)) - prefix(R-1).
  const int nb = n - 1;
  std::vector<mpz_class> prefix(nb + 1);
  for (int b = 0; b <= nb; ++b) {
    mpz_class c;
    mpz_bin_uiui(c.get_mpz_t(), nb, b);
    prefix[b] = (b == 0 ? mpz_class(0) : prefix[b - 1]) + c;
  }
  mpz_class cyc = 0;
  for (int t = 1; t <= n + 1; ++t) {
    mpz_class c;
    mpz_bin_uiui(c.get_mpz_t(), n + 1, t);
    cyc += c * prefix[std::min(t, nb)];
  }
  for (std::size_t r = 1; r < runs.size(); ++r) cyc -= runs[r] * prefix[r - 1];
  cyc -= mpz_class(n + 1) * nb;                   // |S| = 2 with one vertex on each side
  cyc += static_cast<unsigned long>(cycle_lengths.size());  // S is exactly one 2-factor cycle

  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 2, static_cast<unsigned long>(2 * n));
  mpq_class q(cyc, den);
  q.canonicalize();
  return q;
}

mpq_class p_exact_knn(int n) {
  if (n < 1) throw PreconditionError("p_exact_knn: n must be positive");
  mpz_class c;
  mpz_bin_uiui(c.get_mpz_t(), 2 * n, n);
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 4, static_cast<unsigned long>(n));
  mpq_class q(c - 1 - mpz_class(n) * n, den);
  q.canonicalize();
  return q;
}

const char* to_string(Decider d) {
  switch (d) {
    case Decider::automatic: return "auto";
    case Decider::gn: return "gn";
    case Decider::exact: return "exact";
  }
  return "?";
}

namespace {

constexpr std::int64_t kBlock = 4096;

struct Tally {
  std::int64_t yes = 0;
  std::int64_t undecided = 0;
};

VertexSet retained(int m, double p, SplitMix64& rng) {
  VertexSet s(m);
  for (int v = 0; v < m; ++v) {
    if (rng.bernoulli(p)) s.insert(v);
  }
  return s;
}

// Block b covers samples [b * kBlock, min(samples, (b + 1) * kBlock)).
template <class PerSample>
std::vector<Tally> run_blocks(std::int64_t samples, int workers, PerSample&& per_sample) {
  const std::int64_t blocks = (samples + kBlock - 1) / kBlock;
  std::vector<Tally> tallies(blocks);
  parallel_for(blocks, workers, [&](std::int64_t b) {
    const std::int64_t end = std::min(samples, (b + 1) * kBlock);
    for (std::int64_t i = b * kBlock; i < end; ++i) per_sample(i, tallies[b]);
  });
  return tallies;
}

void finish(EstimateReport& r, const std::vector<Tally>& tallies) {
  for (const auto& t : tallies) {
    r.successes += t.yes;
    r.undecided += t.undecided;
  }
  const double n = static_cast<double>(r.samples);
  r.p_hat = static_cast<double>(r.successes) / n;
  r.std_error = std::sqrt(r.p_hat * (1 - r.p_hat) / n);
  r.undecided_fraction = static_cast<double>(r.undecided) / n;
  const Interval ci = wilson_interval(r.successes, r.samples);
  r.ci_low = ci.low;
  r.ci_high = ci.high;
}

}  // namespace

EstimateReport estimate_h(const Graph& g, const EstimateOptions& opts) {
  if (opts.samples < 1) throw PreconditionError("estimate_h: samples must be at least 1");
  if (!(opts.p_retention >= 0 && opts.p_retention <= 1)) {
    throw PreconditionError("estimate_h: p_retention must lie in [0, 1]");
  }
  const int m = g.order();
  Decider decider = opts.decider;
  if (decider == Decider::automatic && opts.labeling != nullptr) decider = Decider::gn;
  if (decider == Decider::gn && (opts.labeling == nullptr || opts.labeling->graph.order() != m)) {
    throw PreconditionError("estimate_h: the gn decider needs an extremal labeling of the graph");
  }
  EstimateReport rep;
  rep.samples = opts.samples;
  rep.seed = opts.seed;
  rep.p_retention = opts.p_retention;
  rep.decider = to_string(decider);

  const auto tallies = run_blocks(opts.samples, opts.workers, [&](std::int64_t i, Tally& tally) {
    SplitMix64 rng = SplitMix64::stream(opts.seed, static_cast<std::uint64_t>(i));
    const VertexSet s = retained(m, opts.p_retention, rng);
    if (decider == Decider::gn) {
      tally.yes += gn_criterion(*opts.labeling, s) ? 1 : 0;
      return;
    }
    if (s.size() <= kExactHamMaxVertices) {
      tally.yes += is_hamiltonian_exact(g, s).hamiltonian() ? 1 : 0;
      return;
    }
    if (decider == Decider::exact) {
      ++tally.undecided;
      return;
    }
    const auto d = find_ham_cycle_rotation(g, s, default_rotation_budget(s.size()), rng.next());
    if (d.hamiltonian()) {
      ++tally.yes;
    } else {
      ++tally.undecided;
    }
  });
  finish(rep, tallies);
  return rep;
}

EdgeConcentration edge_concentration_experiment(const Graph& g, std::int64_t samples, std::uint64_t seed,
                                                int workers) {
  if (samples < 1) throw PreconditionError("edge_concentration_experiment: samples must be at least 1");
  const std::int64_t e = g.edge_count();
  if (e < 1) throw PreconditionError("edge_concentration_experiment: graph has no edges");
  const int m = g.order();
  struct Sums {
    std::int64_t sum = 0;
    std::int64_t sum_sq = 0;
    std::int64_t deviating = 0;
  };
  const std::int64_t blocks = (samples + kBlock - 1) / kBlock;
  std::vector<Sums> sums(blocks);
  parallel_for(blocks, workers, [&](std::int64_t b) {
    const std::int64_t end = std::min(samples, (b + 1) * kBlock);
    for (std::int64_t i = b * kBlock; i < end; ++i) {
      SplitMix64 rng = SplitMix64::stream(seed, static_cast<std::uint64_t>(i));
      const std::int64_t x = g.edges_within(retained(m, 0.5, rng));
      sums[b].sum += x;
      sums[b].sum_sq += x * x;
      // |x - e/4| > e/10  <=>  |20x - 5e| > 2e
      if (std::abs(20 * x - 5 * e) > 2 * e) ++sums[b].deviating;
    }
  });
  Sums total;
  for (const auto& s : sums) {
    total.sum += s.sum;
    total.sum_sq += s.sum_sq;
    total.deviating += s.deviating;
  }
  EdgeConcentration out;
  out.samples = samples;
  out.edges = e;
  out.expected = static_cast<double>(e) / 4;
  const double n = static_cast<double>(samples);
  out.mean = static_cast<double>(total.sum) / n;
  out.variance = samples > 1 ? (static_cast<double>(total.sum_sq) - n * out.mean * out.mean) / (n - 1) : 0.0;
  out.variance = std::max(out.variance, 0.0);
  out.std_error = std::sqrt(out.variance / n);
  out.deviation_fraction = static_cast<double>(total.deviating) / n;
  out.mean_within_3se = std::abs(out.mean - out.expected) <= 3 * out.std_error + 1e-12;
  return out;
}

EstimateReport good_cut_probability(const Graph& g, const Cut& cut, int k, std::int64_t samples,
                                    std::uint64_t seed, int workers) {
  if (samples < 1) throw PreconditionError("good_cut_probability: samples must be at least 1");
  if (!cut.is_partition() || cut.x.universe() != g.order()) {
    throw PreconditionError("good_cut_probability: cut does not partition the vertex set");
  }
  const int m = g.order();
  EstimateReport rep;
  rep.samples = samples;
  rep.seed = seed;
  rep.p_retention = 0.5;
  rep.decider = "linear_forest";
  std::vector<char> loose((samples + kBlock - 1) / kBlock, 0);
  const auto tallies = run_blocks(samples, workers, [&](std::int64_t i, Tally& tally) {
    SplitMix64 rng = SplitMix64::stream(seed, static_cast<std::uint64_t>(i));
    const VertexSet s = retained(m, 0.5, rng);
    const auto sub = InducedSubgraph::of(g, s);
    const Cut local{sub.lower(cut.x & s), sub.lower(cut.y & s)};
    const bool exact = std::max(local.x.size(), local.y.size()) <= 20;
    const auto res = is_k_good_cut(sub.graph, local, k, exact);
    if (res.good) ++tally.yes;
    if (!res.definite) loose[i / kBlock] = 1;
  });
  finish(rep, tallies);
  for (char c : loose) rep.lower_bound = rep.lower_bound || c != 0;
  return rep;
}

}  // namespace cycsub
