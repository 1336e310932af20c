#include "chromzeta/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <thread>

#include <boost/math/distributions/normal.hpp>

namespace chromzeta {

namespace {

constexpr std::uint64_t kTrialBlock = 1u << 14;

void validate_box(Coord n, int s, const char* who) {
  if (n < 1 || n > kMaxBoxSide) throw UsageError(std::string(who) + ": n must be in [1, 2^31 - 1]");
  if (s < 2) throw UsageError(std::string(who) + ": s must be an integer >= 2");
}

struct Counts {
  std::uint64_t sub = 0;
  std::uint64_t full = 0;
};

// Runs body(trial, coords) for every trial; body returns the per-trial counts.
template <class Body>
Counts run_trials(const SimulationOptions& options, std::size_t coords_per_trial, Body body) {
  const std::uint64_t blocks = (options.trials + kTrialBlock - 1) / kTrialBlock;
  std::vector<Counts> per_block(blocks);

  auto run_block = [&](std::uint64_t b, std::vector<Coord>& coords) {
    Counts c;
    const std::uint64_t end = std::min(options.trials, (b + 1) * kTrialBlock);
    for (std::uint64_t t = b * kTrialBlock; t < end; ++t) {
      TrialStream stream(options.seed, t);
      const Counts one = body(stream, coords);
      c.sub += one.sub;
      c.full += one.full;
    }
    per_block[b] = c;
  };

  const unsigned workers =
      static_cast<unsigned>(std::max<std::uint64_t>(1, std::min<std::uint64_t>(options.workers, blocks)));
  if (workers <= 1) {
    std::vector<Coord> coords(coords_per_trial);
    for (std::uint64_t b = 0; b < blocks; ++b) run_block(b, coords);
  } else {
    std::vector<std::exception_ptr> failures(workers);
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          std::vector<Coord> coords(coords_per_trial);
          for (std::uint64_t b = w; b < blocks; b += workers) run_block(b, coords);
        } catch (...) {
          failures[w] = std::current_exception();
        }
      });
    }
    for (auto& t : pool) t.join();
    for (auto& f : failures)
      if (f) std::rethrow_exception(f);
  }

  Counts total;
  for (const auto& c : per_block) {
    total.sub += c.sub;
    total.full += c.full;
  }
  return total;
}

void fill(std::vector<Coord>& coords, Coord n, TrialStream& stream) {
  const auto side = static_cast<std::uint32_t>(n);
  for (auto& c : coords) c = stream.uniform_1_to(side);
}

}  // namespace

double normal_quantile_two_sided(double confidence) {
  if (!(confidence > 0.0 && confidence < 1.0)) throw UsageError("confidence must be in (0, 1)");
  return boost::math::quantile(boost::math::normal_distribution<double>(), 0.5 + 0.5 * confidence);
}

double Estimate::standard_error() const {
  return (ci_high - ci_low) / (2.0 * normal_quantile_two_sided(confidence));
}

Estimate wilson_estimate(std::uint64_t successes, std::uint64_t trials, double confidence, std::uint64_t seed) {
  if (trials == 0) throw UsageError("wilson_estimate: trials must be >= 1");
  if (successes > trials) throw UsageError("wilson_estimate: successes exceed trials");
  const double z = normal_quantile_two_sided(confidence);
  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(successes) / n;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double centre = (p + z2 / (2.0 * n)) / denom;
  const double half = z / denom * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n));

  Estimate e;
  e.successes = successes;
  e.trials = trials;
  e.point = p;
  e.confidence = confidence;
  e.seed = seed;
  e.ci_low = std::clamp(std::min(centre - half, p), 0.0, 1.0);
  e.ci_high = std::clamp(std::max(centre + half, p), 0.0, 1.0);
  return e;
}

LatticeConfig sample_config(Coord n, int s, int k, TrialStream& stream) {
  validate_box(n, s, "sample_config");
  if (k < 1) throw UsageError("sample_config: k must be >= 1");
  LatticeConfig cfg;
  cfg.points.resize(k);
  const auto side = static_cast<std::uint32_t>(n);
  for (auto& pt : cfg.points) {
    pt.coords.resize(s);
    for (auto& c : pt.coords) c = stream.uniform_1_to(side);
  }
  return cfg;
}

Estimate estimate_probability(const Graph& g, Coord n, int s, const SimulationOptions& options) {
  validate_box(n, s, "estimate_probability");
  if (options.trials < 1) throw UsageError("estimate_probability: trials must be >= 1");
  const std::size_t width = static_cast<std::size_t>(g.order()) * s;
  const Counts c = run_trials(options, width, [&](TrialStream& stream, std::vector<Coord>& coords) {
    fill(coords, n, stream);
    return Counts{0, is_H_visible(coords, s, g) ? 1u : 0u};
  });
  return wilson_estimate(c.full, options.trials, options.confidence, options.seed);
}

ConditionalEstimate estimate_conditional(const Graph& g, const Graph& sub, Coord n, int s,
                                         const SimulationOptions& options) {
  validate_box(n, s, "estimate_conditional");
  if (options.trials < 1) throw UsageError("estimate_conditional: trials must be >= 1");
  if (!is_subgraph(sub, g)) throw UsageError("estimate_conditional: conditioning graph is not a subgraph");

  std::vector<Edge> extra;
  std::set_difference(g.edges().begin(), g.edges().end(), sub.edges().begin(), sub.edges().end(),
                      std::back_inserter(extra));
  const Graph remainder(g.order(), extra);

  const std::size_t width = static_cast<std::size_t>(g.order()) * s;
  const Counts c = run_trials(options, width, [&](TrialStream& stream, std::vector<Coord>& coords) {
    fill(coords, n, stream);
    if (!is_H_visible(coords, s, sub)) return Counts{0, 0};
    return Counts{1, is_H_visible(coords, s, remainder) ? 1u : 0u};
  });
  if (c.sub == 0) {
    throw UsageError("estimate_conditional: no trial satisfied the conditioning event (0 of " +
                     std::to_string(options.trials) + ")");
  }

  ConditionalEstimate out;
  out.conditioning = wilson_estimate(c.sub, options.trials, options.confidence, options.seed);
  out.conditional = wilson_estimate(c.full, c.sub, options.confidence, options.seed);
  out.ratio = out.conditional.point;
  return out;
}

std::vector<SweepRow> convergence_sweep(const Graph& g, int s, const std::vector<Coord>& n_values,
                                        const SimulationOptions& options, const EulerOptions& limit_options) {
  if (n_values.empty()) throw UsageError("convergence_sweep: n list is empty");
  if (!std::is_sorted(n_values.begin(), n_values.end())) {
    throw UsageError("convergence_sweep: n list must be ascending");
  }
  const CertifiedProduct limit = zeta_H_inverse(g, s, limit_options);
  std::vector<SweepRow> rows;
  rows.reserve(n_values.size());
  for (Coord n : n_values) {
    SweepRow row;
    row.n = n;
    row.estimate = estimate_probability(g, n, s, options);
    row.limit = limit;
    row.deviation = std::abs(row.estimate.point - limit.value);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace chromzeta
