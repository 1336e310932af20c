#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "chromzeta/euler.hpp"
#include "chromzeta/graph.hpp"
#include "chromzeta/lattice.hpp"
#include "chromzeta/philox.hpp"

namespace chromzeta {

inline constexpr double kDefaultConfidence = 0.95;

/// Binomial estimate with a Wilson score interval.
struct Estimate {
  std::uint64_t successes = 0;
  std::uint64_t trials = 0;
  double point = 0.0;
  double ci_low = 0.0;
  double ci_high = 0.0;
  double confidence = kDefaultConfidence;
  std::uint64_t seed = 0;

  // Half-width of the interval divided by its z-quantile.
  double standard_error() const;
};

Estimate wilson_estimate(std::uint64_t successes, std::uint64_t trials, double confidence = kDefaultConfidence,
                         std::uint64_t seed = 0);

// Two-sided standard normal quantile for the given confidence level.
double normal_quantile_two_sided(double confidence);

/// k points with coordinates uniform on [1, n]^s drawn from one trial stream.
LatticeConfig sample_config(Coord n, int s, int k, TrialStream& stream);

struct SimulationOptions {
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  unsigned workers = 1;
  double confidence = kDefaultConfidence;
};

/// Fraction of sampled configurations that are g-visible. Trial t always uses
/// TrialStream(seed, t); trials are split into fixed blocks, so the counts do
/// not depend on the worker count.
Estimate estimate_probability(const Graph& g, Coord n, int s, const SimulationOptions& options);

struct ConditionalEstimate {
  Estimate conditioning;  // P(sub-visible), over all trials
  Estimate conditional;   // g-visible among sub-visible trials
  double ratio = 0.0;     // conditional.point
};

/// One shared sample for both counts. Throws UsageError when no trial is
/// sub-visible.
ConditionalEstimate estimate_conditional(const Graph& g, const Graph& sub, Coord n, int s,
                                         const SimulationOptions& options);

struct SweepRow {
  Coord n = 0;
  Estimate estimate;
  CertifiedProduct limit;
  double deviation = 0.0;
};

std::vector<SweepRow> convergence_sweep(const Graph& g, int s, const std::vector<Coord>& n_values,
                                        const SimulationOptions& options,
                                        const EulerOptions& limit_options = {});

}  // namespace chromzeta
