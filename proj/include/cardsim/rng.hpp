#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cardsim::rng {

// One segment of a stream derivation path: (entity-kind tag, entity id, purpose tag).
struct PathSeg {
    std::string_view kind;
    uint64_t id = 0;
    std::string_view purpose;
};

class ParamError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Deterministic random stream keyed by (master_seed, path).
//
// Derivation folds the path through a 128-bit keyed hash; draws come from a
// counter-based generator (SplitMix-style finalizer over key + n*gamma, the
// SplittableRandom construction). Streams with distinct paths are independent
// for simulation purposes, and no draw ever mutates shared state, so any
// number of workers can sample concurrently from their own streams.
class Stream {
  public:
    Stream() = default;

    static Stream derive(uint64_t master_seed, std::span<const PathSeg> path);
    static Stream derive(uint64_t master_seed, std::initializer_list<PathSeg> path) {
        return derive(master_seed, std::span<const PathSeg>(path.begin(), path.size()));
    }

    // Extends the path by one segment. Pure function of (key, segment):
    // fork from an already-used stream yields the same child as fork from a
    // fresh one.
    Stream fork(std::string_view kind, uint64_t id, std::string_view purpose = {}) const;
    // Hot-path variant for purely numeric segments (per-day, per-event).
    Stream fork_index(uint64_t a, uint64_t b = 0) const;

    uint64_t next_u64();

    // Uniform in [0, 1), 53-bit resolution.
    double next_double();
    double uniform(double lo, double hi);
    // Uniform integer in [0, n); n must be > 0.
    uint64_t uniform_index(uint64_t n);
    bool bernoulli(double p);

    // N(mean, std^2) via Box-Muller; std must be >= 0.
    double gaussian(double mean, double std_dev);

    // Gaussian conditioned on [lo, hi], sampled by rejection with a cap of
    // 100 attempts, then clamped to the nearest bound. lo < hi required.
    double truncated_gaussian(double mean, double std_dev, double lo, double hi);

    // Lognormal with the given median of the value distribution and std of log(value).
    double lognormal_from_median(double median, double log_std);

    double exponential(double rate);

    // Exact Poisson sampling; large means are split into exact partial sums.
    uint64_t poisson(double mean);

    // Categorical draw over non-negative weights; returns index.
    size_t categorical(std::span<const double> weights);

  private:
    Stream(uint64_t key, uint64_t gamma) : key_(key), gamma_(fix_gamma(gamma)) {}
    static uint64_t fix_gamma(uint64_t g);

    uint64_t key_ = 0x9e3779b97f4a7c15ull;
    uint64_t gamma_ = 0xbf58476d1ce4e5b9ull;
    uint64_t counter_ = 0;
};

// Population-level parameters of one attribute; spread_fraction is the share
// of total variance assigned to the between-individual level.
struct PopulationDistribution {
    double mean = 0.0;
    double std_dev = 0.0;
    double spread_fraction = 0.5;
};

// Per-individual parameters drawn once from a PopulationDistribution.
struct IndividualDistribution {
    double indiv_mean = 0.0;
    double indiv_std = 0.0;
};

// Two-level sampling: indiv_mean ~ N(mean, spread*std^2), indiv_std carries
// the remaining variance, so event draws pooled across the population have
// variance std^2.
IndividualDistribution individualize(const PopulationDistribution& pop, Stream& s);

// Standard normal CDF and its inverse (Acklam's rational approximation
// polished with Newton steps; ~1e-15 absolute accuracy).
double normal_cdf(double x);
double inverse_normal_cdf(double p);

}  // namespace cardsim::rng
