#pragma once

// Metropolis sampling of the rescaled beta = 1 planar gas,
//   weight exp( sum_{i<j} ln|z_i - z_j|^2 - N sum_i |z_i|^2 ),
// estimating the rescaled mean energy <sum_{i<j} ln|z_i - z_j|^2> with
// batch-means error bars. Fully deterministic for a given seed: xoshiro256++
// streams, one per chain, assigned by chain index; chains may run in
// parallel and are reduced in fixed chain order.

#include <array>
#include <complex>
#include <cstdint>
#include <vector>

namespace dyson2d {

// xoshiro256++ (Blackman / Vigna), seeded through SplitMix64.
class Xoshiro256pp {
  public:
    explicit Xoshiro256pp(std::uint64_t seed);
    std::uint64_t next();
    double uniform01();  // 53-bit uniform in [0, 1)
    // standard normal pair via Box-Muller
    std::array<double, 2> gaussian_pair();

  private:
    std::array<std::uint64_t, 4> s_;
};

std::uint64_t splitmix64(std::uint64_t& state);

struct GasConfiguration {
    std::vector<std::complex<double>> points;
    double cached_log_weight = 0.0;

    unsigned n() const { return static_cast<unsigned>(points.size()); }
};

// sum_{i<j} ln|z_i - z_j|^2; coincident pair -> domain error.
double energy_observable(const GasConfiguration& c);

// Log-weight recomputed from scratch (used to build and re-sync the cache).
double recompute_log_weight(const GasConfiguration& c);

// min(1, exp(delta_log_weight))
double acceptance_probability(double delta_log_weight);

// Points on a ring of radius 1/sqrt(2) with a small deterministic jitter
// drawn from (seed, chain); optionally rotated rigidly by `rotation`.
GasConfiguration initial_configuration(unsigned n, std::uint64_t seed, unsigned chain,
                                       double rotation = 0.0);

struct SweepStats {
    unsigned proposals = 0;
    unsigned accepted = 0;
};

// One sweep = n single-particle isotropic Gaussian proposals of width
// `step`, each accepted with probability min(1, exp(delta log-weight)).
// The cached log-weight is updated incrementally (O(n) per move).
SweepStats metropolis_sweep(GasConfiguration& c, double step, Xoshiro256pp& rng);

struct MCParams {
    unsigned n = 2;
    std::uint64_t sweeps = 10000;  // measurement sweeps per chain
    unsigned chains = 4;
    std::uint64_t burn_in = 0;  // 0 = default (sweeps / 10)
    std::uint64_t seed = 1;
    double init_rotation = 0.0;  // rigid rotation of the initial ring
};

struct MCEstimate {
    double mean = 0.0;
    double stderr_ = 0.0;
    std::uint64_t n_sweeps = 0;  // measurement sweeps per chain
    unsigned n_chains = 0;
    std::uint64_t burn_in = 0;
    double acceptance_rate = 0.0;  // post burn-in
    std::uint64_t seed = 0;
    bool mixing_failure = false;  // chain means disagree beyond 6 sigma
};

MCEstimate estimate_energy(const MCParams& p);

}  // namespace dyson2d
