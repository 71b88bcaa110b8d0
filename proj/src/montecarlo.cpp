#include "dyson2d/montecarlo.hpp"

#include <cmath>
#include <future>
#include <stdexcept>

namespace dyson2d {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr std::uint64_t kResyncInterval = 1000;  // sweeps between cache re-syncs

std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
}  // namespace

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

Xoshiro256pp::Xoshiro256pp(std::uint64_t seed) {
    std::uint64_t sm = seed;
    for (auto& w : s_) w = splitmix64(sm);
}

std::uint64_t Xoshiro256pp::next() {
    const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
}

double Xoshiro256pp::uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

std::array<double, 2> Xoshiro256pp::gaussian_pair() {
    const double u1 = 1.0 - uniform01();  // in (0, 1]
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    return {r * std::cos(kTwoPi * u2), r * std::sin(kTwoPi * u2)};
}

double energy_observable(const GasConfiguration& c) {
    double e = 0.0;
    for (size_t i = 0; i < c.points.size(); ++i) {
        for (size_t j = i + 1; j < c.points.size(); ++j) {
            const double d2 = std::norm(c.points[i] - c.points[j]);
            if (d2 == 0.0) throw std::domain_error("energy_observable: coincident points");
            e += std::log(d2);
        }
    }
    return e;
}

double recompute_log_weight(const GasConfiguration& c) {
    double s2 = 0.0;
    for (const auto& z : c.points) s2 += std::norm(z);
    return energy_observable(c) - static_cast<double>(c.n()) * s2;
}

double acceptance_probability(double delta_log_weight) {
    return delta_log_weight >= 0.0 ? 1.0 : std::exp(delta_log_weight);
}

GasConfiguration initial_configuration(unsigned n, std::uint64_t seed, unsigned chain,
                                       double rotation) {
    if (n < 2) throw std::invalid_argument("initial_configuration: n must be >= 2");
    std::uint64_t sm = seed ^ (0xd1b54a32d192ed03ULL * (chain + 1));
    const double r0 = 1.0 / std::sqrt(2.0);
    GasConfiguration c;
    c.points.reserve(n);
    for (unsigned i = 0; i < n; ++i) {
        const double jr = (static_cast<double>(splitmix64(sm) >> 11) * 0x1.0p-53 - 0.5) * 0.02;
        const double ja = (static_cast<double>(splitmix64(sm) >> 11) * 0x1.0p-53 - 0.5) * 0.02;
        const double angle = kTwoPi * i / n + ja + rotation;
        const double radius = r0 * (1.0 + jr);
        c.points.emplace_back(radius * std::cos(angle), radius * std::sin(angle));
    }
    c.cached_log_weight = recompute_log_weight(c);
    return c;
}

SweepStats metropolis_sweep(GasConfiguration& c, double step, Xoshiro256pp& rng) {
    if (step <= 0.0) throw std::invalid_argument("metropolis_sweep: step must be > 0");
    const unsigned n = c.n();
    SweepStats stats;
    for (unsigned p = 0; p < n; ++p) {
        const auto g = rng.gaussian_pair();
        const double u = rng.uniform01();  // always drawn: keeps streams aligned
        const std::complex<double> old_z = c.points[p];
        const std::complex<double> new_z = old_z + std::complex<double>(step * g[0], step * g[1]);
        ++stats.proposals;

        double delta = -static_cast<double>(n) * (std::norm(new_z) - std::norm(old_z));
        bool coincident = false;
        for (unsigned j = 0; j < n; ++j) {
            if (j == p) continue;
            const double d2_new = std::norm(new_z - c.points[j]);
            if (d2_new == 0.0) { coincident = true; break; }
            delta += std::log(d2_new) - std::log(std::norm(old_z - c.points[j]));
        }
        if (coincident) continue;  // rejected outright

        if (delta >= 0.0 || u < std::exp(delta)) {
            c.points[p] = new_z;
            c.cached_log_weight += delta;
            ++stats.accepted;
        }
    }
    return stats;
}

namespace {

struct ChainResult {
    std::vector<double> batch_means;
    double mean = 0.0;
    double stderr_ = 0.0;
    double acceptance = 0.0;
};

ChainResult run_chain(const MCParams& p, unsigned chain, std::uint64_t burn_in) {
    std::uint64_t sm = p.seed;
    const std::uint64_t base = splitmix64(sm);
    std::uint64_t chain_seed_state = base + 0x9e3779b97f4a7c15ULL * (chain + 1);
    Xoshiro256pp rng(splitmix64(chain_seed_state));

    GasConfiguration cfg = initial_configuration(p.n, p.seed, chain, p.init_rotation);

    // burn-in with step adaptation toward acceptance 0.5
    double step = 0.5;
    const std::uint64_t adapt_block = 100;
    std::uint64_t block_prop = 0, block_acc = 0;
    for (std::uint64_t s = 0; s < burn_in; ++s) {
        const auto st = metropolis_sweep(cfg, step, rng);
        block_prop += st.proposals;
        block_acc += st.accepted;
        if ((s + 1) % adapt_block == 0) {
            const double acc = static_cast<double>(block_acc) / static_cast<double>(block_prop);
            if (acc > 0.55)
                step = std::min(step * 1.15, 10.0);
            else if (acc < 0.45)
                step = std::max(step / 1.15, 1e-4);
            block_prop = block_acc = 0;
        }
        if ((s + 1) % kResyncInterval == 0) cfg.cached_log_weight = recompute_log_weight(cfg);
    }

    // measurement with frozen step
    const unsigned n_batches = 32;
    const std::uint64_t batch_len = std::max<std::uint64_t>(p.sweeps / n_batches, 1);
    std::vector<double> batch_sum(n_batches, 0.0);
    std::vector<std::uint64_t> batch_count(n_batches, 0);
    std::uint64_t accepted = 0, proposals = 0;
    double total = 0.0;
    for (std::uint64_t s = 0; s < p.sweeps; ++s) {
        const auto st = metropolis_sweep(cfg, step, rng);
        accepted += st.accepted;
        proposals += st.proposals;
        if ((s + 1) % kResyncInterval == 0) cfg.cached_log_weight = recompute_log_weight(cfg);

        double s2 = 0.0;
        for (const auto& z : cfg.points) s2 += std::norm(z);
        const double obs = cfg.cached_log_weight + static_cast<double>(p.n) * s2;
        total += obs;
        const size_t b = std::min<std::uint64_t>(s / batch_len, n_batches - 1);
        batch_sum[b] += obs;
        ++batch_count[b];
    }

    ChainResult r;
    r.mean = total / static_cast<double>(p.sweeps);
    r.acceptance = static_cast<double>(accepted) / static_cast<double>(proposals);
    for (unsigned b = 0; b < n_batches; ++b)
        if (batch_count[b] > 0) r.batch_means.push_back(batch_sum[b] / batch_count[b]);
    double var = 0.0;
    for (double bm : r.batch_means) var += (bm - r.mean) * (bm - r.mean);
    const size_t nb = r.batch_means.size();
    if (nb > 1) r.stderr_ = std::sqrt(var / static_cast<double>(nb * (nb - 1)));
    return r;
}

}  // namespace

MCEstimate estimate_energy(const MCParams& p) {
    if (p.n < 2) throw std::invalid_argument("estimate_energy: n must be >= 2");
    if (p.sweeps < 10000) throw std::invalid_argument("estimate_energy: sweeps must be >= 10^4");
    if (p.chains < 1) throw std::invalid_argument("estimate_energy: chains must be >= 1");
    const std::uint64_t burn_in = (p.burn_in == 0) ? p.sweeps / 10 : p.burn_in;

    std::vector<std::future<ChainResult>> futures;
    futures.reserve(p.chains);
    for (unsigned c = 0; c < p.chains; ++c)
        futures.push_back(std::async(std::launch::async, run_chain, p, c, burn_in));
    std::vector<ChainResult> chains;
    chains.reserve(p.chains);
    for (auto& f : futures) chains.push_back(f.get());  // fixed chain order

    MCEstimate est;
    est.n_sweeps = p.sweeps;
    est.n_chains = p.chains;
    est.burn_in = burn_in;
    est.seed = p.seed;

    double mean = 0.0, acc = 0.0;
    for (const auto& c : chains) {
        mean += c.mean;
        acc += c.acceptance;
    }
    mean /= p.chains;
    est.mean = mean;
    est.acceptance_rate = acc / p.chains;

    std::vector<double> all_batches;
    for (const auto& c : chains)
        all_batches.insert(all_batches.end(), c.batch_means.begin(), c.batch_means.end());
    double var = 0.0;
    for (double bm : all_batches) var += (bm - mean) * (bm - mean);
    const size_t nb = all_batches.size();
    est.stderr_ = (nb > 1) ? std::sqrt(var / static_cast<double>(nb * (nb - 1))) : 0.0;

    for (unsigned a = 0; a < p.chains && !est.mixing_failure; ++a) {
        for (unsigned b = a + 1; b < p.chains; ++b) {
            const double gap = std::fabs(chains[a].mean - chains[b].mean);
            const double sigma = std::sqrt(chains[a].stderr_ * chains[a].stderr_ +
                                           chains[b].stderr_ * chains[b].stderr_);
            if (sigma > 0.0 && gap > 6.0 * sigma) {
                est.mixing_failure = true;
                break;
            }
        }
    }
    return est;
}

}  // namespace dyson2d
