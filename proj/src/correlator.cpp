#include "dyson2d/correlator.hpp"

#include <algorithm>
#include <numeric>

namespace dyson2d {

Integer partition_beta1(unsigned n) {
    if (n < 1) throw std::invalid_argument("partition_beta1: n must be >= 1");
    Integer z(1);
    for (unsigned k = 1; k <= n; ++k) z *= factorial(k);
    return z;
}

Integer e_formula(const CorrelatorQuery& q) {
    if (q.n < 2) throw std::invalid_argument("e_formula: n must be >= 2");
    const unsigned long eps = q.eps;
    Integer total(0);
    for (unsigned long a = 0; a + 1 < q.n; ++a) {
        for (unsigned long b = a + 1; b < q.n; ++b) {
            // first inner sum: sum_i binom(eps,i)^2 * (eps-i+a)!/a! * (i+b)!/b!
            Integer first(0);
            for (unsigned long i = 0; i <= eps; ++i) {
                Integer c = binomial(eps, i);
                first += c * c * rising_factorial(a, eps - i) * rising_factorial(b, i);
            }
            // second inner sum, empty when b - a > eps
            Integer second(0);
            if (b - a <= eps) {
                for (unsigned long i = 0; i + (b - a) <= eps; ++i) {
                    second += binomial(eps, i) * binomial(eps, i + (b - a)) *
                              rising_factorial(a, eps - i) * rising_factorial(b, i);
                }
                if ((b - a) % 2 == 1) second = -second;
            }
            total += first - second;
        }
    }
    return total;
}

Integer e_oracle(const CorrelatorQuery& q) {
    if (q.n < 2) throw std::invalid_argument("e_oracle: n must be >= 2");
    if (q.n > 6 || q.eps > 4)
        throw LimitError("e_oracle: permutation expansion limited to n <= 6, eps <= 4");

    const unsigned n = q.n;
    const long eps = static_cast<long>(q.eps);

    std::vector<unsigned> sigma(n), tau(n);
    std::iota(sigma.begin(), sigma.end(), 0u);

    auto perm_sign = [](const std::vector<unsigned>& p) {
        int s = 1;
        for (size_t i = 0; i < p.size(); ++i)
            for (size_t j = i + 1; j < p.size(); ++j)
                if (p[i] > p[j]) s = -s;
        return s;
    };

    Integer total(0);
    do {
        const int sgn_sigma = perm_sign(sigma);
        std::iota(tau.begin(), tau.end(), 0u);
        do {
            // spectator particles 3..N must pair up exactly
            bool spectators_match = true;
            for (unsigned k = 2; k < n; ++k)
                if (sigma[k] != tau[k]) { spectators_match = false; break; }
            if (!spectators_match) continue;
            if (sigma[0] + sigma[1] != tau[0] + tau[1]) continue;  // total degree mismatch

            Integer spect(1);
            for (unsigned k = 2; k < n; ++k) spect *= factorial(sigma[k]);

            // expand |z1 - z2|^{2 eps}; the two moment deltas fix j = i - s0 + t0
            Integer inner(0);
            for (long i = 0; i <= eps; ++i) {
                const long j = i - static_cast<long>(sigma[0]) + static_cast<long>(tau[0]);
                if (j < 0 || j > eps) continue;
                Integer term = binomial(q.eps, static_cast<unsigned long>(i)) *
                               binomial(q.eps, static_cast<unsigned long>(j)) *
                               factorial(static_cast<unsigned long>(sigma[0] + eps - i)) *
                               factorial(static_cast<unsigned long>(sigma[1] + i));
                if ((i + j) % 2 == 1) term = -term;
                inner += term;
            }
            const int s = sgn_sigma * perm_sign(tau);
            Integer contribution = spect * inner;
            if (s < 0) contribution = -contribution;
            total += contribution;
        } while (std::next_permutation(tau.begin(), tau.end()));
    } while (std::next_permutation(sigma.begin(), sigma.end()));

    // e = N(N-1) / (2 Z_N) * total; must come out an exact integer
    Rational result = make_rational(total * Integer(n) * Integer(n - 1), Integer(2) * partition_beta1(n));
    if (result.get_den() != 1)
        throw std::logic_error("e_oracle: expansion did not reduce to an integer");
    return Integer(result.get_num());
}

std::vector<std::vector<Integer>> e_table(unsigned n_max, unsigned eps_max) {
    if (n_max < 2) throw std::invalid_argument("e_table: n_max must be >= 2");
    std::vector<std::vector<Integer>> rows;
    for (unsigned n = 2; n <= n_max; ++n) {
        std::vector<Integer> row;
        for (unsigned eps = 1; eps <= eps_max; ++eps) row.push_back(e_formula({n, eps}));
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace dyson2d
