#include "shapiro/estimators.hpp"

#include <bit>
#include <cmath>
#include <string>

namespace shapiro {

EstimatorConstants constants(std::optional<double> b) {
    const double bv = b.value_or(kDefaultB);
    if (!(bv > 0.0 && bv < 1.0)) throw DomainError("b must lie in (0, 1), got " + std::to_string(bv));
    EstimatorConstants c;
    c.gamma = kEulerGamma;
    c.B = kEulerGamma / std::log(2.0);
    c.b = bv;
    c.beta = std::log(2.0) / (2.0 * std::log(3.0));
    return c;
}

double f_ratio(std::uint64_t n, const HeightTable& ht) {
    if (n <= 1) throw DomainError("F(n) needs n > 1");
    const double x = static_cast<double>(n);
    return x * x / static_cast<double>(ht.sum(n));
}

double g_estimate(std::uint64_t n, const HeightTable& ht, const EstimatorConstants& c, GTerm term) {
    if (n < 2) throw DomainError("G(n) needs n >= 2");
    double g = f_ratio(n, ht);
    const double bn = c.b * static_cast<double>(n);
    const auto m = static_cast<std::uint64_t>(std::floor(bn));
    if (m >= 2) {
        const double num = term == GTerm::FlooredSquare ? static_cast<double>(m) * static_cast<double>(m) : bn * bn;
        g += num / static_cast<double>(ht.sum(m));
    }
    return g;
}

double s_hat(std::uint64_t n, const PrimeIndex& idx, const EstimatorConstants& c) {
    if (n < 2) throw DomainError("S-hat needs n >= 2");
    const double x = static_cast<double>(n);
    std::int64_t alt = 0;
    for (int k = 0;; ++k) {
        const double scaled = std::pow(c.b, k) * x;
        if (scaled < 2.0) break;
        const auto pi = static_cast<std::int64_t>(idx.prime_pi(static_cast<std::uint64_t>(std::floor(scaled))));
        alt += (k % 2 == 0) ? pi : -pi;
    }
    if (alt <= 0) throw DomainError("alternating prime-count sum is not positive at n = " + std::to_string(n));
    return x * x / static_cast<double>(alt);
}

GapAverageRow gap_average(unsigned k, const PrimeIndex& idx, const HeightTable& ht) {
    if (k < 1 || k > 31) throw DomainError("gap average defined here for 1 <= k <= 31");
    const std::uint64_t lo = std::uint64_t{1} << k;
    const std::uint64_t hi = lo << 1;
    if (idx.count() < hi + 1) {
        const std::uint64_t need = PrimeIndex::bound_for_nth(hi + 1);
        throw RangeError("gap average k=" + std::to_string(k) + " needs p_" + std::to_string(hi + 1) +
                             ", i.e. a prime sieve bound of " + std::to_string(need),
                         need);
    }
    if (ht.n_max() < hi + 1) {
        throw RangeError("gap average k=" + std::to_string(k) + " needs heights to " + std::to_string(hi + 1),
                         hi + 1);
    }
    double total = 0.0;
    for (std::uint64_t m = lo + 1; m <= hi; ++m) {
        const auto gap = static_cast<double>(idx.nth_prime(m + 1) - idx.nth_prime(m));
        total += gap / static_cast<double>(ht[m + 1]);
    }
    return {k, total / static_cast<double>(lo)};
}

BoundScanReport chebyshev_scan(std::uint64_t n_lo, std::uint64_t n_hi, std::uint64_t stride, const HeightTable& ht,
                               const PrimeIndex* idx, const EstimatorConstants& c) {
    if (stride == 0) throw DomainError("scan stride must be positive");
    if (n_lo < 1 || n_lo > n_hi) throw DomainError("scan range must satisfy 1 <= n_lo <= n_hi");
    if (n_hi > ht.n_max()) {
        throw RangeError("scan to " + std::to_string(n_hi) + " needs heights to " + std::to_string(n_hi), n_hi);
    }

    BoundScanReport r;
    r.n_lo = n_lo;
    r.n_hi = n_hi;
    r.stride = stride;

    const double log3 = std::log(3.0);
    std::uint64_t s = ht.sum(n_lo);
    std::uint64_t at = n_lo;
    for (std::uint64_t n = n_lo; n <= n_hi; n += stride) {
        while (at < n) s += ht[++at];
        ++r.points;
        const double x = static_cast<double>(n);
        const double mean = static_cast<double>(s) / x;

        if (n > 1) {
            const double lower = std::log(x / 2.0) / log3;
            if (mean < lower) r.violations.push_back({"mean-log-lower", n, mean, lower});
        }
        // 2^(k-1) < n <= 2^k.
        const auto k = static_cast<unsigned>(std::bit_width(n - 1));
        const double lo_bound = c.beta * (static_cast<double>(k) - 2.0);
        if (mean < lo_bound) r.violations.push_back({"dyadic-mean-lower", n, mean, lo_bound});
        if (s > static_cast<std::uint64_t>(k) * n) {
            r.violations.push_back({"dyadic-mean-upper", n, mean, static_cast<double>(k)});
        }

        if (idx != nullptr && n > 2) {
            if (n <= idx->bound()) {
                const double ratio = static_cast<double>(idx->prime_pi(n)) * static_cast<double>(s) / (x * x);
                if (!r.pi_ratio_min || ratio < *r.pi_ratio_min) {
                    r.pi_ratio_min = ratio;
                    r.pi_ratio_argmin = n;
                }
                if (!r.pi_ratio_max || ratio > *r.pi_ratio_max) {
                    r.pi_ratio_max = ratio;
                    r.pi_ratio_argmax = n;
                }
            }
            if (n <= idx->count()) {
                const double ratio = static_cast<double>(idx->nth_prime(n)) / static_cast<double>(s);
                if (!r.pn_ratio_min || ratio < *r.pn_ratio_min) {
                    r.pn_ratio_min = ratio;
                    r.pn_ratio_argmin = n;
                }
                if (!r.pn_ratio_max || ratio > *r.pn_ratio_max) {
                    r.pn_ratio_max = ratio;
                    r.pn_ratio_argmax = n;
                }
                r.pn_checked_to = n;
            }
        }
        if (n_hi - n < stride) break;
    }
    return r;
}

}  // namespace shapiro
