#pragma once
// Prime-number estimators built from the height sum S(n), and empirical
// scans of the inequalities relating S(n) to n, pi(n) and p_n.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "shapiro/arith.hpp"
#include "shapiro/height.hpp"

namespace shapiro {

inline constexpr double kDefaultB = 0.229962525551838;

struct EstimatorConstants {
    double gamma;  // Euler-Mascheroni
    double B;      // gamma / log 2
    double b;      // scale of the second G term, near e^B / 10
    double beta;   // log 2 / (2 log 3)
};

// DomainError unless 0 < b < 1.
EstimatorConstants constants(std::optional<double> b = std::nullopt);

// F(n) = n^2 / S(n), n > 1.
double f_ratio(std::uint64_t n, const HeightTable& ht);

// How the second term of G is squared. With m = floor(b n):
//   FlooredSquare: m^2 / S(m)       (reproduces the published G table)
//   Literal:       (b n)^2 / S(m)
enum class GTerm { FlooredSquare, Literal };

// G(n) = n^2/S(n) + second term; the second term is 0 when m < 2.
double g_estimate(std::uint64_t n, const HeightTable& ht, const EstimatorConstants& c,
                  GTerm term = GTerm::FlooredSquare);

// n^2 / sum_{k>=0} (-1)^k pi(floor(b^k n)), summing while b^k n >= 2.
// DomainError if the alternating sum is not positive.
double s_hat(std::uint64_t n, const PrimeIndex& idx, const EstimatorConstants& c);

struct GapAverageRow {
    unsigned k;
    double value;
};

// (1/2^k) sum over 2^k < m <= 2^(k+1) of (p_{m+1} - p_m) / H(m+1), summed in
// ascending m.
GapAverageRow gap_average(unsigned k, const PrimeIndex& idx, const HeightTable& ht);

struct BoundViolation {
    std::string rule;  // mean-log-lower, dyadic-mean-lower or dyadic-mean-upper
    std::uint64_t n;
    double value;
    double bound;
};

struct BoundScanReport {
    std::uint64_t n_lo = 0;
    std::uint64_t n_hi = 0;
    std::uint64_t stride = 1;
    std::uint64_t points = 0;

    // pi(n) S(n) / n^2 over grid points covered by the prime index.
    std::optional<double> pi_ratio_min, pi_ratio_max;
    std::uint64_t pi_ratio_argmin = 0, pi_ratio_argmax = 0;

    // p_n / S(n) over grid points n <= number of indexed primes.
    std::optional<double> pn_ratio_min, pn_ratio_max;
    std::uint64_t pn_ratio_argmin = 0, pn_ratio_argmax = 0;
    std::uint64_t pn_checked_to = 0;

    std::vector<BoundViolation> violations;
};

// Walks n = n_lo, n_lo+stride, ... <= n_hi. At every point asserts
//   S(n)/n >= log(n/2)/log 3                      (n > 1)
//   beta (k-2) <= S(n)/n <= k, 2^(k-1) < n <= 2^k
// and records the extrema of the Chebyshev-type ratios where idx covers n.
// RangeError if the height table does not reach n_hi.
BoundScanReport chebyshev_scan(std::uint64_t n_lo, std::uint64_t n_hi, std::uint64_t stride, const HeightTable& ht,
                               const PrimeIndex* idx, const EstimatorConstants& c);

}  // namespace shapiro
