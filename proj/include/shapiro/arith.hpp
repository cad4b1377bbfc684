#pragma once
// Arithmetic substrate: smallest-prime-factor sieve, factorization, Euler's
// totient, prime counting / indexing, the logarithmic integral and a
// deterministic 64-bit primality test.
//
// Tables are built once and are immutable afterwards; every query is const
// and safe to call concurrently.

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "shapiro/error.hpp"

namespace shapiro {

// Largest sieve bound accepted unless the caller raises it.
inline constexpr std::uint64_t kDefaultMemoryGuard = 2'000'000'000ULL;

// Table entries are 32-bit, which caps every sieve bound here.
inline constexpr std::uint64_t kMaxSieveBound = std::numeric_limits<std::uint32_t>::max();

// Checked 64-bit arithmetic; throws OverflowError instead of wrapping.
std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b);
std::uint64_t checked_add(std::uint64_t a, std::uint64_t b);
std::uint64_t checked_pow(std::uint64_t base, unsigned exp);

struct PrimePower {
    std::uint64_t prime;
    unsigned exponent;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Canonical factorization: primes strictly increasing, exponents >= 1.
// The empty factorization stands for 1.
using Factorization = std::vector<PrimePower>;

std::uint64_t expand(const Factorization& f);

class SpfTable {
public:
    // Linear sieve over [2, n_max]. Throws CapacityError when n_max exceeds
    // memory_guard (or the 32-bit entry limit) and DomainError for n_max < 2.
    static SpfTable build(std::uint64_t n_max, std::uint64_t memory_guard = kDefaultMemoryGuard);

    std::uint64_t n_max() const noexcept { return n_max_; }

    // Smallest prime factor of n, 2 <= n <= n_max.
    std::uint32_t spf(std::uint64_t n) const;
    bool is_prime(std::uint64_t n) const;

    // Every prime <= n_max, increasing; a by-product of the linear sieve.
    std::span<const std::uint32_t> primes() const noexcept { return primes_; }

private:
    SpfTable() = default;

    std::uint64_t n_max_ = 0;
    std::vector<std::uint32_t> spf_;
    std::vector<std::uint32_t> primes_;
};

Factorization factorize(std::uint64_t n, const SpfTable& t);
std::uint64_t euler_phi(std::uint64_t n, const SpfTable& t);

// Sorted prime list supporting pi(x) and p_n queries up to a bound.
class PrimeIndex {
public:
    static PrimeIndex from_spf(const SpfTable& t);

    // Segmented sieve of Eratosthenes up to bound; used when only primes (not
    // factorizations) are needed beyond the SPF range.
    static PrimeIndex sieve(std::uint64_t bound, std::uint64_t memory_guard = kMaxSieveBound);

    // Smallest bound guaranteed to contain the n-th prime (Rosser-type
    // upper estimate), for sizing a sieve before calling nth_prime.
    static std::uint64_t bound_for_nth(std::uint64_t n);

    std::uint64_t bound() const noexcept { return bound_; }
    std::uint64_t count() const noexcept { return primes_.size(); }
    std::span<const std::uint32_t> primes() const noexcept { return primes_; }

    // Number of primes <= x. RangeError when x > bound().
    std::uint64_t prime_pi(std::uint64_t x) const;

    // The n-th prime, 1-indexed. RangeError naming the sieve bound needed.
    std::uint64_t nth_prime(std::uint64_t n) const;

private:
    PrimeIndex() = default;

    std::uint64_t bound_ = 0;
    std::vector<std::uint32_t> primes_;
};

// Principal-value logarithmic integral li(x) = PV int_0^x dt/ln t, evaluated
// with gamma + ln ln x + sum (ln x)^k / (k k!). DomainError for x <= 1.
double log_integral(double x);

// Deterministic Miller-Rabin over the first twelve prime bases.
bool is_prime_u64(std::uint64_t n);

inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;

}  // namespace shapiro
