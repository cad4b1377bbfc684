#include "shapiro/arith.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace shapiro {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r = 0;
    if (__builtin_mul_overflow(a, b, &r)) {
        throw OverflowError("64-bit overflow in " + std::to_string(a) + " * " + std::to_string(b));
    }
    return r;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r = 0;
    if (__builtin_add_overflow(a, b, &r)) {
        throw OverflowError("64-bit overflow in " + std::to_string(a) + " + " + std::to_string(b));
    }
    return r;
}

std::uint64_t checked_pow(std::uint64_t base, unsigned exp) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < exp; ++i) r = checked_mul(r, base);
    return r;
}

std::uint64_t expand(const Factorization& f) {
    std::uint64_t n = 1;
    for (const auto& [p, e] : f) n = checked_mul(n, checked_pow(p, e));
    return n;
}

// ---------------------------------------------------------------------------
// SpfTable

SpfTable SpfTable::build(std::uint64_t n_max, std::uint64_t memory_guard) {
    if (n_max < 2) throw DomainError("sieve bound must be at least 2");
    if (n_max > memory_guard || n_max > kMaxSieveBound) {
        throw CapacityError("sieve bound " + std::to_string(n_max) + " exceeds the memory guard of " +
                            std::to_string(std::min(memory_guard, kMaxSieveBound)) + " entries");
    }

    SpfTable t;
    t.n_max_ = n_max;
    t.spf_.assign(n_max + 1, 0);
    if (n_max > 100) {
        const double est = static_cast<double>(n_max) / (std::log(static_cast<double>(n_max)) - 1.1);
        t.primes_.reserve(static_cast<std::size_t>(est));
    }

    // Linear sieve: every composite i*p is written exactly once, by its
    // smallest prime factor p.
    auto& spf = t.spf_;
    auto& primes = t.primes_;
    for (std::uint64_t i = 2; i <= n_max; ++i) {
        if (spf[i] == 0) {
            spf[i] = static_cast<std::uint32_t>(i);
            primes.push_back(static_cast<std::uint32_t>(i));
        }
        const std::uint32_t lim = spf[i];
        for (const std::uint32_t p : primes) {
            if (p > lim) break;
            const std::uint64_t m = i * p;
            if (m > n_max) break;
            spf[m] = p;
        }
    }
    return t;
}

std::uint32_t SpfTable::spf(std::uint64_t n) const {
    if (n < 2 || n > n_max_) {
        throw RangeError("spf(" + std::to_string(n) + ") outside sieve range [2, " + std::to_string(n_max_) + "]",
                         n);
    }
    return spf_[n];
}

bool SpfTable::is_prime(std::uint64_t n) const {
    if (n < 2) return false;
    return spf(n) == n;
}

Factorization factorize(std::uint64_t n, const SpfTable& t) {
    if (n > t.n_max()) {
        throw RangeError("cannot factor " + std::to_string(n) + " with sieve bound " + std::to_string(t.n_max()), n);
    }
    if (n < 2) throw DomainError("factorize requires n >= 2");
    Factorization f;
    while (n > 1) {
        const std::uint32_t p = t.spf(n);
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        f.push_back({p, e});
    }
    return f;
}

std::uint64_t euler_phi(std::uint64_t n, const SpfTable& t) {
    if (n == 0) throw DomainError("euler_phi requires n >= 1");
    if (n > t.n_max()) {
        throw RangeError("euler_phi(" + std::to_string(n) + ") beyond sieve bound " + std::to_string(t.n_max()), n);
    }
    std::uint64_t phi = n;
    while (n > 1) {
        const std::uint32_t p = t.spf(n);
        phi = phi / p * (p - 1);
        while (n % p == 0) n /= p;
    }
    return phi;
}

// ---------------------------------------------------------------------------
// PrimeIndex

PrimeIndex PrimeIndex::from_spf(const SpfTable& t) {
    PrimeIndex idx;
    idx.bound_ = t.n_max();
    idx.primes_.assign(t.primes().begin(), t.primes().end());
    return idx;
}

PrimeIndex PrimeIndex::sieve(std::uint64_t bound, std::uint64_t memory_guard) {
    if (bound > memory_guard || bound > kMaxSieveBound) {
        throw CapacityError("prime sieve bound " + std::to_string(bound) + " exceeds the guard of " +
                            std::to_string(std::min(memory_guard, kMaxSieveBound)));
    }
    PrimeIndex idx;
    idx.bound_ = bound;
    if (bound < 2) return idx;
    if (bound > 100) {
        const double b = static_cast<double>(bound);
        idx.primes_.reserve(static_cast<std::size_t>(b / (std::log(b) - 1.1)));
    }
    idx.primes_.push_back(2);

    // Base primes up to sqrt(bound).
    std::uint64_t root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(bound)));
    while (root * root > bound) --root;
    while ((root + 1) * (root + 1) <= bound) ++root;
    std::vector<std::uint8_t> small(root + 1, 1);
    std::vector<std::uint64_t> base;
    for (std::uint64_t i = 3; i <= root; i += 2) {
        if (!small[i]) continue;
        base.push_back(i);
        for (std::uint64_t j = i * i; j <= root; j += 2 * i) small[j] = 0;
    }

    // Segments over odd numbers: slot s of a segment starting at odd `lo`
    // stands for lo + 2s.
    constexpr std::uint64_t kSegment = 1 << 18;
    std::vector<std::uint8_t> seg(kSegment);
    std::vector<std::uint64_t> next(base.size());
    for (std::size_t i = 0; i < base.size(); ++i) next[i] = base[i] * base[i];

    for (std::uint64_t lo = 3; lo <= bound; lo += 2 * kSegment) {
        const std::uint64_t hi = std::min(bound, lo + 2 * kSegment - 1);
        const std::uint64_t slots = (hi - lo) / 2 + 1;
        std::fill(seg.begin(), seg.begin() + static_cast<std::ptrdiff_t>(slots), 1);
        for (std::size_t i = 0; i < base.size(); ++i) {
            const std::uint64_t p = base[i];
            std::uint64_t m = next[i];
            for (; m <= hi; m += 2 * p) seg[(m - lo) / 2] = 0;
            next[i] = m;
        }
        for (std::uint64_t s = 0; s < slots; ++s) {
            if (seg[s]) idx.primes_.push_back(static_cast<std::uint32_t>(lo + 2 * s));
        }
    }
    return idx;
}

std::uint64_t PrimeIndex::bound_for_nth(std::uint64_t n) {
    if (n < 6) return 13;
    const double x = static_cast<double>(n);
    return static_cast<std::uint64_t>(std::ceil(x * (std::log(x) + std::log(std::log(x))))) + 1;
}

std::uint64_t PrimeIndex::prime_pi(std::uint64_t x) const {
    if (x > bound_) {
        throw RangeError("pi(" + std::to_string(x) + ") needs a prime sieve bound of at least " + std::to_string(x) +
                             " (have " + std::to_string(bound_) + ")",
                         x);
    }
    return static_cast<std::uint64_t>(std::upper_bound(primes_.begin(), primes_.end(), x) - primes_.begin());
}

std::uint64_t PrimeIndex::nth_prime(std::uint64_t n) const {
    if (n == 0) throw DomainError("nth_prime is 1-indexed");
    if (n > primes_.size()) {
        const std::uint64_t need = bound_for_nth(n);
        throw RangeError("p_" + std::to_string(n) + " needs a prime sieve bound of " + std::to_string(need) +
                             " (have " + std::to_string(bound_) + ")",
                         need);
    }
    return primes_[n - 1];
}

// ---------------------------------------------------------------------------

double log_integral(double x) {
    if (!(x > 1.0)) throw DomainError("log_integral requires x > 1");
    const double lx = std::log(x);
    const double head = kEulerGamma + std::log(lx);
    double series = 0.0;
    double power = 1.0;  // lx^k / k!
    for (int k = 1; k < 2000; ++k) {
        power *= lx / k;
        const double term = power / k;
        series += term;
        if (k > lx && term < 1e-12 * std::abs(head + series)) break;
    }
    return head + series;
}

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
    // The first twelve primes as witnesses are deterministic below 3.3e24.
    static constexpr std::uint64_t kBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    if (n < 2) return false;
    for (const std::uint64_t p : kBases) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (const std::uint64_t a : kBases) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

}  // namespace shapiro
