#include "shapiro/height.hpp"

#include <bit>
#include <cassert>
#include <cmath>
#include <numeric>
#include <string>

namespace shapiro {

unsigned height_recursive(std::uint64_t n, const SpfTable& t) {
    if (n == 0) throw DomainError("height is defined for n >= 1");
    if (n > t.n_max()) {
        throw RangeError("H(" + std::to_string(n) + ") needs sieve bound " + std::to_string(n), n);
    }
    unsigned steps = 0;
    while (n > 1) {
        n = euler_phi(n, t);
        ++steps;
    }
    return steps;
}

unsigned height_formula(const Factorization& f, const PrimeHeightLookup& prime_heights) {
    if (f.empty()) return 0;
    unsigned two_exp = 0;
    unsigned odd_part = 0;
    for (const auto& [p, e] : f) {
        if (p == 2) {
            two_exp = e;
            continue;
        }
        const auto hp = prime_heights(p);
        if (!hp) throw MissingPrimeHeightError("no height known for prime " + std::to_string(p));
        odd_part += e * (*hp - 1);
    }
    return two_exp > 0 ? two_exp + odd_part : odd_part + 1;
}

HeightTable HeightTable::build(std::uint64_t n_max, const SpfTable& t) {
    if (n_max == 0) throw DomainError("height table bound must be positive");
    if (n_max > t.n_max()) {
        throw RangeError("height table to " + std::to_string(n_max) + " needs sieve bound " + std::to_string(n_max),
                         n_max);
    }
    HeightTable ht;
    ht.h_.resize(n_max);
    ht.h_[0] = 0;
    for (std::uint64_t n = 2; n <= n_max; ++n) {
        const std::uint64_t phi = euler_phi(n, t);
        const unsigned h = ht.h_[phi - 1] + 1u;
        assert(h <= static_cast<unsigned>(std::bit_width(n)));
        ht.h_[n - 1] = static_cast<Height>(h);
    }
    ht.index_sums();
    return ht;
}

HeightTable HeightTable::from_payload(std::vector<Height> payload) {
    if (payload.empty()) throw DomainError("height payload is empty");
    HeightTable ht;
    ht.h_ = std::move(payload);
    ht.index_sums();
    return ht;
}

void HeightTable::index_sums() {
    block_sums_.assign(h_.size() / kBlock + 1, 0);
    std::uint64_t s = 0;
    for (std::uint64_t n = 1; n <= h_.size(); ++n) {
        s += h_[n - 1];
        if (n % kBlock == 0) block_sums_[n / kBlock] = s;
    }
}

unsigned HeightTable::at(std::uint64_t n) const {
    if (n == 0 || n > h_.size()) {
        throw RangeError("H(" + std::to_string(n) + ") outside height table [1, " + std::to_string(h_.size()) + "]",
                         n);
    }
    return h_[n - 1];
}

std::uint64_t HeightTable::sum(std::uint64_t n) const {
    if (n > h_.size()) {
        throw RangeError("S(" + std::to_string(n) + ") needs a height table to " + std::to_string(n) + " (have " +
                             std::to_string(h_.size()) + ")",
                         n);
    }
    const std::uint64_t b = n / kBlock;
    std::uint64_t s = block_sums_[b];
    for (std::uint64_t i = b * kBlock + 1; i <= n; ++i) s += h_[i - 1];
    return s;
}

PrimeHeightLookup HeightTable::prime_lookup() const {
    return [this](std::uint64_t p) -> std::optional<unsigned> {
        if (p < 2 || p > h_.size()) return std::nullopt;
        return h_[p - 2] + 1u;
    };
}

std::uint64_t sum_heights(std::uint64_t n, const HeightTable& ht) { return ht.sum(n); }

PillaiBounds pillai_bounds(std::uint64_t n) {
    if (n < 2) throw DomainError("Pillai bounds need n >= 2");
    const double x = static_cast<double>(n);
    return {std::log(x / 2) / std::log(3.0) + 1, std::log(x) / std::log(2.0) + 1};
}

bool additivity_check(std::uint64_t m, std::uint64_t n, const HeightTable& ht) {
    if (m < 2 || n < 2) throw DomainError("additivity rule applies to m, n >= 2");
    const std::uint64_t mn = checked_mul(m, n);
    if (mn > ht.n_max()) {
        throw RangeError("H(" + std::to_string(mn) + ") outside height table", mn);
    }
    const unsigned expected = (m % 2 == 0 && n % 2 == 0) ? ht[m] + ht[n] : ht[m] + ht[n] - 1;
    return ht[mn] == expected;
}

}  // namespace shapiro
