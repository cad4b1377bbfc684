#pragma once
// Tables shared across test cases, built on first use.

#include "shapiro/arith.hpp"
#include "shapiro/height.hpp"

namespace fixture {

inline constexpr std::uint64_t kSmall = 1'000'000;
inline constexpr std::uint64_t kLarge = 10'000'000;

inline const shapiro::SpfTable& spf_small() {
    static const auto t = shapiro::SpfTable::build(kSmall);
    return t;
}

inline const shapiro::HeightTable& heights_small() {
    static const auto h = shapiro::HeightTable::build(kSmall, spf_small());
    return h;
}

inline const shapiro::SpfTable& spf_large() {
    static const auto t = shapiro::SpfTable::build(kLarge);
    return t;
}

inline const shapiro::HeightTable& heights_large() {
    static const auto h = shapiro::HeightTable::build(kLarge, spf_large());
    return h;
}

inline const shapiro::PrimeIndex& primes_large() {
    static const auto p = shapiro::PrimeIndex::from_spf(spf_large());
    return p;
}

}  // namespace fixture
