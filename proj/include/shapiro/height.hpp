#pragma once
// The height H(n): the number of Euler-totient iterations taking n to 1,
// with H(1) = 0, and its running sum S(n) = H(1) + ... + H(n).

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "shapiro/arith.hpp"

namespace shapiro {

using Height = std::uint8_t;

// Iterates phi until 1 and counts the steps. Slow but definitional; the
// other height paths are checked against it.
unsigned height_recursive(std::uint64_t n, const SpfTable& t);

// Height of a prime, or nullopt when the caller does not know it.
using PrimeHeightLookup = std::function<std::optional<unsigned>(std::uint64_t)>;

// Closed form from the factorization n = 2^a * prod p_i^a_i:
//   a + sum a_i (H(p_i) - 1)        if a > 0
//   sum a_i (H(p_i) - 1) + 1        if a = 0
// The empty factorization (n = 1) has height 0. Throws
// MissingPrimeHeightError for an odd prime the lookup cannot resolve.
unsigned height_formula(const Factorization& f, const PrimeHeightLookup& prime_heights);

class HeightTable {
public:
    // h[n] = h[phi(n)] + 1 in increasing n; phi from the SPF factorization.
    static HeightTable build(std::uint64_t n_max, const SpfTable& t);

    // Adopts a payload where byte i-1 holds H(i). Does not re-derive heights;
    // callers that need integrity (the cache reader) check it first.
    static HeightTable from_payload(std::vector<Height> payload);

    std::uint64_t n_max() const noexcept { return h_.size(); }

    // H(n) for 1 <= n <= n_max.
    unsigned at(std::uint64_t n) const;
    unsigned operator[](std::uint64_t n) const noexcept { return h_[n - 1]; }

    // S(n) for 0 <= n <= n_max, from block checkpoints.
    std::uint64_t sum(std::uint64_t n) const;

    // Byte i-1 is H(i).
    std::span<const Height> payload() const noexcept { return h_; }

    // Prime height bootstrapped as H(p-1)+1 from the in-order table.
    PrimeHeightLookup prime_lookup() const;

private:
    HeightTable() = default;
    void index_sums();

    static constexpr std::uint64_t kBlock = 1024;

    std::vector<Height> h_;
    std::vector<std::uint64_t> block_sums_;  // block_sums_[b] = S(b * kBlock)
};

// S(n), the sum of heights up to n. RangeError past the table.
std::uint64_t sum_heights(std::uint64_t n, const HeightTable& ht);

struct PillaiBounds {
    double lower;
    double upper;

    bool contains(double h) const { return lower <= h && h <= upper; }
};

// (log(n/2)/log 3 + 1, log n/log 2 + 1); DomainError for n < 2.
PillaiBounds pillai_bounds(std::uint64_t n);

// Whether H(mn) agrees with the parity split of the sub-additivity rule:
// H(m) + H(n) if both are even, H(m) + H(n) - 1 otherwise. m, n >= 2.
bool additivity_check(std::uint64_t m, std::uint64_t n, const HeightTable& ht);

}  // namespace shapiro
