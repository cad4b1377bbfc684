#pragma once
// Shapiro classes C_k = { n : H(n) = k }, the primes Q_k at each height, the
// primes of the form 2*3^(k-2)+1 ("hat primes") and the top-of-class
// structure they determine.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "shapiro/arith.hpp"
#include "shapiro/height.hpp"

namespace shapiro {

struct ShapiroClass {
    unsigned k = 0;
    std::vector<std::uint64_t> elements;  // strictly increasing
    bool partial = false;                 // table too small to hold all of C_k

    bool contains(std::uint64_t n) const;
    std::size_t size() const noexcept { return elements.size(); }
};

struct PrimeHeightSet {
    unsigned k = 0;
    std::vector<std::uint64_t> primes;  // increasing
};

struct HatPrime {
    std::uint64_t p;  // 2*3^(k-2) + 1
    unsigned k;       // H(p)

    friend bool operator==(const HatPrime&, const HatPrime&) = default;
};

// Hat primes for all heights 2..k_max; k_max records how far the list is
// known to be complete.
struct HatPrimeSet {
    unsigned k_max = 0;
    std::vector<HatPrime> primes;  // increasing in k
};

struct ClassTail {
    unsigned k = 0;
    std::vector<std::uint64_t> members;  // decreasing
};

// 2^(k-1) < n <= 2*3^(k-1) for every n in C_k, k >= 1; both ends checked.
std::uint64_t class_upper_bound(unsigned k);

// Largest possible prime at height k >= 2: 2*3^(k-2)+1.
std::uint64_t max_prime_bound(unsigned k);

// C_k by scanning the table. Flags the result partial when
// 2*3^(k-1) > ht.n_max().
ShapiroClass classes_via_table(unsigned k, const HeightTable& ht);

enum class Step3Mode {
    Restricted,    // only odd co-factors prime to 3
    Unrestricted,  // every element of the lower class
};

// Membership test for primes that the class generator may need beyond the
// sieve; falls back to is_prime_u64 when the SPF table is absent or short.
class PrimalityOracle {
public:
    PrimalityOracle() = default;
    explicit PrimalityOracle(const SpfTable* t) : table_(t) {}

    bool operator()(std::uint64_t n) const;

private:
    const SpfTable* table_ = nullptr;
};

// Builds C_k from C_0..C_{k-1} and Q_2..Q_{k-1}:
//   1. double the even elements of C_{k-1};
//   2. triple the odd elements of C_{k-1};
//   3. multiply C_{k-j} by Q_{j+1} for j = 2..k-1;
//   4. m+1 for even m in C_{k-1} with m+1 prime (these are Q_k);
//   5. double every odd number found.
// prior[i] must be C_i and qsets[i] must be Q_i (qsets[0], qsets[1] are Q_0,
// Q_1). k = 1 yields the seed {2}. Throws IncompletePriorError otherwise.
ShapiroClass generate_class(unsigned k, std::span<const ShapiroClass> prior, std::span<const PrimeHeightSet> qsets,
                            const PrimalityOracle& is_prime, Step3Mode mode = Step3Mode::Restricted);

// Runs generate_class for k = 0, 1, 2, ... and keeps the classes and their
// prime subsets. The element budget caps the total number of stored class
// members so runaway heights fail with CapacityError instead of exhausting
// memory.
class ClassGenerator {
public:
    static constexpr std::uint64_t kDefaultElementBudget = 200'000'000;

    explicit ClassGenerator(PrimalityOracle is_prime, Step3Mode mode = Step3Mode::Restricted,
                            std::uint64_t element_budget = kDefaultElementBudget);

    // Generates classes up to and including k.
    void extend_to(unsigned k);

    unsigned height_count() const noexcept { return static_cast<unsigned>(classes_.size()); }
    const ShapiroClass& cls(unsigned k) const { return classes_.at(k); }
    const PrimeHeightSet& qset(unsigned k) const { return qsets_.at(k); }

private:
    PrimalityOracle is_prime_;
    Step3Mode mode_;
    std::uint64_t budget_;
    std::uint64_t stored_ = 0;
    std::vector<ShapiroClass> classes_;
    std::vector<PrimeHeightSet> qsets_;
};

// All primes of height k. RangeError unless 2*3^(k-2)+1 <= ht.n_max().
PrimeHeightSet primes_at_height(unsigned k, const HeightTable& ht, const SpfTable& t);

inline constexpr unsigned kMaxHatHeight = 41;

// (p, k) for 2 <= k <= k_max with 2*3^(k-2)+1 prime. RangeError above 41.
HatPrimeSet hat_primes(unsigned k_max);

// { 2*3^(k-a) p : (p, a) hat prime, a <= k }, decreasing. Requires k > 2 and
// hats.k_max >= k.
ClassTail class_tail(unsigned k, const HatPrimeSet& hats);

// { 3^(k-a) p : (p, a) hat prime, a <= k }, decreasing: the largest odd
// members of C_k.
std::vector<std::uint64_t> largest_odd_sequence(unsigned k, const HatPrimeSet& hats);

// Elements of C_k in (4*3^(k-2), 2*3^(k-1)], decreasing, read from the table.
ClassTail tail_from_table(unsigned k, const HeightTable& ht);

// Every odd composite m in C_k with 3 not dividing m satisfies
// m < 2*3^(k-2)+1. Requires k > 2 and C_k complete in the table.
bool verify_odd_composite_bound(unsigned k, const HeightTable& ht, const SpfTable& t);

// Checks the extremal structure of C_k against the table: minimum even
// element, maximum odd element, maximum element, odd-below-2^k, max prime
// bound (with equality exactly at hat heights), tail identity and the
// odd-composite bound. Returns human-readable violations; empty when clean.
std::vector<std::string> check_class_structure(unsigned k, const HeightTable& ht, const SpfTable& t,
                                               const HatPrimeSet& hats);

}  // namespace shapiro
