#include "shapiro/classes.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace shapiro {

namespace {

std::string range_msg(unsigned k, std::uint64_t need, std::uint64_t have) {
    return "height " + std::to_string(k) + " needs a height table to " + std::to_string(need) + " (have " +
           std::to_string(have) + ")";
}

void sort_unique(std::vector<std::uint64_t>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

// Requires C_k to be fully inside the table.
void require_complete(unsigned k, const HeightTable& ht) {
    const std::uint64_t need = class_upper_bound(k);
    if (need > ht.n_max()) throw RangeError(range_msg(k, need, ht.n_max()), need);
}

}  // namespace

bool ShapiroClass::contains(std::uint64_t n) const {
    return std::binary_search(elements.begin(), elements.end(), n);
}

std::uint64_t class_upper_bound(unsigned k) {
    if (k == 0) return 1;
    return checked_mul(2, checked_pow(3, k - 1));
}

std::uint64_t max_prime_bound(unsigned k) {
    if (k < 2) throw DomainError("max prime bound is defined for k >= 2");
    return checked_add(checked_mul(2, checked_pow(3, k - 2)), 1);
}

ShapiroClass classes_via_table(unsigned k, const HeightTable& ht) {
    ShapiroClass c;
    c.k = k;
    std::uint64_t top = ht.n_max();
    // 2*3^(k-1) overflows well before any table could hold it.
    try {
        const std::uint64_t ub = class_upper_bound(k);
        if (ub <= top) {
            top = ub;
        } else {
            c.partial = true;
        }
    } catch (const OverflowError&) {
        c.partial = true;
    }
    for (std::uint64_t n = 1; n <= top; ++n) {
        if (ht[n] == k) c.elements.push_back(n);
    }
    return c;
}

bool PrimalityOracle::operator()(std::uint64_t n) const {
    if (table_ != nullptr && n <= table_->n_max()) return table_->is_prime(n);
    return is_prime_u64(n);
}

ShapiroClass generate_class(unsigned k, std::span<const ShapiroClass> prior, std::span<const PrimeHeightSet> qsets,
                            const PrimalityOracle& is_prime, Step3Mode mode) {
    ShapiroClass out;
    out.k = k;
    if (k == 0) {
        out.elements = {1};
        return out;
    }
    if (k == 1) {
        // 1 is odd, so the m+1 rule never fires from C_0; 2 is seeded.
        out.elements = {2};
        return out;
    }
    if (prior.size() < k || qsets.size() < k) {
        throw IncompletePriorError("generating C_" + std::to_string(k) + " needs C_0..C_" + std::to_string(k - 1) +
                                   " and Q_0..Q_" + std::to_string(k - 1));
    }
    for (unsigned i = 0; i < k; ++i) {
        if (prior[i].k != i || prior[i].partial) {
            throw IncompletePriorError("prior class " + std::to_string(i) + " is missing or partial");
        }
        if (qsets[i].k != i) throw IncompletePriorError("prime set Q_" + std::to_string(i) + " is missing");
    }

    const ShapiroClass& below = prior[k - 1];
    std::vector<std::uint64_t> found;

    // Step 4 first: its output is Q_k, which step 3 needs when j = k-1.
    std::vector<std::uint64_t> new_primes;
    for (const std::uint64_t m : below.elements) {
        if (m % 2 == 0 && is_prime(m + 1)) new_primes.push_back(m + 1);
    }

    for (const std::uint64_t m : below.elements) {
        if (m % 2 == 0) {
            found.push_back(checked_mul(m, 2));  // step 1
        } else {
            found.push_back(checked_mul(m, 3));  // step 2
        }
    }

    // Step 3.
    for (unsigned j = 2; j <= k - 1; ++j) {
        const ShapiroClass& lower = prior[k - j];
        const std::vector<std::uint64_t>& primes = (j + 1 == k) ? new_primes : qsets[j + 1].primes;
        for (const std::uint64_t x : lower.elements) {
            if (mode == Step3Mode::Restricted && (x % 2 == 0 || x % 3 == 0)) continue;
            for (const std::uint64_t p : primes) found.push_back(checked_mul(x, p));
        }
    }

    found.insert(found.end(), new_primes.begin(), new_primes.end());

    // Step 5.
    const std::size_t before_doubling = found.size();
    for (std::size_t i = 0; i < before_doubling; ++i) {
        if (found[i] % 2 == 1) found.push_back(checked_mul(found[i], 2));
    }

    sort_unique(found);
    out.elements = std::move(found);
    return out;
}

ClassGenerator::ClassGenerator(PrimalityOracle is_prime, Step3Mode mode, std::uint64_t element_budget)
    : is_prime_(is_prime), mode_(mode), budget_(element_budget) {}

void ClassGenerator::extend_to(unsigned k) {
    while (classes_.size() <= k) {
        const auto next = static_cast<unsigned>(classes_.size());
        ShapiroClass c = generate_class(next, classes_, qsets_, is_prime_, mode_);
        stored_ += c.size();
        if (stored_ > budget_) {
            throw CapacityError("class generation to height " + std::to_string(next) + " exceeds the budget of " +
                                std::to_string(budget_) + " stored elements");
        }
        PrimeHeightSet q;
        q.k = next;
        if (next == 1) {
            q.primes = {2};
        } else if (next >= 2) {
            for (const std::uint64_t n : c.elements) {
                if (n % 2 == 1 && is_prime_(n)) q.primes.push_back(n);
            }
        }
        classes_.push_back(std::move(c));
        qsets_.push_back(std::move(q));
    }
}

PrimeHeightSet primes_at_height(unsigned k, const HeightTable& ht, const SpfTable& t) {
    PrimeHeightSet q;
    q.k = k;
    if (k == 0) return q;
    const std::uint64_t need = k == 1 ? 2 : max_prime_bound(k);
    const std::uint64_t have = std::min(ht.n_max(), t.n_max());
    if (need > have) throw RangeError(range_msg(k, need, have), need);
    for (const std::uint32_t p : t.primes()) {
        if (p > need) break;
        if (ht[p] == k) q.primes.push_back(p);
    }
    return q;
}

HatPrimeSet hat_primes(unsigned k_max) {
    if (k_max > kMaxHatHeight) {
        throw RangeError("hat primes are enumerated only up to height " + std::to_string(kMaxHatHeight), kMaxHatHeight);
    }
    HatPrimeSet set;
    set.k_max = k_max;
    for (unsigned k = 2; k <= k_max; ++k) {
        const std::uint64_t p = max_prime_bound(k);
        if (is_prime_u64(p)) set.primes.push_back({p, k});
    }
    return set;
}

namespace {

void require_hats(unsigned k, const HatPrimeSet& hats) {
    if (k <= 2) throw DomainError("class tails are defined for k > 2");
    if (hats.k_max < k) {
        throw RangeError("hat primes known only to height " + std::to_string(hats.k_max) + ", need " +
                             std::to_string(k),
                         k);
    }
}

}  // namespace

ClassTail class_tail(unsigned k, const HatPrimeSet& hats) {
    require_hats(k, hats);
    ClassTail tail;
    tail.k = k;
    for (const auto& [p, a] : hats.primes) {
        if (a > k) break;
        tail.members.push_back(checked_mul(checked_mul(2, checked_pow(3, k - a)), p));
    }
    std::sort(tail.members.begin(), tail.members.end(), std::greater<>());
    return tail;
}

std::vector<std::uint64_t> largest_odd_sequence(unsigned k, const HatPrimeSet& hats) {
    require_hats(k, hats);
    std::vector<std::uint64_t> seq;
    for (const auto& [p, a] : hats.primes) {
        if (a > k) break;
        seq.push_back(checked_mul(checked_pow(3, k - a), p));
    }
    std::sort(seq.begin(), seq.end(), std::greater<>());
    return seq;
}

ClassTail tail_from_table(unsigned k, const HeightTable& ht) {
    if (k <= 2) throw DomainError("class tails are defined for k > 2");
    require_complete(k, ht);
    ClassTail tail;
    tail.k = k;
    const std::uint64_t lo = checked_mul(4, checked_pow(3, k - 2));
    for (std::uint64_t n = class_upper_bound(k); n > lo; --n) {
        if (ht[n] == k) tail.members.push_back(n);
    }
    return tail;
}

bool verify_odd_composite_bound(unsigned k, const HeightTable& ht, const SpfTable& t) {
    if (k <= 2) throw DomainError("odd composite bound is stated for k > 2");
    require_complete(k, ht);
    const std::uint64_t bound = max_prime_bound(k);
    const std::uint64_t top = class_upper_bound(k);
    for (std::uint64_t m = 9; m <= top; m += 2) {
        if (ht[m] != k || m % 3 == 0 || t.is_prime(m)) continue;
        if (m >= bound) return false;
    }
    return true;
}

std::vector<std::string> check_class_structure(unsigned k, const HeightTable& ht, const SpfTable& t,
                                               const HatPrimeSet& hats) {
    std::vector<std::string> bad;
    auto fail = [&](const std::string& what) { bad.push_back("C_" + std::to_string(k) + ": " + what); };

    const ShapiroClass c = classes_via_table(k, ht);
    if (c.partial) throw RangeError(range_msg(k, class_upper_bound(k), ht.n_max()), class_upper_bound(k));
    if (k == 0) {
        if (c.elements != std::vector<std::uint64_t>{1}) fail("C_0 is not {1}");
        return bad;
    }

    const std::uint64_t two_k = checked_pow(2, k);
    const std::uint64_t top = class_upper_bound(k);

    std::optional<std::uint64_t> min_even;
    std::optional<std::uint64_t> max_odd;
    for (const std::uint64_t n : c.elements) {
        if (n <= two_k / 2 || n > top) fail(std::to_string(n) + " outside (2^(k-1), 2*3^(k-1)]");
        if (n % 2 == 0) {
            if (!min_even) min_even = n;
        } else {
            max_odd = n;
        }
        if (n < two_k && n % 2 == 0) fail("even element " + std::to_string(n) + " below 2^k");
    }
    if (min_even != two_k) fail("minimum even element is not 2^k");
    if (c.elements.empty() || c.elements.back() != top) fail("maximum element is not 2*3^(k-1)");
    if (k >= 2 && max_odd != checked_pow(3, k - 1)) fail("maximum odd element is not 3^(k-1)");

    if (k >= 2) {
        const PrimeHeightSet q = primes_at_height(k, ht, t);
        const std::uint64_t bound = max_prime_bound(k);
        const bool hat_height = hats.k_max >= k && std::any_of(hats.primes.begin(), hats.primes.end(),
                                                               [k](const HatPrime& h) { return h.k == k; });
        if (q.primes.empty()) {
            fail("no primes at this height");
        } else {
            if (q.primes.back() > bound) fail("largest prime " + std::to_string(q.primes.back()) + " exceeds bound");
            if (hats.k_max >= k && (q.primes.back() == bound) != hat_height) {
                fail("largest prime meets 2*3^(k-2)+1 iff hat height: mismatch");
            }
        }
    }

    if (k > 2) {
        if (tail_from_table(k, ht).members != class_tail(k, hats).members) fail("tail differs from hat-prime form");
        if (!verify_odd_composite_bound(k, ht, t)) fail("odd composite not divisible by 3 reaches 2*3^(k-2)+1");

        const auto odd_seq = largest_odd_sequence(k, hats);
        std::vector<std::uint64_t> top_odds;
        for (auto it = c.elements.rbegin(); it != c.elements.rend() && top_odds.size() < odd_seq.size(); ++it) {
            if (*it % 2 == 1) top_odds.push_back(*it);
        }
        if (top_odds != odd_seq) fail("largest odd elements differ from hat-prime form");
    }
    return bad;
}

}  // namespace shapiro
