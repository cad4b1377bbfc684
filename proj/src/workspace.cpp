#include <algorithm>
#include <cmath>
#include <ostream>

#include "shapiro/cache.hpp"
#include "shapiro/report.hpp"

namespace shapiro {

Workspace::Workspace(WorkspaceOptions opts) : opts_(std::move(opts)) {}

std::uint64_t Workspace::table_cap() const { return opts_.extended ? kDefaultMemoryGuard : opts_.n_max; }

std::uint64_t Workspace::prime_cap() const {
    return opts_.extended ? kMaxSieveBound : std::max(opts_.prime_bound, opts_.n_max);
}

void Workspace::announce(const std::string& what, std::uint64_t bound, double bytes) const {
    if (opts_.log == nullptr || bound <= kDefaultSieveBound) return;
    *opts_.log << "allocating " << what << " to " << bound << " (~"
               << static_cast<std::uint64_t>(bytes / (1024.0 * 1024.0) + 0.5) << " MiB)\n";
}

namespace {

[[noreturn]] void beyond(const std::string& what, std::uint64_t need, std::uint64_t cap, bool extended) {
    std::string msg = what + " requires a bound of " + std::to_string(need) + " (limit " + std::to_string(cap) + ")";
    msg += extended ? "" : "; rerun with --nmax " + std::to_string(need) + " or --extended";
    throw RangeError(msg, need);
}

}  // namespace

const SpfTable& Workspace::spf(std::uint64_t need) {
    need = std::max<std::uint64_t>(need, 2);
    if (spf_ && spf_->n_max() >= need) return *spf_;
    if (need > table_cap()) beyond("sieve", need, table_cap(), opts_.extended);
    announce("smallest-prime-factor table", need, 4.0 * static_cast<double>(need));
    spf_ = std::make_unique<SpfTable>(SpfTable::build(need, std::max(table_cap(), need)));
    return *spf_;
}

const HeightTable& Workspace::heights(std::uint64_t need) {
    need = std::max<std::uint64_t>(need, 1);
    if (heights_ && heights_->n_max() >= need) return *heights_;
    if (!heights_ && opts_.cache) {
        heights_ = std::make_unique<HeightTable>(cache_read(*opts_.cache));
        if (heights_->n_max() >= need) return *heights_;
    }
    if (need > table_cap()) beyond("height table", need, table_cap(), opts_.extended);
    const SpfTable& t = spf(need);
    announce("height table", need, static_cast<double>(need));
    heights_ = std::make_unique<HeightTable>(HeightTable::build(need, t));
    return *heights_;
}

const PrimeIndex& Workspace::primes_to(std::uint64_t bound) {
    bound = std::max<std::uint64_t>(bound, 2);
    if (primes_ && primes_->bound() >= bound) return *primes_;
    if (spf_ && spf_->n_max() >= bound) {
        primes_ = std::make_unique<PrimeIndex>(PrimeIndex::from_spf(*spf_));
        return *primes_;
    }
    if (bound > prime_cap()) beyond("prime sieve", bound, prime_cap(), opts_.extended);
    // about bound / ln(bound) 32-bit entries
    announce("prime index", bound, 4.0 * static_cast<double>(bound) / std::log(static_cast<double>(bound)));
    primes_ = std::make_unique<PrimeIndex>(PrimeIndex::sieve(bound));
    return *primes_;
}

const PrimeIndex& Workspace::primes_count(std::uint64_t count) {
    if (primes_ && primes_->count() >= count) return *primes_;
    if (spf_ && spf_->primes().size() >= count) return primes_to(spf_->n_max());
    return primes_to(PrimeIndex::bound_for_nth(count));
}

}  // namespace shapiro
