#include <cmath>
#include <string>

#include "shapiro/classes.hpp"
#include "shapiro/reference.hpp"
#include "shapiro/report.hpp"

namespace shapiro {

namespace {

Cell integer(std::uint64_t v) { return static_cast<std::int64_t>(v); }
Cell signed_diff(std::uint64_t a, std::uint64_t b) {
    return static_cast<std::int64_t>(a) - static_cast<std::int64_t>(b);
}

std::uint64_t floor_u64(double x) { return static_cast<std::uint64_t>(std::floor(x)); }

std::string join(const std::vector<std::uint64_t>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(v[i]);
    }
    return s;
}

std::vector<std::uint64_t> powers_of_ten(std::uint64_t limit) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t n = 10; n <= limit && n <= 10'000'000; n *= 10) out.push_back(n);
    return out;
}

std::uint64_t row_limit(Workspace& ws) {
    return ws.options().extended ? 10'000'000 : std::min<std::uint64_t>(ws.options().n_max, 10'000'000);
}

Document sum_vs_nlogn(Workspace& ws) {
    Document d{"s-vs-nlogn", "S(n) against floor(n log n)",
               {"n", "p_n", "S(n)", "S(n)-p_n", "floor(n log n)", "floor(n log n)-p_n", "(S(n)-p_n)/p_n %"},
               {}};
    const auto ns = powers_of_ten(row_limit(ws));
    if (ns.empty()) return d;
    const HeightTable& ht = ws.heights(ns.back());
    const PrimeIndex& idx = ws.primes_count(ns.back());
    for (const std::uint64_t n : ns) {
        const std::uint64_t p = idx.nth_prime(n);
        const std::uint64_t s = ht.sum(n);
        const std::uint64_t nlogn = floor_u64(static_cast<double>(n) * std::log(static_cast<double>(n)));
        const double rel = (static_cast<double>(s) - static_cast<double>(p)) / static_cast<double>(p) * 100.0;
        d.rows.push_back({integer(n), integer(p), integer(s), signed_diff(s, p), integer(nlogn),
                          signed_diff(nlogn, p), Real{rel, 3}});
    }
    return d;
}

Document class_listing(unsigned k_max, Workspace& ws) {
    Document d{"classes", "Shapiro classes C_k", {"k", "size", "elements", "primes"}, {}};
    const HeightTable& ht = ws.heights(class_upper_bound(k_max));
    const SpfTable& t = ws.spf(class_upper_bound(k_max));
    for (unsigned k = 0; k <= k_max; ++k) {
        const ShapiroClass c = classes_via_table(k, ht);
        std::vector<std::uint64_t> primes;
        for (const std::uint64_t n : c.elements) {
            if (t.is_prime(n)) primes.push_back(n);
        }
        d.rows.push_back({static_cast<std::int64_t>(k), integer(c.size()), join(c.elements), join(primes)});
    }
    return d;
}

Document g_vs_li(Workspace& ws) {
    Document d{"g-vs-li", "G(n) against Li(n)",
               {"n", "pi(n)", "floor(G(n))", "pi(n)-floor(G(n))", "floor(Li(n))", "pi(n)-floor(Li(n))",
                "(pi(n)-G(n))/pi(n) %"},
               {}};
    const auto ns = powers_of_ten(row_limit(ws));
    if (ns.empty()) return d;
    const HeightTable& ht = ws.heights(ns.back());
    const PrimeIndex& idx = ws.primes_to(ns.back());
    const EstimatorConstants c = ws.estimator_constants();
    for (const std::uint64_t n : ns) {
        const std::uint64_t pi = idx.prime_pi(n);
        const double g = g_estimate(n, ht, c, ws.options().g_term);
        const std::uint64_t li = floor_u64(log_integral(static_cast<double>(n)));
        const double rel = (static_cast<double>(pi) - g) / static_cast<double>(pi) * 100.0;
        d.rows.push_back({integer(n), integer(pi), integer(floor_u64(g)), signed_diff(pi, floor_u64(g)), integer(li),
                          signed_diff(pi, li), Real{rel, 2}});
    }
    return d;
}

Document sum_vs_pn_random(Workspace& ws) {
    const auto& rows = reference::kSumVsPnRandom;
    const std::uint64_t n_top = rows.back().n;
    if (!ws.options().extended) {
        throw RangeError("table s-vs-pn-random needs heights to " + std::to_string(n_top) + " and p_" +
                             std::to_string(n_top) + " (sieve bound " +
                             std::to_string(PrimeIndex::bound_for_nth(n_top)) + "); rerun with --extended",
                         PrimeIndex::bound_for_nth(n_top));
    }
    Document d{"s-vs-pn-random", "Comparison of S(n) with p_n at scattered n",
               {"n", "p_n", "S(n)", "S(n)-p_n", "S(n)/(n log n)", "(S(n)-p_n)/p_n %"},
               {}};
    const HeightTable& ht = ws.heights(n_top);
    const PrimeIndex& idx = ws.primes_count(n_top);
    for (const auto& r : rows) {
        const std::uint64_t p = idx.nth_prime(r.n);
        const std::uint64_t s = ht.sum(r.n);
        const double x = static_cast<double>(r.n);
        const double rel = (static_cast<double>(s) - static_cast<double>(p)) / static_cast<double>(p) * 100.0;
        d.rows.push_back({integer(r.n), integer(p), integer(s), signed_diff(s, p),
                          Real{static_cast<double>(s) / (x * std::log(x)), 6}, Real{rel, 2}});
    }
    return d;
}

Document s_hat_table(Workspace& ws) {
    Document d{"shat", "Comparison of S(n) with S-hat(n)",
               {"n", "S(n)", "floor(S-hat(n))", "S(n)-floor(S-hat(n))", "(S(n)-floor(S-hat(n)))/S(n) %"},
               {}};
    const bool ext = ws.options().extended;
    std::uint64_t top = 0;
    for (const auto& r : reference::kSHat) {
        if (!r.extended || ext) top = std::max(top, r.n);
    }
    const HeightTable& ht = ws.heights(top);
    const PrimeIndex& idx = ws.primes_to(top);
    const EstimatorConstants c = ws.estimator_constants();
    for (const auto& r : reference::kSHat) {
        if (r.extended && !ext) continue;
        const std::uint64_t s = ht.sum(r.n);
        const std::uint64_t sh = floor_u64(s_hat(r.n, idx, c));
        const double rel = (static_cast<double>(s) - static_cast<double>(sh)) / static_cast<double>(s) * 100.0;
        d.rows.push_back({integer(r.n), integer(s), integer(sh), signed_diff(s, sh), Real{rel, 5}});
    }
    return d;
}

Document gap_table(unsigned k_max, Workspace& ws) {
    Document d{"gaps", "Dyadic averages of prime gap over height", {"k", "S_Delta(k)"}, {}};
    if (k_max < 1) return d;
    const std::uint64_t need = (std::uint64_t{1} << (k_max + 1)) + 1;
    const HeightTable& ht = ws.heights(need);
    const PrimeIndex& idx = ws.primes_count(need);
    for (unsigned k = 1; k <= k_max; ++k) {
        d.rows.push_back({static_cast<std::int64_t>(k), Real{gap_average(k, idx, ht).value, -1}});
    }
    return d;
}

}  // namespace

Document build_table(const TableRequest& req, Workspace& ws) {
    if (req.id == "s-vs-nlogn") return sum_vs_nlogn(ws);
    if (req.id == "classes") return class_listing(req.k_max.value_or(6), ws);
    if (req.id == "g-vs-li") return g_vs_li(ws);
    if (req.id == "s-vs-pn-random") return sum_vs_pn_random(ws);
    if (req.id == "shat") return s_hat_table(ws);
    if (req.id == "gaps") {
        const unsigned k_max = req.k_max.value_or(18);
        if (k_max > 30) throw DomainError("gaps table supports k <= 30");
        return gap_table(k_max, ws);
    }
    throw DomainError("unknown table id '" + req.id + "'");
}

}  // namespace shapiro
