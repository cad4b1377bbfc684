#include <algorithm>
#include <bit>
#include <cmath>
#include <ostream>
#include <string>

#include <json.hpp>

#include "shapiro/classes.hpp"
#include "shapiro/reference.hpp"
#include "shapiro/report.hpp"

namespace shapiro {

namespace {

class Recorder {
public:
    Recorder(VerifyReport& r, std::string suite) : r_(r), suite_(std::move(suite)) {}

    // Counts a check; records a violation when ok is false.
    bool check(bool ok, const std::string& name, const std::string& detail = {}) {
        ++r_.checks;
        if (!ok) {
            ++r_.failed;
            if (r_.violations.size() < kMaxRecorded) r_.violations.push_back({suite_, name, detail});
        }
        return ok;
    }

    void note(const std::string& s) { r_.notes.push_back(suite_ + ": " + s); }

private:
    static constexpr std::size_t kMaxRecorded = 1000;
    VerifyReport& r_;
    std::string suite_;
};

std::string num(std::uint64_t n) { return std::to_string(n); }

void verify_formula(std::uint64_t n_max, Workspace& ws, VerifyReport& rep) {
    Recorder rec(rep, "formula");
    const SpfTable& t = ws.spf(n_max);
    const HeightTable& ht = ws.heights(n_max);
    const auto lookup = ht.prime_lookup();

    for (std::uint64_t n = 1; n <= n_max; ++n) {
        const unsigned table = ht[n];
        const unsigned recursive = height_recursive(n, t);
        const unsigned formula = n == 1 ? 0 : height_formula(factorize(n, t), lookup);
        rec.check(table == recursive && recursive == formula, "oracle-equivalence",
                  "n=" + num(n) + " table=" + num(table) + " recursive=" + num(recursive) + " formula=" + num(formula));

        // n <= 2^k implies H(n) <= k.
        rec.check(table <= static_cast<unsigned>(std::bit_width(n - 1)) || n == 1, "power-of-two-ceiling",
                  "n=" + num(n));
        if (n >= 2) {
            rec.check(pillai_bounds(n).contains(table), "pillai-bounds", "n=" + num(n));
            if (t.is_prime(n)) rec.check(table == ht[n - 1] + 1, "prime-step", "p=" + num(n));
        }
        // The parity rules need m > 1: H(2) = 1 and H(3) = 2 break them at m = 1.
        if (n >= 2 && 2 * n <= n_max) {
            const unsigned want = n % 2 == 1 ? table : table + 1;
            rec.check(ht[2 * n] == want, "doubling", "m=" + num(n));
        }
        if (n >= 2 && n % 2 == 1 && 3 * n <= n_max) rec.check(ht[3 * n] == table + 1, "tripling", "m=" + num(n));
    }

    const std::uint64_t side = std::min<std::uint64_t>(1000, n_max / 2);
    for (std::uint64_t m = 2; m <= side; ++m) {
        for (std::uint64_t n = m; n <= side && m * n <= n_max; ++n) {
            rec.check(additivity_check(m, n, ht), "additivity", "m=" + num(m) + " n=" + num(n));
        }
    }
}

void verify_classes(std::uint64_t n_max, Workspace& ws, VerifyReport& rep) {
    Recorder rec(rep, "classes");
    const SpfTable& t = ws.spf(n_max);
    const HeightTable& ht = ws.heights(n_max);

    unsigned k_top = 0;
    while (class_upper_bound(k_top + 1) <= n_max) ++k_top;
    rec.note("classes complete in range for k <= " + num(k_top));

    const HatPrimeSet hats = hat_primes(std::max(k_top, 19u));
    {
        std::vector<unsigned> ks;
        std::vector<std::uint64_t> ps;
        for (const auto& h : hats.primes) {
            if (h.k > 19) break;
            ks.push_back(h.k);
            ps.push_back(h.p);
        }
        rec.check(std::equal(ks.begin(), ks.end(), reference::kHatHeightsTo19.begin(), reference::kHatHeightsTo19.end()),
                  "hat-heights", "heights <= 19 differ from the published list");
        rec.check(std::equal(ps.begin(), ps.end(), reference::kHatPrimesTo19.begin(), reference::kHatPrimesTo19.end()),
                  "hat-primes", "primes <= height 19 differ");
    }

    ClassGenerator restricted(PrimalityOracle(&t), Step3Mode::Restricted);
    ClassGenerator unrestricted(PrimalityOracle(&t), Step3Mode::Unrestricted);
    restricted.extend_to(k_top);
    unrestricted.extend_to(k_top);

    for (unsigned k = 0; k <= k_top; ++k) {
        const ShapiroClass table = classes_via_table(k, ht);
        rec.check(restricted.cls(k).elements == table.elements, "generate-vs-table",
                  "k=" + num(k) + " generated " + num(restricted.cls(k).size()) + " vs table " + num(table.size()));
        rec.check(unrestricted.cls(k).elements == table.elements, "generate-unrestricted-vs-table", "k=" + num(k));
        if (k >= 2) {
            rec.check(restricted.qset(k).primes == primes_at_height(k, ht, t).primes, "prime-set", "k=" + num(k));
        }
        for (const std::string& v : check_class_structure(k, ht, t, hats)) rec.check(false, "structure", v);
    }

    // Every n <= 2^k_top has height <= k_top, so the generated classes
    // partition [1, 2^k_top].
    const std::uint64_t span_top = std::uint64_t{1} << k_top;
    std::uint64_t covered = 0;
    for (unsigned k = 0; k <= k_top; ++k) {
        const auto& e = restricted.cls(k).elements;
        covered += static_cast<std::uint64_t>(std::upper_bound(e.begin(), e.end(), span_top) - e.begin());
    }
    rec.check(covered == span_top, "partition", "covered " + num(covered) + " of " + num(span_top));
}

void verify_bounds(std::uint64_t n_max, Workspace& ws, VerifyReport& rep) {
    Recorder rec(rep, "bounds");
    const HeightTable& ht = ws.heights(n_max);
    const PrimeIndex& idx = ws.primes_to(n_max);
    const BoundScanReport scan = chebyshev_scan(2, n_max, 1, ht, &idx, ws.estimator_constants());
    rep.checks += 3 * scan.points;
    for (const auto& v : scan.violations) {
        rec.check(false, v.rule, "n=" + num(v.n) + " value=" + std::to_string(v.value) + " bound=" +
                                     std::to_string(v.bound));
    }
    if (scan.pi_ratio_min) {
        rec.note("pi(n) S(n)/n^2 in [" + std::to_string(*scan.pi_ratio_min) + ", " +
                 std::to_string(*scan.pi_ratio_max) + "] over 3.." + num(n_max));
    }
    if (scan.pn_ratio_min) {
        rec.note("p_n/S(n) in [" + std::to_string(*scan.pn_ratio_min) + ", " + std::to_string(*scan.pn_ratio_max) +
                 "] over 3.." + num(scan.pn_checked_to));
    }
}

bool rel_close(double a, double b, double tol) { return std::abs(a - b) <= tol * std::abs(b); }

void verify_estimators(std::uint64_t n_max, Workspace& ws, VerifyReport& rep) {
    Recorder rec(rep, "estimators");
    // Gap rows need p_m well past n_max; size the prime index for them first
    // so the later primes_to() call reuses it.
    unsigned gap_rows = 0;
    while (gap_rows < reference::kGapAverage.size() && (std::uint64_t{2} << (gap_rows + 1)) + 1 <= n_max) ++gap_rows;
    if (gap_rows > 0) ws.primes_count((std::uint64_t{2} << gap_rows) + 1);

    const HeightTable& ht = ws.heights(n_max);
    const PrimeIndex& idx = ws.primes_to(n_max);
    const EstimatorConstants c = ws.estimator_constants();

    rec.check(std::abs(c.B - reference::kB) < 5e-7, "constant-B", std::to_string(c.B));
    rec.check(std::abs(c.beta - reference::kBeta) < 5e-6, "constant-beta", std::to_string(c.beta));
    rec.check(std::abs(std::exp(c.B) / 10 - reference::kExpBOver10) < 5e-6, "constant-eB/10", "");

    for (const auto& row : reference::kGVsLi) {
        if (row.n > n_max) break;
        const double g = g_estimate(row.n, ht, c, ws.options().g_term);
        const auto pi = idx.prime_pi(row.n);
        rec.check(pi == row.pi, "pi", "n=" + num(row.n));
        rec.check(static_cast<std::uint64_t>(std::floor(g)) == row.floor_g, "floor-G",
                  "n=" + num(row.n) + " G=" + std::to_string(g));
        rec.check(static_cast<std::uint64_t>(std::floor(log_integral(static_cast<double>(row.n)))) == row.floor_li,
                  "floor-li", "n=" + num(row.n));
        // pi - G is negative up to 10^3 and positive from 10^4.
        rec.check((static_cast<double>(pi) - g < 0) == (row.n <= 1000), "pi-minus-G-sign", "n=" + num(row.n));
    }
    for (const auto& row : reference::kSumVsNLogN) {
        if (row.n > n_max) break;
        rec.check(ht.sum(row.n) == row.height_sum, "S(10^j)", "n=" + num(row.n));
    }
    for (const auto& row : reference::kSHat) {
        if (row.n > n_max) continue;
        const double sh = s_hat(row.n, idx, c);
        rec.check(static_cast<std::uint64_t>(std::floor(sh)) == row.floor_s_hat, "floor-S-hat", "n=" + num(row.n));
        const double s = static_cast<double>(ht.sum(row.n));
        rec.check(std::abs(sh - s) / s < 0.01, "S-hat-within-1pct", "n=" + num(row.n));
    }

    for (unsigned k = 1; k <= gap_rows; ++k) {
        const double v = gap_average(k, idx, ht).value;
        rec.check(rel_close(v, reference::kGapAverage[k - 1], 1e-9), "gap-average",
                  "k=" + num(k) + " value=" + std::to_string(v));
    }

    std::vector<double> ratios;
    for (const auto& row : reference::kSumVsPnRandom) {
        if (row.n > n_max) break;
        const double x = static_cast<double>(row.n);
        const double r = static_cast<double>(ht.sum(row.n)) / (x * std::log(x));
        rec.check(std::abs(r - row.ratio_nlogn) < 5e-7, "S/(n log n)", "n=" + num(row.n) + " " + std::to_string(r));
        if (!ratios.empty()) rec.check(r > ratios.back(), "S/(n log n)-increasing", "n=" + num(row.n));
        ratios.push_back(r);
    }
}

}  // namespace

VerifyReport run_verify(std::string_view suite, std::uint64_t n_max, Workspace& ws) {
    if (std::find(std::begin(kSuites), std::end(kSuites), suite) == std::end(kSuites)) {
        throw DomainError("unknown verify suite '" + std::string(suite) + "'");
    }
    if (n_max < 2) throw DomainError("verify needs --nmax >= 2");
    VerifyReport rep;
    rep.suite = std::string(suite);
    rep.n_max = n_max;
    const bool all = suite == "all";
    if (all || suite == "formula") verify_formula(n_max, ws, rep);
    if (all || suite == "classes") verify_classes(n_max, ws, rep);
    if (all || suite == "bounds") verify_bounds(n_max, ws, rep);
    if (all || suite == "estimators") verify_estimators(n_max, ws, rep);
    return rep;
}

void write_verify_json(std::ostream& out, const VerifyReport& r) {
    nlohmann::ordered_json j;
    j["suite"] = r.suite;
    j["n_max"] = r.n_max;
    j["checks"] = r.checks;
    j["violation_count"] = r.failed;
    j["violations"] = nlohmann::ordered_json::array();
    for (const auto& v : r.violations) {
        j["violations"].push_back({{"suite", v.suite}, {"check", v.check}, {"detail", v.detail}});
    }
    j["notes"] = r.notes;
    out << j.dump(2) << '\n';
}

}  // namespace shapiro
