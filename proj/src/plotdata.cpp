#include <cstdio>
#include <ostream>
#include <string>

#include "shapiro/report.hpp"

namespace shapiro {

PlotRange default_plot_range(std::string_view series) {
    if (series == "s-vs-pn") return {1, 5000};
    if (series == "pi-vs-g") return {2, 1000};
    if (series == "pi-ratio-li") return {20, 90000};
    throw DomainError("unknown plot series '" + std::string(series) + "'");
}

namespace {

std::string real(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

}  // namespace

void write_plot_data(std::ostream& out, std::string_view series, PlotRange range, Workspace& ws) {
    default_plot_range(series);  // validates the id
    if (range.from > range.to) throw DomainError("plot range is empty");

    if (series == "s-vs-pn") {
        if (range.from < 1) throw DomainError("s-vs-pn starts at n = 1");
        const HeightTable& ht = ws.heights(range.to);
        const PrimeIndex& idx = ws.primes_count(range.to);
        out << "# n p_n S(n)\n";
        std::uint64_t s = ht.sum(range.from - 1);
        for (std::uint64_t n = range.from; n <= range.to; ++n) {
            s += ht[n];
            out << n << ' ' << idx.nth_prime(n) << ' ' << s << '\n';
        }
        return;
    }

    if (range.from < 2) throw DomainError(std::string(series) + " starts at n = 2");
    const HeightTable& ht = ws.heights(range.to);
    const PrimeIndex& idx = ws.primes_to(range.to);
    const EstimatorConstants c = ws.estimator_constants();
    const GTerm term = ws.options().g_term;

    if (series == "pi-vs-g") {
        out << "# n pi(n) G(n)\n";
        for (std::uint64_t n = range.from; n <= range.to; ++n) {
            out << n << ' ' << idx.prime_pi(n) << ' ' << real(g_estimate(n, ht, c, term)) << '\n';
        }
        return;
    }

    out << "# n pi(n)/G(n) pi(n)/li(n)\n";
    for (std::uint64_t n = range.from; n <= range.to; ++n) {
        const auto pi = static_cast<double>(idx.prime_pi(n));
        out << n << ' ' << real(pi / g_estimate(n, ht, c, term)) << ' '
            << real(pi / log_integral(static_cast<double>(n))) << '\n';
    }
}

}  // namespace shapiro
