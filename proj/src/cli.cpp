#include "shapiro/cli.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "shapiro/cache.hpp"
#include "shapiro/classes.hpp"
#include "shapiro/report.hpp"

namespace shapiro {

namespace {

std::string join(const std::vector<std::uint64_t>& v, std::size_t limit = SIZE_MAX) {
    std::ostringstream s;
    const std::size_t n = std::min(limit, v.size());
    for (std::size_t i = 0; i < n; ++i) s << (i ? "," : "") << v[i];
    return s.str();
}

struct Args {
    // global
    std::optional<std::string> cache;
    std::optional<double> b;
    bool extended = false;
    std::optional<std::uint64_t> n_max;
    std::string g_term = "floored";

    std::uint64_t n = 0;
    unsigned k = 0;
    std::optional<std::size_t> limit;
    std::string id;
    std::string format = "csv";
    std::optional<unsigned> table_k_max;
    std::string suite;
    std::uint64_t verify_n_max = 100'000;
    std::optional<std::uint64_t> from, to;
    std::uint64_t cache_n_max = kDefaultSieveBound;
    std::string out_path;
};

ShapiroClass class_for_cli(unsigned k, Workspace& ws) {
    const std::uint64_t need = class_upper_bound(k);
    const bool fits = ws.options().extended ? need <= kDefaultMemoryGuard : need <= ws.options().n_max;
    if (fits) return classes_via_table(k, ws.heights(need));
    ClassGenerator gen(PrimalityOracle(&ws.spf(std::min<std::uint64_t>(ws.options().n_max, kDefaultSieveBound))));
    gen.extend_to(k);
    return gen.cls(k);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Iterated-totient heights, Shapiro classes and prime estimators", "hgt"};
    app.require_subcommand(1);
    app.fallthrough();

    Args a;
    app.add_option("--cache", a.cache, "Height-table cache file to read heights from");
    app.add_option("--b", a.b, "Scale constant b of the G and S-hat estimators");
    app.add_flag("--extended", a.extended, "Allow tables past the default bound (large memory)");
    app.add_option("--nmax", a.n_max, "Largest sieve / height table bound to build")->check(CLI::PositiveNumber);
    app.add_option("--g-term", a.g_term, "Second G term: floored (m^2/S(m)) or literal ((bn)^2/S(m))")
        ->check(CLI::IsMember({"floored", "literal"}));

    auto* height = app.add_subcommand("height", "Print H(N)");
    height->add_option("N", a.n)->required();
    auto* sum = app.add_subcommand("sum", "Print S(N)");
    sum->add_option("N", a.n)->required();
    auto* cls = app.add_subcommand("class", "Print the class C_K");
    cls->add_option("K", a.k)->required();
    cls->add_option("--limit", a.limit, "Print at most M elements");
    auto* qset = app.add_subcommand("qset", "Print the primes at height K");
    qset->add_option("K", a.k)->required();
    auto* hat = app.add_subcommand("hat", "List primes 2*3^(k-2)+1 for k <= KMAX");
    hat->add_option("KMAX", a.k)->required();
    auto* tail = app.add_subcommand("tail", "Print the largest members of C_K");
    tail->add_option("K", a.k)->required();

    auto* table = app.add_subcommand("table", "Reproduce a table");
    table->add_option("ID", a.id)->required()->check(
        CLI::IsMember(std::vector<std::string>(std::begin(kTableIds), std::end(kTableIds))));
    table->add_option("--format", a.format)->check(CLI::IsMember({"csv", "json", "md", "markdown"}));
    table->add_option("--kmax", a.table_k_max, "Last row for the classes and gaps tables");

    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("SUITE", a.suite)
        ->required()
        ->check(CLI::IsMember(std::vector<std::string>(std::begin(kSuites), std::end(kSuites))));
    verify->add_option("--nmax", a.verify_n_max)->check(CLI::Range(std::uint64_t{2}, kDefaultMemoryGuard));

    auto* plot = app.add_subcommand("plotdata", "Emit a plot series");
    plot->add_option("SERIES", a.id)->required()->check(
        CLI::IsMember(std::vector<std::string>(std::begin(kSeriesIds), std::end(kSeriesIds))));
    plot->add_option("--from", a.from);
    plot->add_option("--to", a.to);

    auto* cache = app.add_subcommand("cache", "Height-table cache files");
    cache->require_subcommand(1);
    auto* cache_build = cache->add_subcommand("build", "Build and write a cache");
    cache_build->add_option("--nmax", a.cache_n_max)->check(CLI::Range(std::uint64_t{2}, kDefaultMemoryGuard));
    cache_build->add_option("--out", a.out_path)->required();

    std::vector<std::string> rev(args.rbegin(), args.rend());
    if (!rev.empty()) rev.pop_back();
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    WorkspaceOptions opts;
    if (a.n_max) opts.n_max = *a.n_max;
    opts.extended = a.extended;
    if (a.b) opts.b = *a.b;
    opts.g_term = a.g_term == "literal" ? GTerm::Literal : GTerm::FlooredSquare;
    if (a.cache) opts.cache = *a.cache;
    opts.log = &err;
    if (verify->parsed()) opts.n_max = std::max(opts.n_max, a.verify_n_max);
    if (cache_build->parsed()) opts.n_max = std::max(opts.n_max, a.cache_n_max);

    try {
        Workspace ws(opts);
        constants(opts.b);  // rejects b outside (0, 1) up front

        if (height->parsed()) {
            out << ws.heights(a.n).at(a.n) << '\n';
        } else if (sum->parsed()) {
            out << ws.heights(std::max<std::uint64_t>(a.n, 1)).sum(a.n) << '\n';
        } else if (cls->parsed()) {
            out << join(class_for_cli(a.k, ws).elements, a.limit.value_or(SIZE_MAX)) << '\n';
        } else if (qset->parsed()) {
            const std::uint64_t need = a.k < 2 ? 2 : max_prime_bound(a.k);
            out << join(primes_at_height(a.k, ws.heights(need), ws.spf(need)).primes) << '\n';
        } else if (hat->parsed()) {
            for (const auto& h : hat_primes(a.k).primes) out << h.k << ',' << h.p << '\n';
        } else if (tail->parsed()) {
            if (a.k > kMaxHatHeight) throw RangeError("tail supports K <= 41", kMaxHatHeight);
            out << join(class_tail(a.k, hat_primes(a.k)).members) << '\n';
        } else if (table->parsed()) {
            const Document doc = build_table({a.id, a.table_k_max}, ws);
            write_document(out, doc, *parse_format(a.format));
        } else if (verify->parsed()) {
            const VerifyReport rep = run_verify(a.suite, a.verify_n_max, ws);
            write_verify_json(out, rep);
            return rep.ok() ? kExitOk : kExitViolation;
        } else if (plot->parsed()) {
            PlotRange r = default_plot_range(a.id);
            if (a.from) r.from = *a.from;
            if (a.to) r.to = *a.to;
            write_plot_data(out, a.id, r, ws);
        } else if (cache_build->parsed()) {
            const HeightTable& ht = ws.heights(a.cache_n_max);
            if (ht.n_max() != a.cache_n_max) {
                // A loaded --cache may be larger; write exactly the requested prefix.
                std::vector<Height> prefix(ht.payload().begin(), ht.payload().begin() + a.cache_n_max);
                cache_write(a.out_path, HeightTable::from_payload(std::move(prefix)));
            } else {
                cache_write(a.out_path, ht);
            }
            err << "wrote " << a.out_path << " (n_max " << a.cache_n_max << ")\n";
        }
    } catch (const Error& e) {
        err << "hgt: error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::bad_alloc&) {
        err << "hgt: error: out of memory\n";
        return kExitUsage;
    }
    out.flush();
    return kExitOk;
}

}  // namespace shapiro
