#pragma once
// Reproduction tables, verification suites and plot series, all built over
// a Workspace that sizes and caches the underlying tables on demand.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "shapiro/arith.hpp"
#include "shapiro/estimators.hpp"
#include "shapiro/height.hpp"

namespace shapiro {

// ---------------------------------------------------------------------------
// Row model and writers

// A real cell printed with `decimals` fixed decimals, or 15 significant
// digits when decimals < 0.
struct Real {
    double value;
    int decimals = -1;
};

using Cell = std::variant<std::int64_t, Real, std::string>;

struct Document {
    std::string id;
    std::string title;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

enum class Format { Csv, Json, Markdown };

std::optional<Format> parse_format(std::string_view s);
std::string format_cell(const Cell& c);

// csv: RFC 4180 quoting. json: array of row objects. markdown: pipe table.
void write_document(std::ostream& out, const Document& doc, Format f);

// ---------------------------------------------------------------------------
// Workspace

inline constexpr std::uint64_t kDefaultSieveBound = 10'000'000;

struct WorkspaceOptions {
    // Largest SPF / height table built without --extended.
    std::uint64_t n_max = kDefaultSieveBound;
    // Largest prime-only sieve built without --extended (enough for p_{10^7}).
    std::uint64_t prime_bound = 200'000'000;
    bool extended = false;
    double b = kDefaultB;
    GTerm g_term = GTerm::FlooredSquare;
    std::optional<std::filesystem::path> cache;
    std::ostream* log = nullptr;  // memory estimates for large allocations
};

// Owns the tables a command needs and grows them on request. Each accessor
// throws RangeError naming the bound required when the request exceeds what
// the options allow.
class Workspace {
public:
    explicit Workspace(WorkspaceOptions opts);

    const WorkspaceOptions& options() const noexcept { return opts_; }
    EstimatorConstants estimator_constants() const { return constants(opts_.b); }

    const SpfTable& spf(std::uint64_t need);
    const HeightTable& heights(std::uint64_t need);
    // Prime index whose bound() >= bound.
    const PrimeIndex& primes_to(std::uint64_t bound);
    // Prime index holding at least count primes.
    const PrimeIndex& primes_count(std::uint64_t count);

private:
    std::uint64_t table_cap() const;
    std::uint64_t prime_cap() const;
    void announce(const std::string& what, std::uint64_t bound, double bytes) const;

    WorkspaceOptions opts_;
    std::unique_ptr<SpfTable> spf_;
    std::unique_ptr<HeightTable> heights_;
    std::unique_ptr<PrimeIndex> primes_;
};

// ---------------------------------------------------------------------------
// Tables

inline constexpr std::string_view kTableIds[] = {"s-vs-nlogn", "classes", "g-vs-li",
                                                 "s-vs-pn-random", "shat", "gaps"};

struct TableRequest {
    std::string id;
    std::optional<unsigned> k_max;  // classes (default 6) and gaps (default 18)
};

// DomainError for an unknown id; RangeError when the workspace cannot reach
// the rows (s-vs-pn-random always needs --extended).
Document build_table(const TableRequest& req, Workspace& ws);

// ---------------------------------------------------------------------------
// Verification

struct Violation {
    std::string suite;
    std::string check;
    std::string detail;
};

struct VerifyReport {
    std::string suite;
    std::uint64_t n_max = 0;
    std::uint64_t checks = 0;
    std::uint64_t failed = 0;
    std::vector<Violation> violations;  // first 1000 of `failed`
    std::vector<std::string> notes;

    bool ok() const noexcept { return failed == 0; }
};

inline constexpr std::string_view kSuites[] = {"all", "formula", "classes", "bounds", "estimators"};

VerifyReport run_verify(std::string_view suite, std::uint64_t n_max, Workspace& ws);
void write_verify_json(std::ostream& out, const VerifyReport& r);

// ---------------------------------------------------------------------------
// Plot data

struct PlotRange {
    std::uint64_t from;
    std::uint64_t to;
};

inline constexpr std::string_view kSeriesIds[] = {"s-vs-pn", "pi-vs-g", "pi-ratio-li"};

// Default ranges: s-vs-pn 1..5000, pi-vs-g 2..1000, pi-ratio-li 20..90000.
PlotRange default_plot_range(std::string_view series);

// Whitespace-separated columns with a '#' header line.
void write_plot_data(std::ostream& out, std::string_view series, PlotRange range, Workspace& ws);

}  // namespace shapiro
