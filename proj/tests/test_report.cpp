#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "shapiro/reference.hpp"
#include "shapiro/report.hpp"

using namespace shapiro;

namespace {

std::string render(const Document& d, Format f) {
    std::ostringstream s;
    write_document(s, d, f);
    return s.str();
}


}  // namespace

TEST_CASE("formats") {
    CHECK(parse_format("csv") == Format::Csv);
    CHECK(parse_format("json") == Format::Json);
    CHECK(parse_format("md") == Format::Markdown);
    CHECK(parse_format("markdown") == Format::Markdown);
    CHECK_FALSE(parse_format("xml"));

    CHECK(format_cell(std::int64_t{-5}) == "-5");
    CHECK(format_cell(Real{1.16666666666667}) == "1.16666666666667");
    CHECK(format_cell(Real{0.0467, 2}) == "0.05");
    CHECK(format_cell(std::string("x")) == "x");
}

TEST_CASE("document writers") {
    const Document d{"t", "Title", {"a", "b,c"}, {{std::int64_t{1}, std::string("say \"hi\"")}, {Real{2.5, 1}, std::string("p\nq")}}};
    CHECK(render(d, Format::Csv) == "a,\"b,c\"\r\n1,\"say \"\"hi\"\"\"\r\n2.5,\"p\nq\"\r\n");

    const auto j = nlohmann::json::parse(render(d, Format::Json));
    REQUIRE(j.is_array());
    CHECK(j.size() == 2);
    CHECK(j[0]["a"] == 1);
    CHECK(j[0]["b,c"] == "say \"hi\"");
    CHECK(j[1]["a"] == 2.5);

    const std::string md = render(d, Format::Markdown);
    CHECK(md.find("| a | b,c |") != std::string::npos);
    CHECK(md.find("|---|---|") != std::string::npos);
    CHECK(md.find("| 1 | say \"hi\" |") != std::string::npos);
}

TEST_CASE("workspace limits") {
    WorkspaceOptions o;
    o.n_max = 1000;
    o.prime_bound = 5000;
    Workspace ws(o);
    CHECK(ws.heights(10).n_max() >= 10);
    CHECK(ws.heights(1000).at(486) == 6);
    try {
        ws.heights(1001);
        FAIL("expected RangeError");
    } catch (const RangeError& e) {
        CHECK(e.required_bound() == 1001);
        CHECK(std::string(e.what()).find("1001") != std::string::npos);
    }
    CHECK(ws.primes_to(5000).prime_pi(5000) == 669);
    CHECK_THROWS_AS(ws.primes_to(5001), RangeError);
    CHECK(ws.primes_count(669).nth_prime(669) == 4999);
    CHECK_THROWS_AS(ws.primes_count(10000), RangeError);
}

TEST_CASE("tables") {
    WorkspaceOptions o;
    o.n_max = 1'000'000;
    Workspace ws(o);

    SUBCASE("s-vs-nlogn") {
        const auto d = build_table({"s-vs-nlogn", {}}, ws);
        REQUIRE(d.rows.size() == 6);
        for (std::size_t i = 0; i < d.rows.size(); ++i) {
            const auto& ref = reference::kSumVsNLogN[i];
            CHECK(std::get<std::int64_t>(d.rows[i][0]) == static_cast<std::int64_t>(ref.n));
            CHECK(std::get<std::int64_t>(d.rows[i][1]) == static_cast<std::int64_t>(ref.nth_prime));
            CHECK(std::get<std::int64_t>(d.rows[i][2]) == static_cast<std::int64_t>(ref.height_sum));
            CHECK(std::get<std::int64_t>(d.rows[i][4]) == static_cast<std::int64_t>(ref.floor_nlogn));
            CHECK(std::get<std::int64_t>(d.rows[i][3]) ==
                  static_cast<std::int64_t>(ref.height_sum) - static_cast<std::int64_t>(ref.nth_prime));
        }
    }
    SUBCASE("g-vs-li") {
        const auto d = build_table({"g-vs-li", {}}, ws);
        REQUIRE(d.rows.size() == 6);
        const auto& row = d.rows[4];
        CHECK(std::get<std::int64_t>(row[0]) == 100000);
        CHECK(std::get<std::int64_t>(row[1]) == 9592);
        CHECK(std::get<std::int64_t>(row[2]) == 9547);
        CHECK(std::get<std::int64_t>(row[4]) == 9629);
        CHECK(std::get<std::int64_t>(row[3]) == 45);
        CHECK(std::get<std::int64_t>(row[5]) == -37);
    }
    SUBCASE("classes") {
        const auto d = build_table({"classes", 3}, ws);
        REQUIRE(d.rows.size() == 4);
        CHECK(std::get<std::string>(d.rows[2][2]) == "3 4 6");
        CHECK(std::get<std::string>(d.rows[2][3]) == "3");
        CHECK(std::get<std::string>(d.rows[3][2]) == "5 7 8 9 10 12 14 18");
        CHECK(std::get<std::string>(d.rows[3][3]) == "5 7");
        CHECK(std::get<std::string>(d.rows[0][3]).empty());
    }
    SUBCASE("gaps") {
        const auto d = build_table({"gaps", {}}, ws);
        REQUIRE(d.rows.size() == 18);
        const double v = std::get<Real>(d.rows[11][1]).value;
        CHECK(std::abs(v - 1.00132388905581) < 1e-9 * 1.00132388905581);
        CHECK_THROWS_AS(build_table({"gaps", 31}, ws), DomainError);
        CHECK(build_table({"gaps", 0}, ws).rows.empty());
    }
    SUBCASE("shat") {
        const auto d = build_table({"shat", {}}, ws);
        REQUIRE(d.rows.size() == 4);
        CHECK(std::get<std::int64_t>(d.rows[3][2]) == 9181418);
        CHECK(std::get<std::int64_t>(d.rows[0][1]) == 7569);
    }
    SUBCASE("random values need --extended") {
        CHECK_THROWS_AS(build_table({"s-vs-pn-random", {}}, ws), RangeError);
    }
    SUBCASE("unknown id") {
        CHECK_THROWS_AS(build_table({"nope", {}}, ws), DomainError);
    }
}

TEST_CASE("verify suites") {
    WorkspaceOptions o;
    o.n_max = 100'000;
    Workspace ws(o);
    for (const char* suite : {"formula", "classes", "bounds", "estimators"}) {
        const auto r = run_verify(suite, 100'000, ws);
        INFO(suite);
        CHECK(r.ok());
        CHECK(r.checks > 0);
        CHECK(r.violations.empty());
    }
    CHECK_THROWS_AS(run_verify("bogus", 1000, ws), DomainError);
    CHECK_THROWS_AS(run_verify("all", 1, ws), DomainError);

    std::ostringstream s;
    write_verify_json(s, run_verify("formula", 1000, ws));
    const auto j = nlohmann::json::parse(s.str());
    CHECK(j["suite"] == "formula");
    CHECK(j["violation_count"] == 0);
    CHECK(j["violations"].empty());
}

TEST_CASE("plot data") {
    WorkspaceOptions o;
    o.n_max = 100'000;
    Workspace ws(o);
    CHECK(default_plot_range("pi-ratio-li").from == 20);
    CHECK(default_plot_range("pi-ratio-li").to == 90000);
    CHECK_THROWS_AS(default_plot_range("x"), DomainError);

    SUBCASE("s-vs-pn") {
        std::ostringstream s;
        write_plot_data(s, "s-vs-pn", default_plot_range("s-vs-pn"), ws);
        std::istringstream in(s.str());
        std::string line;
        std::getline(in, line);
        CHECK(line[0] == '#');
        std::size_t rows = 0;
        std::uint64_t n = 0, p = 0, sum = 0;
        while (in >> n >> p >> sum) ++rows;
        CHECK(rows == 5000);
        CHECK(n == 5000);
        CHECK(p == 48611);
        CHECK(sum == ws.heights(5000).sum(5000));
    }
    SUBCASE("pi-vs-g tracks pi except at 9 and 10") {
        std::ostringstream s;
        write_plot_data(s, "pi-vs-g", default_plot_range("pi-vs-g"), ws);
        std::istringstream in(s.str());
        std::string line;
        std::getline(in, line);
        std::uint64_t n = 0, pi = 0;
        double g = 0;
        std::size_t rows = 0;
        double worst = 0;
        while (in >> n >> pi >> g) {
            ++rows;
            const double d = std::abs(static_cast<double>(pi) - g);
            if (n == 9) {
                CHECK(g == doctest::Approx(81.0 / 19 + 4.0));
            } else if (n == 10) {
                CHECK(g == doctest::Approx(100.0 / 22 + 4.0));
            } else {
                worst = std::max(worst, d);
            }
        }
        CHECK(rows == 999);
        CHECK(worst <= 4.0);
    }
    SUBCASE("pi-ratio-li at the end of the default range") {
        std::ostringstream s;
        write_plot_data(s, "pi-ratio-li", {90000, 90000}, ws);
        std::istringstream in(s.str());
        std::string line;
        std::getline(in, line);
        std::uint64_t n = 0;
        double rg = 0, rl = 0;
        REQUIRE(static_cast<bool>(in >> n >> rg >> rl));
        CHECK(n == 90000);
        CHECK(rg > 0.98);
        CHECK(rg < 1.02);
        CHECK(rl > 0.98);
        CHECK(rl < 1.02);
    }
    SUBCASE("bad ranges") {
        std::ostringstream s;
        CHECK_THROWS_AS(write_plot_data(s, "pi-vs-g", {1, 10}, ws), DomainError);
        CHECK_THROWS_AS(write_plot_data(s, "pi-vs-g", {10, 5}, ws), DomainError);
        CHECK_THROWS_AS(write_plot_data(s, "s-vs-pn", {0, 5}, ws), DomainError);
        CHECK_THROWS_AS(write_plot_data(s, "pi-vs-g", {2, 200'000}, ws), RangeError);
    }
}
