#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <iterator>
#include <sstream>

#include <json.hpp>

#include "shapiro/cli.hpp"

using namespace shapiro;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run hgt(std::vector<std::string> args) {
    args.insert(args.begin(), "hgt");
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("point queries") {
    CHECK(hgt({"height", "6"}).out == "2\n");
    CHECK(hgt({"height", "17"}).out == "5\n");
    CHECK(hgt({"sum", "9"}).out == "19\n");
    CHECK(hgt({"sum", "0"}).out == "0\n");
    CHECK(hgt({"class", "2"}).out == "3,4,6\n");
    CHECK(hgt({"class", "0"}).out == "1\n");
    CHECK(hgt({"class", "4", "--limit", "3"}).out == "11,13,15\n");
    CHECK(hgt({"qset", "5"}).out == "17,23,29,31,37,43\n");
    CHECK(hgt({"qset", "1"}).out == "2\n");
    CHECK(hgt({"tail", "6"}).out == "486,378,342,326\n");
    CHECK(hgt({"hat", "8"}).out == "2,3\n3,7\n4,19\n6,163\n7,487\n8,1459\n");
}

TEST_CASE("class beyond the table falls back to the generator") {
    const auto r = hgt({"--nmax", "1000", "class", "8", "--limit", "4"});
    CHECK(r.code == kExitOk);
    CHECK(r.out == "137,167,179,187\n");
}

TEST_CASE("usage and range errors exit 2") {
    const auto big = hgt({"height", "20000000"});
    CHECK(big.code == kExitUsage);
    CHECK(big.err.find("20000000") != std::string::npos);
    CHECK(hgt({"height", "0"}).code == kExitUsage);
    CHECK(hgt({}).code == kExitUsage);
    CHECK(hgt({"frobnicate"}).code == kExitUsage);
    CHECK(hgt({"height"}).code == kExitUsage);
    CHECK(hgt({"height", "abc"}).code == kExitUsage);
    CHECK(hgt({"--b", "1.5", "height", "3"}).code == kExitUsage);
    CHECK(hgt({"--g-term", "other", "height", "3"}).code == kExitUsage);
    CHECK(hgt({"table", "nope"}).code == kExitUsage);
    CHECK(hgt({"table", "gaps", "--format", "xml"}).code == kExitUsage);
    CHECK(hgt({"table", "s-vs-pn-random"}).code == kExitUsage);
    CHECK(hgt({"tail", "2"}).code == kExitUsage);
    CHECK(hgt({"tail", "42"}).code == kExitUsage);
    CHECK(hgt({"hat", "42"}).code == kExitUsage);
    CHECK(hgt({"verify", "nope"}).code == kExitUsage);
    CHECK(hgt({"cache", "build"}).code == kExitUsage);
    CHECK(hgt({"--help"}).code == kExitOk);
}

TEST_CASE("table output") {
    const auto csv = hgt({"table", "gaps", "--kmax", "2"});
    CHECK(csv.code == kExitOk);
    CHECK(csv.out == "k,S_Delta(k)\r\n1,1.16666666666667\r\n2,1.08333333333333\r\n");

    const auto js = hgt({"table", "classes", "--kmax", "2", "--format", "json"});
    const auto j = nlohmann::json::parse(js.out);
    CHECK(j.size() == 3);
    CHECK(j[2]["elements"] == "3 4 6");

    const auto md = hgt({"table", "classes", "--kmax", "1", "--format", "md"});
    CHECK(md.out.find("| k | size | elements | primes |") != std::string::npos);
}

TEST_CASE("verify exit codes") {
    const auto ok = hgt({"verify", "formula", "--nmax", "100000"});
    CHECK(ok.code == kExitOk);
    const auto j = nlohmann::json::parse(ok.out);
    CHECK(j["violation_count"] == 0);

    // A cache whose heights were tampered with (checksum recomputed) fails verification.
    const fs::path p = fs::temp_directory_path() / "hgt_cli_verify.bin";
    REQUIRE(hgt({"cache", "build", "--nmax", "5000", "--out", p.string()}).code == kExitOk);
    {
        std::fstream f(p, std::ios::in | std::ios::out | std::ios::binary);
        std::vector<char> b((std::istreambuf_iterator<char>(f)), {});
        b[16 + 99] = 9;  // H(100)
        std::uint64_t h = 0xcbf29ce484222325ULL;
        for (std::size_t i = 16; i < 16 + 5000; ++i) h = (h ^ static_cast<unsigned char>(b[i])) * 0x100000001b3ULL;
        for (int i = 0; i < 8; ++i) b[16 + 5000 + i] = static_cast<char>(h >> (8 * i));
        f.seekp(0);
        f.write(b.data(), static_cast<std::streamsize>(b.size()));
    }
    const auto bad = hgt({"--cache", p.string(), "verify", "formula", "--nmax", "5000"});
    CHECK(bad.code == kExitViolation);
    const auto jb = nlohmann::json::parse(bad.out);
    CHECK(jb["violation_count"].get<int>() > 0);
    fs::remove(p);
}

TEST_CASE("cache build and reuse") {
    const fs::path p = fs::temp_directory_path() / "hgt_cli_cache.bin";
    CHECK(hgt({"cache", "build", "--nmax", "1000", "--out", p.string()}).code == kExitOk);
    CHECK(fs::file_size(p) == 16 + 1000 + 8);
    const auto r = hgt({"--cache", p.string(), "--nmax", "1000", "sum", "1000"});
    CHECK(r.code == kExitOk);
    CHECK(r.out == "7640\n");

    // A corrupt cache is a setup failure.
    {
        std::ofstream f(p, std::ios::binary | std::ios::trunc);
        f << "garbage";
    }
    CHECK(hgt({"--cache", p.string(), "height", "5"}).code == kExitUsage);
    fs::remove(p);
}

TEST_CASE("plot data") {
    const auto r = hgt({"plotdata", "s-vs-pn", "--from", "1", "--to", "3"});
    CHECK(r.code == kExitOk);
    CHECK(r.out == "# n p_n S(n)\n1 2 0\n2 3 1\n3 5 3\n");
    CHECK(hgt({"plotdata", "pi-vs-g", "--from", "5", "--to", "2"}).code == kExitUsage);
}

TEST_CASE("estimator flags") {
    const auto floored = hgt({"--nmax", "1000", "plotdata", "pi-vs-g", "--from", "100", "--to", "100"});
    const auto literal =
        hgt({"--nmax", "1000", "--g-term", "literal", "plotdata", "pi-vs-g", "--from", "100", "--to", "100"});
    CHECK(floored.out.find("100 25 27.") != std::string::npos);
    CHECK(literal.out.find("100 25 28.") != std::string::npos);
}
