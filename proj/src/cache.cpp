#include "shapiro/cache.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <string>
#include <vector>

namespace shapiro {

namespace {

constexpr std::size_t kHeaderSize = 16;
constexpr std::size_t kTrailerSize = 8;

void put_u64(std::ofstream& out, std::uint64_t v) {
    std::array<char, 8> b{};
    for (int i = 0; i < 8; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xff);
    out.write(b.data(), b.size());
}

std::uint64_t get_u64(const std::uint8_t* p) {
    std::uint64_t v = 0;
    for (int i = 7; i >= 0; --i) v = (v << 8) | p[i];
    return v;
}

}  // namespace

std::uint64_t fnv1a64(std::span<const std::uint8_t> bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (const std::uint8_t b : bytes) {
        h ^= b;
        h *= 0x100000001b3ULL;
    }
    return h;
}

void cache_write(const std::filesystem::path& path, const HeightTable& ht) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot open " + path.string() + " for writing");
    const auto payload = ht.payload();
    out.write(kCacheMagic, sizeof kCacheMagic);
    put_u64(out, payload.size());
    out.write(reinterpret_cast<const char*>(payload.data()), static_cast<std::streamsize>(payload.size()));
    put_u64(out, fnv1a64(payload));
    if (!out.flush()) throw Error("write to " + path.string() + " failed");
}

HeightTable cache_read(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open cache " + path.string());
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());

    const std::string where = "cache " + path.string() + ": ";
    if (bytes.size() < kHeaderSize + kTrailerSize) throw CorruptCacheError(where + "truncated header");
    if (!std::equal(kCacheMagic, kCacheMagic + 6, bytes.begin())) throw CorruptCacheError(where + "bad magic");
    if (!std::equal(kCacheMagic + 6, kCacheMagic + 8, bytes.begin() + 6)) {
        throw VersionMismatchError(where + "layout version " + std::string(bytes.begin() + 6, bytes.begin() + 8) +
                                   " is not 01");
    }
    const std::uint64_t n_max = get_u64(bytes.data() + 8);
    if (n_max == 0 || n_max != bytes.size() - kHeaderSize - kTrailerSize) {
        throw CorruptCacheError(where + "size does not match n_max " + std::to_string(n_max));
    }
    const std::span<const std::uint8_t> payload(bytes.data() + kHeaderSize, n_max);
    if (fnv1a64(payload) != get_u64(bytes.data() + kHeaderSize + n_max)) {
        throw CorruptCacheError(where + "checksum mismatch");
    }
    if (payload[0] != 0 || (n_max >= 2 && payload[1] != 1)) {
        throw CorruptCacheError(where + "H(1) or H(2) has the wrong value");
    }
    return HeightTable::from_payload(std::vector<Height>(payload.begin(), payload.end()));
}

}  // namespace shapiro
