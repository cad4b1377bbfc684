#pragma once
// Binary height-table cache.
//
// Layout, little-endian, no padding:
//   offset 0       8 bytes   magic "SHPCLS01"
//   offset 8       8 bytes   n_max
//   offset 16      n_max     payload, byte i-1 = H(i)
//   offset 16+n_max 8 bytes  FNV-1a 64 of the payload

#include <cstdint>
#include <filesystem>
#include <span>

#include "shapiro/height.hpp"

namespace shapiro {

inline constexpr char kCacheMagic[8] = {'S', 'H', 'P', 'C', 'L', 'S', '0', '1'};

std::uint64_t fnv1a64(std::span<const std::uint8_t> bytes);

void cache_write(const std::filesystem::path& path, const HeightTable& ht);

// Validates size, magic, checksum and the first two heights before the
// payload is trusted. Throws CorruptCacheError, or VersionMismatchError when
// the magic names another layout revision.
HeightTable cache_read(const std::filesystem::path& path);

}  // namespace shapiro
