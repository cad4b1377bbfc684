#pragma once
// Published reference values the reproduction tables and verify suites are
// compared against. Only primary cells live here; differences and
// percentages are always recomputed.

#include <array>
#include <cstdint>

namespace shapiro::reference {

struct PowerRow {
    std::uint64_t n;
    std::uint64_t nth_prime;
    std::uint64_t height_sum;
    std::uint64_t floor_nlogn;
};

// n = 10^1 .. 10^7.
inline constexpr std::array<PowerRow, 7> kSumVsNLogN{{
    {10, 29, 22, 23},
    {100, 541, 486, 460},
    {1000, 7919, 7640, 6907},
    {10000, 104729, 104488, 92103},
    {100000, 1299709, 1325890, 1151292},
    {1000000, 15485863, 16069024, 13815510},
    {10000000, 179424673, 188786066, 161180956},
}};

struct GRow {
    std::uint64_t n;
    std::uint64_t pi;
    std::uint64_t floor_g;
    std::uint64_t floor_li;
};

inline constexpr std::array<GRow, 7> kGVsLi{{
    {10, 4, 8, 6},
    {100, 25, 27, 30},
    {1000, 168, 170, 177},
    {10000, 1229, 1222, 1246},
    {100000, 9592, 9547, 9629},
    {1000000, 78498, 78340, 78627},
    {10000000, 664579, 664297, 664918},
}};

struct RandomRow {
    std::uint64_t n;
    std::uint64_t nth_prime;
    std::uint64_t height_sum;
    double ratio_nlogn;  // S(n) / (n log n), 6 decimals
};

// The last S(n) is printed with an interior space ("1 132214258").
inline constexpr std::array<RandomRow, 6> kSumVsPnRandom{{
    {3874958, 65619413, 68671533, 1.168215},
    {17594789, 326260271, 344294853, 1.172923},
    {29742315, 568063631, 601049024, 1.174364},
    {32970915, 633319879, 670440504, 1.174637},
    {46262236, 905219069, 959827638, 1.175509},
    {54074749, 1066983163, 1132214258, 1.175901},
}};

struct SHatRow {
    std::uint64_t n;
    std::uint64_t height_sum;
    std::uint64_t floor_s_hat;
    bool extended;  // needs tables past the default bound
};

inline constexpr std::array<SHatRow, 7> kSHat{{
    {992, 7569, 7628, false},
    {7524, 76008, 76089, false},
    {56762, 713411, 710300, false},
    {596319, 9206082, 9181418, false},
    {17594789, 344294853, 344263181, true},
    {32970915, 670440504, 670698724, true},
    {54074749, 1132214258, 1133070822, true},
}};

// S_Delta(k) for k = 1..18.
inline constexpr std::array<double, 18> kGapAverage{
    1.16666666666667,  1.08333333333333,  1.23333333333333,  1.11041666666667,  1.08541666666667,
    1.08377976190476,  1.03947792658730,  1.05543154761905,  1.04229290674603,  1.02073447927940,
    1.01134933317550,  1.00132388905581,  0.994501291351865, 0.988054230925281, 0.982638771673053,
    0.976617044103504, 0.971171169038482, 0.966205359427567,
};

inline constexpr std::array<unsigned, 9> kHatHeightsTo19{2, 3, 4, 6, 7, 8, 11, 18, 19};

// The source list prints 1458 at height 8; 2*3^6+1 = 1459 is the prime.
inline constexpr std::array<std::uint64_t, 9> kHatPrimesTo19{3, 7, 19, 163, 487, 1459, 39367, 86093443, 258280327};

inline constexpr double kB = 0.832746;
inline constexpr double kBeta = 0.31546;
inline constexpr double kExpBOver10 = 0.22996;

}  // namespace shapiro::reference
