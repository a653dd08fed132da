#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace argrank {

// Hard capacity of the whole library: one machine word of argument bits.
inline constexpr int kMaxArgs = 16;

// Set of arguments, bit i set <=> argument i is a member. All bits >= n of
// the owning AF are zero.
using ArgSet = std::uint32_t;

inline constexpr ArgSet empty_set = 0;

inline constexpr ArgSet singleton(int i) { return ArgSet{1} << i; }

inline constexpr bool contains(ArgSet s, int i) { return (s >> i) & 1u; }

inline constexpr ArgSet full_set(int n) { return (ArgSet{1} << n) - 1; }

inline constexpr bool subset_of(ArgSet a, ArgSet b) { return (a & ~b) == 0; }

inline constexpr bool proper_subset_of(ArgSet a, ArgSet b) {
    return a != b && subset_of(a, b);
}

inline constexpr int set_size(ArgSet s) { return std::popcount(s); }

// Calls f(i) for every member i in ascending order.
template <class F>
void for_each_member(ArgSet s, F&& f) {
    while (s != 0) {
        int i = std::countr_zero(s);
        f(i);
        s &= s - 1;
    }
}

inline std::vector<int> members(ArgSet s) {
    std::vector<int> out;
    for_each_member(s, [&](int i) { out.push_back(i); });
    return out;
}

}  // namespace argrank
