#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace madcolor {
namespace detail {

/// Uniform draw from [0, n) on top of mt19937_64 via rejection, so the
/// sequence is identical across platforms (std::uniform_int_distribution
/// is implementation-defined).
inline std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n) {
    if (n == 0) return 0;
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % n;
}

template <typename T>
void fisher_yates(std::vector<T>& items, std::mt19937_64& rng) {
    for (std::size_t i = items.size(); i > 1; --i)
        std::swap(items[i - 1], items[bounded(rng, i)]);
}

}  // namespace detail
}  // namespace madcolor
