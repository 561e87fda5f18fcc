#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace test_support {

inline constexpr std::uint64_t kSeed = 0x5eed1234;

inline std::mt19937_64& rng() {
	static std::mt19937_64 gen(kSeed);
	return gen;
}

inline std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
	return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng());
}

inline std::vector<std::int64_t> random_list(std::size_t min_len, std::size_t max_len, std::int64_t lo = -1000,
                                             std::int64_t hi = 1000) {
	std::vector<std::int64_t> xs(static_cast<std::size_t>(
		uniform(static_cast<std::int64_t>(min_len), static_cast<std::int64_t>(max_len))));
	for(auto& x : xs) x = uniform(lo, hi);
	return xs;
}

// floor(log2 n) + 1 by repeated halving; independent of std::bit_width.
inline std::uint64_t bit_length(std::uint64_t n) {
	std::uint64_t k = 0;
	for(; n > 0; n /= 2) ++k;
	return k;
}

} // namespace test_support
