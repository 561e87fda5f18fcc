#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "numerals/binary.hpp"

/// Bounded executable versions of the algebraic laws each module promises.
/// Used by `numerals check`; every suite is deterministic for a given seed.
namespace numerals::checks {

inline constexpr std::uint64_t kDefaultSeed = 20240611;

/// Clause-entry constant for the linear cost law of binary addition:
/// steps(add) <= K * (max(size x, size y) + 1) over all operands <= 512.
/// Measured maximum ratio: 1.9 for b_add_v1, 1.5 for b_add_v2; K rounds up.
inline constexpr double kBinaryAddCostK = 2.0;

/// Binary arithmetic under test. Replaceable so that a deliberately broken
/// clause can be shown to be caught.
struct BinaryOps {
	std::function<binary::BinNat(const binary::BinNat&, const binary::BinNat&)> add_v1;
	std::function<binary::BinNat(const binary::BinNat&, const binary::BinNat&)> add_v2;
	std::function<binary::BinNat(const binary::BinNat&, const binary::BinNat&)> mult;

	static BinaryOps library();
};

struct Options {
	std::uint64_t seed = kDefaultSeed;
	BinaryOps binary = BinaryOps::library();
};

struct PropertyResult {
	std::string suite;
	std::string name;
	bool pass;
	/// First counterexample when failing, empty otherwise.
	std::string detail;
};

const std::vector<std::string_view>& suite_names();

/// Runs one suite ("unary", "binary", "twoscomp", "braun", "listlab") or
/// every suite ("all"). Throws UsageError for other names.
std::vector<PropertyResult> run_suite(std::string_view suite, const Options& options = {});

} // namespace numerals::checks
