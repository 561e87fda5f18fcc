#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "numerals/steps.hpp"

/// Step-count instrumentation. Each operation has a metered variant taking
/// a StepCounter; this module drives those variants on fixed worst-case
/// inputs and checks the counts against closed forms or asymptotic bounds.
///
/// Worst-case input of size n, per operation:
///   u_plus, u_add              x = y = n as a unary numeral
///   sumlist, sumlist2,
///   filter_keep (keep evens),
///   max_naive, max_fast        the ascending list 1..n
///   b_add1                     the all-B numeral with n digits (n-step carry)
///   b_add_v1, b_add_v2,
///   b_mult, i_add              x = y = the all-B numeral with n digits
///   bs_access                  last index n of the sequence 0..n
///   bs_cons, bs_rest           the sequence 0..n-1
namespace numerals::costmeter {

enum class OpId {
	UPlus,
	UAdd,
	Sumlist,
	Sumlist2,
	FilterKeep,
	MaxNaive,
	MaxFast,
	BAdd1,
	BAddV1,
	BAddV2,
	BMult,
	IAdd,
	BsAccess,
	BsCons,
	BsRest,
};

/// All operation ids, in declaration order.
const std::vector<OpId>& all_ops();

/// Throws UsageError for an unknown name.
OpId parse_op_id(std::string_view name);
std::string_view op_name(OpId op);

/// Inclusive range of sizes accepted by `measure` for `op`.
std::pair<std::uint64_t, std::uint64_t> size_range(OpId op);

/// Runs `fn` with a fresh counter and returns its result with the count.
template<typename Fn>
auto measured(Fn&& fn) {
	StepCounter counter;
	auto result = fn(counter);
	return std::pair{std::move(result), counter.count()};
}

struct Measurement {
	std::string result; // printed result of the operation
	StepCount steps;
};

/// Metered run of `op` on its worst-case input of size `n`.
/// Throws UsageError when `n` is outside size_range(op).
Measurement measure(OpId op, std::uint64_t n);

/// The same evaluation through the plain, unmetered operation.
std::string evaluate_plain(OpId op, std::uint64_t n);

/// Exact step count on the worst-case input of size `n`, where one is known.
std::optional<StepCount> closed_form(OpId op, std::uint64_t n);

enum class BoundForm { Linear, Logarithmic, Exponential, Exact };

/// "linear", "logarithmic", "exponential" or "exact".
BoundForm parse_bound_form(std::string_view name);
std::string_view bound_form_name(BoundForm form);

struct BoundRequest {
	OpId op;
	std::vector<std::uint64_t> sizes;
	BoundForm form;
	double k = 1.0;
};

struct Sample {
	std::uint64_t n;
	StepCount steps;
};

struct CostReport {
	std::string operation;
	std::vector<Sample> samples;
	BoundForm form;
	bool pass;
	/// max over samples of steps / f(n), with f(n) = n + 1 (linear),
	/// log2(n) + 1 (logarithmic), 2^n (exponential) or the closed form.
	double worst_ratio;
};

/// Measures every size and checks
///   linear        steps <= K*n + K
///   logarithmic   steps <= K*log2(n) + K   (log2 of 0 taken as 0)
///   exponential   steps <= K*2^n
///   exact         steps == closed_form(op, n)
/// Throws UsageError on an empty or non-increasing schedule, or an exact
/// request for an operation without a closed form.
CostReport check_bound(const BoundRequest& request);

} // namespace numerals::costmeter
