#include "numerals/costmeter.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "numerals/binary.hpp"
#include "numerals/braun.hpp"
#include "numerals/errors.hpp"
#include "numerals/listlab.hpp"
#include "numerals/numio.hpp"
#include "numerals/twoscomp.hpp"
#include "numerals/unary.hpp"

namespace numerals::costmeter {

namespace {

struct OpInfo {
	OpId op;
	std::string_view name;
	std::uint64_t min_size;
	std::uint64_t max_size;
};

// Upper limits keep recursion depth and running time at desk scale.
constexpr OpInfo kOps[] = {
	{OpId::UPlus, "u_plus", 0, 20000},
	{OpId::UAdd, "u_add", 0, 20000},
	{OpId::Sumlist, "sumlist", 0, 20000},
	{OpId::Sumlist2, "sumlist2", 0, 20000},
	{OpId::FilterKeep, "filter_keep", 0, 20000},
	{OpId::MaxNaive, "max_naive", 1, 24},
	{OpId::MaxFast, "max_fast", 1, 20000},
	{OpId::BAdd1, "b_add1", 0, 20000},
	{OpId::BAddV1, "b_add_v1", 0, 20000},
	{OpId::BAddV2, "b_add_v2", 0, 20000},
	{OpId::BMult, "b_mult", 0, 1000},
	{OpId::IAdd, "i_add", 0, 20000},
	{OpId::BsAccess, "bs_access", 0, 100000},
	{OpId::BsCons, "bs_cons", 0, 100000},
	{OpId::BsRest, "bs_rest", 1, 100000},
};

const OpInfo& info(OpId op) { return kOps[static_cast<std::size_t>(op)]; }

listlab::IntList ascending(std::uint64_t n) {
	listlab::IntList xs(n);
	std::iota(xs.begin(), xs.end(), std::int64_t{1});
	return xs;
}

std::string show(const listlab::IntList& xs) {
	std::string out = "[";
	for(std::size_t i = 0; i < xs.size(); ++i) {
		if(i) out += ',';
		out += std::to_string(xs[i]);
	}
	return out + "]";
}

using Seq = braun::BraunSeq<std::uint64_t>;

Seq iota_seq(std::uint64_t n) {
	std::vector<std::uint64_t> xs(n);
	std::iota(xs.begin(), xs.end(), std::uint64_t{0});
	return Seq::from_list(xs);
}

std::string show(const Seq& s) {
	std::string out = "[";
	const auto xs = s.to_list();
	for(std::size_t i = 0; i < xs.size(); ++i) {
		if(i) out += ',';
		out += std::to_string(xs[i]);
	}
	return out + "]";
}

bool is_even(std::int64_t x) { return x % 2 == 0; }

twoscomp::TcInt tc_all_ones(std::uint64_t digits) { return twoscomp::embed(binary::all_ones(digits)); }

// Evaluates `op` on its worst-case input of size n, with `steps` either a
// StepCounter (metered) or NoSteps (plain).
template<typename Counter>
std::string run(OpId op, std::uint64_t n, Counter& steps) {
	constexpr bool metered = std::is_same_v<Counter, StepCounter>;
	auto call = [&](auto&& plain, auto&& meter) {
		if constexpr(metered)
			return meter(steps);
		else
			return plain();
	};

	switch(op) {
	case OpId::UPlus:
	case OpId::UAdd: {
		const auto x = unary::from_int(static_cast<std::int64_t>(n));
		const bool structural = op == OpId::UPlus;
		const auto r = call([&] { return structural ? unary::plus(x, x) : unary::add(x, x); },
		                    [&](StepCounter& s) { return structural ? unary::plus(x, x, s) : unary::add(x, x, s); });
		return std::to_string(unary::to_int(r));
	}
	case OpId::Sumlist: {
		const auto xs = ascending(n);
		return std::to_string(call([&] { return listlab::sumlist(xs); },
		                           [&](StepCounter& s) { return listlab::sumlist(xs, s); }));
	}
	case OpId::Sumlist2: {
		const auto xs = ascending(n);
		return std::to_string(call([&] { return listlab::sumlist2(xs); },
		                           [&](StepCounter& s) { return listlab::sumlist2(xs, s); }));
	}
	case OpId::FilterKeep: {
		const auto xs = ascending(n);
		return show(call([&] { return listlab::filter_keep(is_even, xs); },
		                 [&](StepCounter& s) { return listlab::filter_keep(is_even, xs, s); }));
	}
	case OpId::MaxNaive: {
		const auto xs = ascending(n);
		return std::to_string(call([&] { return listlab::max_naive(xs); },
		                           [&](StepCounter& s) { return listlab::max_naive(xs, s); }));
	}
	case OpId::MaxFast: {
		const auto xs = ascending(n);
		return std::to_string(call([&] { return listlab::max_fast(xs); },
		                           [&](StepCounter& s) { return listlab::max_fast(xs, s); }));
	}
	case OpId::BAdd1: {
		const auto x = binary::all_ones(n);
		return numio::print_numeral(call([&] { return binary::add1(x); },
		                                 [&](StepCounter& s) { return binary::add1(x, s); }));
	}
	case OpId::BAddV1: {
		const auto x = binary::all_ones(n);
		return numio::print_numeral(call([&] { return binary::add_v1(x, x); },
		                                 [&](StepCounter& s) { return binary::add_v1(x, x, s); }));
	}
	case OpId::BAddV2: {
		const auto x = binary::all_ones(n);
		return numio::print_numeral(call([&] { return binary::add_v2(x, x); },
		                                 [&](StepCounter& s) { return binary::add_v2(x, x, s); }));
	}
	case OpId::BMult: {
		const auto x = binary::all_ones(n);
		return numio::print_numeral(call([&] { return binary::mult(x, x); },
		                                 [&](StepCounter& s) { return binary::mult(x, x, s); }));
	}
	case OpId::IAdd: {
		const auto x = tc_all_ones(n);
		return numio::print_numeral(call([&] { return twoscomp::add(x, x); },
		                                 [&](StepCounter& s) { return twoscomp::add(x, x, s); }));
	}
	case OpId::BsAccess: {
		const Seq seq = iota_seq(n + 1);
		return std::to_string(call([&] { return seq.access(n); },
		                           [&](StepCounter& s) { return seq.access(n, s); }));
	}
	case OpId::BsCons: {
		const Seq seq = iota_seq(n);
		return show(call([&] { return seq.cons(n); }, [&](StepCounter& s) { return seq.cons(n, s); }));
	}
	case OpId::BsRest: {
		const Seq seq = iota_seq(n);
		return show(call([&] { return seq.rest(); }, [&](StepCounter& s) { return seq.rest(s); }));
	}
	}
	__builtin_unreachable();
}

void require_size(OpId op, std::uint64_t n) {
	const auto [lo, hi] = size_range(op);
	if(n < lo || n > hi)
		throw UsageError("size " + std::to_string(n) + " for " + std::string(op_name(op)) + " must lie in ["
		                 + std::to_string(lo) + ", " + std::to_string(hi) + "]");
}

} // namespace

const std::vector<OpId>& all_ops() {
	static const std::vector<OpId> ops = [] {
		std::vector<OpId> v;
		for(const auto& i : kOps) v.push_back(i.op);
		return v;
	}();
	return ops;
}

OpId parse_op_id(std::string_view name) {
	for(const auto& i : kOps)
		if(i.name == name) return i.op;
	throw UsageError("unknown operation '" + std::string(name) + "'");
}

std::string_view op_name(OpId op) { return info(op).name; }

std::pair<std::uint64_t, std::uint64_t> size_range(OpId op) { return {info(op).min_size, info(op).max_size}; }

Measurement measure(OpId op, std::uint64_t n) {
	require_size(op, n);
	auto [result, steps] = measured([&](StepCounter& c) { return run(op, n, c); });
	return {std::move(result), steps};
}

std::string evaluate_plain(OpId op, std::uint64_t n) {
	require_size(op, n);
	NoSteps none;
	return run(op, n, none);
}

std::optional<StepCount> closed_form(OpId op, std::uint64_t n) {
	switch(op) {
	case OpId::UPlus:
	case OpId::UAdd:
	case OpId::Sumlist:
	case OpId::FilterKeep:
	case OpId::BAdd1: return n + 1;
	case OpId::Sumlist2: return n + 2;
	case OpId::MaxNaive: return n < 64 ? (StepCount{1} << n) - 1 : std::optional<StepCount>{};
	case OpId::MaxFast: return n;
	case OpId::BsAccess: return braun::digit_count(n);
	default: return std::nullopt;
	}
}

BoundForm parse_bound_form(std::string_view name) {
	if(name == "linear") return BoundForm::Linear;
	if(name == "logarithmic") return BoundForm::Logarithmic;
	if(name == "exponential") return BoundForm::Exponential;
	if(name == "exact") return BoundForm::Exact;
	throw UsageError("unknown bound form '" + std::string(name) + "'");
}

std::string_view bound_form_name(BoundForm form) {
	switch(form) {
	case BoundForm::Linear: return "linear";
	case BoundForm::Logarithmic: return "logarithmic";
	case BoundForm::Exponential: return "exponential";
	case BoundForm::Exact: return "exact";
	}
	__builtin_unreachable();
}

CostReport check_bound(const BoundRequest& request) {
	if(request.sizes.empty()) throw UsageError("empty size schedule");
	if(!std::is_sorted(request.sizes.begin(), request.sizes.end(), std::less_equal<>{}))
		throw UsageError("size schedule must be strictly increasing");
	if(request.form == BoundForm::Exact)
		for(auto n : request.sizes)
			if(!closed_form(request.op, n))
				throw UsageError("no closed form for " + std::string(op_name(request.op)));

	CostReport report{std::string(op_name(request.op)), {}, request.form, true, 0.0};
	const double k = request.k;
	for(const std::uint64_t n : request.sizes) {
		const StepCount steps = measure(request.op, n).steps;
		report.samples.push_back({n, steps});
		const double dn = static_cast<double>(n);
		const double s = static_cast<double>(steps);
		double scale = 0.0;
		bool ok = false;
		switch(request.form) {
		case BoundForm::Linear:
			scale = dn + 1.0;
			ok = s <= k * dn + k;
			break;
		case BoundForm::Logarithmic: {
			const double lg = n == 0 ? 0.0 : std::log2(dn);
			scale = lg + 1.0;
			ok = s <= k * lg + k;
			break;
		}
		case BoundForm::Exponential:
			scale = std::exp2(dn);
			ok = s <= k * scale;
			break;
		case BoundForm::Exact: {
			const StepCount expected = *closed_form(request.op, n);
			scale = static_cast<double>(expected);
			ok = steps == expected;
			break;
		}
		}
		report.pass = report.pass && ok;
		const double ratio = scale > 0.0 ? s / scale : (steps == 0 ? 1.0 : s);
		report.worst_ratio = std::max(report.worst_ratio, ratio);
	}
	return report;
}

} // namespace numerals::costmeter
