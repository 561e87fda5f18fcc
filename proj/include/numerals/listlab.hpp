#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "numerals/errors.hpp"
#include "numerals/steps.hpp"

/// List-recursion exemplars: structural and accumulative sums, filter, and
/// the two list maxima. A list is viewed as head + rest; every function
/// recurses on `xs.subspan(1)` exactly where the functional original
/// recurses on the tail.
namespace numerals::listlab {

using IntList = std::vector<std::int64_t>;
using ListView = std::span<const std::int64_t>;
using Predicate = std::function<bool(std::int64_t)>;

namespace detail {

// sumlist []     = 0
// sumlist (x:xs) = x + sumlist xs
template<typename Counter>
std::int64_t sumlist(ListView xs, Counter& steps) {
	steps.enter();
	if(xs.empty()) return 0;
	return xs.front() + sumlist(xs.subspan(1), steps);
}

// sumh []     acc = acc
// sumh (x:xs) acc = sumh xs (x+acc)
template<typename Counter>
std::int64_t sumh(ListView xs, std::int64_t acc, Counter& steps) {
	steps.enter();
	if(xs.empty()) return acc;
	return sumh(xs.subspan(1), xs.front() + acc, steps);
}

template<typename Counter>
std::int64_t sumlist2(ListView xs, Counter& steps) {
	steps.enter();
	return sumh(xs, 0, steps);
}

// filter p [] = []
// filter p (x:xs)
//  | p x       = x : filter p xs
//  | otherwise = filter p xs
// Kept elements are appended to `out` in list order, then the rest is
// filtered; the same clause structure as consing onto the recursive result.
template<typename Counter>
void filter_into(const Predicate& p, ListView xs, IntList& out, Counter& steps) {
	steps.enter();
	if(xs.empty()) return;
	if(p(xs.front())) out.push_back(xs.front());
	filter_into(p, xs.subspan(1), out, steps);
}

template<typename Counter>
IntList filter_keep(const Predicate& p, ListView xs, Counter& steps) {
	IntList out;
	filter_into(p, xs, out, steps);
	return out;
}

// max [x]    = x
// max (x:xs) = if x > max xs then x else max xs
//
// DO NOT "FIX" THIS. The recursive maximum is evaluated in the guard and
// then evaluated again in the else branch. Under strict evaluation this is
// the exponential-time naive maximum: on a strictly ascending list the
// guard is always false, so each level makes two recursive applications
// and a length-n list costs 2^n - 1 entries. It exists to be measured.
template<typename Counter>
std::int64_t max_naive(ListView xs, Counter& steps) {
	steps.enter();
	if(xs.size() == 1) return xs.front();
	if(xs.front() > max_naive(xs.subspan(1), steps))
		return xs.front();
	else
		return max_naive(xs.subspan(1), steps);
}

inline std::int64_t bigger(std::int64_t x, std::int64_t m) { return x > m ? x : m; }

// max [x]    = x
// max (x:xs) = bigger x (max xs)
template<typename Counter>
std::int64_t max_fast(ListView xs, Counter& steps) {
	steps.enter();
	if(xs.size() == 1) return xs.front();
	return bigger(xs.front(), max_fast(xs.subspan(1), steps));
}

inline void require_nonempty(ListView xs) {
	if(xs.empty()) throw DomainError("maximum of an empty list");
}

} // namespace detail

inline std::int64_t sumlist(ListView xs) { NoSteps s; return detail::sumlist(xs, s); }
inline std::int64_t sumlist(ListView xs, StepCounter& s) { return detail::sumlist(xs, s); }

/// Returns `acc + sumlist(xs)`.
inline std::int64_t sumh(ListView xs, std::int64_t acc) { NoSteps s; return detail::sumh(xs, acc, s); }
inline std::int64_t sumh(ListView xs, std::int64_t acc, StepCounter& s) { return detail::sumh(xs, acc, s); }

/// `sumh xs 0`. Metered runs count the wrapper entry too (n + 2 in total).
inline std::int64_t sumlist2(ListView xs) { NoSteps s; return detail::sumlist2(xs, s); }
inline std::int64_t sumlist2(ListView xs, StepCounter& s) { return detail::sumlist2(xs, s); }

inline IntList filter_keep(const Predicate& p, ListView xs) { NoSteps s; return detail::filter_keep(p, xs, s); }
inline IntList filter_keep(const Predicate& p, ListView xs, StepCounter& s) {
	return detail::filter_keep(p, xs, s);
}

/// Throws DomainError on an empty list.
inline std::int64_t max_naive(ListView xs) {
	detail::require_nonempty(xs);
	NoSteps s;
	return detail::max_naive(xs, s);
}
inline std::int64_t max_naive(ListView xs, StepCounter& s) {
	detail::require_nonempty(xs);
	return detail::max_naive(xs, s);
}

/// Throws DomainError on an empty list.
inline std::int64_t max_fast(ListView xs) {
	detail::require_nonempty(xs);
	NoSteps s;
	return detail::max_fast(xs, s);
}
inline std::int64_t max_fast(ListView xs, StepCounter& s) {
	detail::require_nonempty(xs);
	return detail::max_fast(xs, s);
}

} // namespace numerals::listlab
