#pragma once

#include <cstdint>

#include "numerals/steps.hpp"
#include "numerals/term.hpp"

/// Peano naturals: `Zero`, or `Succ` of a natural.
namespace numerals::unary {

enum class Peano : unsigned char { Zero = 0, Succ };

using UnaryNat = Term<Peano>;

inline UnaryNat zero() { return {}; }
inline UnaryNat succ(UnaryNat pred) { return UnaryNat::wrap(Peano::Succ, std::move(pred)); }

/// Throws DomainError for negative `n`.
UnaryNat from_int(std::int64_t n);
std::uint64_t to_int(const UnaryNat& x);

namespace detail {

// plus x Zero     = x
// plus x (Succ y) = Succ (plus x y)
template<typename Counter>
UnaryNat plus(const UnaryNat& x, const UnaryNat& y, Counter& steps) {
	steps.enter();
	if(y.is_base()) return x;
	return succ(plus(x, y.rest(), steps));
}

// add x Zero     = x
// add x (Succ y) = add (Succ x) y
//
// The first argument is the accumulator; the call is in tail position.
template<typename Counter>
UnaryNat add(const UnaryNat& x, const UnaryNat& y, Counter& steps) {
	steps.enter();
	if(y.is_base()) return x;
	return add(succ(x), y.rest(), steps);
}

// mult x Zero     = Zero
// mult x (Succ y) = plus x (mult x y)
template<typename Counter>
UnaryNat mult(const UnaryNat& x, const UnaryNat& y, Counter& steps) {
	steps.enter();
	if(y.is_base()) return zero();
	return plus(x, mult(x, y.rest(), steps), steps);
}

} // namespace detail

/// Structural addition; recurses on the second argument.
inline UnaryNat plus(const UnaryNat& x, const UnaryNat& y) {
	NoSteps s;
	return detail::plus(x, y, s);
}
inline UnaryNat plus(const UnaryNat& x, const UnaryNat& y, StepCounter& steps) {
	return detail::plus(x, y, steps);
}

/// Accumulative addition; moves one `Succ` at a time from `y` onto `x`.
inline UnaryNat add(const UnaryNat& x, const UnaryNat& y) {
	NoSteps s;
	return detail::add(x, y, s);
}
inline UnaryNat add(const UnaryNat& x, const UnaryNat& y, StepCounter& steps) {
	return detail::add(x, y, steps);
}

inline UnaryNat mult(const UnaryNat& x, const UnaryNat& y) {
	NoSteps s;
	return detail::mult(x, y, s);
}
inline UnaryNat mult(const UnaryNat& x, const UnaryNat& y, StepCounter& steps) {
	return detail::mult(x, y, steps);
}

} // namespace numerals::unary
