#pragma once

#include <cstdint>

#include "numerals/steps.hpp"
#include "numerals/term.hpp"

/// Canonical binary naturals.
///
///   Z       0
///   A x     2x
///   B x     2x + 1
///
/// The least significant constructor is outermost, so 4 is A (A (B Z)).
/// A representation is canonical when no `A` is applied directly to `Z`
/// (no leading zeroes); every natural then has exactly one representation.
namespace numerals::binary {

enum class Bin : unsigned char { Z = 0, A, B };

using BinNat = Term<Bin>;

/// A applied to x, with the exact identity 2*0 = 0 folded in.
inline BinNat mk_A(BinNat x) {
	if(x.is_base()) return x;
	return BinNat::wrap(Bin::A, std::move(x));
}

inline BinNat mk_B(BinNat x) { return BinNat::wrap(Bin::B, std::move(x)); }

/// Throws DomainError for negative `n`.
BinNat from_int(std::int64_t n);

/// Throws ValidityError on non-canonical input and DomainError if the value
/// does not fit in 64 bits.
std::uint64_t to_int(const BinNat& x);

bool is_canonical(const BinNat& x);

/// Number of A/B constructors. For n >= 1 this is floor(log2 n) + 1.
std::uint64_t size(const BinNat& x);

/// The all-B numeral with `digits` constructors, 2^digits - 1.
BinNat all_ones(std::uint64_t digits);

namespace detail {

// add1 Z     = B Z
// add1 (A x) = B x
// add1 (B x) = A (add1 x)
template<typename Counter>
BinNat add1(const BinNat& x, Counter& steps) {
	steps.enter();
	switch(x.ctor()) {
	case Bin::Z: return mk_B(BinNat{});
	case Bin::A: return mk_B(x.rest());
	case Bin::B: return mk_A(add1(x.rest(), steps));
	}
	__builtin_unreachable();
}

// First formulation: the B/B carry goes through add1.
template<typename Counter>
BinNat add_v1(const BinNat& x, const BinNat& y, Counter& steps) {
	steps.enter();
	if(y.is_base()) return x;
	if(x.is_base()) return y;
	const BinNat sum = add_v1(x.rest(), y.rest(), steps);
	if(x.ctor() == Bin::A && y.ctor() == Bin::A) return mk_A(sum);
	if(x.ctor() == Bin::B && y.ctor() == Bin::B) return mk_A(add1(sum, steps));
	return mk_B(sum);
}

template<typename Counter>
BinNat addp(const BinNat& x, const BinNat& y, Counter& steps);

// Second formulation: the B/B carry goes through addp (x + y + 1).
template<typename Counter>
BinNat add_v2(const BinNat& x, const BinNat& y, Counter& steps) {
	steps.enter();
	if(y.is_base()) return x;
	if(x.is_base()) return y;
	const bool xa = x.ctor() == Bin::A;
	const bool ya = y.ctor() == Bin::A;
	if(xa && ya) return mk_A(add_v2(x.rest(), y.rest(), steps));
	if(!xa && !ya) return mk_A(addp(x.rest(), y.rest(), steps));
	return mk_B(add_v2(x.rest(), y.rest(), steps));
}

// addp x Z             = add1 x
// addp Z y             = add1 y
// addp (A x) (A y)     = B (add x y)
// addp (A x) (B y)     = A (addp x y)
// addp (B x) (A y)     = A (addp x y)
// addp (B x) (B y)     = B (addp x y)
template<typename Counter>
BinNat addp(const BinNat& x, const BinNat& y, Counter& steps) {
	steps.enter();
	if(y.is_base()) return add1(x, steps);
	if(x.is_base()) return add1(y, steps);
	const bool xa = x.ctor() == Bin::A;
	const bool ya = y.ctor() == Bin::A;
	if(xa && ya) return mk_B(add_v2(x.rest(), y.rest(), steps));
	if(!xa && !ya) return mk_B(addp(x.rest(), y.rest(), steps));
	return mk_A(addp(x.rest(), y.rest(), steps));
}

// mult x Z     = Z
// mult x (A y) = A (mult x y)
// mult x (B y) = add x (A (mult x y))
template<typename Counter>
BinNat mult(const BinNat& x, const BinNat& y, Counter& steps) {
	steps.enter();
	switch(y.ctor()) {
	case Bin::Z: return BinNat{};
	case Bin::A: return mk_A(mult(x, y.rest(), steps));
	case Bin::B: return add_v2(x, mk_A(mult(x, y.rest(), steps)), steps);
	}
	__builtin_unreachable();
}

} // namespace detail

inline BinNat add1(const BinNat& x) { NoSteps s; return detail::add1(x, s); }
inline BinNat add1(const BinNat& x, StepCounter& s) { return detail::add1(x, s); }

inline BinNat add_v1(const BinNat& x, const BinNat& y) { NoSteps s; return detail::add_v1(x, y, s); }
inline BinNat add_v1(const BinNat& x, const BinNat& y, StepCounter& s) { return detail::add_v1(x, y, s); }

inline BinNat add_v2(const BinNat& x, const BinNat& y) { NoSteps s; return detail::add_v2(x, y, s); }
inline BinNat add_v2(const BinNat& x, const BinNat& y, StepCounter& s) { return detail::add_v2(x, y, s); }

/// x + y + 1.
inline BinNat addp(const BinNat& x, const BinNat& y) { NoSteps s; return detail::addp(x, y, s); }
inline BinNat addp(const BinNat& x, const BinNat& y, StepCounter& s) { return detail::addp(x, y, s); }

inline BinNat mult(const BinNat& x, const BinNat& y) { NoSteps s; return detail::mult(x, y, s); }
inline BinNat mult(const BinNat& x, const BinNat& y, StepCounter& s) { return detail::mult(x, y, s); }

} // namespace numerals::binary
