#pragma once

#include <cstdint>
#include <string>

#include "numerals/binary.hpp"
#include "numerals/steps.hpp"
#include "numerals/term.hpp"

/// Two's-complement integers: the binary naturals plus a nullary `N` for -1.
///
///   Z       0
///   N      -1
///   A x     2x
///   B x     2x + 1
///
/// Canonical forms apply neither `A` to `Z` nor `B` to `N`. Nonnegative
/// values have exactly their binary-natural representation.
namespace numerals::twoscomp {

enum class Tc : unsigned char { Z = 0, N, A, B };

using TcInt = Term<Tc>;

inline TcInt z() { return {}; }
inline TcInt n() { return TcInt::nullary(Tc::N); }

/// A applied to x; 2*0 = 0.
inline TcInt mk_A(TcInt x) {
	if(x.ctor() == Tc::Z) return x;
	return TcInt::wrap(Tc::A, std::move(x));
}

/// B applied to x; 2*(-1)+1 = -1.
inline TcInt mk_B(TcInt x) {
	if(x.ctor() == Tc::N) return x;
	return TcInt::wrap(Tc::B, std::move(x));
}

TcInt from_int(std::int64_t v);

/// Throws ValidityError on non-canonical input, DomainError on overflow.
std::int64_t to_int(const TcInt& x);

bool is_canonical(const TcInt& x);

/// Bitwise not: A<->B, Z<->N. Denotes -x - 1.
TcInt complement(const TcInt& x);

TcInt sub1(const TcInt& x);

/// add1 . complement
TcInt neg(const TcInt& x);

TcInt sub(const TcInt& x, const TcInt& y);

/// Constructors read right to left, 0 for A and 1 for B, with the infinite
/// tail written `...0` for Z and `...1` for N. The lone N renders as
/// `...11`, the form used in the classic table.
std::string render_bits(const TcInt& x);

/// Inverse of render_bits. Accepts any `...` + tail bit + bits string and
/// normalizes redundant sign bits, so "...0011" and "...011" both give 3.
/// Throws ParseError on malformed input.
TcInt parse_bits(const std::string& text);

TcInt embed(const binary::BinNat& x);

namespace detail {

template<typename Counter>
TcInt add1(const TcInt& x, Counter& steps) {
	steps.enter();
	switch(x.ctor()) {
	case Tc::Z: return mk_B(z());
	case Tc::N: return z();
	case Tc::A: return mk_B(x.rest());
	case Tc::B: return mk_A(add1(x.rest(), steps));
	}
	__builtin_unreachable();
}

template<typename Counter>
TcInt addp(const TcInt& x, const TcInt& y, Counter& steps);

// The Z and A/B clauses are those of the binary natural addition. The N
// clauses:
//   add N N     = A N               -1 + -1         = -2
//   add N (A y) = B (sub1 y)        -1 + 2y         = 2(y-1) + 1
//   add N (B y) = A y               -1 + 2y + 1     = 2y
// and symmetrically with N on the right.
template<typename Counter>
TcInt add(const TcInt& x, const TcInt& y, Counter& steps) {
	steps.enter();
	if(y.ctor() == Tc::Z) return x;
	if(x.ctor() == Tc::Z) return y;
	if(x.ctor() == Tc::N && y.ctor() == Tc::N) return mk_A(n());
	if(x.ctor() == Tc::N) return y.ctor() == Tc::A ? mk_B(sub1(y.rest())) : mk_A(y.rest());
	if(y.ctor() == Tc::N) return x.ctor() == Tc::A ? mk_B(sub1(x.rest())) : mk_A(x.rest());
	const bool xa = x.ctor() == Tc::A;
	const bool ya = y.ctor() == Tc::A;
	if(xa && ya) return mk_A(add(x.rest(), y.rest(), steps));
	if(!xa && !ya) return mk_A(addp(x.rest(), y.rest(), steps));
	return mk_B(add(x.rest(), y.rest(), steps));
}

// x + y + 1. With N on either side the result is the other argument.
template<typename Counter>
TcInt addp(const TcInt& x, const TcInt& y, Counter& steps) {
	steps.enter();
	if(y.ctor() == Tc::Z) return add1(x, steps);
	if(x.ctor() == Tc::Z) return add1(y, steps);
	if(y.ctor() == Tc::N) return x;
	if(x.ctor() == Tc::N) return y;
	const bool xa = x.ctor() == Tc::A;
	const bool ya = y.ctor() == Tc::A;
	if(xa && ya) return mk_B(add(x.rest(), y.rest(), steps));
	if(!xa && !ya) return mk_B(addp(x.rest(), y.rest(), steps));
	return mk_A(addp(x.rest(), y.rest(), steps));
}

} // namespace detail

inline TcInt add1(const TcInt& x) { NoSteps s; return detail::add1(x, s); }
inline TcInt add1(const TcInt& x, StepCounter& s) { return detail::add1(x, s); }

inline TcInt add(const TcInt& x, const TcInt& y) { NoSteps s; return detail::add(x, y, s); }
inline TcInt add(const TcInt& x, const TcInt& y, StepCounter& s) { return detail::add(x, y, s); }

inline TcInt addp(const TcInt& x, const TcInt& y) { NoSteps s; return detail::addp(x, y, s); }

} // namespace numerals::twoscomp
