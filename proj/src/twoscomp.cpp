#include "numerals/twoscomp.hpp"

#include <algorithm>

#include "numerals/errors.hpp"

namespace numerals::twoscomp {

TcInt from_int(std::int64_t v) {
	if(v == 0) return z();
	if(v == -1) return n();
	// >> is an arithmetic shift, i.e. floor division by 2.
	TcInt rest = from_int(v >> 1);
	return (v & 1) == 0 ? mk_A(std::move(rest)) : mk_B(std::move(rest));
}

namespace {

std::int64_t denote(const TcInt& x) {
	switch(x.ctor()) {
	case Tc::Z: return 0;
	case Tc::N: return -1;
	case Tc::A:
	case Tc::B: break;
	}
	std::int64_t v;
	if(__builtin_mul_overflow(denote(x.rest()), std::int64_t{2}, &v)
		|| (x.ctor() == Tc::B && __builtin_add_overflow(v, std::int64_t{1}, &v)))
		throw DomainError("two's-complement numeral does not fit in 64 bits");
	return v;
}

} // namespace

std::int64_t to_int(const TcInt& x) {
	if(!is_canonical(x)) throw ValidityError("non-canonical two's-complement numeral");
	return denote(x);
}

bool is_canonical(const TcInt& x) {
	for(const TcInt* p = &x; p->ctor() == Tc::A || p->ctor() == Tc::B; p = &p->rest()) {
		const Tc inner = p->rest().ctor();
		if(p->ctor() == Tc::A && inner == Tc::Z) return false;
		if(p->ctor() == Tc::B && inner == Tc::N) return false;
	}
	return true;
}

TcInt complement(const TcInt& x) {
	switch(x.ctor()) {
	case Tc::Z: return n();
	case Tc::N: return z();
	case Tc::A: return TcInt::wrap(Tc::B, complement(x.rest()));
	case Tc::B: return TcInt::wrap(Tc::A, complement(x.rest()));
	}
	__builtin_unreachable();
}

// sub1 Z     = N
// sub1 N     = A N
// sub1 (A x) = B (sub1 x)
// sub1 (B x) = A x
TcInt sub1(const TcInt& x) {
	switch(x.ctor()) {
	case Tc::Z: return n();
	case Tc::N: return mk_A(n());
	case Tc::A: return mk_B(sub1(x.rest()));
	case Tc::B: return mk_A(x.rest());
	}
	__builtin_unreachable();
}

TcInt neg(const TcInt& x) { return add1(complement(x)); }

TcInt sub(const TcInt& x, const TcInt& y) { return add(x, neg(y)); }

std::string render_bits(const TcInt& x) {
	if(x.ctor() == Tc::N) return "...11";
	std::string digits;
	const TcInt* p = &x;
	for(; p->ctor() == Tc::A || p->ctor() == Tc::B; p = &p->rest())
		digits.push_back(p->ctor() == Tc::A ? '0' : '1');
	digits.push_back(p->ctor() == Tc::N ? '1' : '0');
	std::reverse(digits.begin(), digits.end());
	return "..." + digits;
}

TcInt parse_bits(const std::string& text) {
	if(text.rfind("...", 0) != 0) throw ParseError("bit string must start with '...'", 0);
	if(text.size() == 3) throw ParseError("missing tail bit after '...'", 3);
	TcInt x;
	for(std::size_t i = 3; i < text.size(); ++i) {
		const char c = text[i];
		if(c != '0' && c != '1') throw ParseError(std::string("unexpected character '") + c + "'", i);
		if(i == 3)
			x = c == '0' ? z() : n();
		else
			x = c == '0' ? mk_A(std::move(x)) : mk_B(std::move(x));
	}
	return x;
}

TcInt embed(const binary::BinNat& x) {
	switch(x.ctor()) {
	case binary::Bin::Z: return z();
	case binary::Bin::A: return TcInt::wrap(Tc::A, embed(x.rest()));
	case binary::Bin::B: return TcInt::wrap(Tc::B, embed(x.rest()));
	}
	__builtin_unreachable();
}

} // namespace numerals::twoscomp
