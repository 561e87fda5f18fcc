#include "numerals/binary.hpp"

#include <limits>

#include "numerals/errors.hpp"

namespace numerals::binary {

BinNat from_int(std::int64_t n) {
	if(n < 0) throw DomainError("binary numeral of a negative integer");
	if(n == 0) return {};
	BinNat rest = from_int(n / 2);
	return n % 2 == 0 ? mk_A(std::move(rest)) : mk_B(std::move(rest));
}

namespace {

std::uint64_t denote(const BinNat& x) {
	if(x.is_base()) return 0;
	const std::uint64_t half = denote(x.rest());
	if(half > std::numeric_limits<std::uint64_t>::max() / 2)
		throw DomainError("binary numeral does not fit in 64 bits");
	return 2 * half + (x.ctor() == Bin::B ? 1 : 0);
}

} // namespace

std::uint64_t to_int(const BinNat& x) {
	if(!is_canonical(x)) throw ValidityError("non-canonical binary numeral (A applied to Z)");
	return denote(x);
}

bool is_canonical(const BinNat& x) {
	for(const BinNat* p = &x; !p->is_base(); p = &p->rest())
		if(p->ctor() == Bin::A && p->rest().is_base()) return false;
	return true;
}

std::uint64_t size(const BinNat& x) {
	std::uint64_t n = 0;
	for(const BinNat* p = &x; !p->is_base(); p = &p->rest()) ++n;
	return n;
}

BinNat all_ones(std::uint64_t digits) {
	BinNat x;
	for(; digits > 0; --digits) x = mk_B(std::move(x));
	return x;
}

} // namespace numerals::binary
