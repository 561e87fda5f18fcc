#include "numerals/unary.hpp"

#include "numerals/errors.hpp"

namespace numerals::unary {

UnaryNat from_int(std::int64_t n) {
	if(n < 0) throw DomainError("unary numeral of a negative integer");
	UnaryNat x;
	for(; n > 0; --n) x = succ(std::move(x));
	return x;
}

std::uint64_t to_int(const UnaryNat& x) {
	std::uint64_t n = 0;
	for(const UnaryNat* p = &x; !p->is_base(); p = &p->rest()) ++n;
	return n;
}

} // namespace numerals::unary
