#include "numerals/braun.hpp"

#include <bit>
#include <cstdint>

namespace numerals::braun {

CdIndex cd_from_int(std::int64_t n) {
	if(n < 0) throw DomainError("C-D index of a negative integer");
	if(n == 0) return {};
	if(n % 2 == 1) return CdIndex::wrap(Cd::C, cd_from_int((n - 1) / 2));
	return CdIndex::wrap(Cd::D, cd_from_int((n - 2) / 2));
}

std::uint64_t cd_to_int(const CdIndex& i) {
	switch(i.ctor()) {
	case Cd::Z: return 0;
	case Cd::C: return 2 * cd_to_int(i.rest()) + 1;
	case Cd::D: return 2 * cd_to_int(i.rest()) + 2;
	}
	__builtin_unreachable();
}

std::uint64_t digit_count(std::uint64_t i) {
	// i has k digits exactly when 2^k - 1 <= i <= 2^(k+1) - 2.
	if(i == UINT64_MAX) return 64;
	return static_cast<std::uint64_t>(std::bit_width(i + 1)) - 1;
}

std::uint64_t digit_count(const CdIndex& i) {
	std::uint64_t k = 0;
	for(const CdIndex* p = &i; !p->is_base(); p = &p->rest()) ++k;
	return k;
}

} // namespace numerals::braun
