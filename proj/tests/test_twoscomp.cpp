#include <doctest.h>

#include <set>
#include <vector>

#include "numerals/errors.hpp"
#include "numerals/twoscomp.hpp"

using namespace numerals;
using namespace numerals::twoscomp;

namespace {

TcInt A(TcInt x) { return TcInt::wrap(Tc::A, std::move(x)); }
TcInt B(TcInt x) { return TcInt::wrap(Tc::B, std::move(x)); }
const TcInt Z{};
const TcInt N = n();

} // namespace

TEST_CASE("twoscomp: from_int listing") {
	CHECK(from_int(-1) == N);
	CHECK(from_int(-2) == A(N));
	CHECK(from_int(-3) == B(A(N)));
	CHECK(from_int(-4) == A(A(N)));
	CHECK(from_int(-5) == B(B(A(N))));
	CHECK(from_int(0) == Z);
	CHECK(from_int(4) == A(A(B(Z))));
	const TcInt h = from_int(-100);
	CHECK(is_canonical(h));
	CHECK(to_int(h) == -100);
}

TEST_CASE("twoscomp: to_int and validity") {
	CHECK(to_int(B(B(A(N)))) == -5);
	CHECK(to_int(A(A(B(Z)))) == 4);
	CHECK_THROWS_AS(to_int(B(N)), ValidityError);
	CHECK_THROWS_AS(to_int(A(Z)), ValidityError);
	CHECK(to_int(from_int(INT64_MIN)) == INT64_MIN);
	CHECK(to_int(from_int(INT64_MAX)) == INT64_MAX);
	for(std::int64_t v = -512; v <= 512; ++v) {
		REQUIRE(is_canonical(from_int(v)));
		REQUIRE(to_int(from_int(v)) == v);
	}
}

TEST_CASE("twoscomp: is_canonical") {
	CHECK(is_canonical(N));
	CHECK_FALSE(is_canonical(B(N)));
	CHECK(is_canonical(A(N)));
	CHECK_FALSE(is_canonical(A(B(N))));
}

TEST_CASE("twoscomp: complement") {
	CHECK(complement(Z) == N);
	CHECK(complement(B(Z)) == A(N));
	for(std::int64_t v = -300; v <= 300; ++v) {
		const TcInt x = from_int(v);
		const TcInt c = complement(x);
		REQUIRE(is_canonical(c));
		REQUIRE(to_int(c) == -v - 1);
		REQUIRE(complement(c) == x);
	}
}

TEST_CASE("twoscomp: add1 and sub1") {
	CHECK(add1(N) == Z);
	CHECK(sub1(Z) == N);
	CHECK(add1(from_int(7)) == from_int(8));
	for(std::int64_t v = -256; v <= 256; ++v) {
		const TcInt x = from_int(v);
		REQUIRE(add1(x) == from_int(v + 1));
		REQUIRE(sub1(x) == from_int(v - 1));
		REQUIRE(add1(sub1(x)) == x);
	}
}

TEST_CASE("twoscomp: add, neg, sub") {
	const TcInt x = from_int(-37);
	CHECK(add(x, Z) == x);
	CHECK(add(N, N) == A(N));
	CHECK(add(from_int(-5), from_int(3)) == from_int(-2));
	CHECK(neg(Z) == Z);
	CHECK(neg(from_int(5)) == from_int(-5));
	CHECK(sub(from_int(3), from_int(10)) == from_int(-7));
}

TEST_CASE("twoscomp: every clause of add agrees with the oracle on -256..256") {
	std::vector<TcInt> v;
	for(std::int64_t a = -256; a <= 256; ++a) v.push_back(from_int(a));
	for(std::int64_t a = -256; a <= 256; ++a) {
		const TcInt& x = v[static_cast<std::size_t>(a + 256)];
		const TcInt m = neg(x);
		REQUIRE(is_canonical(m));
		REQUIRE(to_int(m) == -a);
		for(std::int64_t b = -256; b <= 256; ++b) {
			const TcInt& y = v[static_cast<std::size_t>(b + 256)];
			const TcInt s = add(x, y);
			const TcInt d = sub(x, y);
			const TcInt p = addp(x, y);
			REQUIRE(is_canonical(s));
			REQUIRE(is_canonical(d));
			REQUIRE(is_canonical(p));
			REQUIRE(to_int(s) == a + b);
			REQUIRE(to_int(d) == a - b);
			REQUIRE(to_int(p) == a + b + 1);
		}
	}
}

TEST_CASE("twoscomp: add on naturals is binary add_v2 under the embedding") {
	for(std::int64_t a = 0; a <= 256; ++a)
		for(std::int64_t b = 0; b <= 256; ++b) {
			const auto x = binary::from_int(a), y = binary::from_int(b);
			REQUIRE(add(embed(x), embed(y)) == embed(binary::add_v2(x, y)));
		}
}

TEST_CASE("twoscomp: render_bits") {
	CHECK(render_bits(from_int(3)) == "...011");
	CHECK(render_bits(from_int(2)) == "...010");
	CHECK(render_bits(from_int(1)) == "...01");
	CHECK(render_bits(from_int(0)) == "...0");
	CHECK(render_bits(from_int(-1)) == "...11");
	CHECK(render_bits(from_int(-2)) == "...10");
	CHECK(render_bits(from_int(-3)) == "...101");
	CHECK(render_bits(from_int(-4)) == "...100");
	CHECK(render_bits(from_int(-5)) == "...1011");

	std::set<std::string> seen;
	for(std::int64_t v = -512; v <= 512; ++v) {
		const auto bits = render_bits(from_int(v));
		REQUIRE(seen.insert(bits).second);
		REQUIRE(parse_bits(bits) == from_int(v));
	}
}

TEST_CASE("twoscomp: parse_bits normalizes sign extension and rejects junk") {
	CHECK(parse_bits("...0011") == from_int(3));
	CHECK(parse_bits("...1") == N);
	CHECK(parse_bits("...1110") == from_int(-2));
	CHECK_THROWS_AS(parse_bits("011"), ParseError);
	CHECK_THROWS_AS(parse_bits("..."), ParseError);
	CHECK_THROWS_AS(parse_bits("...012"), ParseError);
}
