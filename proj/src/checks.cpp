#include "numerals/checks.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <sstream>

#include "numerals/braun.hpp"
#include "numerals/errors.hpp"
#include "numerals/listlab.hpp"
#include "numerals/numio.hpp"
#include "numerals/twoscomp.hpp"
#include "numerals/unary.hpp"

namespace numerals::checks {

namespace {

// Collects the outcome of one property; only the first counterexample is
// kept. Results appear in `out` in declaration order.
class Property {
public:
	Property(std::vector<PropertyResult>& out, std::string_view suite, std::string_view name)
		: out_(out), index_(out.size()) {
		out_.push_back({std::string(suite), std::string(name), true, {}});
	}

	/// Records a failure described by `describe()` unless `ok`. Returns `ok`.
	template<typename Describe>
	bool expect(bool ok, Describe&& describe) {
		PropertyResult& r = out_[index_];
		if(!ok && r.pass) {
			r.pass = false;
			r.detail = describe();
		}
		return ok;
	}

	bool failed() const { return !out_[index_].pass; }

private:
	std::vector<PropertyResult>& out_;
	std::size_t index_;
};

template<typename... Ts>
std::string cat(const Ts&... parts) {
	std::ostringstream os;
	(os << ... << parts);
	return os.str();
}

// unary ---------------------------------------------------------------------

void unary_suite(std::vector<PropertyResult>& out, const Options&) {
	using namespace unary;
	constexpr std::string_view S = "unary";
	{
		Property p(out, S, "roundtrip 0..2000");
		for(std::int64_t n = 0; n <= 2000 && !p.failed(); ++n)
			p.expect(to_int(from_int(n)) == static_cast<std::uint64_t>(n), [&] { return cat("n=", n); });
	}
	std::vector<UnaryNat> nats;
	for(std::int64_t n = 0; n <= 100; ++n) nats.push_back(from_int(n));
	{
		Property p(out, S, "plus and add agree with integer addition on 0..60");
		for(int a = 0; a <= 60 && !p.failed(); ++a)
			for(int b = 0; b <= 60 && !p.failed(); ++b) {
				const auto sum = static_cast<std::uint64_t>(a + b);
				p.expect(to_int(plus(nats[a], nats[b])) == sum && to_int(add(nats[a], nats[b])) == sum,
				         [&] { return cat("a=", a, " b=", b); });
			}
	}
	{
		Property p(out, S, "plus commutative and associative on 0..25");
		for(int a = 0; a <= 25 && !p.failed(); ++a)
			for(int b = 0; b <= 25 && !p.failed(); ++b) {
				p.expect(plus(nats[a], nats[b]) == plus(nats[b], nats[a]), [&] { return cat("a=", a, " b=", b); });
				for(int c = 0; c <= 25 && !p.failed(); ++c)
					p.expect(plus(plus(nats[a], nats[b]), nats[c]) == plus(nats[a], plus(nats[b], nats[c])),
					         [&] { return cat("a=", a, " b=", b, " c=", c); });
			}
	}
	{
		Property p(out, S, "add Z y = y for y <= 100");
		for(int y = 0; y <= 100 && !p.failed(); ++y)
			p.expect(add(zero(), nats[y]) == nats[y], [&] { return cat("y=", y); });
	}
	{
		Property p(out, S, "add x (S (S Z)) = S (S x)");
		for(int x = 0; x <= 100 && !p.failed(); ++x)
			p.expect(add(nats[x], nats[2]) == succ(succ(nats[x])) && plus(nats[x], nats[2]) == succ(succ(nats[x])),
			         [&] { return cat("x=", x); });
	}
	{
		Property p(out, S, "mult agrees with integer multiplication on 0..20");
		for(int a = 0; a <= 20 && !p.failed(); ++a)
			for(int b = 0; b <= 20 && !p.failed(); ++b)
				p.expect(to_int(mult(nats[a], nats[b])) == static_cast<std::uint64_t>(a * b),
				         [&] { return cat("a=", a, " b=", b); });
	}
	{
		Property p(out, S, "plus and add take y+1 steps");
		for(int a = 0; a <= 60 && !p.failed(); a += 7)
			for(int b = 0; b <= 60 && !p.failed(); ++b) {
				StepCounter s1, s2;
				plus(nats[a], nats[b], s1);
				add(nats[a], nats[b], s2);
				p.expect(s1.count() == static_cast<StepCount>(b + 1) && s2.count() == static_cast<StepCount>(b + 1),
				         [&] { return cat("a=", a, " b=", b, " plus=", s1.count(), " add=", s2.count()); });
			}
	}
}

// listlab -------------------------------------------------------------------

listlab::IntList random_list(std::mt19937_64& rng, std::size_t min_len, std::size_t max_len) {
	std::uniform_int_distribution<std::size_t> len(min_len, max_len);
	std::uniform_int_distribution<std::int64_t> val(-1000, 1000);
	listlab::IntList xs(len(rng));
	for(auto& x : xs) x = val(rng);
	return xs;
}

void listlab_suite(std::vector<PropertyResult>& out, const Options& options) {
	using namespace listlab;
	constexpr std::string_view S = "listlab";
	std::mt19937_64 rng(options.seed);
	{
		Property p(out, S, "sumh xs acc = acc + sumlist xs");
		std::uniform_int_distribution<std::int64_t> accs(-100, 100);
		for(int i = 0; i < 500 && !p.failed(); ++i) {
			const auto xs = random_list(rng, 0, 50);
			const auto acc = accs(rng);
			p.expect(sumh(xs, acc) == acc + sumlist(xs), [&] { return cat("case ", i, " acc=", acc); });
		}
	}
	{
		Property p(out, S, "sumlist2 = sumlist");
		for(int i = 0; i < 200 && !p.failed(); ++i) {
			const auto xs = random_list(rng, 0, 50);
			p.expect(sumlist2(xs) == sumlist(xs), [&] { return cat("case ", i); });
		}
	}
	{
		Property p(out, S, "max_naive = max_fast = maximum");
		for(int i = 0; i < 300 && !p.failed(); ++i) {
			const auto xs = random_list(rng, 1, 15);
			const auto m = *std::max_element(xs.begin(), xs.end());
			p.expect(max_naive(xs) == m && max_fast(xs) == m, [&] { return cat("case ", i); });
		}
	}
	{
		Property p(out, S, "filter keeps exactly the satisfying elements in order");
		const auto even = [](std::int64_t x) { return x % 2 == 0; };
		for(int i = 0; i < 200 && !p.failed(); ++i) {
			const auto xs = random_list(rng, 0, 50);
			IntList expected;
			std::copy_if(xs.begin(), xs.end(), std::back_inserter(expected), even);
			p.expect(filter_keep(even, xs) == expected, [&] { return cat("case ", i); });
		}
	}
	{
		Property p(out, S, "sumlist and filter take n+1 steps");
		for(std::size_t n : {0, 1, 10, 100, 1000}) {
			const IntList xs(n, 3);
			StepCounter a, b;
			sumlist(xs, a);
			filter_keep([](std::int64_t) { return true; }, xs, b);
			p.expect(a.count() == n + 1 && b.count() == n + 1, [&] { return cat("n=", n); });
		}
	}
	{
		Property p(out, S, "ascending lists: max_naive 2^n-1 steps, max_fast n steps");
		for(std::size_t n : {1, 8, 12, 16}) {
			IntList xs(n);
			for(std::size_t i = 0; i < n; ++i) xs[i] = static_cast<std::int64_t>(i);
			StepCounter a, b;
			max_naive(xs, a);
			max_fast(xs, b);
			p.expect(a.count() == (StepCount{1} << n) - 1 && b.count() == n,
			         [&] { return cat("n=", n, " naive=", a.count(), " fast=", b.count()); });
		}
	}
}

// binary --------------------------------------------------------------------

void binary_suite(std::vector<PropertyResult>& out, const Options& options) {
	using namespace binary;
	constexpr std::string_view S = "binary";
	const BinaryOps& ops = options.binary;
	constexpr int kAddLimit = 512;
	constexpr int kMultLimit = 128;

	std::vector<BinNat> nats;
	for(int n = 0; n <= kAddLimit; ++n) nats.push_back(from_int(n));
	{
		Property p(out, S, "from_int/to_int roundtrip, canonical, size law on 1..4096");
		for(std::int64_t n = 0; n <= 4096 && !p.failed(); ++n) {
			const BinNat x = from_int(n);
			const auto expected_size = n == 0 ? 0u : static_cast<std::uint64_t>(std::bit_width(std::uint64_t(n)));
			p.expect(is_canonical(x) && to_int(x) == static_cast<std::uint64_t>(n) && size(x) == expected_size,
			         [&] { return cat("n=", n); });
		}
	}
	{
		Property p1(out, S, "add_v1 agrees with integer addition on 0..512");
		Property p2(out, S, "add_v2 agrees with integer addition on 0..512");
		Property p3(out, S, "add_v1 and add_v2 outputs canonical");
		Property p4(out, S, "add_v1 structurally equals add_v2");
		for(int a = 0; a <= kAddLimit; ++a)
			for(int b = 0; b <= kAddLimit; ++b) {
				const BinNat r1 = ops.add_v1(nats[a], nats[b]);
				const BinNat r2 = ops.add_v2(nats[a], nats[b]);
				const bool c1 = is_canonical(r1), c2 = is_canonical(r2);
				p3.expect(c1 && c2, [&] { return cat("a=", a, " b=", b); });
				const auto sum = static_cast<std::uint64_t>(a + b);
				p1.expect(c1 && to_int(r1) == sum, [&] { return cat("a=", a, " b=", b, " got ", numio::print_numeral(r1)); });
				p2.expect(c2 && to_int(r2) == sum, [&] { return cat("a=", a, " b=", b, " got ", numio::print_numeral(r2)); });
				p4.expect(r1 == r2, [&] { return cat("a=", a, " b=", b); });
			}
	}
	{
		Property p(out, S, "mult agrees with integer multiplication on 0..128, canonical");
		for(int a = 0; a <= kMultLimit && !p.failed(); ++a)
			for(int b = 0; b <= kMultLimit && !p.failed(); ++b) {
				const BinNat r = ops.mult(nats[a], nats[b]);
				p.expect(is_canonical(r) && to_int(r) == static_cast<std::uint64_t>(a * b),
				         [&] { return cat("a=", a, " b=", b); });
			}
	}
	{
		Property p(out, S, "add1 takes t+1 steps on t trailing Bs");
		for(std::uint64_t t = 0; t <= 40; ++t) {
			// t Bs over Z, and t Bs over A (B Z).
			BinNat over_a = from_int(2);
			for(std::uint64_t k = 0; k < t; ++k) over_a = mk_B(std::move(over_a));
			StepCounter s1, s2;
			add1(all_ones(t), s1);
			add1(over_a, s2);
			p.expect(s1.count() == t + 1 && s2.count() == t + 1, [&] { return cat("t=", t); });
		}
	}
	{
		Property p(out, S, "addition takes at most K*(max size + 1) steps");
		for(int a = 0; a <= kAddLimit && !p.failed(); ++a)
			for(int b = 0; b <= kAddLimit && !p.failed(); ++b) {
				StepCounter s1, s2;
				add_v1(nats[a], nats[b], s1);
				add_v2(nats[a], nats[b], s2);
				const double bound = kBinaryAddCostK * static_cast<double>(std::max(size(nats[a]), size(nats[b])) + 1);
				p.expect(static_cast<double>(s1.count()) <= bound && static_cast<double>(s2.count()) <= bound,
				         [&] { return cat("a=", a, " b=", b, " v1=", s1.count(), " v2=", s2.count()); });
			}
	}
}

// twoscomp ------------------------------------------------------------------

void twoscomp_suite(std::vector<PropertyResult>& out, const Options&) {
	using namespace twoscomp;
	constexpr std::string_view S = "twoscomp";
	constexpr int kLimit = 256;
	std::vector<TcInt> ints;
	for(int v = -kLimit; v <= kLimit; ++v) ints.push_back(from_int(v));
	auto at = [&](int v) -> const TcInt& { return ints[static_cast<std::size_t>(v + kLimit)]; };
	{
		Property p(out, S, "roundtrip and canonical on -512..512");
		for(std::int64_t v = -512; v <= 512 && !p.failed(); ++v) {
			const TcInt x = from_int(v);
			p.expect(is_canonical(x) && to_int(x) == v, [&] { return cat("v=", v); });
		}
	}
	{
		Property p1(out, S, "add agrees with integer addition on -256..256");
		Property p2(out, S, "sub agrees with integer subtraction on -256..256");
		Property p3(out, S, "outputs canonical");
		for(int a = -kLimit; a <= kLimit; ++a)
			for(int b = -kLimit; b <= kLimit; ++b) {
				const TcInt s = add(at(a), at(b));
				const TcInt d = sub(at(a), at(b));
				const bool cs = is_canonical(s), cd = is_canonical(d);
				p3.expect(cs && cd, [&] { return cat("a=", a, " b=", b); });
				p1.expect(cs && to_int(s) == a + b, [&] { return cat("a=", a, " b=", b); });
				p2.expect(cd && to_int(d) == a - b, [&] { return cat("a=", a, " b=", b); });
			}
	}
	{
		Property p(out, S, "neg, complement, add1 . sub1 on -256..256");
		for(int a = -kLimit; a <= kLimit && !p.failed(); ++a) {
			const TcInt& x = at(a);
			const TcInt c = complement(x);
			const TcInt m = neg(x);
			p.expect(is_canonical(c) && to_int(c) == -a - 1 && is_canonical(m) && to_int(m) == -a
			             && add1(sub1(x)) == x && sub1(add1(x)) == x && complement(c) == x,
			         [&] { return cat("a=", a); });
		}
	}
	{
		Property p(out, S, "add restricted to naturals matches binary add_v2");
		for(int a = 0; a <= kLimit && !p.failed(); ++a)
			for(int b = 0; b <= kLimit && !p.failed(); ++b) {
				const auto x = binary::from_int(a), y = binary::from_int(b);
				p.expect(add(embed(x), embed(y)) == embed(binary::add_v2(x, y)), [&] { return cat("a=", a, " b=", b); });
			}
	}
	{
		Property p(out, S, "bit rendering table and injectivity on -512..512");
		const std::pair<int, const char*> table[] = {{3, "...011"}, {2, "...010"}, {1, "...01"}, {0, "...0"},
		                                            {-1, "...11"},  {-2, "...10"},  {-3, "...101"}, {-4, "...100"},
		                                            {-5, "...1011"}};
		for(const auto& [v, bits] : table)
			p.expect(render_bits(from_int(v)) == bits, [&] { return cat("v=", v); });
		std::vector<std::string> seen;
		for(std::int64_t v = -512; v <= 512; ++v) {
			const auto bits = render_bits(from_int(v));
			p.expect(to_int(parse_bits(bits)) == v, [&] { return cat("parse_bits v=", v); });
			seen.push_back(bits);
		}
		std::sort(seen.begin(), seen.end());
		p.expect(std::adjacent_find(seen.begin(), seen.end()) == seen.end(), [] { return std::string("duplicate rendering"); });
	}
}

// braun ---------------------------------------------------------------------

using Seq = braun::BraunSeq<std::int64_t>;

// Returns the node count, or -1 if the Braun shape is violated anywhere.
std::int64_t braun_count(const Seq::Tree& t) {
	if(!t) return 0;
	const auto l = braun_count(t->left);
	const auto r = braun_count(t->right);
	if(l < 0 || r < 0 || !(l == r || l == r + 1)) return -1;
	return l + r + 1;
}

bool well_formed(const Seq& s) { return braun_count(s.root()) == static_cast<std::int64_t>(s.size()); }

void braun_suite(std::vector<PropertyResult>& out, const Options& options) {
	using namespace braun;
	constexpr std::string_view S = "braun";
	std::mt19937_64 rng(options.seed ^ 0xb7a0);
	{
		Property p(out, S, "C-D bijection on all indices with <= 12 digits");
		// The 2^d digit strings of length d must map one-to-one onto
		// [2^d - 1, 2^(d+1) - 2] and convert back to themselves.
		for(unsigned digits = 0; digits <= 12 && !p.failed(); ++digits) {
			const std::uint64_t count = std::uint64_t{1} << digits;
			std::vector<bool> hit(count, false);
			for(std::uint64_t mask = 0; mask < count && !p.failed(); ++mask) {
				CdIndex i;
				for(unsigned k = 0; k < digits; ++k) i = CdIndex::wrap((mask >> k) & 1 ? Cd::D : Cd::C, std::move(i));
				const std::uint64_t v = cd_to_int(i);
				const bool in_range = v >= count - 1 && v <= 2 * count - 2;
				p.expect(in_range && !hit[v - (count - 1)] && cd_from_int(static_cast<std::int64_t>(v)) == i,
				         [&] { return cat("digits=", digits, " mask=", mask); });
				if(in_range) hit[v - (count - 1)] = true;
			}
		}
	}
	{
		Property shape(out, S, "shape invariant after every operation");
		Property oracle(out, S, "operations agree with the list oracle");
		Property persist(out, S, "earlier versions unchanged");
		std::uniform_int_distribution<std::size_t> lens(0, 500);
		std::uniform_int_distribution<std::int64_t> vals(-1000000, 1000000);
		for(int round = 0; round < 40; ++round) {
			std::vector<std::int64_t> xs(lens(rng));
			for(auto& x : xs) x = vals(rng);
			Seq s = Seq::from_list(xs);
			shape.expect(well_formed(s), [&] { return cat("from_list round ", round); });
			oracle.expect(s.to_list() == xs, [&] { return cat("from_list round ", round); });
			for(int step = 0; step < 30; ++step) {
				const Seq before = s;
				const auto snapshot = xs;
				const auto pick = rng() % 4;
				if(pick == 0 || xs.empty()) {
					const auto v = vals(rng);
					s = s.cons(v);
					xs.insert(xs.begin(), v);
				} else if(pick == 1) {
					oracle.expect(s.first() == xs.front(), [&] { return cat("first round ", round); });
					s = s.rest();
					xs.erase(xs.begin());
				} else if(pick == 2) {
					const auto i = rng() % xs.size();
					const auto v = vals(rng);
					s = s.update(i, v);
					xs[i] = v;
				} else {
					const auto i = rng() % xs.size();
					oracle.expect(s.access(i) == xs[i] && s.access_cd(cd_from_int(static_cast<std::int64_t>(i))) == xs[i],
					              [&] { return cat("access round ", round); });
				}
				shape.expect(well_formed(s), [&] { return cat("round ", round, " step ", step); });
				oracle.expect(s.to_list() == xs, [&] { return cat("round ", round, " step ", step); });
				persist.expect(before.to_list() == snapshot && well_formed(before),
				               [&] { return cat("round ", round, " step ", step); });
			}
		}
	}
	{
		Property p(out, S, "depth = floor(log2 n) + 1 on 1..4096");
		Seq s;
		for(std::int64_t n = 1; n <= 4096 && !p.failed(); ++n) {
			s = s.cons(n);
			const auto expected = static_cast<std::uint64_t>(std::bit_width(static_cast<std::uint64_t>(n)));
			p.expect(s.depth() == expected, [&] { return cat("n=", n); });
		}
	}
	{
		Property p(out, S, "access visits = C/D digit count; cons/rest visits <= depth+1");
		std::vector<std::int64_t> xs(1000);
		for(std::size_t i = 0; i < xs.size(); ++i) xs[i] = static_cast<std::int64_t>(i);
		const Seq s = Seq::from_list(xs);
		for(std::uint64_t i = 0; i < xs.size() && !p.failed(); ++i) {
			StepCounter c;
			s.access(i, c);
			p.expect(c.count() == digit_count(i), [&] { return cat("i=", i); });
		}
		Seq t;
		for(std::int64_t n = 0; n < 600 && !p.failed(); ++n) {
			StepCounter c1;
			const Seq u = t.cons(n, c1);
			p.expect(c1.count() <= t.depth() + 1, [&] { return cat("cons n=", n); });
			StepCounter c2;
			u.rest(c2);
			p.expect(c2.count() <= u.depth() + 1, [&] { return cat("rest n=", n + 1); });
			t = u;
		}
	}
}

struct Suite {
	std::string_view name;
	void (*run)(std::vector<PropertyResult>&, const Options&);
};

constexpr Suite kSuites[] = {
	{"unary", unary_suite},   {"listlab", listlab_suite}, {"binary", binary_suite},
	{"twoscomp", twoscomp_suite}, {"braun", braun_suite},
};

} // namespace

BinaryOps BinaryOps::library() {
	return {
		[](const binary::BinNat& x, const binary::BinNat& y) { return binary::add_v1(x, y); },
		[](const binary::BinNat& x, const binary::BinNat& y) { return binary::add_v2(x, y); },
		[](const binary::BinNat& x, const binary::BinNat& y) { return binary::mult(x, y); },
	};
}

const std::vector<std::string_view>& suite_names() {
	static const std::vector<std::string_view> names = [] {
		std::vector<std::string_view> v;
		for(const Suite& s : kSuites) v.push_back(s.name);
		v.push_back("all");
		return v;
	}();
	return names;
}

std::vector<PropertyResult> run_suite(std::string_view suite, const Options& options) {
	std::vector<PropertyResult> out;
	bool found = false;
	for(const Suite& s : kSuites)
		if(suite == "all" || suite == s.name) {
			s.run(out, options);
			found = true;
		}
	if(!found) throw UsageError("unknown suite '" + std::string(suite) + "'");
	return out;
}

} // namespace numerals::checks
