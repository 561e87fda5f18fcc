// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails. All tolerances are exact unless stated otherwise.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "numerals/binary.hpp"
#include "numerals/braun.hpp"
#include "numerals/cli.hpp"
#include "numerals/costmeter.hpp"
#include "numerals/errors.hpp"
#include "numerals/listlab.hpp"
#include "numerals/numio.hpp"
#include "numerals/twoscomp.hpp"
#include "numerals/unary.hpp"

using namespace numerals;

namespace {

constexpr std::uint64_t kSeed = 0xacce97;

// Cost-law constant for binary addition, frozen from measurement: the
// largest steps / (max size + 1) over all operand pairs <= 512 is 1.9 for
// add_v1 and 1.5 for add_v2.
constexpr double kAddCostK = 2.0;

struct Criterion {
	std::string detail;
	bool ok = true;

	// Keeps the first failure message.
	void expect(bool cond, const std::function<std::string()>& what) {
		if(!cond && ok) {
			ok = false;
			detail = what();
		}
	}
};

std::string s(std::int64_t v) { return std::to_string(v); }

std::uint64_t bit_length(std::uint64_t n) {
	std::uint64_t k = 0;
	for(; n > 0; n /= 2) ++k;
	return k;
}

// 1 -------------------------------------------------------------------------
Criterion oracle_arithmetic() {
	Criterion c;
	std::vector<unary::UnaryNat> u;
	for(int n = 0; n <= 60; ++n) u.push_back(unary::from_int(n));
	for(int a = 0; a <= 60; ++a)
		for(int b = 0; b <= 60; ++b) {
			c.expect(unary::to_int(unary::plus(u[a], u[b])) == std::uint64_t(a + b), [&] { return "u_plus " + s(a) + "+" + s(b); });
			c.expect(unary::to_int(unary::add(u[a], u[b])) == std::uint64_t(a + b), [&] { return "u_add " + s(a) + "+" + s(b); });
		}
	std::vector<binary::BinNat> bn;
	for(int n = 0; n <= 512; ++n) bn.push_back(binary::from_int(n));
	for(int a = 0; a <= 512; ++a)
		for(int b = 0; b <= 512; ++b) {
			c.expect(binary::to_int(binary::add_v1(bn[a], bn[b])) == std::uint64_t(a + b), [&] { return "b_add_v1 " + s(a) + "+" + s(b); });
			c.expect(binary::to_int(binary::add_v2(bn[a], bn[b])) == std::uint64_t(a + b), [&] { return "b_add_v2 " + s(a) + "+" + s(b); });
			if(a <= 128 && b <= 128)
				c.expect(binary::to_int(binary::mult(bn[a], bn[b])) == std::uint64_t(a * b), [&] { return "b_mult " + s(a) + "*" + s(b); });
		}
	std::vector<twoscomp::TcInt> t;
	for(int v = -256; v <= 256; ++v) t.push_back(twoscomp::from_int(v));
	for(int a = -256; a <= 256; ++a) {
		const auto& x = t[a + 256];
		c.expect(twoscomp::to_int(twoscomp::neg(x)) == -a, [&] { return "i_neg " + s(a); });
		for(int b = -256; b <= 256; ++b) {
			const auto& y = t[b + 256];
			c.expect(twoscomp::to_int(twoscomp::add(x, y)) == a + b, [&] { return "i_add " + s(a) + "+" + s(b); });
			c.expect(twoscomp::to_int(twoscomp::sub(x, y)) == a - b, [&] { return "i_sub " + s(a) + "-" + s(b); });
		}
	}
	return c;
}

// 2 -------------------------------------------------------------------------
Criterion paper_fixtures() {
	Criterion c;
	const std::pair<int, const char*> to_nat[] = {
		{0, "Z"}, {1, "B(Z)"}, {2, "A(B(Z))"}, {3, "B(B(Z))"}, {4, "A(A(B(Z)))"}};
	for(const auto& [n, lit] : to_nat)
		c.expect(numio::print_numeral(binary::from_int(n)) == lit, [&] { return "toNat " + s(n); });
	const std::pair<int, const char*> to_ints[] = {
		{-1, "N"}, {-2, "A(N)"}, {-3, "B(A(N))"}, {-4, "A(A(N))"}, {-5, "B(B(A(N)))"}};
	for(const auto& [n, lit] : to_ints)
		c.expect(numio::print_numeral(twoscomp::from_int(n)) == lit, [&] { return "toInts " + s(n); });
	const std::pair<int, const char*> bits[] = {{3, "...011"},  {2, "...010"},  {1, "...01"},
	                                            {0, "...0"},    {-1, "...11"},  {-2, "...10"},
	                                            {-3, "...101"}, {-4, "...100"}, {-5, "...1011"}};
	for(const auto& [n, str] : bits)
		c.expect(twoscomp::render_bits(twoscomp::from_int(n)) == str, [&] { return "bits " + s(n); });
	return c;
}

// 3 -------------------------------------------------------------------------
Criterion canonicality() {
	Criterion c;
	std::vector<binary::BinNat> bn;
	for(int n = 0; n <= 512; ++n) bn.push_back(binary::from_int(n));
	for(const auto& x : bn) c.expect(binary::is_canonical(binary::add1(x)), [] { return std::string("b_add1"); });
	for(int a = 0; a <= 512; ++a)
		for(int b = 0; b <= 512; ++b) {
			c.expect(binary::is_canonical(binary::add_v1(bn[a], bn[b])), [&] { return "b_add_v1 " + s(a) + "," + s(b); });
			c.expect(binary::is_canonical(binary::add_v2(bn[a], bn[b])), [&] { return "b_add_v2 " + s(a) + "," + s(b); });
			c.expect(binary::is_canonical(binary::addp(bn[a], bn[b])), [&] { return "b_addp " + s(a) + "," + s(b); });
			if(a <= 128 && b <= 128)
				c.expect(binary::is_canonical(binary::mult(bn[a], bn[b])), [&] { return "b_mult " + s(a) + "," + s(b); });
		}
	std::vector<twoscomp::TcInt> t;
	for(int v = -256; v <= 256; ++v) t.push_back(twoscomp::from_int(v));
	for(int a = -256; a <= 256; ++a) {
		const auto& x = t[a + 256];
		c.expect(twoscomp::is_canonical(x), [&] { return "i_from_int " + s(a); });
		c.expect(twoscomp::is_canonical(twoscomp::neg(x)) && twoscomp::is_canonical(twoscomp::complement(x))
		             && twoscomp::is_canonical(twoscomp::add1(x)) && twoscomp::is_canonical(twoscomp::sub1(x)),
		         [&] { return "unary ops on " + s(a); });
		for(int b = -256; b <= 256; ++b) {
			const auto& y = t[b + 256];
			c.expect(twoscomp::is_canonical(twoscomp::add(x, y)) && twoscomp::is_canonical(twoscomp::sub(x, y)),
			         [&] { return "i_add/i_sub " + s(a) + "," + s(b); });
		}
	}
	auto rejects = [](auto parse, const char* text) {
		try {
			parse(text);
		} catch(const CanonicalityError&) {
			return true;
		}
		return false;
	};
	c.expect(rejects(numio::parse_binary, "A(Z)"), [] { return std::string("parser accepted A(Z)"); });
	c.expect(rejects(numio::parse_twoscomp, "A(Z)"), [] { return std::string("parser accepted twoscomp A(Z)"); });
	c.expect(rejects(numio::parse_twoscomp, "B(N)"), [] { return std::string("parser accepted B(N)"); });
	return c;
}

// 4 -------------------------------------------------------------------------
Criterion size_recurrence() {
	Criterion c;
	for(std::uint64_t n = 1; n <= 4096; ++n)
		c.expect(binary::size(binary::from_int(std::int64_t(n))) == bit_length(n), [&] { return "n=" + s(std::int64_t(n)); });
	return c;
}

// 5 -------------------------------------------------------------------------
using Seq = braun::BraunSeq<std::int64_t>;

std::int64_t shape_count(const Seq::Tree& t) {
	if(!t) return 0;
	const auto l = shape_count(t->left), r = shape_count(t->right);
	if(l < 0 || r < 0 || !(l == r || l == r + 1)) return -1;
	return l + r + 1;
}

std::uint64_t brute_depth(const Seq::Tree& t) {
	return t ? 1 + std::max(brute_depth(t->left), brute_depth(t->right)) : 0;
}

Criterion braun_laws() {
	Criterion c;
	std::mt19937_64 rng(kSeed);
	auto pick = [&](std::int64_t lo, std::int64_t hi) { return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng); };
	auto good = [](const Seq& q) { return shape_count(q.root()) == std::int64_t(q.size()); };
	for(int round = 0; round < 50; ++round) {
		std::vector<std::int64_t> xs(std::size_t(pick(0, 500)));
		for(auto& x : xs) x = pick(-1000, 1000);
		Seq q = Seq::from_list(xs);
		c.expect(good(q) && q.to_list() == xs, [&] { return "from_list round " + s(round); });
		for(int step = 0; step < 40; ++step) {
			const Seq before = q;
			const auto snapshot = xs;
			const auto op = pick(0, 3);
			if(op == 0 || xs.empty()) {
				const auto v = pick(-1000, 1000);
				q = q.cons(v);
				xs.insert(xs.begin(), v);
			} else if(op == 1) {
				c.expect(q.first() == xs.front(), [&] { return "first round " + s(round); });
				q = q.rest();
				xs.erase(xs.begin());
			} else if(op == 2) {
				const auto i = std::size_t(pick(0, std::int64_t(xs.size()) - 1));
				const auto v = pick(-1000, 1000);
				q = q.update(i, v);
				xs[i] = v;
			} else {
				const auto i = std::size_t(pick(0, std::int64_t(xs.size()) - 1));
				c.expect(q.access(i) == xs[i] && q.access_cd(braun::cd_from_int(std::int64_t(i))) == xs[i],
				         [&] { return "access round " + s(round); });
			}
			c.expect(good(q), [&] { return "shape round " + s(round) + " step " + s(step); });
			c.expect(q.to_list() == xs, [&] { return "oracle round " + s(round) + " step " + s(step); });
			c.expect(good(before) && before.to_list() == snapshot, [&] { return "persistence round " + s(round); });
		}
	}
	Seq q;
	for(std::int64_t n = 1; n <= 4096; ++n) {
		q = q.cons(n);
		c.expect(q.depth() == bit_length(std::uint64_t(n)) && brute_depth(q.root()) == q.depth(),
		         [&] { return "depth n=" + s(n); });
	}
	for(std::uint64_t i = 0; i < q.size(); ++i) {
		StepCounter visits;
		q.access(i, visits);
		c.expect(visits.count() <= braun::digit_count(braun::cd_from_int(std::int64_t(i))),
		         [&] { return "access visits i=" + s(std::int64_t(i)); });
	}
	return c;
}

// 6 -------------------------------------------------------------------------
Criterion cost_separations() {
	Criterion c;
	for(std::int64_t n : {8, 12, 16}) {
		listlab::IntList xs(static_cast<std::size_t>(n));
		for(std::int64_t i = 0; i < n; ++i) xs[std::size_t(i)] = i + 1;
		StepCounter naive, fast;
		listlab::max_naive(xs, naive);
		listlab::max_fast(xs, fast);
		c.expect(naive.count() == (StepCount{1} << n) - 1, [&] { return "max_naive n=" + s(n); });
		c.expect(fast.count() == StepCount(n), [&] { return "max_fast n=" + s(n); });
	}
	for(std::int64_t n : {10, 100, 1000}) {
		listlab::IntList xs(std::size_t(n), 1);
		StepCounter sum, filt;
		listlab::sumlist(xs, sum);
		listlab::filter_keep([](std::int64_t x) { return x > 0; }, xs, filt);
		c.expect(sum.count() == StepCount(n + 1), [&] { return "sumlist n=" + s(n); });
		c.expect(filt.count() == StepCount(n + 1), [&] { return "filter_keep n=" + s(n); });
	}
	return c;
}

// 7 -------------------------------------------------------------------------
Criterion linear_addition(double& worst) {
	Criterion c;
	std::vector<binary::BinNat> bn;
	for(int n = 0; n <= 512; ++n) bn.push_back(binary::from_int(n));
	for(int a = 0; a <= 512; ++a)
		for(int b = 0; b <= 512; ++b) {
			StepCounter v1, v2;
			binary::add_v1(bn[a], bn[b], v1);
			binary::add_v2(bn[a], bn[b], v2);
			const double m = double(std::max(binary::size(bn[a]), binary::size(bn[b])) + 1);
			worst = std::max({worst, double(v1.count()) / m, double(v2.count()) / m});
			c.expect(double(v1.count()) <= kAddCostK * m && double(v2.count()) <= kAddCostK * m,
			         [&] { return s(a) + "+" + s(b); });
		}
	return c;
}

// 8 -------------------------------------------------------------------------
Criterion accumulator_lemma() {
	Criterion c;
	std::mt19937_64 rng(kSeed + 8);
	auto pick = [&](std::int64_t lo, std::int64_t hi) { return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng); };
	for(int i = 0; i < 500; ++i) {
		listlab::IntList xs(std::size_t(pick(0, 50)));
		for(auto& x : xs) x = pick(-1000, 1000);
		const auto acc = pick(-100, 100);
		c.expect(listlab::sumh(xs, acc) == acc + listlab::sumlist(xs), [&] { return "pair " + s(i); });
	}
	return c;
}

// 9 -------------------------------------------------------------------------
Criterion addition_equivalence() {
	Criterion c;
	std::vector<binary::BinNat> bn;
	for(int n = 0; n <= 512; ++n) bn.push_back(binary::from_int(n));
	for(int a = 0; a <= 512; ++a)
		for(int b = 0; b <= 512; ++b) {
			const auto v2 = binary::add_v2(bn[a], bn[b]);
			c.expect(binary::add_v1(bn[a], bn[b]) == v2, [&] { return "v1/v2 " + s(a) + "," + s(b); });
			if(a <= 256 && b <= 256)
				c.expect(twoscomp::add(twoscomp::embed(bn[a]), twoscomp::embed(bn[b])) == twoscomp::embed(v2),
				         [&] { return "embedding " + s(a) + "," + s(b); });
		}
	return c;
}

// 10 ------------------------------------------------------------------------
Criterion cli_contract() {
	Criterion c;
	struct Case {
		std::vector<std::string> args;
		std::string input;
		std::string expected_last_line;
	};
	const Case cases[] = {
		{{"convert", "--kind", "twoscomp", "--from", "int", "--to", "bits", "-5"}, "", "...1011"},
		{{"convert", "--kind", "binary", "--from", "int", "--to", "literal", "4"}, "", "A(A(B(Z)))"},
		{{"convert", "--kind", "cd", "--from", "literal", "--to", "int", "C(D(Z))"}, "", "5"},
		{{"eval", "--kind", "unary", "--op", "plus", "S(Z)", "S(Z)"}, "", "S(S(Z))"},
		{{"eval", "--kind", "binary", "--op", "add", "B(Z)", "B(Z)"}, "", "A(B(Z))"},
		{{"eval", "--kind", "twoscomp", "--op", "add", "N", "N"}, "", "A(N)"},
		{{"braun", "--init", "a,b,c"}, "access 1\n", "b"},
		{{"braun", "--init", ""}, "cons x\nfirst\n", "x"},
		{{"braun", "--init", "a,b"}, "rest\naccess 0\n", "b"},
	};
	for(const Case& k : cases) {
		std::istringstream in(k.input);
		std::ostringstream out, err;
		const int code = cli::run(k.args, in, out, err);
		std::string text = out.str();
		const bool terminated = !text.empty() && text.back() == '\n';
		if(terminated) text.pop_back();
		const std::string last = text.substr(text.find_last_of('\n') + 1);
		c.expect(code == 0 && terminated && last == k.expected_last_line && err.str().empty(),
		         [&] { return k.args[0] + " ... -> '" + last + "' (exit " + s(code) + ")"; });
	}
	return c;
}

} // namespace

int main() {
	using clock = std::chrono::steady_clock;
	const auto start = clock::now();
	double worst_add_ratio = 0.0;
	const std::pair<const char*, std::function<Criterion()>> criteria[] = {
		{"1 oracle arithmetic equivalence", oracle_arithmetic},
		{"2 literal fixtures (toNat, toInts, bit strings)", paper_fixtures},
		{"3 canonicality of outputs and parser rejection", canonicality},
		{"4 size recurrence floor(log2 n)+1 on 1..4096", size_recurrence},
		{"5 Braun shape/oracle/persistence/depth/access visits", braun_laws},
		{"6 cost separations (max_naive, max_fast, sumlist, filter_keep)", cost_separations},
		{"7 linear-time binary addition, K = 2", [&] { return linear_addition(worst_add_ratio); }},
		{"8 accumulator lemma on 500 random pairs", accumulator_lemma},
		{"9 equivalence of addition algorithms", addition_equivalence},
		{"10 CLI contract examples", cli_contract},
	};
	int failed = 0;
	for(const auto& [name, run] : criteria) {
		const Criterion r = run();
		if(!r.ok) ++failed;
		std::printf("%s  %s%s%s\n", r.ok ? "PASS" : "FAIL", name, r.ok ? "" : ": ", r.detail.c_str());
	}
	const double seconds = std::chrono::duration<double>(clock::now() - start).count();
	std::printf("measured worst add ratio %.3f (K = %.1f)\n", worst_add_ratio, kAddCostK);
	std::printf("%d of 10 criteria passed in %.2f s\n", 10 - failed, seconds);
	return failed == 0 ? 0 : 1;
}
