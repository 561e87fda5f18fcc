#include "numerals/cli.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "numerals/braun.hpp"
#include "numerals/costmeter.hpp"
#include "numerals/errors.hpp"
#include "numerals/numio.hpp"

namespace numerals::cli {

namespace {

using numio::NumeralKind;

std::int64_t parse_int(const std::string& text) {
	std::int64_t v = 0;
	const char* first = text.data();
	const char* last = first + text.size();
	if(first != last && *first == '+') ++first;
	const auto [ptr, ec] = std::from_chars(first, last, v);
	if(ec != std::errc{} || ptr != last || first == last) throw UsageError("not an integer: '" + text + "'");
	return v;
}

std::uint64_t parse_size(const std::string& text) {
	const std::int64_t v = parse_int(text);
	if(v < 0) throw UsageError("negative size or index: '" + text + "'");
	return static_cast<std::uint64_t>(v);
}

std::vector<std::string> split(const std::string& text, char sep) {
	std::vector<std::string> parts;
	std::string part;
	std::istringstream is(text);
	while(std::getline(is, part, sep)) {
		const auto b = part.find_first_not_of(" \t");
		const auto e = part.find_last_not_of(" \t");
		parts.push_back(b == std::string::npos ? std::string{} : part.substr(b, e - b + 1));
	}
	return parts;
}

// convert -------------------------------------------------------------------

numio::Numeral numeral_from_int(NumeralKind kind, std::int64_t v) {
	switch(kind) {
	case NumeralKind::Unary: return unary::from_int(v);
	case NumeralKind::Binary: return binary::from_int(v);
	case NumeralKind::Twoscomp: return twoscomp::from_int(v);
	case NumeralKind::Cd: return braun::cd_from_int(v);
	}
	__builtin_unreachable();
}

std::string numeral_to_int(const numio::Numeral& x) {
	return std::visit(
		[](const auto& v) -> std::string {
			using T = std::decay_t<decltype(v)>;
			if constexpr(std::is_same_v<T, unary::UnaryNat>) return std::to_string(unary::to_int(v));
			else if constexpr(std::is_same_v<T, binary::BinNat>) return std::to_string(binary::to_int(v));
			else if constexpr(std::is_same_v<T, twoscomp::TcInt>) return std::to_string(twoscomp::to_int(v));
			else return std::to_string(braun::cd_to_int(v));
		},
		x);
}

struct ConvertArgs {
	std::string kind, from, to, value;
};

int convert(const ConvertArgs& a, std::ostream& out) {
	const NumeralKind kind = numio::parse_kind(a.kind);
	const bool bits_ok = kind == NumeralKind::Twoscomp;
	if((a.from == "bits" || a.to == "bits") && !bits_ok)
		throw UsageError("bit strings exist only for --kind twoscomp");

	numio::Numeral value;
	if(a.from == "int")
		value = numeral_from_int(kind, parse_int(a.value));
	else if(a.from == "literal")
		value = numio::parse_numeral(a.value, kind);
	else
		value = twoscomp::parse_bits(a.value);

	if(a.to == "int")
		out << numeral_to_int(value) << '\n';
	else if(a.to == "literal")
		out << numio::print_numeral(value) << '\n';
	else
		out << twoscomp::render_bits(std::get<twoscomp::TcInt>(value)) << '\n';
	return kOk;
}

// eval ----------------------------------------------------------------------

struct EvalArgs {
	std::string kind, op;
	std::vector<std::string> literals;
};

template<typename T>
using Binop = T (*)(const T&, const T&);
template<typename T>
using Unop = T (*)(const T&);

template<typename T, typename Parse>
std::string apply(const EvalArgs& a, Parse parse, Unop<T> unop, Binop<T> binop) {
	const std::size_t arity = unop ? 1 : 2;
	if(a.literals.size() != arity)
		throw UsageError("--op " + a.op + " takes " + std::to_string(arity) + " literal(s)");
	if(unop) return numio::print_numeral(unop(parse(a.literals[0])));
	return numio::print_numeral(binop(parse(a.literals[0]), parse(a.literals[1])));
}

std::string eval_unary(const EvalArgs& a) {
	using unary::UnaryNat;
	Binop<UnaryNat> f = nullptr;
	if(a.op == "plus") f = unary::plus;
	else if(a.op == "add") f = unary::add;
	else if(a.op == "mul") f = unary::mult;
	else throw UsageError("--op " + a.op + " is not defined for unary numerals");
	return apply<UnaryNat>(a, numio::parse_unary, nullptr, f);
}

std::string eval_binary(const EvalArgs& a) {
	using binary::BinNat;
	if(a.op == "add1") return apply<BinNat>(a, numio::parse_binary, binary::add1, nullptr);
	Binop<BinNat> f = nullptr;
	if(a.op == "plus") f = binary::add_v1;
	else if(a.op == "add") f = binary::add_v2;
	else if(a.op == "mul") f = binary::mult;
	else throw UsageError("--op " + a.op + " is not defined for binary numerals");
	return apply<BinNat>(a, numio::parse_binary, nullptr, f);
}

std::string eval_twoscomp(const EvalArgs& a) {
	using twoscomp::TcInt;
	if(a.op == "add1") return apply<TcInt>(a, numio::parse_twoscomp, twoscomp::add1, nullptr);
	if(a.op == "neg") return apply<TcInt>(a, numio::parse_twoscomp, twoscomp::neg, nullptr);
	Binop<TcInt> f = nullptr;
	if(a.op == "plus" || a.op == "add") f = twoscomp::add;
	else if(a.op == "sub") f = twoscomp::sub;
	else throw UsageError("--op " + a.op + " is not defined for two's-complement numerals");
	return apply<TcInt>(a, numio::parse_twoscomp, nullptr, f);
}

int eval(const EvalArgs& a, std::ostream& out) {
	switch(numio::parse_kind(a.kind)) {
	case NumeralKind::Unary: out << eval_unary(a) << '\n'; break;
	case NumeralKind::Binary: out << eval_binary(a) << '\n'; break;
	case NumeralKind::Twoscomp: out << eval_twoscomp(a) << '\n'; break;
	case NumeralKind::Cd: throw UsageError("no arithmetic is defined on C-D indices");
	}
	return kOk;
}

// braun ---------------------------------------------------------------------

using Seq = braun::BraunSeq<std::string>;

std::string show(const Seq& s) {
	std::string out = "[";
	const auto xs = s.to_list();
	for(std::size_t i = 0; i < xs.size(); ++i) {
		if(i) out += ',';
		out += xs[i];
	}
	return out + "]";
}

int braun_script(const std::string& init, std::istream& in, std::ostream& out) {
	std::vector<std::string> elems;
	if(init.find_first_not_of(" \t") != std::string::npos) elems = split(init, ',');
	Seq s = Seq::from_list(elems);

	std::string line;
	std::size_t lineno = 0;
	while(std::getline(in, line)) {
		++lineno;
		std::istringstream is(line);
		std::vector<std::string> words;
		for(std::string w; is >> w;) words.push_back(w);
		if(words.empty()) continue;
		const std::string& cmd = words[0];
		auto need = [&](std::size_t n) {
			if(words.size() != n + 1)
				throw UsageError("line " + std::to_string(lineno) + ": '" + cmd + "' takes " + std::to_string(n)
				                 + " argument(s)");
		};
		if(cmd == "access") {
			need(1);
			out << s.access(parse_size(words[1])) << '\n';
		} else if(cmd == "first") {
			need(0);
			out << s.first() << '\n';
		} else if(cmd == "cons") {
			need(1);
			s = s.cons(words[1]);
			out << show(s) << '\n';
		} else if(cmd == "rest") {
			need(0);
			s = s.rest();
			out << show(s) << '\n';
		} else if(cmd == "update") {
			need(2);
			s = s.update(parse_size(words[1]), words[2]);
			out << show(s) << '\n';
		} else {
			throw UsageError("line " + std::to_string(lineno) + ": unknown command '" + cmd + "'");
		}
	}
	return kOk;
}

// bench ---------------------------------------------------------------------

int bench(const std::string& op_name, const std::string& sizes, std::ostream& out) {
	const costmeter::OpId op = costmeter::parse_op_id(op_name);
	std::vector<numio::CsvRow> rows;
	for(const std::string& part : split(sizes, ',')) {
		const std::uint64_t n = parse_size(part);
		rows.push_back({n, costmeter::measure(op, n).steps});
	}
	if(rows.empty()) throw UsageError("--sizes is empty");
	out << numio::csv_emit(rows);
	return kOk;
}

} // namespace

int print_check_report(const std::vector<checks::PropertyResult>& results, std::ostream& out) {
	std::size_t failed = 0;
	for(const auto& r : results) {
		out << (r.pass ? "PASS " : "FAIL ") << r.suite << '/' << r.name;
		if(!r.pass) {
			out << ": " << r.detail;
			++failed;
		}
		out << '\n';
	}
	out << results.size() << " properties, " << failed << " failed\n";
	return failed == 0 ? kOk : kFailure;
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
	CLI::App app{"Inductive numerals, Braun sequences and step-count instrumentation", "numerals"};
	app.require_subcommand(1);

	ConvertArgs conv;
	auto* convert_cmd = app.add_subcommand("convert", "Convert a numeral between integer, literal and bit forms");
	convert_cmd->add_option("--kind", conv.kind, "unary | binary | twoscomp | cd")->required();
	convert_cmd->add_option("--from", conv.from, "int | literal | bits")
		->required()
		->check(CLI::IsMember({"int", "literal", "bits"}));
	convert_cmd->add_option("--to", conv.to, "int | literal | bits")
		->required()
		->check(CLI::IsMember({"int", "literal", "bits"}));
	convert_cmd->add_option("value", conv.value, "Value to convert")->required();

	EvalArgs ev;
	auto* eval_cmd = app.add_subcommand("eval", "Apply an arithmetic operation to numeral literals");
	eval_cmd->add_option("--kind", ev.kind, "unary | binary | twoscomp")->required();
	eval_cmd->add_option("--op", ev.op, "plus | add | add1 | mul | neg | sub")->required();
	eval_cmd->add_option("literals", ev.literals, "One or two literals")->required()->expected(1, 2);

	std::string init;
	auto* braun_cmd = app.add_subcommand("braun", "Run a Braun-sequence script read from standard input");
	braun_cmd->add_option("--init", init, "Comma-separated initial elements");

	std::string bench_op, bench_sizes;
	auto* bench_cmd = app.add_subcommand("bench", "Print step counts on worst-case inputs as CSV");
	bench_cmd->add_option("--op", bench_op, "Instrumented operation id")->required();
	bench_cmd->add_option("--sizes", bench_sizes, "Comma-separated input sizes")->required();

	std::string suite = "all";
	std::uint64_t seed = checks::kDefaultSeed;
	auto* check_cmd = app.add_subcommand("check", "Run the property suites");
	check_cmd->add_option("--suite", suite, "unary | binary | twoscomp | braun | listlab | all")->capture_default_str();
	check_cmd->add_option("--seed", seed, "Seed for randomized properties")->capture_default_str();

	try {
		std::vector<std::string> reversed(args.rbegin(), args.rend());
		app.parse(reversed);
	} catch(const CLI::CallForHelp&) {
		out << app.help();
		return kOk;
	} catch(const CLI::CallForAllHelp&) {
		out << app.help("", CLI::AppFormatMode::All);
		return kOk;
	} catch(const CLI::ParseError& e) {
		err << "numerals: " << e.what() << '\n';
		return kUsage;
	}

	try {
		if(*convert_cmd) return convert(conv, out);
		if(*eval_cmd) return eval(ev, out);
		if(*braun_cmd) return braun_script(init, in, out);
		if(*bench_cmd) return bench(bench_op, bench_sizes, out);
		checks::Options options;
		options.seed = seed;
		return print_check_report(checks::run_suite(suite, options), out);
	} catch(const UsageError& e) {
		err << "numerals: " << e.what() << '\n';
		return kUsage;
	} catch(const ParseError& e) {
		err << "numerals: " << e.what() << '\n';
		return kUsage;
	} catch(const DomainError& e) {
		err << "numerals: " << e.what() << '\n';
		return kFailure;
	} catch(const IndexError& e) {
		err << "numerals: " << e.what() << '\n';
		return kFailure;
	} catch(const ValidityError& e) {
		err << "numerals: " << e.what() << '\n';
		return kFailure;
	}
}

} // namespace numerals::cli
