#include "numerals/numio.hpp"

#include <cctype>
#include <utility>
#include <vector>

#include "numerals/errors.hpp"

namespace numerals::numio {

namespace {

template<typename Ctor>
struct Grammar {
	struct Letter {
		char ch;
		Ctor ctor;
		bool unary;
	};
	std::vector<Letter> letters;
	// True when `outer` may not be applied directly to `inner`.
	bool (*forbidden)(Ctor outer, Ctor inner);
	const char* rule;
};

const Grammar<unary::Peano>& unary_grammar() {
	using unary::Peano;
	static const Grammar<Peano> g{
		{{'Z', Peano::Zero, false}, {'S', Peano::Succ, true}},
		[](Peano, Peano) { return false; },
		"",
	};
	return g;
}

const Grammar<binary::Bin>& binary_grammar() {
	using binary::Bin;
	static const Grammar<Bin> g{
		{{'Z', Bin::Z, false}, {'A', Bin::A, true}, {'B', Bin::B, true}},
		[](Bin outer, Bin inner) { return outer == Bin::A && inner == Bin::Z; },
		"A may not be applied to Z",
	};
	return g;
}

const Grammar<twoscomp::Tc>& twoscomp_grammar() {
	using twoscomp::Tc;
	static const Grammar<Tc> g{
		{{'Z', Tc::Z, false}, {'N', Tc::N, false}, {'A', Tc::A, true}, {'B', Tc::B, true}},
		[](Tc outer, Tc inner) {
			return (outer == Tc::A && inner == Tc::Z) || (outer == Tc::B && inner == Tc::N);
		},
		"A may not be applied to Z, nor B to N",
	};
	return g;
}

const Grammar<braun::Cd>& cd_grammar() {
	using braun::Cd;
	static const Grammar<Cd> g{
		{{'Z', Cd::Z, false}, {'C', Cd::C, true}, {'D', Cd::D, true}},
		[](Cd, Cd) { return false; },
		"",
	};
	return g;
}

std::size_t skip_space(std::string_view text, std::size_t pos) {
	while(pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
	return pos;
}

std::string describe(std::string_view text, std::size_t pos) {
	if(pos >= text.size()) return "end of input";
	return std::string("'") + text[pos] + "'";
}

// Iterative so that deeply nested unary literals do not exhaust the stack.
template<typename Ctor>
Term<Ctor> parse_term(std::string_view text, const Grammar<Ctor>& g) {
	struct Open {
		Ctor ctor;
		std::size_t pos;
	};
	std::vector<Open> opened;
	Term<Ctor> term;

	std::size_t pos = skip_space(text, 0);
	for(;;) {
		const auto* letter = [&]() -> const typename Grammar<Ctor>::Letter* {
			if(pos >= text.size()) return nullptr;
			for(const auto& l : g.letters)
				if(l.ch == text[pos]) return &l;
			return nullptr;
		}();
		if(!letter) throw ParseError("expected a constructor, found " + describe(text, pos), pos);
		const std::size_t at = pos;
		pos = skip_space(text, pos + 1);
		if(!letter->unary) {
			if(letter->ctor != Ctor{}) term = Term<Ctor>::nullary(letter->ctor);
			break;
		}
		if(pos >= text.size() || text[pos] != '(')
			throw ParseError("expected '(', found " + describe(text, pos), pos);
		pos = skip_space(text, pos + 1);
		opened.push_back({letter->ctor, at});
	}
	for(std::size_t k = 0; k < opened.size(); ++k) {
		if(pos >= text.size() || text[pos] != ')')
			throw ParseError("expected ')', found " + describe(text, pos), pos);
		pos = skip_space(text, pos + 1);
	}
	if(pos != text.size()) throw ParseError("trailing input " + describe(text, pos), pos);

	for(auto it = opened.rbegin(); it != opened.rend(); ++it) {
		if(g.forbidden(it->ctor, term.ctor()))
			throw CanonicalityError(std::string("non-canonical numeral: ") + g.rule, it->pos);
		term = Term<Ctor>::wrap(it->ctor, std::move(term));
	}
	return term;
}

template<typename Ctor>
std::string print_term(const Term<Ctor>& x, const Grammar<Ctor>& g) {
	auto letter_of = [&](Ctor c) {
		for(const auto& l : g.letters)
			if(l.ctor == c) return l.ch;
		return '?';
	};
	std::string out;
	std::size_t depth = 0;
	const Term<Ctor>* p = &x;
	for(; !p->is_base(); p = &p->rest()) {
		const Ctor c = p->ctor();
		out.push_back(letter_of(c));
		bool is_unary = false;
		for(const auto& l : g.letters)
			if(l.ctor == c) is_unary = l.unary;
		if(!is_unary) break;
		out.push_back('(');
		++depth;
	}
	if(p->is_base()) out.push_back(letter_of(Ctor{}));
	out.append(depth, ')');
	return out;
}

} // namespace

NumeralKind parse_kind(std::string_view name) {
	if(name == "unary") return NumeralKind::Unary;
	if(name == "binary") return NumeralKind::Binary;
	if(name == "twoscomp") return NumeralKind::Twoscomp;
	if(name == "cd") return NumeralKind::Cd;
	throw UsageError("unknown numeral kind '" + std::string(name) + "'");
}

std::string_view kind_name(NumeralKind kind) {
	switch(kind) {
	case NumeralKind::Unary: return "unary";
	case NumeralKind::Binary: return "binary";
	case NumeralKind::Twoscomp: return "twoscomp";
	case NumeralKind::Cd: return "cd";
	}
	__builtin_unreachable();
}

unary::UnaryNat parse_unary(std::string_view text) { return parse_term(text, unary_grammar()); }
binary::BinNat parse_binary(std::string_view text) { return parse_term(text, binary_grammar()); }
twoscomp::TcInt parse_twoscomp(std::string_view text) { return parse_term(text, twoscomp_grammar()); }
braun::CdIndex parse_cd(std::string_view text) { return parse_term(text, cd_grammar()); }

Numeral parse_numeral(std::string_view text, NumeralKind kind) {
	switch(kind) {
	case NumeralKind::Unary: return parse_unary(text);
	case NumeralKind::Binary: return parse_binary(text);
	case NumeralKind::Twoscomp: return parse_twoscomp(text);
	case NumeralKind::Cd: return parse_cd(text);
	}
	__builtin_unreachable();
}

std::string print_numeral(const unary::UnaryNat& x) { return print_term(x, unary_grammar()); }
std::string print_numeral(const binary::BinNat& x) { return print_term(x, binary_grammar()); }
std::string print_numeral(const twoscomp::TcInt& x) { return print_term(x, twoscomp_grammar()); }
std::string print_numeral(const braun::CdIndex& x) { return print_term(x, cd_grammar()); }

std::string print_numeral(const Numeral& x) {
	return std::visit([](const auto& v) { return print_numeral(v); }, x);
}

NumeralKind kind_of(const Numeral& x) { return static_cast<NumeralKind>(x.index()); }

std::string csv_emit(std::span<const CsvRow> rows) {
	std::string out = "n,steps\n";
	for(const CsvRow& r : rows) {
		out += std::to_string(r.n);
		out += ',';
		out += std::to_string(r.steps);
		out += '\n';
	}
	return out;
}

} // namespace numerals::numio
