#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <variant>

#include "numerals/binary.hpp"
#include "numerals/braun.hpp"
#include "numerals/steps.hpp"
#include "numerals/twoscomp.hpp"
#include "numerals/unary.hpp"

/// Text layer for numeral literals and step-count CSV.
///
/// Literals are fully parenthesized constructor applications; whitespace
/// between tokens is ignored:
///
///   unary    := "Z" | "S(" unary ")"
///   binary   := "Z" | "A(" binary ")" | "B(" binary ")"
///   twoscomp := "Z" | "N" | "A(" twoscomp ")" | "B(" twoscomp ")"
///   cd       := "Z" | "C(" cd ")" | "D(" cd ")"
///
/// Binary and two's-complement literals must be canonical; `A(Z)` (and
/// `B(N)` for two's complement) raise CanonicalityError rather than being
/// normalized.
namespace numerals::numio {

enum class NumeralKind { Unary, Binary, Twoscomp, Cd };

/// "unary", "binary", "twoscomp" or "cd"; throws UsageError otherwise.
NumeralKind parse_kind(std::string_view name);
std::string_view kind_name(NumeralKind kind);

using Numeral = std::variant<unary::UnaryNat, binary::BinNat, twoscomp::TcInt, braun::CdIndex>;

/// Throws ParseError (syntax) or CanonicalityError.
Numeral parse_numeral(std::string_view text, NumeralKind kind);

unary::UnaryNat parse_unary(std::string_view text);
binary::BinNat parse_binary(std::string_view text);
twoscomp::TcInt parse_twoscomp(std::string_view text);
braun::CdIndex parse_cd(std::string_view text);

std::string print_numeral(const unary::UnaryNat& x);
std::string print_numeral(const binary::BinNat& x);
std::string print_numeral(const twoscomp::TcInt& x);
std::string print_numeral(const braun::CdIndex& x);
std::string print_numeral(const Numeral& x);

NumeralKind kind_of(const Numeral& x);

struct CsvRow {
	std::uint64_t n;
	StepCount steps;
};

/// "n,steps" header and one "<n>,<steps>" line per row, '\n' terminated.
std::string csv_emit(std::span<const CsvRow> rows);

} // namespace numerals::numio
