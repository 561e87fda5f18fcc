#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace numerals {

/// Argument outside the mathematical domain of an operation
/// (negative natural, first/rest of an empty sequence, ...).
class DomainError : public std::domain_error {
public:
	using std::domain_error::domain_error;
};

/// A numeral that violates its representation's canonicality rules.
class ValidityError : public std::invalid_argument {
public:
	using std::invalid_argument::invalid_argument;
};

class IndexError : public std::out_of_range {
public:
	using std::out_of_range::out_of_range;
};

/// Bad command-line usage, unknown operation name, malformed request.
class UsageError : public std::invalid_argument {
public:
	using std::invalid_argument::invalid_argument;
};

/// Literal text that does not match the numeral grammar.
/// `position` is the 0-based byte offset of the offending character.
class ParseError : public std::runtime_error {
public:
	ParseError(const std::string& what, std::size_t position)
		: std::runtime_error(what + " at offset " + std::to_string(position)),
		  position_(position) { }

	std::size_t position() const noexcept { return position_; }

private:
	std::size_t position_;
};

/// Literal text that parses but denotes a non-canonical numeral.
class CanonicalityError : public ParseError {
public:
	using ParseError::ParseError;
};

} // namespace numerals
