#pragma once

#include <cstdint>

namespace numerals {

/// Number of instrumented clause entries (function-body entries, base
/// clauses included) observed during one measured evaluation.
using StepCount = std::uint64_t;

/// Tally threaded through the metered variant of an operation.
/// One counter belongs to one measurement; it is not shared across threads.
class StepCounter {
public:
	void enter() noexcept { ++count_; }
	StepCount count() const noexcept { return count_; }

private:
	StepCount count_ = 0;
};

/// Counter used by the plain operations. Compiles away.
struct NoSteps {
	constexpr void enter() const noexcept { }
};

} // namespace numerals
