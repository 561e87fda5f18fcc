#pragma once

#include <memory>
#include <stdexcept>
#include <utility>

namespace numerals {

/// Immutable inductive value built from constructors of the enumeration
/// `Ctor`. The enumerator with value 0 is the nullary base constructor
/// (Z / Zero) and is represented without allocation. Other nullary
/// constructors (such as N) and all unary constructors occupy one shared
/// cell each; cells are never mutated once built, so terms may be shared
/// freely between threads.
///
/// Long chains are released iteratively, so unary numerals with millions
/// of constructors do not overflow the stack on destruction.
template<typename Ctor>
class Term {
	struct Cell;

public:
	Term() noexcept = default;
	Term(const Term&) = default;
	Term(Term&& other) noexcept = default;

	Term& operator=(const Term& other) {
		Term copy(other);
		swap(copy);
		return *this;
	}

	Term& operator=(Term&& other) noexcept {
		Term moved(std::move(other));
		swap(moved);
		return *this;
	}

	~Term() { release(); }

	/// A nullary constructor other than the base one.
	static Term nullary(Ctor ctor) {
		Term t;
		t.cell_ = std::make_shared<Cell>(ctor, Term{});
		return t;
	}

	/// `ctor` applied to `rest`. No canonicality rule is enforced here.
	static Term wrap(Ctor ctor, Term rest) {
		Term t;
		t.cell_ = std::make_shared<Cell>(ctor, std::move(rest));
		return t;
	}

	Ctor ctor() const noexcept { return cell_ ? cell_->ctor : Ctor{}; }

	bool is_base() const noexcept { return !cell_; }

	/// Argument of a unary constructor. Calling this on the base
	/// constructor is a logic error.
	const Term& rest() const {
		if(!cell_) [[unlikely]] throw std::logic_error("rest() of a nullary constructor");
		return cell_->rest;
	}

	void swap(Term& other) noexcept { cell_.swap(other.cell_); }

	/// Constructor-by-constructor equality.
	friend bool operator==(const Term& lhs, const Term& rhs) noexcept {
		const Cell* a = lhs.cell_.get();
		const Cell* b = rhs.cell_.get();
		while(a != b) {
			if(!a || !b || a->ctor != b->ctor) return false;
			a = a->rest.cell_.get();
			b = b->rest.cell_.get();
		}
		return true;
	}

private:
	struct Cell {
		Cell(Ctor c, Term r) : ctor(c), rest(std::move(r)) { }
		Ctor ctor;
		Term rest;
	};

	void release() noexcept {
		// Only the sole owner may unlink; a shared tail is left alone.
		while(cell_ && cell_.use_count() == 1) {
			std::shared_ptr<Cell> next = std::move(cell_->rest.cell_);
			cell_ = std::move(next);
		}
	}

	std::shared_ptr<Cell> cell_;
};

} // namespace numerals
