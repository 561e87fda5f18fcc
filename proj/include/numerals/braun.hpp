#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "numerals/errors.hpp"
#include "numerals/steps.hpp"
#include "numerals/term.hpp"

/// Sequences stored in Braun trees, indexed by C-D numerals.
///
/// Index numerals use the bijective base-2 digits
///
///   Z       0
///   C i     2i + 1
///   D i     2i + 2
///
/// Every digit string is a valid index and every natural has exactly one
/// string, so the trie with C-children on the left and D-children on the
/// right has no empty slots: index Z sits at the root, C i at index i of
/// the left subtree, D i at index i of the right subtree. The resulting
/// shape keeps count(left) equal to count(right) or one more, hence the
/// depth of an n-element tree is floor(log2 n) + 1.
///
/// Indexing by the A-B binary numerals instead (A i -> left, B i -> right)
/// does not work: canonical numerals never end in A Z, so every node
/// reached by a final A step stays empty and about half the tree is
/// wasted. That variant is deliberately not provided.
namespace numerals::braun {

enum class Cd : unsigned char { Z = 0, C, D };

using CdIndex = Term<Cd>;

/// Throws DomainError for negative `n`.
CdIndex cd_from_int(std::int64_t n);
std::uint64_t cd_to_int(const CdIndex& i);

/// Number of C/D digits of `i`, floor(log2(i + 1)).
std::uint64_t digit_count(std::uint64_t i);
std::uint64_t digit_count(const CdIndex& i);

template<typename E>
class BraunSeq {
public:
	struct Node;
	using Tree = std::shared_ptr<const Node>;

	struct Node {
		Node(E e, Tree l, Tree r) : elem(std::move(e)), left(std::move(l)), right(std::move(r)) { }
		E elem;
		Tree left;
		Tree right;
	};

	BraunSeq() = default;

	static BraunSeq from_list(std::span<const E> xs) {
		BraunSeq s;
		for(auto it = xs.rbegin(); it != xs.rend(); ++it) s = s.cons(*it);
		return s;
	}

	static BraunSeq from_list(const std::vector<E>& xs) { return from_list(std::span<const E>(xs)); }

	std::vector<E> to_list() const {
		std::vector<E> out;
		out.reserve(length_);
		for(std::uint64_t i = 0; i < length_; ++i) out.push_back(access(i));
		return out;
	}

	std::uint64_t size() const noexcept { return length_; }
	bool empty() const noexcept { return length_ == 0; }
	const Tree& root() const noexcept { return tree_; }

	/// Element `i`. Throws IndexError unless 0 <= i < size().
	const E& access(std::uint64_t i) const {
		NoSteps s;
		return access(i, s);
	}

	/// Counts one step per descent into a child, so the total equals the
	/// number of C/D digits of `i`.
	template<typename Counter>
	const E& access(std::uint64_t i, Counter& steps) const {
		if(i >= length_) throw IndexError("Braun sequence index out of range");
		const Node* node = tree_.get();
		while(i > 0) {
			steps.enter();
			if(i % 2 == 1) {
				node = node->left.get();
				i = (i - 1) / 2;
			} else {
				node = node->right.get();
				i = (i - 2) / 2;
			}
		}
		return node->elem;
	}

	/// Direct digit descent: C goes left, D goes right, Z stops. No length
	/// check; walking off the tree throws IndexError.
	const E& access_cd(const CdIndex& i) const {
		NoSteps s;
		return access_cd(i, s);
	}

	template<typename Counter>
	const E& access_cd(const CdIndex& i, Counter& steps) const {
		return access_cd(tree_.get(), i, steps);
	}

	/// Copy of this sequence with element `i` replaced by `v`.
	BraunSeq update(std::uint64_t i, E v) const {
		if(i >= length_) throw IndexError("Braun sequence index out of range");
		return BraunSeq(length_, update(tree_, i, std::move(v)));
	}

	/// `v` followed by this sequence.
	BraunSeq cons(E v) const {
		NoSteps s;
		return cons(std::move(v), s);
	}

	template<typename Counter>
	BraunSeq cons(E v, Counter& steps) const {
		return BraunSeq(length_ + 1, cons(std::move(v), tree_, steps));
	}

	/// Throws DomainError on an empty sequence.
	const E& first() const {
		if(!tree_) throw DomainError("first of an empty sequence");
		return tree_->elem;
	}

	/// All but the first element. Throws DomainError on an empty sequence.
	BraunSeq rest() const {
		NoSteps s;
		return rest(s);
	}

	template<typename Counter>
	BraunSeq rest(Counter& steps) const {
		if(!tree_) throw DomainError("rest of an empty sequence");
		return BraunSeq(length_ - 1, rest(tree_, steps));
	}

	/// Nodes on the longest root path; 0 for the empty sequence. The left
	/// subtree is never smaller than the right one, so the left spine is a
	/// longest path.
	std::uint64_t depth() const noexcept {
		std::uint64_t d = 0;
		for(const Node* p = tree_.get(); p; p = p->left.get()) ++d;
		return d;
	}

private:
	BraunSeq(std::uint64_t length, Tree tree) : length_(length), tree_(std::move(tree)) { }

	template<typename Counter>
	static const E& access_cd(const Node* node, const CdIndex& i, Counter& steps) {
		for(const CdIndex* d = &i;; d = &d->rest()) {
			if(!node) throw IndexError("C-D index falls off the Braun tree");
			if(d->is_base()) return node->elem;
			steps.enter();
			node = d->ctor() == Cd::C ? node->left.get() : node->right.get();
		}
	}

	static Tree update(const Tree& t, std::uint64_t i, E v) {
		if(i == 0) return std::make_shared<const Node>(std::move(v), t->left, t->right);
		if(i % 2 == 1) return std::make_shared<const Node>(t->elem, update(t->left, (i - 1) / 2, std::move(v)), t->right);
		return std::make_shared<const Node>(t->elem, t->left, update(t->right, (i - 2) / 2, std::move(v)));
	}

	// cons v Leaf         = Node v Leaf Leaf
	// cons v (Node x l r) = Node v (cons x r) l
	template<typename Counter>
	static Tree cons(E v, const Tree& t, Counter& steps) {
		steps.enter();
		if(!t) return std::make_shared<const Node>(std::move(v), nullptr, nullptr);
		return std::make_shared<const Node>(std::move(v), cons(t->elem, t->right, steps), t->left);
	}

	// rest (Node _ Leaf _) = Leaf
	// rest (Node _ l r)    = Node (first l) r (rest l)
	template<typename Counter>
	static Tree rest(const Tree& t, Counter& steps) {
		steps.enter();
		if(!t->left) return nullptr;
		return std::make_shared<const Node>(t->left->elem, t->right, rest(t->left, steps));
	}

	std::uint64_t length_ = 0;
	Tree tree_;
};

} // namespace numerals::braun
