#pragma once
// Value types shared by every module: atoms, literals, rules, programs,
// strict partial orders over rule names, and closures.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "olp/error.hpp"

namespace olp {

/// Control functors of the tag-extended language. User programs never contain them.
enum class Functor : std::uint8_t { ap, bl, ok, okp, prec };

std::string_view functor_name(Functor f);
std::size_t functor_arity(Functor f);
std::optional<Functor> reserved_functor(std::string_view name);

/// [A-Za-z_][A-Za-z0-9_]*, excluding the keyword `not`.
bool is_identifier(std::string_view s);

/// An interned propositional atom. Copying is free; equality is identity of the symbol.
///
/// Plain atoms carry a name that is either an identifier or an identifier applied
/// to identifier arguments (`bird(tweety)`); the base identifier is never a reserved
/// functor. Tagged atoms are built only through Atom::tagged.
class Atom {
public:
	static Atom plain(std::string_view name);
	static Atom tagged(Functor f, std::vector<std::string> args);

	bool is_tagged() const;
	Functor functor() const; ///< pre: is_tagged()
	const std::vector<std::string>& args() const;
	const std::string& text() const;
	std::uint32_t id() const noexcept { return id_; }

	friend bool operator==(Atom, Atom) = default;
	friend auto operator<=>(Atom, Atom) = default;

private:
	friend class Literal;
	explicit Atom(std::uint32_t id) : id_(id) {}
	std::uint32_t id_;
};

class Literal {
public:
	Literal(Atom atom, bool negative = false) noexcept
		: code_(atom.id() * 2u + (negative ? 1u : 0u)) {}

	Atom atom() const;
	bool negative() const noexcept { return (code_ & 1u) != 0; }
	Literal complement() const noexcept { return Literal(code_ ^ 1u); }
	std::string text() const;
	/// Dense code; complementary literals have adjacent codes.
	std::uint32_t code() const noexcept { return code_; }

	friend bool operator==(Literal, Literal) = default;
	friend auto operator<=>(Literal, Literal) = default;

private:
	explicit Literal(std::uint32_t code) noexcept : code_(code) {}
	std::uint32_t code_;
};

inline Literal complement(Literal l) noexcept { return l.complement(); }

/// Parses `p`, `-p`, `p(a,b)`; tagged spellings only when allow_tagged is set.
Literal make_literal(std::string_view text, bool allow_tagged = false);

/// Finite set of literals, kept sorted by code.
class LiteralSet {
public:
	using const_iterator = std::vector<Literal>::const_iterator;

	LiteralSet() = default;
	LiteralSet(std::initializer_list<Literal> lits);
	explicit LiteralSet(std::vector<Literal> lits);
	/// Convenience for tests and bindings: each entry goes through make_literal.
	static LiteralSet from_text(std::span<const std::string> lits, bool allow_tagged = false);
	static LiteralSet from_text(std::initializer_list<std::string_view> lits, bool allow_tagged = false);

	bool contains(Literal l) const;
	bool insert(Literal l);
	void insert_all(const LiteralSet& other);
	bool erase(Literal l);

	bool empty() const noexcept { return lits_.empty(); }
	std::size_t size() const noexcept { return lits_.size(); }
	const_iterator begin() const noexcept { return lits_.begin(); }
	const_iterator end() const noexcept { return lits_.end(); }
	const std::vector<Literal>& vector() const noexcept { return lits_; }

	bool subset_of(const LiteralSet& other) const;
	bool intersects(const LiteralSet& other) const;
	bool is_consistent() const;

	/// Literal texts sorted lexicographically (the canonical rendering order).
	std::vector<std::string> sorted_text() const;
	/// Space-joined sorted_text(); `-f b p w`.
	std::string to_string() const;

	friend bool operator==(const LiteralSet&, const LiteralSet&) = default;
	friend auto operator<=>(const LiteralSet& a, const LiteralSet& b) { return a.lits_ <=> b.lits_; }

private:
	std::vector<Literal> lits_;
};

LiteralSet set_union(const LiteralSet& a, const LiteralSet& b);
LiteralSet set_intersection(const LiteralSet& a, const LiteralSet& b);
LiteralSet set_difference(const LiteralSet& a, const LiteralSet& b);

/// Either a consistent literal set or the inconsistent value Lit.
class Closure {
public:
	Closure() = default;
	static Closure lit() { Closure c; c.lit_ = true; return c; }
	/// Lit when `lits` holds a complementary pair.
	static Closure of(LiteralSet lits);

	bool is_lit() const noexcept { return lit_; }
	bool is_consistent() const noexcept { return !lit_; }
	const LiteralSet& literals() const; ///< pre: !is_lit()
	bool equals(const LiteralSet& x) const { return !lit_ && set_ == x; }
	/// Set inclusion with Lit as the top element.
	bool subset_of(const Closure& other) const;
	std::string to_string() const;

	friend bool operator==(const Closure&, const Closure&) = default;

private:
	bool lit_ = false;
	LiteralSet set_;
};

class Rule {
public:
	Rule(std::string name, Literal head, std::vector<Literal> pbody = {}, std::vector<Literal> nbody = {});
	Rule(std::string name, Literal head, LiteralSet pbody, LiteralSet nbody);

	const std::string& name() const noexcept { return name_; }
	Literal head() const noexcept { return head_; }
	const LiteralSet& pbody() const noexcept { return pbody_; }
	const LiteralSet& nbody() const noexcept { return nbody_; }

	/// Equality on (head, pbody, nbody), ignoring the name.
	bool same_as(const Rule& other) const {
		return head_ == other.head_ && pbody_ == other.pbody_ && nbody_ == other.nbody_;
	}
	friend bool operator==(const Rule&, const Rule&) = default;

private:
	std::string name_;
	Literal head_;
	LiteralSet pbody_;
	LiteralSet nbody_;
};

/// Finite list of uniquely named rules in source order.
class Program {
public:
	Program() = default;
	explicit Program(std::vector<Rule> rules);

	const std::vector<Rule>& rules() const noexcept { return rules_; }
	std::size_t size() const noexcept { return rules_.size(); }
	bool empty() const noexcept { return rules_.empty(); }
	const Rule& operator[](std::size_t i) const { return rules_[i]; }
	auto begin() const noexcept { return rules_.begin(); }
	auto end() const noexcept { return rules_.end(); }

	std::optional<std::size_t> find(std::string_view name) const;
	std::size_t index_of(std::string_view name) const; ///< throws UnknownRuleName
	bool contains(std::string_view name) const { return find(name).has_value(); }

	LiteralSet heads() const;
	std::set<std::string> names() const;
	bool is_basic() const;
	bool is_normal() const;
	bool is_prerequisite_free() const;

	friend bool operator==(const Program& a, const Program& b) { return a.rules_ == b.rules_; }

private:
	std::vector<Rule> rules_;
	std::map<std::string, std::size_t, std::less<>> index_;
};

using NamePair = std::pair<std::string, std::string>;

/// Strict partial order over rule names. (lower, higher) means `higher` has priority.
class PartialOrder {
public:
	PartialOrder() = default;

	const std::set<NamePair>& asserted() const noexcept { return asserted_; }
	const std::set<NamePair>& closure() const noexcept { return closure_; }
	bool less(std::string_view lower, std::string_view higher) const;
	bool empty() const noexcept { return closure_.empty(); }
	std::set<std::string> names() const;
	/// closure ∩ (keep × keep); still a strict partial order.
	PartialOrder restricted_to(const std::set<std::string>& keep) const;

	friend bool operator==(const PartialOrder& a, const PartialOrder& b) { return a.closure_ == b.closure_; }
	friend PartialOrder build_order(std::span<const NamePair> pairs);

private:
	std::set<NamePair> asserted_;
	std::set<NamePair> closure_;
};

/// Transitive closure of `pairs`; throws CyclicOrder when it relates a name to itself.
PartialOrder build_order(std::span<const NamePair> pairs);
PartialOrder build_order(std::initializer_list<NamePair> pairs);

class OrderedProgram {
public:
	OrderedProgram() = default;
	/// throws UnknownRuleName when the order mentions a name not in the program.
	OrderedProgram(Program program, PartialOrder order = {});

	const Program& program() const noexcept { return program_; }
	const PartialOrder& order() const noexcept { return order_; }
	std::size_t size() const noexcept { return program_.size(); }

	/// rule i < rule j, i.e. rule j has higher priority.
	bool less(std::size_t i, std::size_t j) const { return less_[i * size() + j] != 0; }
	/// Rules ranked above rule i.
	const std::vector<std::size_t>& superiors(std::size_t i) const { return superiors_[i]; }
	bool is_total() const;

	friend bool operator==(const OrderedProgram& a, const OrderedProgram& b) {
		return a.program_ == b.program_ && a.order_ == b.order_;
	}

private:
	Program program_;
	PartialOrder order_;
	std::vector<char> less_;
	std::vector<std::vector<std::size_t>> superiors_;
};

enum class Strategy { D, W, B, None };

std::string_view to_string(Strategy s);
std::optional<Strategy> parse_strategy(std::string_view s);

struct TraceStep {
	LiteralSet derived;
	std::vector<std::string> applied; ///< sorted rule names
};
/// Snapshots of one fixpoint run; derived sets form a non-decreasing chain.
using Trace = std::vector<TraceStep>;

} // namespace olp
