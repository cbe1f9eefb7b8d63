#include "olp/core.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

namespace olp {

ParseError::ParseError(std::size_t line, std::size_t col, const std::string& message)
	: Error(std::to_string(line) + ":" + std::to_string(col) + ": " + message)
	, line_(line), col_(col), message_(message) {}

CyclicOrder::CyclicOrder(const std::string& name)
	: SemanticError("cyclic order: rule '" + name + "' is ranked above itself") {}

UnknownRuleName::UnknownRuleName(const std::string& name)
	: SemanticError("unknown rule name '" + name + "'") {}

DuplicateRuleName::DuplicateRuleName(const std::string& name)
	: SemanticError("duplicate rule name '" + name + "'") {}

CapExceeded::CapExceeded(const std::string& what, std::size_t size, std::size_t cap)
	: SemanticError(what + ": " + std::to_string(size) + " exceeds cap " + std::to_string(cap))
	, size_(size), cap_(cap) {}

NotAnswerSet::NotAnswerSet() : SemanticError("candidate is not an answer set") {}

NotNormal::NotNormal(const std::string& rule)
	: SemanticError("program is not normal: rule '" + rule + "' uses classical negation") {}

NotTotal::NotTotal() : SemanticError("order is not total on the rules") {}

NotPrerequisiteFree::NotPrerequisiteFree(const std::string& rule)
	: SemanticError("rule '" + rule + "' has a non-empty positive body") {}

NonStrictDynamicOrder::NonStrictDynamicOrder(const std::string& detail)
	: SemanticError("dynamic preference relation is not a strict partial order: " + detail) {}

// ---------------------------------------------------------------------------
// Functors and identifiers

namespace {
constexpr std::array<std::string_view, 5> kFunctorNames = {"ap", "bl", "ok", "okp", "prec"};
}

std::string_view functor_name(Functor f) { return kFunctorNames[static_cast<std::size_t>(f)]; }

std::size_t functor_arity(Functor f) {
	return (f == Functor::okp || f == Functor::prec) ? 2 : 1;
}

std::optional<Functor> reserved_functor(std::string_view name) {
	for (std::size_t i = 0; i < kFunctorNames.size(); ++i) {
		if (kFunctorNames[i] == name) return static_cast<Functor>(i);
	}
	return std::nullopt;
}

bool is_identifier(std::string_view s) {
	if (s.empty() || s == "not") return false;
	auto alpha = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; };
	auto digit = [](char c) { return c >= '0' && c <= '9'; };
	if (!alpha(s.front())) return false;
	return std::all_of(s.begin() + 1, s.end(), [&](char c) { return alpha(c) || digit(c); });
}

// ---------------------------------------------------------------------------
// Symbol table

namespace {

struct AtomData {
	bool tagged = false;
	Functor functor = Functor::ap;
	std::vector<std::string> args;
	std::string text;
};

class SymbolTable {
public:
	std::uint32_t intern(AtomData data) {
		{
			std::shared_lock lock(mutex_);
			if (auto it = ids_.find(data.text); it != ids_.end()) return it->second;
		}
		std::unique_lock lock(mutex_);
		if (auto it = ids_.find(data.text); it != ids_.end()) return it->second;
		auto id = static_cast<std::uint32_t>(atoms_.size());
		ids_.emplace(data.text, id);
		atoms_.push_back(std::move(data));
		return id;
	}
	// deque elements never move, so the reference outlives the lock.
	const AtomData& get(std::uint32_t id) const {
		std::shared_lock lock(mutex_);
		return atoms_[id];
	}

private:
	mutable std::shared_mutex mutex_;
	std::deque<AtomData> atoms_;
	std::unordered_map<std::string, std::uint32_t> ids_;
};

SymbolTable& symbols() {
	static SymbolTable table;
	return table;
}

std::string render(std::string_view base, const std::vector<std::string>& args) {
	std::string out(base);
	if (!args.empty()) {
		out += '(';
		for (std::size_t i = 0; i < args.size(); ++i) {
			if (i) out += ',';
			out += args[i];
		}
		out += ')';
	}
	return out;
}

// Splits `f(a,b)` into base and args; spaces are tolerated around tokens.
bool split_atom(std::string_view text, std::string& base, std::vector<std::string>& args) {
	auto trim = [](std::string_view s) {
		while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
		while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
		return s;
	};
	text = trim(text);
	args.clear();
	auto open = text.find('(');
	if (open == std::string_view::npos) {
		base = std::string(text);
		return is_identifier(base);
	}
	if (text.back() != ')') return false;
	base = std::string(trim(text.substr(0, open)));
	if (!is_identifier(base)) return false;
	std::string_view inner = text.substr(open + 1, text.size() - open - 2);
	while (true) {
		auto comma = inner.find(',');
		std::string arg(trim(inner.substr(0, comma)));
		if (!is_identifier(arg)) return false;
		args.push_back(std::move(arg));
		if (comma == std::string_view::npos) break;
		inner.remove_prefix(comma + 1);
	}
	return true;
}

} // namespace

Atom Atom::plain(std::string_view name) {
	std::string base;
	std::vector<std::string> args;
	if (!split_atom(name, base, args)) {
		throw InvalidArgument("malformed atom '" + std::string(name) + "'");
	}
	if (reserved_functor(base)) {
		throw InvalidArgument("reserved functor '" + base + "' in plain atom");
	}
	AtomData data;
	data.text = render(base, args);
	data.args = std::move(args);
	return Atom(symbols().intern(std::move(data)));
}

Atom Atom::tagged(Functor f, std::vector<std::string> args) {
	if (args.size() != functor_arity(f)) {
		throw InvalidArgument("functor '" + std::string(functor_name(f)) + "' takes " +
		                      std::to_string(functor_arity(f)) + " argument(s)");
	}
	for (const auto& a : args) {
		if (!is_identifier(a)) throw InvalidArgument("malformed rule name '" + a + "'");
	}
	AtomData data;
	data.tagged = true;
	data.functor = f;
	data.text = render(functor_name(f), args);
	data.args = std::move(args);
	return Atom(symbols().intern(std::move(data)));
}

bool Atom::is_tagged() const { return symbols().get(id_).tagged; }

Functor Atom::functor() const {
	const auto& d = symbols().get(id_);
	if (!d.tagged) throw InvalidArgument("atom '" + d.text + "' is not tagged");
	return d.functor;
}

const std::vector<std::string>& Atom::args() const { return symbols().get(id_).args; }
const std::string& Atom::text() const { return symbols().get(id_).text; }

Atom Literal::atom() const { return Atom(code_ / 2u); }

std::string Literal::text() const {
	return negative() ? "-" + atom().text() : atom().text();
}

Literal make_literal(std::string_view text, bool allow_tagged) {
	while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
	bool neg = false;
	if (!text.empty() && text.front() == '-') {
		neg = true;
		text.remove_prefix(1);
	}
	std::string base;
	std::vector<std::string> args;
	if (!split_atom(text, base, args)) {
		throw InvalidArgument("malformed literal '" + std::string(text) + "'");
	}
	if (auto f = reserved_functor(base)) {
		if (!allow_tagged) throw InvalidArgument("reserved functor '" + base + "' in literal");
		return Literal(Atom::tagged(*f, std::move(args)), neg);
	}
	return Literal(Atom::plain(text), neg);
}

// ---------------------------------------------------------------------------
// LiteralSet

LiteralSet::LiteralSet(std::initializer_list<Literal> lits) : LiteralSet(std::vector<Literal>(lits)) {}

LiteralSet::LiteralSet(std::vector<Literal> lits) : lits_(std::move(lits)) {
	std::sort(lits_.begin(), lits_.end());
	lits_.erase(std::unique(lits_.begin(), lits_.end()), lits_.end());
}

LiteralSet LiteralSet::from_text(std::span<const std::string> lits, bool allow_tagged) {
	std::vector<Literal> out;
	out.reserve(lits.size());
	for (const auto& t : lits) out.push_back(make_literal(t, allow_tagged));
	return LiteralSet(std::move(out));
}

LiteralSet LiteralSet::from_text(std::initializer_list<std::string_view> lits, bool allow_tagged) {
	std::vector<Literal> out;
	for (auto t : lits) out.push_back(make_literal(t, allow_tagged));
	return LiteralSet(std::move(out));
}

bool LiteralSet::contains(Literal l) const { return std::binary_search(lits_.begin(), lits_.end(), l); }

bool LiteralSet::insert(Literal l) {
	auto it = std::lower_bound(lits_.begin(), lits_.end(), l);
	if (it != lits_.end() && *it == l) return false;
	lits_.insert(it, l);
	return true;
}

void LiteralSet::insert_all(const LiteralSet& other) {
	if (other.empty()) return;
	*this = set_union(*this, other);
}

bool LiteralSet::erase(Literal l) {
	auto it = std::lower_bound(lits_.begin(), lits_.end(), l);
	if (it == lits_.end() || *it != l) return false;
	lits_.erase(it);
	return true;
}

bool LiteralSet::subset_of(const LiteralSet& other) const {
	return std::includes(other.lits_.begin(), other.lits_.end(), lits_.begin(), lits_.end());
}

bool LiteralSet::intersects(const LiteralSet& other) const {
	auto a = lits_.begin();
	auto b = other.lits_.begin();
	while (a != lits_.end() && b != other.lits_.end()) {
		if (*a == *b) return true;
		if (*a < *b) ++a; else ++b;
	}
	return false;
}

bool LiteralSet::is_consistent() const {
	for (std::size_t i = 1; i < lits_.size(); ++i) {
		if (lits_[i].complement() == lits_[i - 1]) return false;
	}
	return true;
}

std::vector<std::string> LiteralSet::sorted_text() const {
	std::vector<std::string> out;
	out.reserve(lits_.size());
	for (auto l : lits_) out.push_back(l.text());
	std::sort(out.begin(), out.end());
	return out;
}

std::string LiteralSet::to_string() const {
	std::string out;
	for (const auto& t : sorted_text()) {
		if (!out.empty()) out += ' ';
		out += t;
	}
	return out;
}

LiteralSet set_union(const LiteralSet& a, const LiteralSet& b) {
	std::vector<Literal> out;
	out.reserve(a.size() + b.size());
	std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
	return LiteralSet(std::move(out));
}

LiteralSet set_intersection(const LiteralSet& a, const LiteralSet& b) {
	std::vector<Literal> out;
	std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
	return LiteralSet(std::move(out));
}

LiteralSet set_difference(const LiteralSet& a, const LiteralSet& b) {
	std::vector<Literal> out;
	std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
	return LiteralSet(std::move(out));
}

// ---------------------------------------------------------------------------
// Closure

Closure Closure::of(LiteralSet lits) {
	if (!lits.is_consistent()) return lit();
	Closure c;
	c.set_ = std::move(lits);
	return c;
}

const LiteralSet& Closure::literals() const {
	if (lit_) throw InvalidArgument("Lit has no literal set");
	return set_;
}

bool Closure::subset_of(const Closure& other) const {
	if (other.lit_) return true;
	if (lit_) return false;
	return set_.subset_of(other.set_);
}

std::string Closure::to_string() const { return lit_ ? "Lit" : set_.to_string(); }

// ---------------------------------------------------------------------------
// Rule and Program

Rule::Rule(std::string name, Literal head, std::vector<Literal> pbody, std::vector<Literal> nbody)
	: Rule(std::move(name), head, LiteralSet(std::move(pbody)), LiteralSet(std::move(nbody))) {}

Rule::Rule(std::string name, Literal head, LiteralSet pbody, LiteralSet nbody)
	: name_(std::move(name)), head_(head), pbody_(std::move(pbody)), nbody_(std::move(nbody)) {
	if (!is_identifier(name_)) throw InvalidArgument("malformed rule name '" + name_ + "'");
}

Program::Program(std::vector<Rule> rules) : rules_(std::move(rules)) {
	for (std::size_t i = 0; i < rules_.size(); ++i) {
		if (!index_.emplace(rules_[i].name(), i).second) throw DuplicateRuleName(rules_[i].name());
	}
}

std::optional<std::size_t> Program::find(std::string_view name) const {
	auto it = index_.find(name);
	if (it == index_.end()) return std::nullopt;
	return it->second;
}

std::size_t Program::index_of(std::string_view name) const {
	auto i = find(name);
	if (!i) throw UnknownRuleName(std::string(name));
	return *i;
}

LiteralSet Program::heads() const {
	std::vector<Literal> out;
	out.reserve(rules_.size());
	for (const auto& r : rules_) out.push_back(r.head());
	return LiteralSet(std::move(out));
}

std::set<std::string> Program::names() const {
	std::set<std::string> out;
	for (const auto& r : rules_) out.insert(r.name());
	return out;
}

bool Program::is_basic() const {
	return std::all_of(rules_.begin(), rules_.end(), [](const Rule& r) { return r.nbody().empty(); });
}

bool Program::is_normal() const {
	auto positive = [](const LiteralSet& s) {
		return std::none_of(s.begin(), s.end(), [](Literal l) { return l.negative(); });
	};
	return std::all_of(rules_.begin(), rules_.end(), [&](const Rule& r) {
		return !r.head().negative() && positive(r.pbody()) && positive(r.nbody());
	});
}

bool Program::is_prerequisite_free() const {
	return std::all_of(rules_.begin(), rules_.end(), [](const Rule& r) { return r.pbody().empty(); });
}

// ---------------------------------------------------------------------------
// PartialOrder

bool PartialOrder::less(std::string_view lower, std::string_view higher) const {
	return closure_.count(NamePair(lower, higher)) != 0;
}

std::set<std::string> PartialOrder::names() const {
	std::set<std::string> out;
	for (const auto& [a, b] : closure_) {
		out.insert(a);
		out.insert(b);
	}
	return out;
}

PartialOrder PartialOrder::restricted_to(const std::set<std::string>& keep) const {
	PartialOrder out;
	for (const auto& p : closure_) {
		if (keep.count(p.first) && keep.count(p.second)) {
			out.asserted_.insert(p);
			out.closure_.insert(p);
		}
	}
	return out;
}

PartialOrder build_order(std::span<const NamePair> pairs) {
	PartialOrder out;
	std::map<std::string, std::size_t> ids;
	std::vector<std::string> names;
	for (const auto& [a, b] : pairs) {
		for (const auto* n : {&a, &b}) {
			if (!is_identifier(*n)) throw InvalidArgument("malformed rule name '" + *n + "'");
			if (ids.emplace(*n, names.size()).second) names.push_back(*n);
		}
		out.asserted_.emplace(a, b);
	}
	const std::size_t n = names.size();
	std::vector<char> rel(n * n, 0);
	for (const auto& [a, b] : pairs) rel[ids[a] * n + ids[b]] = 1;
	// Warshall
	for (std::size_t k = 0; k < n; ++k)
		for (std::size_t i = 0; i < n; ++i)
			if (rel[i * n + k])
				for (std::size_t j = 0; j < n; ++j)
					if (rel[k * n + j]) rel[i * n + j] = 1;
	for (std::size_t i = 0; i < n; ++i) {
		if (rel[i * n + i]) throw CyclicOrder(names[i]);
		for (std::size_t j = 0; j < n; ++j)
			if (rel[i * n + j]) out.closure_.emplace(names[i], names[j]);
	}
	return out;
}

PartialOrder build_order(std::initializer_list<NamePair> pairs) {
	std::vector<NamePair> v(pairs);
	return build_order(std::span<const NamePair>(v));
}

// ---------------------------------------------------------------------------
// OrderedProgram

OrderedProgram::OrderedProgram(Program program, PartialOrder order)
	: program_(std::move(program)), order_(std::move(order)) {
	const std::size_t n = program_.size();
	less_.assign(n * n, 0);
	superiors_.assign(n, {});
	for (const auto& [lo, hi] : order_.closure()) {
		less_[program_.index_of(lo) * n + program_.index_of(hi)] = 1;
	}
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			if (less_[i * n + j]) superiors_[i].push_back(j);
}

bool OrderedProgram::is_total() const {
	const std::size_t n = size();
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = i + 1; j < n; ++j)
			if (!less(i, j) && !less(j, i)) return false;
	return true;
}

// ---------------------------------------------------------------------------

std::string_view to_string(Strategy s) {
	switch (s) {
	case Strategy::D: return "d";
	case Strategy::W: return "w";
	case Strategy::B: return "b";
	case Strategy::None: return "none";
	}
	return "none";
}

std::optional<Strategy> parse_strategy(std::string_view s) {
	if (s == "d" || s == "D") return Strategy::D;
	if (s == "w" || s == "W") return Strategy::W;
	if (s == "b" || s == "B") return Strategy::B;
	if (s == "none") return Strategy::None;
	return std::nullopt;
}

} // namespace olp
