#include "olp/semantics.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace olp {

BasicProgram::BasicProgram(Program program) : program_(std::move(program)) {
	for (const auto& r : program_) {
		if (!r.nbody().empty()) throw InvalidArgument("rule '" + r.name() + "' is not basic");
	}
}

bool is_active(const Rule& r, const LiteralSet& x, const LiteralSet& y) {
	return r.pbody().subset_of(x) && !r.nbody().intersects(y);
}

BasicProgram reduct(const Program& p, const LiteralSet& x) {
	std::vector<Rule> out;
	for (const auto& r : p) {
		if (!r.nbody().intersects(x)) out.emplace_back(r.name(), r.head(), r.pbody(), LiteralSet{});
	}
	return BasicProgram(Program(std::move(out)));
}

Closure t_basic(const BasicProgram& p, const Closure& x) {
	if (x.is_lit()) return Closure::lit();
	std::vector<Literal> heads;
	for (const auto& r : p.program()) {
		if (r.pbody().subset_of(x.literals())) heads.push_back(r.head());
	}
	return Closure::of(LiteralSet(std::move(heads)));
}

Closure cn(const BasicProgram& p) {
	Closure x;
	// Each productive step adds at least one head, so |rules| + 1 steps reach the fixpoint.
	for (std::size_t step = 0; step <= p.program().size() + 1; ++step) {
		Closure next = t_basic(p, x);
		if (next == x) return x;
		x = std::move(next);
		if (x.is_lit()) return x;
	}
	throw std::logic_error("cn: iteration did not become stationary");
}

Closure t_ext(const Program& p, const LiteralSet& y, const Closure& x) {
	if (x.is_lit()) return Closure::lit();
	std::vector<Literal> heads;
	for (const auto& r : p) {
		if (is_active(r, x.literals(), y)) heads.push_back(r.head());
	}
	return Closure::of(LiteralSet(std::move(heads)));
}

Closure c_op(const Program& p, const LiteralSet& x) { return cn(reduct(p, x)); }

bool is_answer_set(const Program& p, const LiteralSet& x) { return c_op(p, x).equals(x); }

void sort_by_text(std::vector<LiteralSet>& sets) {
	std::vector<std::pair<std::string, LiteralSet>> keyed;
	keyed.reserve(sets.size());
	for (auto& s : sets) keyed.emplace_back(s.to_string(), std::move(s));
	std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
	sets.clear();
	for (auto& [key, s] : keyed) sets.push_back(std::move(s));
}

std::vector<LiteralSet> enumerate_answer_sets(const Program& p, std::size_t cap) {
	const LiteralSet head_set = p.heads();
	const auto& heads = head_set.vector();
	if (heads.size() > cap) throw CapExceeded("distinct rule heads", heads.size(), cap);
	std::vector<LiteralSet> out;
	const std::uint64_t count = std::uint64_t{1} << heads.size();
	std::vector<Literal> pick;
	for (std::uint64_t mask = 0; mask < count; ++mask) {
		pick.clear();
		for (std::size_t i = 0; i < heads.size(); ++i) {
			if (mask >> i & 1u) pick.push_back(heads[i]);
		}
		LiteralSet candidate(pick);
		if (!candidate.is_consistent()) continue;
		if (is_answer_set(p, candidate)) out.push_back(std::move(candidate));
	}
	sort_by_text(out);
	return out;
}

namespace {

// Program over dense local literal indices, for repeated least-model computations.
class IndexedProgram {
public:
	explicit IndexedProgram(const Program& p) {
		for (const auto& r : p) {
			IRule ir;
			ir.head = local(r.head());
			for (auto l : r.pbody()) ir.pbody.push_back(local(l));
			for (auto l : r.nbody()) ir.nbody.push_back(local(l));
			rules_.push_back(std::move(ir));
		}
		watch_.assign(lits_.size(), {});
		for (std::size_t i = 0; i < rules_.size(); ++i)
			for (auto l : rules_[i].pbody) watch_[l].push_back(i);
	}

	std::size_t literal_count() const { return lits_.size(); }
	Literal literal(std::size_t i) const { return lits_[i]; }
	std::vector<std::size_t> naf_literals() const {
		std::vector<char> seen(lits_.size(), 0);
		std::vector<std::size_t> out;
		for (const auto& r : rules_)
			for (auto l : r.nbody)
				if (!seen[l]) { seen[l] = 1; out.push_back(l); }
		std::sort(out.begin(), out.end());
		return out;
	}

	// Least model of the rules accepted by `enabled`, with negative bodies ignored.
	template <class Enabled>
	std::vector<char> least_model(Enabled enabled) const {
		std::vector<char> in(lits_.size(), 0);
		std::vector<std::size_t> missing(rules_.size());
		std::vector<std::size_t> queue;
		auto fire = [&](std::size_t r) {
			auto h = rules_[r].head;
			if (!in[h]) { in[h] = 1; queue.push_back(h); }
		};
		for (std::size_t i = 0; i < rules_.size(); ++i) {
			missing[i] = enabled(rules_[i]) ? rules_[i].pbody.size() : SIZE_MAX;
			if (missing[i] == 0) fire(i);
		}
		while (!queue.empty()) {
			auto l = queue.back();
			queue.pop_back();
			for (auto r : watch_[l]) {
				if (missing[r] != SIZE_MAX && --missing[r] == 0) fire(r);
			}
		}
		return in;
	}

	struct IRule {
		std::size_t head = 0;
		std::vector<std::size_t> pbody;
		std::vector<std::size_t> nbody;
	};

	LiteralSet to_set(const std::vector<char>& in) const {
		std::vector<Literal> out;
		for (std::size_t i = 0; i < in.size(); ++i)
			if (in[i]) out.push_back(lits_[i]);
		return LiteralSet(std::move(out));
	}

private:
	std::size_t local(Literal l) {
		auto [it, fresh] = ids_.emplace(l.code(), lits_.size());
		if (fresh) lits_.push_back(l);
		return it->second;
	}

	std::vector<IRule> rules_;
	std::vector<Literal> lits_;
	std::unordered_map<std::uint32_t, std::size_t> ids_;
	std::vector<std::vector<std::size_t>> watch_;
};

} // namespace

std::vector<LiteralSet> enumerate_answer_sets_by_assumptions(const Program& p, std::size_t cap) {
	IndexedProgram ip(p);
	const auto naf = ip.naf_literals();

	// Every answer set lies between these two bounds.
	auto forced = ip.least_model([](const auto& r) { return r.nbody.empty(); });
	auto possible = ip.least_model([](const auto&) { return true; });
	if (!ip.to_set(forced).is_consistent()) return {};

	std::vector<std::size_t> undecided;
	std::vector<char> fixed_true(ip.literal_count(), 0);
	for (auto l : naf) {
		if (forced[l]) fixed_true[l] = 1;
		else if (possible[l]) undecided.push_back(l);
	}
	if (undecided.size() > cap) throw CapExceeded("undecided assumption literals", undecided.size(), cap);

	std::vector<LiteralSet> out;
	std::vector<char> assumed(ip.literal_count(), 0);
	const std::uint64_t count = std::uint64_t{1} << undecided.size();
	for (std::uint64_t mask = 0; mask < count; ++mask) {
		assumed = fixed_true;
		for (std::size_t i = 0; i < undecided.size(); ++i)
			if (mask >> i & 1u) assumed[undecided[i]] = 1;
		auto model = ip.least_model([&](const auto& r) {
			return std::none_of(r.nbody.begin(), r.nbody.end(), [&](std::size_t l) { return assumed[l] != 0; });
		});
		bool agrees = std::all_of(naf.begin(), naf.end(), [&](std::size_t l) { return model[l] == assumed[l]; });
		if (!agrees) continue;
		auto set = ip.to_set(model);
		if (set.is_consistent()) out.push_back(std::move(set));
	}
	sort_by_text(out);
	return out;
}

std::vector<std::size_t> generating_rule_indices(const Program& p, const LiteralSet& x) {
	std::vector<std::size_t> out;
	for (std::size_t i = 0; i < p.size(); ++i) {
		if (is_active(p[i], x, x)) out.push_back(i);
	}
	return out;
}

std::set<std::string> generating_rules(const Program& p, const LiteralSet& x) {
	std::set<std::string> out;
	for (auto i : generating_rule_indices(p, x)) out.insert(p[i].name());
	return out;
}

} // namespace olp
