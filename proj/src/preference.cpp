#include "olp/preference.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace olp {

namespace {

struct StepResult {
	Closure derived;
	std::vector<char> fired;
};

StepResult step_impl(const OrderedProgram& op, Strategy s, const LiteralSet& y, const LiteralSet& x,
                     const std::vector<char>& applied) {
	const Program& p = op.program();
	StepResult out;
	out.fired.assign(p.size(), 0);
	std::vector<Literal> heads;
	for (std::size_t i = 0; i < p.size(); ++i) {
		const Rule& r = p[i];
		bool cond1 = (s == Strategy::B) ? is_active(r, y, y) : is_active(r, x, y);
		if (!cond1) continue;
		bool blocked = std::any_of(op.superiors(i).begin(), op.superiors(i).end(), [&](std::size_t j) {
			const Rule& hi = p[j];
			if (!is_active(hi, y, x)) return false;
			return (s == Strategy::D) ? !applied[j] : !x.contains(hi.head());
		});
		if (blocked) continue;
		out.fired[i] = 1;
		heads.push_back(r.head());
	}
	out.derived = Closure::of(LiteralSet(std::move(heads)));
	return out;
}

std::vector<char> applied_mask(const Program& p, const std::set<std::string>& names) {
	std::vector<char> mask(p.size(), 0);
	for (const auto& n : names) mask[p.index_of(n)] = 1;
	return mask;
}

IterationState advance(const OrderedProgram& op, Strategy s, const LiteralSet& y, const IterationState& state) {
	IterationState next;
	next.step = state.step + 1;
	next.applied = state.applied;
	if (state.derived.is_lit()) {
		next.derived = Closure::lit();
		return next;
	}
	auto res = step_impl(op, s, y, state.derived.literals(), applied_mask(op.program(), state.applied));
	next.derived = std::move(res.derived);
	for (std::size_t i = 0; i < res.fired.size(); ++i)
		if (res.fired[i]) next.applied.insert(op.program()[i].name());
	return next;
}

// Rule positions from most to least preferred; pre: order total.
std::vector<std::size_t> by_priority(const OrderedProgram& op) {
	std::vector<std::size_t> idx(op.size());
	std::iota(idx.begin(), idx.end(), 0);
	std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
		return op.superiors(a).size() < op.superiors(b).size();
	});
	return idx;
}

PartialOrder total_order_from(const std::vector<std::string>& most_preferred_first) {
	std::vector<NamePair> pairs;
	for (std::size_t i = 0; i < most_preferred_first.size(); ++i)
		for (std::size_t j = i + 1; j < most_preferred_first.size(); ++j)
			pairs.emplace_back(most_preferred_first[j], most_preferred_first[i]);
	return build_order(pairs);
}

// Calls visit(sequence) for every linear extension, most preferred first, until it returns true.
bool for_each_extension(const OrderedProgram& op, const std::function<bool(const std::vector<std::size_t>&)>& visit) {
	const std::size_t n = op.size();
	std::vector<char> placed(n, 0);
	std::vector<std::size_t> seq;
	seq.reserve(n);
	std::function<bool()> rec = [&]() -> bool {
		if (seq.size() == n) return visit(seq);
		for (std::size_t i = 0; i < n; ++i) {
			if (placed[i]) continue;
			const auto& sup = op.superiors(i);
			if (!std::all_of(sup.begin(), sup.end(), [&](std::size_t j) { return placed[j] != 0; })) continue;
			placed[i] = 1;
			seq.push_back(i);
			bool stop = rec();
			seq.pop_back();
			placed[i] = 0;
			if (stop) return true;
		}
		return false;
	};
	return rec();
}

OrderedProgram with_dynamic_order(const OrderedProgram& op, const LiteralSet& y) {
	if (!op.order().empty()) throw InvalidArgument("dynamic mode requires an empty static order");
	auto rel = dynamic_relation(y);
	std::vector<NamePair> pairs;
	for (auto& pr : rel.pairs) {
		if (op.program().contains(pr.first) && op.program().contains(pr.second)) pairs.push_back(std::move(pr));
	}
	return OrderedProgram(op.program(), build_order(pairs));
}

} // namespace

IterationState t_w(const OrderedProgram& op, const LiteralSet& y, const IterationState& state) {
	return advance(op, Strategy::W, y, state);
}

IterationState t_d(const OrderedProgram& op, const LiteralSet& y, const IterationState& state) {
	return advance(op, Strategy::D, y, state);
}

IterationState t_b(const OrderedProgram& op, const LiteralSet& y, const IterationState& state) {
	return advance(op, Strategy::B, y, state);
}

IterationState step(const OrderedProgram& op, Strategy s, const LiteralSet& y, const IterationState& state) {
	if (s == Strategy::None) throw InvalidArgument("no step operator for strategy 'none'");
	return advance(op, s, y, state);
}

Closure c_pref(const OrderedProgram& op, Strategy s, const LiteralSet& y, Trace* trace) {
	if (s == Strategy::None) throw InvalidArgument("no preference operator for strategy 'none'");
	const Program& p = op.program();
	LiteralSet x;
	std::vector<char> applied(p.size(), 0);
	auto record = [&] {
		if (!trace) return;
		TraceStep ts;
		ts.derived = x;
		for (std::size_t i = 0; i < p.size(); ++i)
			if (applied[i]) ts.applied.push_back(p[i].name());
		std::sort(ts.applied.begin(), ts.applied.end());
		trace->push_back(std::move(ts));
	};
	record();
	// Every productive step fires at least one new rule.
	for (std::size_t n = 0; n <= p.size() + 1; ++n) {
		auto res = step_impl(op, s, y, x, applied);
		if (res.derived.is_lit()) return Closure::lit();
		const LiteralSet& next = res.derived.literals();
		if (!x.subset_of(next)) throw std::logic_error("c_pref: iteration is not monotone");
		bool same = next == x && std::equal(applied.begin(), applied.end(), res.fired.begin(),
		                                    [](char a, char b) { return (a != 0) == (b != 0); });
		if (same) return Closure::of(x);
		x = next;
		for (std::size_t i = 0; i < p.size(); ++i) applied[i] = applied[i] || res.fired[i];
		record();
	}
	throw std::logic_error("c_pref: iteration did not become stationary");
}

OrderedProgram e_filter(const OrderedProgram& op, const LiteralSet& x) {
	std::vector<Rule> kept;
	std::set<std::string> names;
	for (const auto& r : op.program()) {
		if (x.contains(r.head()) && r.nbody().intersects(x)) continue;
		kept.push_back(r);
		names.insert(r.name());
	}
	return OrderedProgram(Program(std::move(kept)), op.order().restricted_to(names));
}

OrderedProgram prereq_reduce(const OrderedProgram& op, const LiteralSet& x) {
	if (!op.is_total()) throw NotTotal();
	// Scanning from most preferred, the first preimage of a reduct is its maximum.
	std::vector<Rule> reducts;
	std::vector<std::string> ranking;
	for (auto i : by_priority(op)) {
		const Rule& r = op.program()[i];
		if (!r.pbody().subset_of(x)) continue;
		Rule red(r.name(), r.head(), LiteralSet{}, r.nbody());
		bool dup = std::any_of(reducts.begin(), reducts.end(), [&](const Rule& q) { return q.same_as(red); });
		if (dup) continue;
		reducts.push_back(std::move(red));
		ranking.push_back(r.name());
	}
	// Keep source order for the rule list.
	std::stable_sort(reducts.begin(), reducts.end(), [&](const Rule& a, const Rule& b) {
		return op.program().index_of(a.name()) < op.program().index_of(b.name());
	});
	return OrderedProgram(Program(std::move(reducts)), total_order_from(ranking));
}

std::vector<LiteralSet> b_operator_trace(const OrderedProgram& op, const LiteralSet& /*x*/) {
	for (const auto& r : op.program())
		if (!r.pbody().empty()) throw NotPrerequisiteFree(r.name());
	if (!op.is_total()) throw NotTotal();
	std::vector<LiteralSet> out;
	LiteralSet cur;
	for (auto i : by_priority(op)) {
		const Rule& r = op.program()[i];
		if (!r.nbody().intersects(cur)) cur.insert(r.head());
		out.push_back(cur);
	}
	return out;
}

Closure b_operator(const OrderedProgram& op, const LiteralSet& x) {
	auto trace = b_operator_trace(op, x);
	return Closure::of(trace.empty() ? LiteralSet{} : trace.back());
}

bool is_b_preferred_total(const OrderedProgram& op, const LiteralSet& x) {
	if (!op.is_total()) throw NotTotal();
	if (!is_answer_set(op.program(), x)) return false;
	auto reduced = e_filter(prereq_reduce(op, x), x);
	return b_operator(reduced, x).equals(x);
}

std::size_t count_linear_extensions(const OrderedProgram& op, std::size_t cap) {
	std::size_t count = 0;
	for_each_extension(op, [&](const std::vector<std::size_t>&) { return ++count > cap; });
	return count;
}

bool b_extension_oracle(const OrderedProgram& op, const LiteralSet& x, std::size_t cap) {
	auto n = count_linear_extensions(op, cap);
	if (n > cap) throw CapExceeded("linear extensions", n, cap);
	if (!is_answer_set(op.program(), x)) return false;
	return for_each_extension(op, [&](const std::vector<std::size_t>& seq) {
		std::vector<std::string> names;
		for (auto i : seq) names.push_back(op.program()[i].name());
		return is_b_preferred_total(OrderedProgram(op.program(), total_order_from(names)), x);
	});
}

bool b_lemma_check(const OrderedProgram& op, const LiteralSet& x) {
	if (!is_answer_set(op.program(), x)) throw NotAnswerSet();
	auto f = e_filter(op, x);
	const Program& p = f.program();
	const std::size_t n = p.size();
	auto gr = generating_rule_indices(p, x);

	// Rules that x neither applies nor defeats, each with its candidate defeaters.
	std::vector<char> zombie(n, 0);
	std::vector<std::vector<std::size_t>> defeaters(n);
	for (std::size_t i = 0; i < n; ++i) {
		if (!p[i].pbody().subset_of(x) || x.contains(p[i].head())) continue;
		zombie[i] = 1;
		for (auto g : gr)
			if (p[i].nbody().contains(p[g].head())) defeaters[i].push_back(g);
	}

	// Build a linear extension top-down; placing a rule never disables another,
	// so any placeable rule may be taken.
	std::vector<char> placed(n, 0);
	for (std::size_t count = 0; count < n; ++count) {
		bool progress = false;
		for (std::size_t i = 0; i < n && !progress; ++i) {
			if (placed[i]) continue;
			const auto& sup = f.superiors(i);
			if (!std::all_of(sup.begin(), sup.end(), [&](std::size_t j) { return placed[j] != 0; })) continue;
			if (zombie[i] && std::none_of(defeaters[i].begin(), defeaters[i].end(),
			                              [&](std::size_t g) { return placed[g] != 0; }))
				continue;
			placed[i] = 1;
			progress = true;
		}
		if (!progress) return false;
	}
	return true;
}

bool is_preferred(const OrderedProgram& op, Strategy s, const LiteralSet& x, const FixpointOptions& opts) {
	if (!x.is_consistent()) return false;
	if (s == Strategy::None) return is_answer_set(op.program(), x);
	if (opts.dynamic) {
		OrderedProgram eff;
		try {
			eff = with_dynamic_order(op, x);
		} catch (const NonStrictDynamicOrder&) {
			return false;
		}
		FixpointOptions inner = opts;
		inner.dynamic = false;
		return is_preferred(eff, s, x, inner);
	}
	if (s == Strategy::B) {
		if (!is_answer_set(op.program(), x)) return false;
		return c_pref(e_filter(op, x), Strategy::B, x, opts.trace).equals(x);
	}
	return c_pref(op, s, x, opts.trace).equals(x);
}

std::vector<LiteralSet> preferred_answer_sets(const OrderedProgram& op, Strategy s, std::size_t cap,
                                              const FixpointOptions& opts) {
	FixpointOptions quiet = opts;
	quiet.trace = nullptr;
	std::vector<LiteralSet> out;
	for (auto& x : enumerate_answer_sets(op.program(), cap)) {
		if (is_preferred(op, s, x, quiet)) out.push_back(std::move(x));
	}
	return out;
}

PartialOrder witness_order(const Program& p, const LiteralSet& x) {
	if (!is_answer_set(p, x)) throw NotAnswerSet();
	const std::size_t n = p.size();
	constexpr std::size_t none = static_cast<std::size_t>(-1);
	std::vector<std::size_t> level(n, none);
	auto gr = generating_rule_indices(p, x);

	// Derivation stages S_0 = ∅, S_{k+1} = T_{Π,X}(S_k); a generating rule sits at
	// the first stage that contains its positive body.
	Closure stage;
	for (std::size_t k = 0; k <= n + 1; ++k) {
		for (auto i : gr)
			if (level[i] == none && p[i].pbody().subset_of(stage.literals())) level[i] = k;
		Closure next = t_ext(p, x, stage);
		if (next == stage) break;
		stage = std::move(next);
	}

	std::vector<std::size_t> seq(gr.begin(), gr.end());
	std::stable_sort(seq.begin(), seq.end(), [&](std::size_t a, std::size_t b) { return level[a] < level[b]; });
	for (std::size_t i = 0; i < n; ++i)
		if (level[i] == none) seq.push_back(i);
	std::vector<std::string> names;
	for (auto i : seq) names.push_back(p[i].name());
	return total_order_from(names);
}

DynamicRelation dynamic_relation(const LiteralSet& y) {
	DynamicRelation rel;
	std::set<NamePair> pairs;
	for (auto l : y) {
		if (l.negative()) continue;
		Atom a = l.atom();
		if (!a.is_tagged() || a.functor() != Functor::prec) continue;
		pairs.emplace(a.args()[0], a.args()[1]);
	}
	for (const auto& [lo, hi] : pairs) {
		if (lo == hi) throw NonStrictDynamicOrder("prec(" + lo + "," + hi + ") is reflexive");
		for (const auto& [lo2, hi2] : pairs) {
			if (lo2 == hi && !pairs.count({lo, hi2})) {
				throw NonStrictDynamicOrder("prec(" + lo + "," + hi2 + ") missing for transitivity");
			}
		}
	}
	rel.pairs.assign(pairs.begin(), pairs.end());
	return rel;
}

} // namespace olp
