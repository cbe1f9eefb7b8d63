#include "olp/solve.hpp"

#include "olp/compile.hpp"
#include "olp/order_preserve.hpp"
#include "olp/preference.hpp"

namespace olp {

std::string_view to_string(Via v) {
	switch (v) {
	case Via::Fixpoint: return "fixpoint";
	case Via::OrderCheck: return "order-check";
	case Via::Compiled: return "compiled";
	case Via::Lemma: return "lemma";
	}
	return "?";
}

Via parse_via(std::string_view text) {
	for (Via v : {Via::Fixpoint, Via::OrderCheck, Via::Compiled, Via::Lemma})
		if (to_string(v) == text) return v;
	throw InvalidArgument("unknown decider '" + std::string(text) + "'");
}

Via default_via(Strategy s) { return s == Strategy::B ? Via::Lemma : Via::Fixpoint; }

void check_via(Strategy s, Via via) {
	if (via == Via::Compiled && s != Strategy::D && s != Strategy::W)
		throw InvalidArgument("--via compiled needs strategy d or w");
	if (via == Via::Lemma && s != Strategy::B) throw InvalidArgument("--via lemma needs strategy b");
}

bool decide(const OrderedProgram& op, Strategy s, Via via, const LiteralSet& x) {
	check_via(s, via);
	if (!x.is_consistent()) return false;
	if (s == Strategy::None || via == Via::Fixpoint) return is_preferred(op, s, x);
	if (!is_answer_set(op.program(), x)) return false;
	switch (via) {
	case Via::OrderCheck: return is_order_preserving(op, s, x).preserving;
	case Via::Lemma: return b_lemma_check(op, x);
	case Via::Compiled: {
		auto y = tag_completion(op, x);
		return y.is_consistent() && is_answer_set(translate(encode_static(op), s).program, y);
	}
	case Via::Fixpoint: break;
	}
	return false;
}

std::vector<LiteralSet> solve(const OrderedProgram& op, Strategy s, Via via, std::size_t cap) {
	check_via(s, via);
	if (s == Strategy::None) return enumerate_answer_sets(op.program(), cap);
	switch (via) {
	case Via::Fixpoint: return preferred_answer_sets(op, s, cap);
	case Via::Compiled: return solve_compiled(op, s, cap);
	case Via::OrderCheck:
	case Via::Lemma: break;
	}
	std::vector<LiteralSet> out;
	for (auto& x : enumerate_answer_sets(op.program(), cap))
		if (decide(op, s, via, x)) out.push_back(std::move(x));
	return out;
}

} // namespace olp
