#pragma once
// Preference-aware consequence operators and preferred-answer-set deciders.
//
// For an ordered program (Π, <) and a candidate answer set Y, each strategy
// iterates a step operator from ∅:
//
//   W: head(r) for r active wrt (X, Y) such that every r' > r is either inactive
//      wrt (Y, X) or has head(r') ∈ X.
//   D: as W, but a higher rule only stops blocking once it has fired itself.
//   B: as W, but activeness of r is tested wrt (Y, Y).
//
// Y is preferred when the limit equals Y (for B after removing rules that Y
// defeats although their head is in Y).

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "olp/core.hpp"
#include "olp/semantics.hpp"

namespace olp {

inline constexpr std::size_t kDefaultExtensionCap = 5040;

struct IterationState {
	Closure derived;
	std::set<std::string> applied; ///< rules fired so far
	std::size_t step = 0;
};

/// Pairs (lower, higher) read from prec(lower, higher) atoms of a candidate set.
struct DynamicRelation {
	std::vector<NamePair> pairs;
};

IterationState t_w(const OrderedProgram& op, const LiteralSet& y, const IterationState& state);
IterationState t_d(const OrderedProgram& op, const LiteralSet& y, const IterationState& state);
IterationState t_b(const OrderedProgram& op, const LiteralSet& y, const IterationState& state);

/// Dispatches to t_w / t_d / t_b. throws InvalidArgument for Strategy::None.
IterationState step(const OrderedProgram& op, Strategy s, const LiteralSet& y, const IterationState& state);

/// Limit of the strategy's step operator from ∅. Appends one TraceStep per
/// iteration (including the initial ∅) when `trace` is given.
Closure c_pref(const OrderedProgram& op, Strategy s, const LiteralSet& y, Trace* trace = nullptr);

/// Drops rules r with head(r) ∈ x and nbody(r) ∩ x ≠ ∅; the order is restricted.
OrderedProgram e_filter(const OrderedProgram& op, const LiteralSet& x);

/// Prerequisite-free, totally ordered reduction for a totally ordered program:
/// keeps rules with pbody ⊆ x as head ← not nbody, merges rules with identical
/// reducts and ranks each reduct by its highest preimage. throws NotTotal.
OrderedProgram prereq_reduce(const OrderedProgram& op, const LiteralSet& x);

/// Sets X_1..X_n built by scanning rules from most to least preferred: a rule
/// adds its head unless its negative body meets the set built so far.
/// throws NotPrerequisiteFree, NotTotal.
std::vector<LiteralSet> b_operator_trace(const OrderedProgram& op, const LiteralSet& x);
/// Logical closure of the last b_operator_trace set.
Closure b_operator(const OrderedProgram& op, const LiteralSet& x);

/// B-preference for a totally ordered program, via the reduced program. throws NotTotal.
bool is_b_preferred_total(const OrderedProgram& op, const LiteralSet& x);

/// B-preference by trying every linear extension of the order.
/// throws CapExceeded when there are more than `cap` extensions.
bool b_extension_oracle(const OrderedProgram& op, const LiteralSet& x, std::size_t cap = kDefaultExtensionCap);

/// Number of linear extensions of the program's order, saturating at cap + 1.
std::size_t count_linear_extensions(const OrderedProgram& op, std::size_t cap);

/// Polynomial B criterion: every rule r with pbody(r) ⊆ x and head(r) ∉ x must
/// be defeated by a generating rule ranked above it. For partial orders the
/// ranking is chosen by a greedy top-down linear extension. throws NotAnswerSet.
bool b_lemma_check(const OrderedProgram& op, const LiteralSet& x);

struct FixpointOptions {
	/// Read the order from prec atoms of the candidate instead of op.order();
	/// op.order() must then be empty.
	bool dynamic = false;
	Trace* trace = nullptr;
};

/// W/D: c_pref(op, s, x) == x. B: x is an answer set and c_pref(e_filter(op, x), B, x) == x.
/// None: x is an answer set.
bool is_preferred(const OrderedProgram& op, Strategy s, const LiteralSet& x, const FixpointOptions& opts = {});

/// Answer sets of the program that are preferred under s, sorted.
std::vector<LiteralSet> preferred_answer_sets(const OrderedProgram& op, Strategy s,
                                              std::size_t cap = kDefaultHeadCap,
                                              const FixpointOptions& opts = {});

/// A total order under which x is the unique W-preferred answer set.
/// throws NotAnswerSet.
PartialOrder witness_order(const Program& p, const LiteralSet& x);

/// throws NonStrictDynamicOrder when the prec atoms do not form a strict partial order.
DynamicRelation dynamic_relation(const LiteralSet& y);

} // namespace olp
