#pragma once
// Standard answer-set machinery for extended programs.

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "olp/core.hpp"

namespace olp {

inline constexpr std::size_t kDefaultHeadCap = 22;

/// A program whose rules all have an empty negative body.
class BasicProgram {
public:
	BasicProgram() = default;
	/// throws InvalidArgument if some rule has a negative body.
	explicit BasicProgram(Program program);
	const Program& program() const noexcept { return program_; }

private:
	Program program_;
};

/// pbody(r) ⊆ x and nbody(r) ∩ y = ∅.
bool is_active(const Rule& r, const LiteralSet& x, const LiteralSet& y);

/// Gelfond-Lifschitz reduct: drops rules whose negative body meets x, strips the rest.
BasicProgram reduct(const Program& p, const LiteralSet& x);

/// Immediate consequences {head(r) | pbody(r) ⊆ x}; Lit on Lit input.
Closure t_basic(const BasicProgram& p, const Closure& x);

/// Least logically closed set closed under p, by iterating t_basic from ∅.
Closure cn(const BasicProgram& p);

/// {head(r) | r active wrt (x, y)}; Lit on Lit input.
Closure t_ext(const Program& p, const LiteralSet& y, const Closure& x);

/// cn(reduct(p, x)).
Closure c_op(const Program& p, const LiteralSet& x);

bool is_answer_set(const Program& p, const LiteralSet& x);

/// Consistent answer sets, found by testing every consistent subset of the rule heads.
/// Results are sorted by their rendered text. throws CapExceeded when the number of
/// distinct heads exceeds `cap`.
std::vector<LiteralSet> enumerate_answer_sets(const Program& p, std::size_t cap = kDefaultHeadCap);

/// Consistent answer sets, found by guessing the truth of default-negated literals
/// and checking each guess against the least model of its reduct. Only undecided
/// literals (derivable but not forced) are guessed; throws CapExceeded when their
/// number exceeds `cap`. Same output order as enumerate_answer_sets.
std::vector<LiteralSet> enumerate_answer_sets_by_assumptions(const Program& p,
                                                             std::size_t cap = kDefaultHeadCap);

/// Names of rules with pbody ⊆ x and nbody ∩ x = ∅.
std::set<std::string> generating_rules(const Program& p, const LiteralSet& x);
/// Same as generating_rules, as positions in source order.
std::vector<std::size_t> generating_rule_indices(const Program& p, const LiteralSet& x);

/// Sorts literal sets by their rendered text (`-f b p w`).
void sort_by_text(std::vector<LiteralSet>& sets);

} // namespace olp
