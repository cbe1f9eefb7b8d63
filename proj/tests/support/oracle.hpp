#pragma once
// Reference implementations used only by tests. They work on plain strings and
// share no code with the library beyond reading its programs.

#include <cstddef>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "olp/core.hpp"
#include "olp/strat.hpp"

namespace oracle {

using Set = std::set<std::string>;
using Pairs = std::set<std::pair<std::string, std::string>>;

struct Rule {
	std::string name;
	std::string head;
	Set pos;
	Set neg;
};

struct Program {
	std::vector<Rule> rules;
	Pairs less; // transitively closed, (lower, higher)
	bool above(const std::string& hi, const std::string& lo) const { return less.count({lo, hi}) > 0; }
};

Program from(const olp::OrderedProgram& op);
Set from(const olp::LiteralSet& s);

std::string complement(const std::string& lit);
bool consistent(const Set& s);

/// Consistent answer sets by trying every subset of the rule heads.
std::set<Set> answer_sets(const Program& p);
bool is_answer_set(const Program& p, const Set& x);

/// Generating rules, in source order.
std::vector<std::size_t> generating(const Program& p, const Set& x);

/// Checks the order-preservation conditions of strategy 'd', 'w' or 'b' on a
/// complete enumeration of the generating rules.
bool valid_witness(const Program& p, char strategy, const Set& x, const std::vector<std::string>& seq);

/// Order preservation by trying every permutation of the generating rules.
bool preserving(const Program& p, char strategy, const Set& x);

/// Preferred answer sets via `preserving`.
std::set<Set> preferred(const Program& p, char strategy);

Pairs closure(const Pairs& pairs);
std::size_t linear_extensions(const Program& p);

/// Checks the layer conditions directly: positive body atoms defined at the
/// same or a lower layer, default-negated ones strictly lower.
bool valid_stratification(const olp::Program& p, const olp::Stratification& s);

} // namespace oracle
