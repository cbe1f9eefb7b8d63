#pragma once
// One entry point over the interchangeable preference deciders.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "olp/core.hpp"
#include "olp/semantics.hpp"

namespace olp {

enum class Via { Fixpoint, OrderCheck, Compiled, Lemma };

std::string_view to_string(Via v);
/// fixpoint, order-check, compiled, lemma. throws InvalidArgument.
Via parse_via(std::string_view text);

/// Fixpoint for D/W/none, Lemma for B.
Via default_via(Strategy s);

/// throws InvalidArgument when the decider does not support the strategy:
/// Compiled needs D or W, Lemma needs B.
void check_via(Strategy s, Via via);

/// Whether x is a preferred answer set under s, decided by `via`.
bool decide(const OrderedProgram& op, Strategy s, Via via, const LiteralSet& x);

/// Preferred answer sets, sorted by text.
std::vector<LiteralSet> solve(const OrderedProgram& op, Strategy s, Via via, std::size_t cap = kDefaultHeadCap);

} // namespace olp
