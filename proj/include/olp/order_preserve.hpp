#pragma once
// Preference via order-preserving enumerations of the generating rules.
//
// An enumeration r_1..r_k of GR(Π,X) is accepted when, at every position i
// with H = {head(r_j) | j < i}:
//   order:    every generating rule above r_i comes before it;
//   grounded: pbody(r_i) ⊆ H (D), or additionally head(r_i) ∈ H (W), none (B);
//   blockage: each non-generating r' > r_i has pbody(r') ⊄ X, or nbody(r') ∩ H ≠ ∅,
//             or head(r') ∈ H (W) / head(r') ∈ X (B).

#include <optional>
#include <string>
#include <vector>

#include "olp/core.hpp"

namespace olp {

struct Preservation {
	bool preserving = false;
	/// Rule names in enumeration order, when preserving.
	std::optional<std::vector<std::string>> witness;
};

/// Backtracking search; candidates are tried in source order so the first
/// witness found is deterministic. throws NotAnswerSet, InvalidArgument (None).
Preservation is_order_preserving(const OrderedProgram& op, Strategy s, const LiteralSet& x);

} // namespace olp
