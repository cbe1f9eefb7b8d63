#pragma once
// Compilation of (dynamically) ordered programs into standard programs.
//
// Per rule r, with control atoms ap(r) "applied", bl(r) "blocked", ok(r) and
// okp(r, r'):
//
//   ap1   head(r) <- ap(r).
//   ap2   ap(r) <- ok(r), body(r).
//   bl1   bl(r) <- ok(r), not L.          for each L in pbody(r)
//   bl2   bl(r) <- ok(r), L.              for each L in nbody(r)
//   ok1   ok(r) <- okp(r, r_1), ..., okp(r, r_k).
//   ok2   okp(r, r') <- not prec(r, r').
//   ok3   okp(r, r') <- prec(r, r'), ap(r').
//   ok4   okp(r, r') <- prec(r, r'), bl(r').
//   ok5   okp(r, r') <- prec(r, r'), head(r').     W only
//   t     prec(r, r'') <- prec(r, r'), prec(r', r'').
//   as    -prec(r', r) <- prec(r, r').

#include <map>
#include <string>
#include <vector>

#include "olp/core.hpp"
#include "olp/semantics.hpp"

namespace olp {

struct RuleOrigin {
	std::string schema;               ///< ap1, ap2, bl1, bl2, ok1..ok5, t, as, fact
	std::vector<std::string> sources; ///< source rule names the instance is about
};

struct CompiledProgram {
	Program program;
	/// Positive literals of the atoms the source program is written in.
	LiteralSet base_language;
	std::map<std::string, RuleOrigin> origin;
};

/// The program plus a fact prec(r, r') for every pair r < r' of the order's closure.
/// The facts are named prec1, prec2, ... in closure order.
Program encode_static(const OrderedProgram& op);

/// throws InvalidArgument when a rule mentions ap/bl/ok/okp.
CompiledProgram translate_w(const Program& p);
/// translate_w without the ok5 family.
CompiledProgram translate_d(const Program& p);
/// Dispatch on D/W; throws InvalidArgument otherwise.
CompiledProgram translate(const Program& p, Strategy s);

/// Σ_r (3 + |pbody(r)| + |nbody(r)|) + c·n² + n³ + n², c = 4 for W and 3 for D.
std::size_t expected_rule_count(const Program& p, Strategy s);

/// The control-atom valuation matching answer set x of the base program:
/// x, ap(r) for generating r, bl(r) for the rest, all ok/okp atoms, the
/// transitive closure of the preference atoms and their as-rule consequences.
/// throws NotAnswerSet.
LiteralSet tag_completion(const OrderedProgram& op, const LiteralSet& x);

/// Drops every literal over a tagged atom.
LiteralSet project(const LiteralSet& y);
/// Keeps literals whose atom is in `base`, except classically negated prec literals.
LiteralSet project(const LiteralSet& y, const LiteralSet& base);

/// Preferred answer sets through the compiled program: each standard answer set
/// is completed canonically and checked against the compilation.
/// throws CapExceeded, InvalidArgument (strategy not D/W).
std::vector<LiteralSet> solve_compiled(const OrderedProgram& op, Strategy s, std::size_t cap = kDefaultHeadCap);

/// Projections of all answer sets of the compiled program, found without the
/// canonical completion. Exponential; for cross-checking small inputs.
std::vector<LiteralSet> solve_compiled_brute(const OrderedProgram& op, Strategy s, std::size_t cap = kDefaultHeadCap);

} // namespace olp
