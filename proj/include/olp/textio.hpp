#pragma once
// Concrete syntax for ordered programs and result sets.
//
//   % comment
//   r1: -f :- p, not f.      named rule
//   p.                       unnamed rule, auto-named r<position>
//   r2 < r1.                 r1 has HIGHER priority than r2
//
// Classical negation is `-`, default negation is `not`. Atoms are identifiers,
// optionally applied to identifier arguments.

#include <string>
#include <string_view>
#include <vector>

#include "olp/core.hpp"

namespace olp {

struct ParseOptions {
	/// Accept the control functors ap/bl/ok/okp/prec (compiled programs only).
	bool allow_tagged = false;
};

/// throws ParseError, CyclicOrder, UnknownRuleName.
OrderedProgram parse_program(std::string_view text, const ParseOptions& opts = {});

/// Comma-separated literals, e.g. `a,-b`. throws ParseError.
LiteralSet parse_literal_list(std::string_view text, const ParseOptions& opts = {});

/// One rule per line in source order, then the order declarations sorted.
std::string serialize_program(const OrderedProgram& p);
std::string serialize_program(const Program& p);
std::string serialize_rule(const Rule& r);

enum class ResultFormat { text, structured };

struct ResultContext {
	std::string program_hash;
	Strategy strategy = Strategy::None;
};

/// text: one set per line; structured: a JSON document with program-hash,
/// strategy and answer-sets. Sets are emitted sorted by their rendered form.
std::string serialize_result(std::vector<LiteralSet> sets, ResultFormat format, const ResultContext& ctx = {});

/// 64-bit FNV-1a of the canonical serialization, as 16 hex digits.
std::string program_hash(const OrderedProgram& p);

/// One line per iteration: `step <i>: <derived literals> | <fired rules>`.
std::string serialize_trace(const Trace& trace);

} // namespace olp
