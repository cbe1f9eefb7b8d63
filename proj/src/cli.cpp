#include "olp/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "olp/compile.hpp"
#include "olp/order_preserve.hpp"
#include "olp/preference.hpp"
#include "olp/solve.hpp"
#include "olp/strat.hpp"
#include "olp/textio.hpp"

namespace olp::cli {

namespace {

struct IoError : Error {
	using Error::Error;
};

std::string read_file(const std::string& path) {
	std::ifstream in(path, std::ios::binary);
	if (!in) throw IoError("cannot read '" + path + "'");
	std::ostringstream ss;
	ss << in.rdbuf();
	return ss.str();
}

void prefixed(std::ostream& out, const std::string& text) {
	std::istringstream lines(text);
	for (std::string line; std::getline(lines, line);) out << "% " << line << '\n';
}

std::string join(const std::vector<std::string>& v) {
	std::string s;
	for (const auto& x : v) s += (s.empty() ? "" : " ") + x;
	return s;
}

Strategy strategy_of(const std::string& text) {
	auto s = parse_strategy(text);
	if (!s) throw InvalidArgument("unknown strategy '" + text + "'");
	return *s;
}

struct Options {
	std::string file;
	std::string strategy = "w";
	std::string via;
	std::string candidate;
	std::string output;
	std::size_t cap = kDefaultHeadCap;
	bool trace = false;
	bool json = false;
};

// Trace or witness explaining the verdict on one candidate.
void explain(std::ostream& out, const OrderedProgram& op, Strategy s, Via via, const LiteralSet& x) {
	if (s == Strategy::None) return;
	if (via == Via::OrderCheck) {
		if (!is_answer_set(op.program(), x)) return;
		auto res = is_order_preserving(op, s, x);
		if (res.witness) out << "% witness: " << join(*res.witness) << '\n';
		return;
	}
	if (via == Via::Fixpoint) {
		Trace trace;
		if (s == Strategy::B) {
			c_pref(e_filter(op, x), s, x, &trace);
		} else {
			c_pref(op, s, x, &trace);
		}
		prefixed(out, serialize_trace(trace));
	}
}

int cmd_solve(const Options& o, std::ostream& out) {
	auto op = parse_program(read_file(o.file));
	Strategy s = strategy_of(o.strategy);
	Via via = o.via.empty() ? default_via(s) : parse_via(o.via);
	check_via(s, via);
	auto sets = solve(op, s, via, o.cap);
	if (o.trace) {
		for (const auto& x : enumerate_answer_sets(op.program(), o.cap)) {
			out << "% candidate: " << x.to_string() << '\n';
			explain(out, op, s, via, x);
		}
	}
	out << serialize_result(sets, o.json ? ResultFormat::structured : ResultFormat::text, {program_hash(op), s});
	return ok;
}

int cmd_compile(const Options& o, std::ostream& out) {
	auto op = parse_program(read_file(o.file));
	Strategy s = strategy_of(o.strategy);
	auto compiled = translate(encode_static(op), s);
	std::string text = serialize_program(compiled.program);
	if (o.output.empty()) {
		out << text;
	} else {
		std::ofstream f(o.output, std::ios::binary);
		if (!(f << text)) throw IoError("cannot write '" + o.output + "'");
	}
	return ok;
}

int cmd_check(const Options& o, std::ostream& out) {
	auto op = parse_program(read_file(o.file));
	Strategy s = strategy_of(o.strategy);
	Via via = o.via.empty() ? default_via(s) : parse_via(o.via);
	check_via(s, via);
	auto x = parse_literal_list(o.candidate);
	bool verdict = decide(op, s, via, x);
	out << (verdict ? "true" : "false") << '\n';
	if (o.trace && x.is_consistent()) explain(out, op, s, via, x);
	return ok;
}

int cmd_compare(const Options& o, std::ostream& out) {
	auto op = parse_program(read_file(o.file));
	struct Row {
		const char* label;
		Strategy s;
		std::vector<LiteralSet> sets;
	};
	std::vector<Row> rows{{"AS", Strategy::None, {}}, {"AS_B", Strategy::B, {}}, {"AS_W", Strategy::W, {}},
	                      {"AS_D", Strategy::D, {}}};
	for (auto& r : rows) {
		r.sets = solve(op, r.s, default_via(r.s), o.cap);
		out << r.label << ": " << r.sets.size() << '\n';
		for (const auto& x : r.sets) out << "  " << x.to_string() << '\n';
	}
	for (std::size_t i = 1; i < rows.size(); ++i) {
		const auto& wide = rows[i - 1].sets;
		for (const auto& x : rows[i].sets) {
			if (std::find(wide.begin(), wide.end(), x) == wide.end()) {
				out << "chain: VIOLATED (" << x.to_string() << " in " << rows[i].label << " but not in "
				    << rows[i - 1].label << ")\n";
				return cross_check;
			}
		}
	}
	out << "chain: OK\n";
	return ok;
}

int cmd_stratify(const Options& o, std::ostream& out) {
	auto op = parse_program(read_file(o.file));
	const Program& p = op.program();
	auto strat = stratify(p);
	if (!strat) {
		out << "no stratification\n";
		return ok;
	}
	out << "layers: " << strat->layers.size() << '\n';
	for (std::size_t i = 0; i < strat->layers.size(); ++i) {
		std::vector<std::string> names;
		for (const auto& r : p)
			if (strat->layers[i].count(r.name())) names.push_back(r.name());
		out << "  " << i + 1 << ": " << join(names) << '\n';
	}
	out << "perfect model: " << perfect_model(p, *strat).to_string() << '\n';
	out << "order:\n";
	for (const auto& [lo, hi] : induced_order(p, *strat).closure()) out << lo << " < " << hi << ".\n";
	return ok;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
	CLI::App app{"Preferred answer sets of ordered logic programs", "olp"};
	app.require_subcommand(1);
	Options o;
	const std::vector<std::string> strategies{"none", "d", "w", "b", "D", "W", "B"};
	const std::vector<std::string> vias{"fixpoint", "order-check", "compiled", "lemma"};

	auto* solve_cmd = app.add_subcommand("solve", "Print the preferred answer sets");
	auto* compile_cmd = app.add_subcommand("compile", "Write the compiled standard program");
	auto* check_cmd = app.add_subcommand("check", "Decide whether a candidate set is preferred");
	auto* compare_cmd = app.add_subcommand("compare", "Print AS, AS_B, AS_W, AS_D and check their inclusions");
	auto* stratify_cmd = app.add_subcommand("stratify", "Print layers, perfect model and induced order");

	for (auto* c : {solve_cmd, compile_cmd, check_cmd, compare_cmd, stratify_cmd})
		c->add_option("file", o.file, "Program file")->required();
	for (auto* c : {solve_cmd, check_cmd, compare_cmd})
		c->add_option("--cap", o.cap, "Maximum number of distinct rule heads to enumerate over");

	solve_cmd->add_option("--strategy", o.strategy, "none, d, w or b")->check(CLI::IsMember(strategies));
	solve_cmd->add_option("--via", o.via, "fixpoint, order-check, compiled or lemma")->check(CLI::IsMember(vias));
	solve_cmd->add_flag("--trace", o.trace, "Print per-candidate traces as comments");
	solve_cmd->add_flag("--json", o.json, "Structured output");

	compile_cmd->add_option("--strategy", o.strategy, "d or w")
		->required()
		->check(CLI::IsMember({"d", "w", "D", "W"}));
	compile_cmd->add_option("-o,--output", o.output, "Output file (default: stdout)");

	check_cmd->add_option("--strategy", o.strategy, "none, d, w or b")->required()->check(CLI::IsMember(strategies));
	check_cmd->add_option("--candidate", o.candidate, "Comma-separated literals")->required();
	check_cmd->add_option("--via", o.via, "fixpoint, order-check, compiled or lemma")->check(CLI::IsMember(vias));
	check_cmd->add_flag("--trace", o.trace, "Print the trace or witness as comments");

	try {
		std::vector<std::string> rev(args.rbegin(), args.rend());
		app.parse(rev);
	} catch (const CLI::CallForHelp&) {
		out << app.help();
		return ok;
	} catch (const CLI::ParseError& e) {
		err << "error: " << e.what() << '\n';
		return usage;
	}

	try {
		if (solve_cmd->parsed()) return cmd_solve(o, out);
		if (compile_cmd->parsed()) return cmd_compile(o, out);
		if (check_cmd->parsed()) return cmd_check(o, out);
		if (compare_cmd->parsed()) return cmd_compare(o, out);
		if (stratify_cmd->parsed()) return cmd_stratify(o, out);
	} catch (const ParseError& e) {
		err << o.file << ':' << e.line() << ':' << e.column() << ": " << e.message() << '\n';
		return usage;
	} catch (const SemanticError& e) {
		err << "error: " << e.what() << '\n';
		return semantic;
	} catch (const Error& e) {
		err << "error: " << e.what() << '\n';
		return usage;
	}
	return usage;
}

} // namespace olp::cli
