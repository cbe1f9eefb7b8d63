#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "olp/compile.hpp"
#include "olp/order_preserve.hpp"
#include "olp/preference.hpp"
#include "olp/solve.hpp"
#include "olp/strat.hpp"
#include "olp/textio.hpp"

namespace py = pybind11;
using namespace olp;

namespace {

using Names = std::vector<std::string>;

Strategy strategy_of(const std::string& text) {
	auto s = parse_strategy(text);
	if (!s) throw InvalidArgument("unknown strategy '" + text + "'");
	return *s;
}

Via via_of(Strategy s, const std::optional<std::string>& via) {
	Via v = via ? parse_via(*via) : default_via(s);
	check_via(s, v);
	return v;
}

LiteralSet to_set(const std::vector<std::string>& lits) { return LiteralSet::from_text(std::span<const std::string>(lits)); }

std::vector<Names> to_lists(const std::vector<LiteralSet>& sets) {
	std::vector<Names> out;
	for (const auto& s : sets) out.push_back(s.sorted_text());
	return out;
}

} // namespace

PYBIND11_MODULE(_olp, m) {
	m.doc() = "Preferred answer sets of ordered logic programs";

	auto error = py::register_exception<Error>(m, "Error");
	py::register_exception<ParseError>(m, "ParseError", error);
	py::register_exception<SemanticError>(m, "SemanticError", error);
	py::register_exception<InvalidArgument>(m, "InvalidArgument", error);

	py::class_<OrderedProgram>(m, "Program")
		.def_static("parse", [](const std::string& text) { return parse_program(text); }, py::arg("text"))
		.def_property_readonly("rules", [](const OrderedProgram& p) {
			Names out;
			for (const auto& r : p.program()) out.push_back(serialize_rule(r));
			return out;
		})
		.def_property_readonly("order", [](const OrderedProgram& p) {
			return std::vector<NamePair>(p.order().closure().begin(), p.order().closure().end());
		})
		.def("__len__", &OrderedProgram::size)
		.def("__str__", [](const OrderedProgram& p) { return serialize_program(p); })
		.def("hash", [](const OrderedProgram& p) { return program_hash(p); });

	m.def("answer_sets", [](const OrderedProgram& p) { return to_lists(enumerate_answer_sets(p.program())); },
	      py::arg("program"));

	m.def(
		"solve",
		[](const OrderedProgram& p, const std::string& strategy, const std::optional<std::string>& via) {
			Strategy s = strategy_of(strategy);
			return to_lists(solve(p, s, via_of(s, via)));
		},
		py::arg("program"), py::arg("strategy") = "w", py::arg("via") = py::none());

	m.def(
		"is_preferred",
		[](const OrderedProgram& p, const std::string& strategy, const Names& candidate,
		   const std::optional<std::string>& via) {
			Strategy s = strategy_of(strategy);
			return decide(p, s, via_of(s, via), to_set(candidate));
		},
		py::arg("program"), py::arg("strategy"), py::arg("candidate"), py::arg("via") = py::none());

	m.def(
		"witness",
		[](const OrderedProgram& p, const std::string& strategy, const Names& candidate) {
			return is_order_preserving(p, strategy_of(strategy), to_set(candidate)).witness;
		},
		py::arg("program"), py::arg("strategy"), py::arg("candidate"));

	m.def(
		"trace",
		[](const OrderedProgram& p, const std::string& strategy, const Names& candidate) {
			Trace t;
			c_pref(p, strategy_of(strategy), to_set(candidate), &t);
			std::vector<std::pair<Names, Names>> out;
			for (const auto& st : t) out.emplace_back(st.derived.sorted_text(), st.applied);
			return out;
		},
		py::arg("program"), py::arg("strategy"), py::arg("candidate"));

	m.def(
		"compile",
		[](const OrderedProgram& p, const std::string& strategy) {
			return serialize_program(translate(encode_static(p), strategy_of(strategy)).program);
		},
		py::arg("program"), py::arg("strategy") = "w");

	m.def(
		"stratify",
		[](const OrderedProgram& p) -> py::object {
			auto s = stratify(p.program());
			if (!s) return py::none();
			py::dict d;
			std::vector<Names> layers;
			for (const auto& l : s->layers) layers.emplace_back(l.begin(), l.end());
			d["layers"] = layers;
			d["perfect_model"] = perfect_model(p.program(), *s).sorted_text();
			auto order = induced_order(p.program(), *s).closure();
			d["order"] = std::vector<NamePair>(order.begin(), order.end());
			return d;
		},
		py::arg("program"));
}
