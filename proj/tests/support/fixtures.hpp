#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "olp/semantics.hpp"
#include "olp/textio.hpp"

namespace fx {

inline std::string read(const std::string& name) {
	std::ifstream in(std::string(OLP_PROGRAMS_DIR) + "/" + name);
	std::stringstream ss;
	ss << in.rdbuf();
	return ss.str();
}

inline olp::OrderedProgram load(const std::string& name) { return olp::parse_program(read(name)); }

inline std::string path(const std::string& name) { return std::string(OLP_PROGRAMS_DIR) + "/" + name; }

inline olp::LiteralSet lits(std::initializer_list<std::string_view> l) { return olp::LiteralSet::from_text(l); }

inline std::vector<olp::LiteralSet> sets(std::initializer_list<olp::LiteralSet> l) {
	std::vector<olp::LiteralSet> v(l);
	olp::sort_by_text(v);
	return v;
}

} // namespace fx
