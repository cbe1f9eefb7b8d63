#include "olp/textio.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <map>
#include <optional>
#include <set>

#include <json.hpp>

#include "olp/semantics.hpp"

namespace olp {

namespace {

enum class Tok { ident, lparen, rparen, comma, colon, if_, less, dot, minus, end };

struct Token {
	Tok kind = Tok::end;
	std::string text;
	std::size_t line = 1;
	std::size_t col = 1;
};

class Lexer {
public:
	explicit Lexer(std::string_view src) : src_(src) {}

	Token next() {
		skip();
		Token t;
		t.line = line_;
		t.col = col_;
		if (pos_ >= src_.size()) return t;
		char c = src_[pos_];
		auto single = [&](Tok k) {
			t.kind = k;
			t.text = std::string(1, c);
			advance();
			return t;
		};
		switch (c) {
		case '(': return single(Tok::lparen);
		case ')': return single(Tok::rparen);
		case ',': return single(Tok::comma);
		case '<': return single(Tok::less);
		case '.': return single(Tok::dot);
		case '-': return single(Tok::minus);
		case ':':
			advance();
			if (pos_ < src_.size() && src_[pos_] == '-') {
				advance();
				t.kind = Tok::if_;
				t.text = ":-";
			} else {
				t.kind = Tok::colon;
				t.text = ":";
			}
			return t;
		default: break;
		}
		if (ident_start(c)) {
			std::size_t start = pos_;
			while (pos_ < src_.size() && ident_char(src_[pos_])) advance();
			t.kind = Tok::ident;
			t.text = std::string(src_.substr(start, pos_ - start));
			return t;
		}
		throw ParseError(line_, col_, std::string("unexpected character '") + c + "'");
	}

private:
	static bool ident_start(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; }
	static bool ident_char(char c) { return ident_start(c) || (c >= '0' && c <= '9'); }

	void advance() {
		if (src_[pos_] == '\n') {
			++line_;
			col_ = 1;
		} else {
			++col_;
		}
		++pos_;
	}

	void skip() {
		while (pos_ < src_.size()) {
			char c = src_[pos_];
			if (c == '%') {
				while (pos_ < src_.size() && src_[pos_] != '\n') advance();
			} else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
				advance();
			} else {
				break;
			}
		}
	}

	std::string_view src_;
	std::size_t pos_ = 0;
	std::size_t line_ = 1;
	std::size_t col_ = 1;
};

struct RawRule {
	std::optional<std::string> name;
	Token at;
	std::optional<Literal> head;
	std::vector<Literal> pbody;
	std::vector<Literal> nbody;
};

struct RawOrder {
	Token lower;
	Token higher;
};

class Parser {
public:
	Parser(std::string_view src, const ParseOptions& opts) : lex_(src), opts_(opts) {
		cur_ = lex_.next();
		peek_ = lex_.next();
	}

	OrderedProgram program() {
		std::vector<RawRule> rules;
		std::vector<RawOrder> orders;
		while (cur_.kind != Tok::end) {
			if (cur_.kind == Tok::ident && peek_.kind == Tok::less) {
				RawOrder o;
				o.lower = expect_name();
				expect(Tok::less, "'<'");
				o.higher = expect_name();
				expect(Tok::dot, "'.'");
				orders.push_back(std::move(o));
			} else {
				rules.push_back(rule());
			}
		}
		return build(std::move(rules), orders);
	}

	LiteralSet literal_list() {
		std::vector<Literal> out;
		if (cur_.kind == Tok::end) return LiteralSet{};
		out.push_back(literal());
		while (cur_.kind == Tok::comma) {
			shift();
			out.push_back(literal());
		}
		if (cur_.kind != Tok::end) fail(cur_, "expected ',' or end of input");
		return LiteralSet(std::move(out));
	}

private:
	[[noreturn]] static void fail(const Token& t, const std::string& msg) { throw ParseError(t.line, t.col, msg); }

	Token shift() {
		Token t = std::move(cur_);
		cur_ = std::move(peek_);
		peek_ = lex_.next();
		return t;
	}

	Token expect(Tok kind, const char* what) {
		if (cur_.kind != kind) fail(cur_, std::string("expected ") + what + describe(cur_));
		return shift();
	}

	static std::string describe(const Token& t) {
		return t.kind == Tok::end ? ", found end of input" : ", found '" + t.text + "'";
	}

	Token expect_name() {
		Token t = expect(Tok::ident, "rule name");
		if (t.text == "not") fail(t, "'not' is not a valid rule name");
		return t;
	}

	RawRule rule() {
		RawRule r;
		r.at = cur_;
		if (cur_.kind == Tok::ident && peek_.kind == Tok::colon) {
			r.name = expect_name().text;
			shift();
		}
		r.head = literal();
		if (cur_.kind == Tok::if_) {
			shift();
			body(r);
		}
		expect(Tok::dot, "'.'");
		return r;
	}

	void body(RawRule& r) {
		while (true) {
			if (cur_.kind == Tok::ident && cur_.text == "not") {
				shift();
				r.nbody.push_back(literal());
			} else {
				r.pbody.push_back(literal());
			}
			if (cur_.kind != Tok::comma) break;
			shift();
		}
	}

	Literal literal() {
		bool neg = false;
		if (cur_.kind == Tok::minus) {
			neg = true;
			shift();
		}
		return Literal(atom(), neg);
	}

	Atom atom() {
		Token name = expect(Tok::ident, "atom");
		if (name.text == "not") fail(name, "'not' cannot be used as an atom");
		std::vector<std::string> args;
		if (cur_.kind == Tok::lparen) {
			shift();
			args.push_back(expect(Tok::ident, "argument").text);
			while (cur_.kind == Tok::comma) {
				shift();
				args.push_back(expect(Tok::ident, "argument").text);
			}
			expect(Tok::rparen, "')'");
		}
		if (auto f = reserved_functor(name.text)) {
			if (!opts_.allow_tagged) fail(name, "reserved functor '" + name.text + "' is not allowed in input");
			if (args.size() != functor_arity(*f)) fail(name, "wrong number of arguments for '" + name.text + "'");
			for (const auto& a : args)
				if (a == "not") fail(name, "'not' is not a valid rule name");
			return Atom::tagged(*f, std::move(args));
		}
		std::string text = name.text;
		if (!args.empty()) {
			text += '(';
			for (std::size_t i = 0; i < args.size(); ++i) {
				if (i) text += ',';
				if (args[i] == "not") fail(name, "'not' cannot be used as an argument");
				text += args[i];
			}
			text += ')';
		}
		return Atom::plain(text);
	}

	static OrderedProgram build(std::vector<RawRule> raw, const std::vector<RawOrder>& orders) {
		std::set<std::string> explicit_names;
		for (const auto& r : raw)
			if (r.name) explicit_names.insert(*r.name);
		std::set<std::string> seen;
		std::vector<Rule> rules;
		rules.reserve(raw.size());
		for (std::size_t i = 0; i < raw.size(); ++i) {
			auto& r = raw[i];
			std::string name = r.name ? *r.name : "r" + std::to_string(i + 1);
			if (!r.name && explicit_names.count(name)) {
				fail(r.at, "automatic name '" + name + "' collides with an explicit rule name");
			}
			if (!seen.insert(name).second) fail(r.at, "duplicate rule name '" + name + "'");
			rules.emplace_back(std::move(name), *r.head, std::move(r.pbody), std::move(r.nbody));
		}
		Program program(std::move(rules));
		std::vector<NamePair> pairs;
		for (const auto& o : orders) {
			if (!program.contains(o.lower.text)) throw UnknownRuleName(o.lower.text);
			if (!program.contains(o.higher.text)) throw UnknownRuleName(o.higher.text);
			pairs.emplace_back(o.lower.text, o.higher.text);
		}
		return OrderedProgram(std::move(program), build_order(pairs));
	}

	Lexer lex_;
	ParseOptions opts_;
	Token cur_;
	Token peek_;
};

std::string join_sorted(const LiteralSet& s, const char* prefix) {
	std::string out;
	for (const auto& t : s.sorted_text()) {
		if (!out.empty()) out += ", ";
		out += prefix;
		out += t;
	}
	return out;
}

} // namespace

OrderedProgram parse_program(std::string_view text, const ParseOptions& opts) {
	return Parser(text, opts).program();
}

LiteralSet parse_literal_list(std::string_view text, const ParseOptions& opts) {
	return Parser(text, opts).literal_list();
}

std::string serialize_rule(const Rule& r) {
	std::string out = r.name() + ": " + r.head().text();
	if (!r.pbody().empty() || !r.nbody().empty()) {
		out += " :- ";
		std::string pos = join_sorted(r.pbody(), "");
		std::string neg = join_sorted(r.nbody(), "not ");
		out += pos;
		if (!pos.empty() && !neg.empty()) out += ", ";
		out += neg;
	}
	out += '.';
	return out;
}

std::string serialize_program(const Program& p) {
	std::string out;
	for (const auto& r : p) {
		out += serialize_rule(r);
		out += '\n';
	}
	return out;
}

std::string serialize_program(const OrderedProgram& p) {
	std::string out = serialize_program(p.program());
	for (const auto& [lo, hi] : p.order().asserted()) out += lo + " < " + hi + ".\n";
	return out;
}

std::string program_hash(const OrderedProgram& p) {
	std::uint64_t h = 1469598103934665603ull;
	for (unsigned char c : serialize_program(p)) {
		h ^= c;
		h *= 1099511628211ull;
	}
	char buf[17];
	std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
	return buf;
}

std::string serialize_result(std::vector<LiteralSet> sets, ResultFormat format, const ResultContext& ctx) {
	sort_by_text(sets);
	if (format == ResultFormat::text) {
		std::string out;
		for (const auto& s : sets) {
			out += s.to_string();
			out += '\n';
		}
		return out;
	}
	nlohmann::ordered_json doc;
	doc["program-hash"] = ctx.program_hash;
	doc["strategy"] = std::string(to_string(ctx.strategy));
	auto arr = nlohmann::ordered_json::array();
	for (const auto& s : sets) arr.push_back(s.sorted_text());
	doc["answer-sets"] = std::move(arr);
	return doc.dump(2) + "\n";
}

std::string serialize_trace(const Trace& trace) {
	std::string out;
	for (std::size_t i = 0; i < trace.size(); ++i) {
		out += "step " + std::to_string(i) + ": {" + trace[i].derived.to_string() + "} | {";
		for (std::size_t j = 0; j < trace[i].applied.size(); ++j) {
			if (j) out += ' ';
			out += trace[i].applied[j];
		}
		out += "}\n";
	}
	return out;
}

} // namespace olp
