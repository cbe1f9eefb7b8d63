#include <catch_amalgamated.hpp>

#include <map>
#include <random>

#include "fixtures.hpp"
#include "gen.hpp"
#include "olp/compile.hpp"
#include "olp/preference.hpp"
#include "olp/textio.hpp"

using namespace olp;
using fx::lits;
using fx::sets;

namespace {

std::map<std::string, std::size_t> schema_counts(const CompiledProgram& c) {
	std::map<std::string, std::size_t> out;
	for (const auto& [name, o] : c.origin) ++out[o.schema];
	return out;
}

LiteralSet tagged(std::initializer_list<std::string_view> l) { return LiteralSet::from_text(l, true); }

} // namespace

TEST_CASE("schema instances for a single fact") {
	auto p = parse_program("r1: a.").program();
	auto w = translate_w(p);
	CHECK(w.program.size() == 9);
	CHECK(schema_counts(w) == std::map<std::string, std::size_t>{
	                              {"ap1", 1}, {"ap2", 1}, {"ok1", 1}, {"ok2", 1}, {"ok3", 1},
	                              {"ok4", 1}, {"ok5", 1}, {"t", 1},   {"as", 1}});
	auto d = translate_d(p);
	CHECK(d.program.size() == 8);
	CHECK(schema_counts(d).count("ok5") == 0);
	CHECK(w.base_language == lits({"a"}));
	CHECK(w.origin.at("ap1_r1").sources == std::vector<std::string>{"r1"});
	CHECK(w.origin.at("t_r1_r1_r1").sources == std::vector<std::string>{"r1", "r1", "r1"});
}

TEST_CASE("rule counts") {
	auto bh = fx::load("bh.olp");
	auto q = encode_static(bh);
	CHECK(q.size() == 6);
	CHECK(q[5].head() == tagged({"prec(r2,r1)"}).vector()[0]);
	for (auto s : {Strategy::W, Strategy::D}) {
		auto c = translate(q, s);
		CHECK(c.program.size() == expected_rule_count(q, s));
		auto counts = schema_counts(c);
		CHECK(counts["bl1"] == 4);
		CHECK(counts["bl2"] == 3);
		CHECK(counts["t"] == 216);
		CHECK(counts["as"] == 36);
	}
	CHECK(expected_rule_count(q, Strategy::W) == 25 + 144 + 216 + 36);
	CHECK(expected_rule_count(q, Strategy::D) == 25 + 108 + 216 + 36);
	CHECK_THROWS_AS(translate(q, Strategy::B), InvalidArgument);
	CHECK_THROWS_AS(expected_rule_count(q, Strategy::None), InvalidArgument);

	std::mt19937 rng(2);
	gen::Options o;
	for (int i = 0; i < 100; ++i) {
		auto p = encode_static(gen::random_ordered(rng, o));
		for (auto s : {Strategy::W, Strategy::D}) CHECK(translate(p, s).program.size() == expected_rule_count(p, s));
	}
}

TEST_CASE("instance names") {
	auto c = translate_w(parse_program("x_1: a :- b, not c. b.").program());
	CHECK(c.origin.count("ap1_n1"));
	CHECK(c.origin.count("bl1_n1_1"));
	CHECK(c.origin.count("bl2_n1_1"));
	CHECK(c.origin.at("ok3_n1_n2").sources == std::vector<std::string>{"x_1", "r2"});
	CHECK_THROWS_AS(translate_w(parse_program("ok(r1) :- a.", {true}).program()), InvalidArgument);
}

TEST_CASE("serialization round trip") {
	auto c = translate_w(encode_static(fx::load("bh.olp")));
	auto text = serialize_program(c.program);
	auto back = parse_program(text, {true});
	CHECK(back.program() == c.program);
	CHECK_THROWS_AS(parse_program(text), ParseError);
}

TEST_CASE("tag completion") {
	auto bh = fx::load("bh.olp");
	auto x = lits({"p", "b", "-f", "w"});
	auto y = tag_completion(bh, x);
	for (const char* l : {"ap(r1)", "ap(r2)", "ap(r4)", "ap(r5)", "bl(r3)", "prec(r2,r1)", "-prec(r1,r2)"})
		CHECK(y.contains(tagged({l}).vector()[0]));
	for (const char* a : {"r1", "r2", "r3", "r4", "r5"}) {
		CHECK(y.contains(tagged({std::string("ok(") + a + ")"}).vector()[0]));
		for (const char* b : {"r1", "r2", "r3", "r4", "r5"})
			CHECK(y.contains(tagged({std::string("okp(") + a + "," + b + ")"}).vector()[0]));
	}
	CHECK_FALSE(y.contains(tagged({"ap(r3)"}).vector()[0]));
	CHECK(project(y) == x);
	CHECK(is_answer_set(translate_w(encode_static(bh)).program, y));
	CHECK_FALSE(is_answer_set(translate_w(encode_static(bh)).program, tag_completion(bh, lits({"p", "b", "f", "w"}))));
	CHECK_THROWS_AS(tag_completion(bh, lits({"p"})), NotAnswerSet);
}

TEST_CASE("projection") {
	auto y = tagged({"a", "-b", "ap(r1)", "prec(r1,r2)", "-prec(r2,r1)", "c"});
	CHECK(project(y) == lits({"a", "-b", "c"}));
	CHECK(project(y, tagged({"a", "b", "prec(r1,r2)", "prec(r2,r1)"})) == tagged({"a", "-b", "prec(r1,r2)"}));
}

TEST_CASE("solving through the compilation") {
	auto bh = fx::load("bh.olp");
	for (auto s : {Strategy::W, Strategy::D}) CHECK(solve_compiled(bh, s) == sets({lits({"p", "b", "-f", "w"})}));
	auto dvsw = fx::load("dvsw.olp");
	CHECK(solve_compiled(dvsw, Strategy::W) == sets({lits({"a", "b"})}));
	CHECK(solve_compiled(dvsw, Strategy::D).empty());
	CHECK(solve_compiled(fx::load("inc.olp"), Strategy::W).empty());
	CHECK_THROWS_AS(solve_compiled(bh, Strategy::B), InvalidArgument);
}

TEST_CASE("exhaustive search of the compiled program") {
	auto dvsw = fx::load("dvsw.olp");
	CHECK(solve_compiled_brute(dvsw, Strategy::W) == sets({lits({"a", "b"})}));
	CHECK(solve_compiled_brute(dvsw, Strategy::D).empty());
	auto inc2 = fx::load("inc2.olp");
	CHECK(solve_compiled_brute(inc2, Strategy::W).empty());
	auto plain = parse_program("a :- not b. b :- not a.");
	CHECK(solve_compiled_brute(plain, Strategy::W) == sets({lits({"a"}), lits({"b"})}));
}

TEST_CASE("compiled and fixpoint deciders agree") {
	std::mt19937 rng(17);
	gen::Options o;
	for (int i = 0; i < 300; ++i) {
		auto op = gen::random_ordered(rng, o);
		OrderedProgram plain(op.program());
		for (auto s : {Strategy::W, Strategy::D}) {
			CHECK(solve_compiled(op, s) == preferred_answer_sets(op, s));
			CHECK(solve_compiled(plain, s) == enumerate_answer_sets(op.program()));
		}
	}
	gen::Options tiny;
	tiny.min_rules = 1;
	tiny.max_rules = 2;
	tiny.atoms = 2;
	for (int i = 0; i < 40; ++i) {
		auto op = gen::random_ordered(rng, tiny);
		for (auto s : {Strategy::W, Strategy::D}) CHECK(solve_compiled_brute(op, s) == preferred_answer_sets(op, s));
	}
}

TEST_CASE("compiled operator tracks the preference operator") {
	// With Y = X plus the prec facts, the base part of C_tau(Y) is C_W(X).
	std::mt19937 rng(23);
	gen::Options o;
	for (int i = 0; i < 200; ++i) {
		auto op = gen::random_ordered(rng, o);
		auto q = encode_static(op);
		auto c = translate_w(q);
		for (const auto& x : enumerate_answer_sets(op.program())) {
			auto y = tag_completion(op, x);
			if (!y.is_consistent()) continue;
			auto lhs = c_op(c.program, y);
			auto rhs = c_pref(op, Strategy::W, x);
			if (lhs.is_lit() || rhs.is_lit()) {
				CHECK(lhs.is_lit() == rhs.is_lit());
				continue;
			}
			CHECK(project(lhs.literals()) == rhs.literals());
		}
	}
}
