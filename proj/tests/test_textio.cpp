#include <catch_amalgamated.hpp>

#include <json.hpp>
#include <random>

#include "fixtures.hpp"
#include "gen.hpp"
#include "olp/compile.hpp"
#include "olp/textio.hpp"

using namespace olp;
using fx::lits;

namespace {

std::pair<std::size_t, std::size_t> error_at(std::string_view text) {
	try {
		parse_program(text);
	} catch (const ParseError& e) {
		return {e.line(), e.column()};
	}
	return {0, 0};
}

} // namespace

TEST_CASE("parse rules and orders") {
	auto fact = parse_program("r5: p.");
	REQUIRE(fact.size() == 1);
	CHECK(fact.program()[0].head() == make_literal("p"));
	CHECK(fact.program()[0].pbody().empty());
	CHECK(fact.program()[0].nbody().empty());

	auto r1 = parse_program("r1: -f :- p, not f.").program()[0];
	CHECK(r1.head() == make_literal("-f"));
	CHECK(r1.pbody() == lits({"p"}));
	CHECK(r1.nbody() == lits({"f"}));

	auto bh = fx::load("bh.olp");
	CHECK(bh.order().closure() == std::set<NamePair>{{"r2", "r1"}});
	CHECK(bh.order().less("r2", "r1"));
}

TEST_CASE("parser naming rules") {
	auto p = parse_program("a. b :- a. % comment\nc :- not b.");
	CHECK(p.program().names() == std::set<std::string>{"r1", "r2", "r3"});
	CHECK(parse_program("x: a. b.").program().names() == std::set<std::string>{"x", "r2"});
	CHECK_THROWS_AS(parse_program("r2: a. b."), ParseError);
	CHECK_THROWS_AS(parse_program("x: a. x: b."), ParseError);
	CHECK(parse_program("bird(tweety). flies(tweety) :- bird(tweety).").program().heads().size() == 2);
}

TEST_CASE("parser errors") {
	CHECK_THROWS_AS(parse_program("r1: a. r1 < r9."), UnknownRuleName);
	CHECK_THROWS_AS(parse_program("r1: a. r2: b. r1 < r2. r2 < r1."), CyclicOrder);
	CHECK(error_at("a :- b") == std::pair<std::size_t, std::size_t>{1, 7});
	CHECK(error_at("a.\n  ok(r1).") == std::pair<std::size_t, std::size_t>{2, 3});
	CHECK(error_at("a.\nb :- not prec(r1,r2).") == std::pair<std::size_t, std::size_t>{2, 10});
	CHECK(error_at("a :- b ; c.") == std::pair<std::size_t, std::size_t>{1, 8});
	CHECK_THROWS_AS(parse_program("not."), ParseError);
	CHECK(parse_program("a :- ap(r1).", {true}).program()[0].pbody().begin()->atom().is_tagged());
}

TEST_CASE("literal lists") {
	CHECK(parse_literal_list("a,-b") == lits({"a", "-b"}));
	CHECK(parse_literal_list("").empty());
	CHECK_THROWS_AS(parse_literal_list("a b"), ParseError);
}

TEST_CASE("serialize_program") {
	CHECK(serialize_program(OrderedProgram()) == "");
	auto text = fx::read("bh.olp");
	auto bh = parse_program(text);
	auto canon = serialize_program(bh);
	CHECK(canon ==
	      "r1: -f :- p, not f.\nr2: w :- b, not -w.\nr3: f :- w, not -f.\nr4: b :- p.\nr5: p.\nr2 < r1.\n");
	CHECK(serialize_program(parse_program(canon)) == canon);
	CHECK(program_hash(bh) == program_hash(parse_program(canon)));
	CHECK(program_hash(bh).size() == 16);

	auto compiled = translate_w(parse_program("r1: a.").program());
	auto ctext = serialize_program(compiled.program);
	CHECK(ctext.find("ap1_r1: a :- ap(r1).") != std::string::npos);
	CHECK(ctext.find("ok1_r1: ok(r1) :- okp(r1,r1).") != std::string::npos);
	CHECK(ctext.find("ok2_r1_r1: okp(r1,r1) :- not prec(r1,r1).") != std::string::npos);
	CHECK(ctext.find("as_r1_r1: -prec(r1,r1) :- prec(r1,r1).") != std::string::npos);
	CHECK(parse_program(ctext, {true}).program() == compiled.program);
}

TEST_CASE("round trip on random programs") {
	std::mt19937 rng(3);
	gen::Options o;
	for (int i = 0; i < 300; ++i) {
		auto op = gen::random_ordered(rng, o);
		CHECK(parse_program(serialize_program(op)) == op);
	}
}

TEST_CASE("serialize_result") {
	auto x = lits({"p", "b", "-f", "w"});
	CHECK(serialize_result({x}, ResultFormat::text) == "-f b p w\n");
	CHECK(serialize_result({lits({"b"}), lits({"a", "b"})}, ResultFormat::text) == "a b\nb\n");
	auto doc = nlohmann::json::parse(serialize_result({}, ResultFormat::structured, {"00ff", Strategy::W}));
	CHECK(doc["answer-sets"].is_array());
	CHECK(doc["answer-sets"].empty());
	CHECK(doc["strategy"] == "w");
	CHECK(doc["program-hash"] == "00ff");
	auto two = nlohmann::json::parse(serialize_result({lits({"b"}), x}, ResultFormat::structured));
	CHECK(two["answer-sets"][0] == nlohmann::json::array({"-f", "b", "p", "w"}));
	CHECK(two["answer-sets"][1] == nlohmann::json::array({"b"}));
}

TEST_CASE("serialize_trace") {
	Trace t{{LiteralSet{}, {}}, {lits({"p"}), {"r5"}}};
	CHECK(serialize_trace(t) == "step 0: {} | {}\nstep 1: {p} | {r5}\n");
}
