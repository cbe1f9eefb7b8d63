#include "olp/compile.hpp"

#include <algorithm>
#include <set>

namespace olp {

namespace {

Literal tag(Functor f, std::vector<std::string> args, bool negative = false) {
	return Literal(Atom::tagged(f, std::move(args)), negative);
}

Literal prec(const std::string& lo, const std::string& hi, bool negative = false) {
	return tag(Functor::prec, {lo, hi}, negative);
}

bool is_prec(Literal l) {
	Atom a = l.atom();
	return a.is_tagged() && a.functor() == Functor::prec;
}

void check_user_rules(const Program& p) {
	auto bad = [](Literal l) { return l.atom().is_tagged() && l.atom().functor() != Functor::prec; };
	for (const auto& r : p) {
		if (bad(r.head()) || std::any_of(r.pbody().begin(), r.pbody().end(), bad) ||
		    std::any_of(r.nbody().begin(), r.nbody().end(), bad))
			throw InvalidArgument("rule '" + r.name() + "' uses a reserved control atom");
	}
}

LiteralSet language_of(const Program& p) {
	std::vector<Literal> atoms;
	auto add = [&](Literal l) { atoms.emplace_back(l.atom()); };
	for (const auto& r : p) {
		add(r.head());
		for (auto l : r.pbody()) add(l);
		for (auto l : r.nbody()) add(l);
	}
	return LiteralSet(std::move(atoms));
}

class Emitter {
public:
	explicit Emitter(const Program& p) : p_(p) {
		// Underscores in rule names would make joined instance names ambiguous.
		bool plain = std::none_of(p.begin(), p.end(), [](const Rule& r) {
			return r.name().find('_') != std::string::npos;
		});
		for (std::size_t i = 0; i < p.size(); ++i) key_.push_back(plain ? p[i].name() : "n" + std::to_string(i + 1));
	}

	void add(std::string schema, std::vector<std::size_t> src, Literal head, std::vector<Literal> pos,
	         std::vector<Literal> neg = {}) {
		std::string name = schema;
		RuleOrigin o{schema, {}};
		for (auto i : src) {
			name += "_" + key_[i];
			o.sources.push_back(p_[i].name());
		}
		if (schema == "bl1" || schema == "bl2") name += "_" + std::to_string(++bl_count_[{schema, src[0]}]);
		out_.origin.emplace(name, std::move(o));
		rules_.emplace_back(std::move(name), head, std::move(pos), std::move(neg));
	}

	CompiledProgram finish() {
		out_.program = Program(std::move(rules_));
		out_.base_language = language_of(p_);
		return std::move(out_);
	}

private:
	const Program& p_;
	std::vector<std::string> key_;
	std::map<std::pair<std::string, std::size_t>, std::size_t> bl_count_;
	std::vector<Rule> rules_;
	CompiledProgram out_;
};

CompiledProgram translate_impl(const Program& p, bool with_ok5) {
	check_user_rules(p);
	const std::size_t n = p.size();
	std::vector<std::size_t> by_name(n);
	for (std::size_t i = 0; i < n; ++i) by_name[i] = i;
	std::sort(by_name.begin(), by_name.end(), [&](auto a, auto b) { return p[a].name() < p[b].name(); });

	Emitter e(p);
	for (std::size_t i = 0; i < n; ++i) {
		const Rule& r = p[i];
		const std::string& nr = r.name();
		Literal ap = tag(Functor::ap, {nr}), bl = tag(Functor::bl, {nr}), ok = tag(Functor::ok, {nr});
		e.add("ap1", {i}, r.head(), {ap});
		std::vector<Literal> body{ok};
		body.insert(body.end(), r.pbody().begin(), r.pbody().end());
		e.add("ap2", {i}, ap, body, r.nbody().vector());
		for (auto l : r.pbody()) e.add("bl1", {i}, bl, {ok}, {l});
		for (auto l : r.nbody()) e.add("bl2", {i}, bl, {ok, l});
		std::vector<Literal> okps;
		for (std::size_t j = 0; j < n; ++j) okps.push_back(tag(Functor::okp, {nr, p[j].name()}));
		e.add("ok1", {i}, ok, okps);
		for (auto j : by_name) {
			const std::string& nj = p[j].name();
			Literal okp = tag(Functor::okp, {nr, nj});
			Literal pr = prec(nr, nj);
			e.add("ok2", {i, j}, okp, {}, {pr});
			e.add("ok3", {i, j}, okp, {pr, tag(Functor::ap, {nj})});
			e.add("ok4", {i, j}, okp, {pr, tag(Functor::bl, {nj})});
			if (with_ok5) e.add("ok5", {i, j}, okp, {pr, p[j].head()});
		}
	}
	for (std::size_t a = 0; a < n; ++a)
		for (std::size_t b = 0; b < n; ++b)
			for (std::size_t c = 0; c < n; ++c)
				e.add("t", {a, b, c}, prec(p[a].name(), p[c].name()),
				      {prec(p[a].name(), p[b].name()), prec(p[b].name(), p[c].name())});
	for (std::size_t a = 0; a < n; ++a)
		for (std::size_t b = 0; b < n; ++b)
			e.add("as", {a, b}, prec(p[b].name(), p[a].name(), true), {prec(p[a].name(), p[b].name())});
	return e.finish();
}

// Completion for a program whose preferences are all written as prec atoms.
LiteralSet complete(const Program& p, const LiteralSet& x) {
	if (!is_answer_set(p, x)) throw NotAnswerSet();
	std::vector<Literal> y(x.begin(), x.end());
	std::vector<char> gr(p.size(), 0);
	for (auto i : generating_rule_indices(p, x)) gr[i] = 1;
	for (std::size_t i = 0; i < p.size(); ++i) {
		const std::string& nr = p[i].name();
		y.push_back(tag(gr[i] ? Functor::ap : Functor::bl, {nr}));
		y.push_back(tag(Functor::ok, {nr}));
		for (const auto& r2 : p) y.push_back(tag(Functor::okp, {nr, r2.name()}));
	}
	std::set<NamePair> rel;
	for (auto l : x)
		if (!l.negative() && is_prec(l)) rel.emplace(l.atom().args()[0], l.atom().args()[1]);
	// Transitive closure over the rule names, as rule t would derive it.
	std::vector<std::string> names;
	for (const auto& r : p) names.push_back(r.name());
	for (const auto& k : names)
		for (const auto& i : names)
			if (rel.count({i, k}))
				for (const auto& j : names)
					if (rel.count({k, j})) rel.emplace(i, j);
	for (const auto& [lo, hi] : rel) {
		y.push_back(prec(lo, hi));
		if (p.contains(lo) && p.contains(hi)) y.push_back(prec(hi, lo, true));
	}
	return LiteralSet(std::move(y));
}

// No underscore, so the compiled instance names can keep the rule names.
std::string fact_name(const Program& p, std::size_t k) {
	std::string name = "prec" + std::to_string(k);
	while (p.contains(name)) name += "x";
	return name;
}

} // namespace

Program encode_static(const OrderedProgram& op) {
	std::vector<Rule> rules = op.program().rules();
	std::size_t k = 0;
	for (const auto& [lo, hi] : op.order().closure()) rules.emplace_back(fact_name(op.program(), ++k), prec(lo, hi));
	return Program(std::move(rules));
}

CompiledProgram translate_w(const Program& p) { return translate_impl(p, true); }

CompiledProgram translate_d(const Program& p) { return translate_impl(p, false); }

CompiledProgram translate(const Program& p, Strategy s) {
	if (s == Strategy::W) return translate_w(p);
	if (s == Strategy::D) return translate_d(p);
	throw InvalidArgument("compilation is defined for strategies d and w only");
}

std::size_t expected_rule_count(const Program& p, Strategy s) {
	if (s != Strategy::W && s != Strategy::D) throw InvalidArgument("compilation is defined for strategies d and w only");
	const std::size_t n = p.size();
	std::size_t total = 0;
	for (const auto& r : p) total += 3 + r.pbody().size() + r.nbody().size();
	return total + (s == Strategy::W ? 4 : 3) * n * n + n * n * n + n * n;
}

LiteralSet tag_completion(const OrderedProgram& op, const LiteralSet& x) {
	if (!is_answer_set(op.program(), x)) throw NotAnswerSet();
	Program q = encode_static(op);
	LiteralSet xq = x;
	for (const auto& [lo, hi] : op.order().closure()) xq.insert(prec(lo, hi));
	return complete(q, xq);
}

LiteralSet project(const LiteralSet& y) {
	std::vector<Literal> out;
	for (auto l : y)
		if (!l.atom().is_tagged()) out.push_back(l);
	return LiteralSet(std::move(out));
}

LiteralSet project(const LiteralSet& y, const LiteralSet& base) {
	std::vector<Literal> out;
	for (auto l : y) {
		if (!base.contains(Literal(l.atom()))) continue;
		if (l.negative() && is_prec(l)) continue;
		out.push_back(l);
	}
	return LiteralSet(std::move(out));
}

std::vector<LiteralSet> solve_compiled(const OrderedProgram& op, Strategy s, std::size_t cap) {
	auto compiled = translate(encode_static(op), s);
	const LiteralSet base = language_of(op.program());
	std::vector<LiteralSet> out;
	for (const auto& x : enumerate_answer_sets(op.program(), cap)) {
		LiteralSet y = tag_completion(op, x);
		if (!y.is_consistent()) continue;
		if (is_answer_set(compiled.program, y)) out.push_back(project(y, base));
	}
	sort_by_text(out);
	return out;
}

std::vector<LiteralSet> solve_compiled_brute(const OrderedProgram& op, Strategy s, std::size_t cap) {
	auto compiled = translate(encode_static(op), s);
	const LiteralSet base = language_of(op.program());
	std::set<LiteralSet> seen;
	for (const auto& y : enumerate_answer_sets_by_assumptions(compiled.program, cap)) seen.insert(project(y, base));
	std::vector<LiteralSet> out(seen.begin(), seen.end());
	sort_by_text(out);
	return out;
}

} // namespace olp
