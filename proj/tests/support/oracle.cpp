#include "oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace oracle {

Set from(const olp::LiteralSet& s) {
	Set out;
	for (auto l : s) out.insert(l.text());
	return out;
}

Program from(const olp::OrderedProgram& op) {
	Program p;
	for (const auto& r : op.program()) p.rules.push_back({r.name(), r.head().text(), from(r.pbody()), from(r.nbody())});
	p.less = closure(Pairs(op.order().asserted().begin(), op.order().asserted().end()));
	return p;
}

std::string complement(const std::string& lit) { return lit[0] == '-' ? lit.substr(1) : "-" + lit; }

bool consistent(const Set& s) {
	return std::none_of(s.begin(), s.end(), [&](const std::string& l) { return s.count(complement(l)) > 0; });
}

static bool subset(const Set& a, const Set& b) {
	return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

static bool meets(const Set& a, const Set& b) {
	return std::any_of(a.begin(), a.end(), [&](const std::string& l) { return b.count(l) > 0; });
}

bool is_answer_set(const Program& p, const Set& x) {
	if (!consistent(x)) return false;
	// Least model of the reduct by naive iteration.
	Set m;
	for (bool grew = true; grew;) {
		grew = false;
		for (const auto& r : p.rules) {
			if (meets(r.neg, x) || !subset(r.pos, m)) continue;
			grew |= m.insert(r.head).second;
		}
	}
	return consistent(m) && m == x;
}

std::set<Set> answer_sets(const Program& p) {
	std::vector<std::string> heads;
	for (const auto& r : p.rules) heads.push_back(r.head);
	std::sort(heads.begin(), heads.end());
	heads.erase(std::unique(heads.begin(), heads.end()), heads.end());
	std::set<Set> out;
	for (unsigned long mask = 0; mask < (1ul << heads.size()); ++mask) {
		Set x;
		for (std::size_t i = 0; i < heads.size(); ++i)
			if (mask >> i & 1) x.insert(heads[i]);
		if (is_answer_set(p, x)) out.insert(x);
	}
	return out;
}

std::vector<std::size_t> generating(const Program& p, const Set& x) {
	std::vector<std::size_t> out;
	for (std::size_t i = 0; i < p.rules.size(); ++i)
		if (subset(p.rules[i].pos, x) && !meets(p.rules[i].neg, x)) out.push_back(i);
	return out;
}

bool valid_witness(const Program& p, char s, const Set& x, const std::vector<std::string>& seq) {
	std::map<std::string, const Rule*> by_name;
	for (const auto& r : p.rules) by_name[r.name] = &r;
	Set gr_names;
	for (auto i : generating(p, x)) gr_names.insert(p.rules[i].name);
	if (Set(seq.begin(), seq.end()) != gr_names || seq.size() != gr_names.size()) return false;
	for (std::size_t i = 0; i < seq.size(); ++i) {
		const Rule& ri = *by_name.at(seq[i]);
		Set before;
		for (std::size_t j = 0; j < i; ++j) before.insert(by_name.at(seq[j])->head);
		if (s == 'd' && !subset(ri.pos, before)) return false;
		if (s == 'w' && !subset(ri.pos, before) && !before.count(ri.head)) return false;
		for (std::size_t j = 0; j < seq.size(); ++j)
			if (p.above(seq[j], seq[i]) && !(j < i)) return false;
		for (const auto& r2 : p.rules) {
			if (gr_names.count(r2.name) || !p.above(r2.name, ri.name)) continue;
			bool ok = !subset(r2.pos, x) || meets(r2.neg, before) || (s == 'w' && before.count(r2.head)) ||
			          (s == 'b' && x.count(r2.head));
			if (!ok) return false;
		}
	}
	return true;
}

bool preserving(const Program& p, char s, const Set& x) {
	std::vector<std::string> seq;
	for (auto i : generating(p, x)) seq.push_back(p.rules[i].name);
	std::sort(seq.begin(), seq.end());
	do {
		if (valid_witness(p, s, x, seq)) return true;
	} while (std::next_permutation(seq.begin(), seq.end()));
	return false;
}

std::set<Set> preferred(const Program& p, char s) {
	std::set<Set> out;
	for (const auto& x : answer_sets(p))
		if (preserving(p, s, x)) out.insert(x);
	return out;
}

Pairs closure(const Pairs& pairs) {
	Pairs c = pairs;
	for (bool grew = true; grew;) {
		grew = false;
		for (const auto& [a, b] : Pairs(c))
			for (const auto& [b2, d] : Pairs(c))
				if (b == b2) grew |= c.emplace(a, d).second;
	}
	return c;
}

std::size_t linear_extensions(const Program& p) {
	std::vector<std::size_t> idx(p.rules.size());
	std::iota(idx.begin(), idx.end(), 0);
	std::size_t count = 0;
	do {
		bool ok = true;
		for (std::size_t i = 0; i < idx.size() && ok; ++i)
			for (std::size_t j = i + 1; j < idx.size() && ok; ++j)
				if (p.above(p.rules[idx[j]].name, p.rules[idx[i]].name)) ok = false;
		count += ok;
	} while (std::next_permutation(idx.begin(), idx.end()));
	return count;
}

bool valid_stratification(const olp::Program& p, const olp::Stratification& s) {
	std::map<std::string, std::size_t> layer;
	std::size_t total = 0;
	for (std::size_t i = 0; i < s.layers.size(); ++i) {
		for (const auto& n : s.layers[i]) {
			if (!layer.emplace(n, i + 1).second) return false;
			++total;
		}
	}
	if (total != p.size()) return false;
	for (const auto& r : p) {
		std::size_t li = layer.at(r.name());
		for (const auto& d : p) {
			std::size_t ld = layer.at(d.name());
			if (r.pbody().contains(d.head()) && ld > li) return false;
			if (r.nbody().contains(d.head()) && ld >= li) return false;
		}
	}
	return true;
}

} // namespace oracle
