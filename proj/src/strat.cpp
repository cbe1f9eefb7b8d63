#include "olp/strat.hpp"

#include <algorithm>
#include <unordered_map>

#include "olp/semantics.hpp"

namespace olp {

std::optional<Stratification> stratify(const Program& p) {
	for (const auto& r : p) {
		auto neg = [](Literal l) { return l.negative(); };
		if (r.head().negative() || std::any_of(r.pbody().begin(), r.pbody().end(), neg) ||
		    std::any_of(r.nbody().begin(), r.nbody().end(), neg))
			throw NotNormal(r.name());
	}
	const std::size_t n = p.size();
	std::vector<std::size_t> layer(n, 1);
	std::unordered_map<std::uint32_t, std::size_t> level; // atom code -> highest defining layer

	auto level_of = [&](Literal l) {
		auto it = level.find(l.code());
		return it == level.end() ? std::size_t{0} : it->second;
	};
	for (bool changed = true; changed;) {
		changed = false;
		level.clear();
		for (std::size_t i = 0; i < n; ++i) {
			auto& lv = level[p[i].head().code()];
			lv = std::max(lv, layer[i]);
		}
		for (std::size_t i = 0; i < n; ++i) {
			std::size_t want = 1;
			for (auto l : p[i].pbody()) want = std::max(want, level_of(l));
			for (auto l : p[i].nbody()) want = std::max(want, level_of(l) + 1);
			if (want > layer[i]) {
				if (want > n) return std::nullopt;
				layer[i] = want;
				changed = true;
			}
		}
	}

	Stratification s;
	std::vector<std::size_t> used(layer.begin(), layer.end());
	std::sort(used.begin(), used.end());
	used.erase(std::unique(used.begin(), used.end()), used.end());
	s.layers.resize(used.size());
	for (std::size_t i = 0; i < n; ++i) {
		auto k = static_cast<std::size_t>(std::lower_bound(used.begin(), used.end(), layer[i]) - used.begin());
		s.layers[k].insert(p[i].name());
		s.layer_of[p[i].name()] = k + 1;
	}
	return s;
}

LiteralSet perfect_model(const Program& p, const Stratification& s) {
	LiteralSet x;
	for (const auto& names : s.layers) {
		std::vector<Rule> rules;
		for (const auto& r : p)
			if (names.count(r.name())) rules.push_back(r);
		Program layer(std::move(rules));
		const LiteralSet context = x;
		// Lower layers stay in the set while this layer is iterated.
		for (std::size_t k = 0; k <= layer.size(); ++k) {
			Closure next = t_ext(layer, context, Closure::of(x));
			LiteralSet grown = set_union(x, next.literals());
			if (grown == x) break;
			x = std::move(grown);
		}
	}
	return x;
}

PartialOrder induced_order(const Program& p, const Stratification& s) {
	std::vector<NamePair> pairs;
	for (const auto& lo : p)
		for (const auto& hi : p)
			if (s.layer_of.at(lo.name()) > s.layer_of.at(hi.name())) pairs.emplace_back(lo.name(), hi.name());
	return build_order(pairs);
}

} // namespace olp
