#pragma once
// Stratification of normal programs and the perfect model.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "olp/core.hpp"

namespace olp {

struct Stratification {
	std::vector<std::set<std::string>> layers; ///< layers[0] is the lowest
	std::map<std::string, std::size_t> layer_of; ///< 1-based
};

/// Least-layer stratification, or nullopt when none exists. throws NotNormal.
std::optional<Stratification> stratify(const Program& p);

/// Layer by layer: X_i is closed under the rules of layer i with negation
/// evaluated against X_{i-1}.
LiteralSet perfect_model(const Program& p, const Stratification& s);

/// r1 < r2 iff r1 sits in a higher layer than r2.
PartialOrder induced_order(const Program& p, const Stratification& s);

} // namespace olp
