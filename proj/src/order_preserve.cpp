#include "olp/order_preserve.hpp"

#include <unordered_set>

#include "olp/semantics.hpp"

namespace olp {

namespace {

class Search {
public:
	Search(const OrderedProgram& op, Strategy s, const LiteralSet& x) : op_(op), s_(s), x_(x) {
		const Program& p = op.program();
		gr_ = generating_rule_indices(p, x);
		in_gr_.assign(p.size(), 0);
		for (auto i : gr_) in_gr_[i] = 1;
		placed_.assign(p.size(), false);
	}

	bool run() { return extend(); }
	const std::vector<std::size_t>& sequence() const { return seq_; }

private:
	bool placeable(std::size_t i) const {
		const Program& p = op_.program();
		const Rule& r = p[i];
		for (auto j : op_.superiors(i)) {
			if (in_gr_[j] && !placed_[j]) return false;
		}
		bool grounded = r.pbody().subset_of(heads_);
		if (s_ == Strategy::W) grounded = grounded || heads_.contains(r.head());
		if (s_ != Strategy::B && !grounded) return false;
		for (auto j : op_.superiors(i)) {
			if (in_gr_[j]) continue;
			const Rule& hi = p[j];
			if (!hi.pbody().subset_of(x_)) continue;
			if (hi.nbody().intersects(heads_)) continue;
			if (s_ == Strategy::W && heads_.contains(hi.head())) continue;
			if (s_ == Strategy::B && x_.contains(hi.head())) continue;
			return false;
		}
		return true;
	}

	// Whether a placement is allowed depends only on the placed set, so a set
	// that failed once fails again.
	bool extend() {
		if (seq_.size() == gr_.size()) return true;
		if (dead_.count(placed_)) return false;
		for (auto i : gr_) {
			if (placed_[i] || !placeable(i)) continue;
			LiteralSet saved = heads_;
			placed_[i] = true;
			seq_.push_back(i);
			heads_.insert(op_.program()[i].head());
			if (extend()) return true;
			heads_ = std::move(saved);
			seq_.pop_back();
			placed_[i] = false;
		}
		dead_.insert(placed_);
		return false;
	}

	const OrderedProgram& op_;
	Strategy s_;
	const LiteralSet& x_;
	std::vector<std::size_t> gr_;
	std::vector<char> in_gr_;
	std::vector<bool> placed_;
	std::vector<std::size_t> seq_;
	LiteralSet heads_;
	std::unordered_set<std::vector<bool>> dead_;
};

} // namespace

Preservation is_order_preserving(const OrderedProgram& op, Strategy s, const LiteralSet& x) {
	if (s == Strategy::None) throw InvalidArgument("order preservation needs a strategy");
	if (!is_answer_set(op.program(), x)) throw NotAnswerSet();
	Search search(op, s, x);
	Preservation out;
	if (!search.run()) return out;
	out.preserving = true;
	std::vector<std::string> names;
	for (auto i : search.sequence()) names.push_back(op.program()[i].name());
	out.witness = std::move(names);
	return out;
}

} // namespace olp
