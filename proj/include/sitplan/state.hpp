#pragma once

#include <unordered_set>
#include <vector>

#include "sitplan/types.hpp"

namespace sitplan {

using TupleSet = std::unordered_set<ArgTuple, ArgTupleHash>;

// A closed-world state: per-predicate sets of argument tuples. An atom is
// true iff its tuple is present. Value semantics throughout; progression
// copies, it never mutates its input.
class State {
public:
    State() = default;
    explicit State(size_t num_predicates) : by_pred_(num_predicates) {}

    size_t num_predicates() const { return by_pred_.size(); }
    size_t atom_count() const { return count_; }

    bool contains(PredId p, const ArgTuple& args) const {
        return by_pred_[p].count(args) != 0;
    }
    bool contains(const GroundAtom& a) const { return contains(a.pred, a.args); }

    // Returns true if the atom was not already present.
    bool insert(PredId p, ArgTuple args) {
        bool fresh = by_pred_[p].insert(std::move(args)).second;
        if (fresh) ++count_;
        return fresh;
    }
    bool insert(const GroundAtom& a) { return insert(a.pred, a.args); }

    bool erase(PredId p, const ArgTuple& args) {
        bool removed = by_pred_[p].erase(args) != 0;
        if (removed) --count_;
        return removed;
    }

    const TupleSet& tuples(PredId p) const { return by_pred_[p]; }

    // Order-independent hash over the atom set.
    uint64_t set_hash() const;

    bool operator==(const State& o) const {
        return count_ == o.count_ && by_pred_ == o.by_pred_;
    }

    std::vector<GroundAtom> atoms_sorted() const;

private:
    std::vector<TupleSet> by_pred_;
    size_t count_ = 0;
};

}  // namespace sitplan
