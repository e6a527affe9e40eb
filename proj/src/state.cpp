#include "sitplan/state.hpp"

#include <algorithm>

namespace sitplan {

uint64_t State::set_hash() const {
    // XOR of well-mixed per-atom hashes; insertion order cannot matter.
    uint64_t h = 0;
    for (PredId p = 0; p < by_pred_.size(); ++p) {
        for (const ArgTuple& t : by_pred_[p]) {
            h ^= mix64(mix64(p) ^ static_cast<uint64_t>(ArgTupleHash{}(t)));
        }
    }
    return h;
}

std::vector<GroundAtom> State::atoms_sorted() const {
    std::vector<GroundAtom> out;
    out.reserve(count_);
    for (PredId p = 0; p < by_pred_.size(); ++p) {
        for (const ArgTuple& t : by_pred_[p]) out.push_back({p, t});
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace sitplan
