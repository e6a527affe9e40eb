#include "sitplan/situation.hpp"

#include <algorithm>

namespace sitplan {

std::vector<GroundAction> Situation::actions() const {
    std::vector<GroundAction> out;
    out.reserve(static_cast<size_t>(length()));
    for (const Node* n = node_.get(); n; n = n->parent.get()) out.push_back(n->action);
    std::reverse(out.begin(), out.end());
    return out;
}

bool Situation::operator==(const Situation& o) const {
    const Node* a = node_.get();
    const Node* b = o.node_.get();
    if (a == b) return true;
    if (!a || !b || a->length != b->length || a->hash != b->hash) return false;
    while (a != b) {
        // a == b covers the shared-suffix case and both reaching the root.
        if (!a || !b) return false;
        if (!(a->action == b->action)) return false;
        a = a->parent.get();
        b = b->parent.get();
    }
    return true;
}

Situation do_action(const GroundAction& a, const Situation& s) {
    auto node = std::make_shared<Situation::Node>();
    node->action = a;
    node->parent = s.node_;
    node->length = static_cast<uint32_t>(s.length()) + 1;
    size_t h = s.hash();
    hash_combine(h, GroundActionHash{}(a));
    node->hash = h;
    Situation out;
    out.node_ = std::move(node);
    return out;
}

bool is_prefix(const Situation& s, const Situation& s2) {
    if (s.length() > s2.length()) return false;
    Situation walk = s2;
    while (walk.length() > s.length()) walk = walk.parent();
    return walk == s;
}

}  // namespace sitplan
