#pragma once

#include <cassert>
#include <memory>
#include <vector>

#include "sitplan/types.hpp"

namespace sitplan {

// A ground action: schema id plus a full tuple of object arguments.
struct GroundAction {
    SchemaId schema;
    ArgTuple args;

    bool operator==(const GroundAction& o) const {
        return schema == o.schema && args == o.args;
    }
    bool operator<(const GroundAction& o) const {
        if (schema != o.schema) return schema < o.schema;
        return args < o.args;
    }
};

struct GroundActionHash {
    size_t operator()(const GroundAction& a) const {
        size_t h = mix64(0x5157ull ^ a.schema);
        hash_combine(h, ArgTupleHash{}(a.args));
        return h;
    }
};

// A situation: a finite sequence of ground actions rooted at the empty
// sequence. Nodes share structure with their parent, so extending a
// situation stores O(1) new data; the frontier holds situations, never
// states. Two situations are equal exactly when their action sequences
// are equal.
class Situation {
public:
    Situation() = default;  // the initial situation

    int length() const { return node_ ? static_cast<int>(node_->length) : 0; }
    bool is_root() const { return node_ == nullptr; }

    const GroundAction& last_action() const {
        assert(node_);
        return node_->action;
    }

    Situation parent() const {
        assert(node_);
        Situation s;
        s.node_ = node_->parent;
        return s;
    }

    // Actions in execution order (first action performed first).
    std::vector<GroundAction> actions() const;

    size_t hash() const { return node_ ? node_->hash : 0x517u; }

    bool operator==(const Situation& o) const;
    bool operator!=(const Situation& o) const { return !(*this == o); }

    friend Situation do_action(const GroundAction& a, const Situation& s);

private:
    struct Node {
        GroundAction action;
        std::shared_ptr<const Node> parent;
        uint32_t length;
        size_t hash;
    };
    std::shared_ptr<const Node> node_;
};

struct SituationHash {
    size_t operator()(const Situation& s) const { return s.hash(); }
};

// Extends s with one more action; s itself is untouched.
Situation do_action(const GroundAction& a, const Situation& s);

// True iff s's action sequence is a (non-strict) prefix of s2's.
bool is_prefix(const Situation& s, const Situation& s2);

}  // namespace sitplan
