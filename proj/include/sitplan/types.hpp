#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace sitplan {

// Dense symbol ids assigned at compile time. All hot-path code works on
// these; strings survive only in the task's name tables for display.
using PredId = uint32_t;
using ObjId = uint32_t;
using SchemaId = uint32_t;
using TypeId = uint32_t;

constexpr TypeId kRootType = 0;  // "object"

using ArgTuple = std::vector<ObjId>;

inline uint64_t mix64(uint64_t x) {
    // splitmix64 finalizer
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

inline void hash_combine(size_t& seed, size_t v) {
    seed ^= v + 0x9e3779b97f4a7c15ull + (seed << 6) + (seed >> 2);
}

struct ArgTupleHash {
    size_t operator()(const ArgTuple& t) const {
        size_t h = t.size();
        for (ObjId o : t) hash_combine(h, mix64(o));
        return h;
    }
};

// A ground fluent atom: predicate applied to a tuple of objects.
struct GroundAtom {
    PredId pred;
    ArgTuple args;

    bool operator==(const GroundAtom& o) const { return pred == o.pred && args == o.args; }
    bool operator<(const GroundAtom& o) const {
        if (pred != o.pred) return pred < o.pred;
        return args < o.args;
    }
};

struct GroundAtomHash {
    size_t operator()(const GroundAtom& a) const {
        size_t h = mix64(a.pred);
        hash_combine(h, ArgTupleHash{}(a.args));
        return h;
    }
};

}  // namespace sitplan
