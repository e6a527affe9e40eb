#pragma once

#include <string>
#include <utility>
#include <vector>

#include "sitplan/situation.hpp"
#include "sitplan/state.hpp"
#include "sitplan/types.hpp"

namespace sitplan {

// A term inside a lifted schema: either a parameter slot or a fixed object.
struct Term {
    enum class Kind : uint8_t { Variable, Object };
    Kind kind;
    uint32_t index;  // parameter position, or ObjId

    static Term var(uint32_t i) { return {Kind::Variable, i}; }
    static Term obj(ObjId o) { return {Kind::Object, o}; }
    bool operator==(const Term& o) const { return kind == o.kind && index == o.index; }
};

struct SchemaAtom {
    PredId pred;
    std::vector<Term> args;
};

// A lifted operator: typed parameters, positive precondition atoms,
// inequality constraints, and add/delete effect sets. Every effect
// variable appears in the parameter list.
struct ActionSchema {
    std::string name;
    std::vector<std::string> param_names;
    std::vector<TypeId> param_types;
    std::vector<SchemaAtom> precond_pos;
    std::vector<std::pair<Term, Term>> precond_neq;
    std::vector<SchemaAtom> add;
    std::vector<SchemaAtom> del;
};

// The compiled planning task: signature tables, schemas, typed object
// universe, the closed-world initial state, a ground conjunctive goal,
// and the plan-length bound.
struct PlanningTask {
    std::vector<std::string> pred_names;
    std::vector<std::vector<TypeId>> pred_param_types;

    std::vector<std::string> type_names;    // [0] is the root type
    std::vector<TypeId> type_parents;       // root points at itself
    std::vector<std::vector<bool>> subtype; // subtype[t][u]: t is-a u

    std::vector<std::string> obj_names;
    std::vector<TypeId> obj_types;
    std::vector<std::vector<ObjId>> objects_by_type;  // declaration order

    std::vector<ActionSchema> schemas;

    State init;
    std::vector<GroundAtom> goal;  // ground positive atoms
    int bound = 0;

    std::string domain_name;
    std::string problem_name;

    size_t num_predicates() const { return pred_names.size(); }
    size_t num_objects() const { return obj_names.size(); }
    uint32_t pred_arity(PredId p) const {
        return static_cast<uint32_t>(pred_param_types[p].size());
    }
    bool obj_has_type(ObjId o, TypeId t) const { return subtype[obj_types[o]][t]; }

    // Linear lookups; used off the hot path (diagnostics, plan files).
    int find_schema(const std::string& name) const;
    int find_object(const std::string& name) const;
    int find_predicate(const std::string& name) const;

    std::string to_string(const GroundAtom& a) const;
    std::string to_string(const GroundAction& a) const;
};

// Substitutes action arguments into a schema atom.
inline GroundAtom instantiate(const SchemaAtom& atom, const ArgTuple& args) {
    GroundAtom g;
    g.pred = atom.pred;
    g.args.reserve(atom.args.size());
    for (const Term& t : atom.args) {
        g.args.push_back(t.kind == Term::Kind::Variable ? args[t.index] : t.index);
    }
    return g;
}

}  // namespace sitplan
