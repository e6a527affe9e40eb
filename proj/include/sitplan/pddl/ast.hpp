#pragma once

#include <string>
#include <utility>
#include <vector>

namespace sitplan::pddl {

// Parsed, name-based representation. Compilation interns every name into
// dense integer symbols; nothing downstream of the frontend touches these.

struct AstTerm {
    bool is_variable = false;
    std::string name;
    bool operator==(const AstTerm& o) const = default;
};

struct AstAtom {
    std::string pred;
    std::vector<AstTerm> args;
    bool operator==(const AstAtom& o) const = default;
};

struct TypedName {
    std::string name;
    std::string type;  // "object" when the source left it untyped
    bool operator==(const TypedName& o) const = default;
};

struct TypeDecl {
    std::string name;
    std::string parent;
    bool operator==(const TypeDecl& o) const = default;
};

struct PredicateDecl {
    std::string name;
    std::vector<TypedName> params;
    bool operator==(const PredicateDecl& o) const = default;
};

// Effects arrive already split into add and delete sets; the precondition
// is kept as positive atoms plus inequality pairs (the only supported
// negative literals).
struct ActionDef {
    std::string name;
    std::vector<TypedName> params;
    std::vector<AstAtom> precond_pos;
    std::vector<std::pair<AstTerm, AstTerm>> precond_neq;
    std::vector<AstAtom> add;
    std::vector<AstAtom> del;
    bool operator==(const ActionDef& o) const = default;
};

struct DomainAst {
    std::string name;
    std::vector<TypeDecl> types;
    std::vector<PredicateDecl> predicates;
    std::vector<ActionDef> actions;
    bool operator==(const DomainAst& o) const = default;
};

struct ProblemAst {
    std::string name;
    std::string domain_name;
    std::vector<TypedName> objects;
    std::vector<AstAtom> init;  // ground
    std::vector<AstAtom> goal;  // ground, conjunctive
    bool operator==(const ProblemAst& o) const = default;
};

}  // namespace sitplan::pddl
