#pragma once

#include <string>
#include <string_view>

#include "sitplan/pddl/ast.hpp"
#include "sitplan/pddl/errors.hpp"

namespace sitplan::pddl {

// Parses a PDDL domain in the supported fragment: :strips, :typing,
// :equality with negated equality in preconditions only. Anything outside
// the fragment raises UnsupportedConstructError naming the construct.
DomainAst parse_domain(std::string_view text);

// Parses a problem and cross-checks it against the domain signature
// (known predicates/types/constants, arities, ground conjunctive goal).
ProblemAst parse_problem(std::string_view text, const DomainAst& domain);

DomainAst parse_domain_file(const std::string& path);
ProblemAst parse_problem_file(const std::string& path, const DomainAst& domain);

}  // namespace sitplan::pddl
