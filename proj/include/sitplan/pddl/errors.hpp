#pragma once

#include <stdexcept>
#include <string>

namespace sitplan::pddl {

struct SourceLoc {
    int line = 0;
    int col = 0;
};

// All frontend failures carry a source location. what() is already in
// "line:col: message" form; callers prepend the file name.
class PddlError : public std::runtime_error {
public:
    PddlError(const std::string& msg, SourceLoc loc)
        : std::runtime_error(std::to_string(loc.line) + ":" + std::to_string(loc.col) +
                             ": " + msg),
          loc_(loc) {}
    SourceLoc loc() const { return loc_; }

private:
    SourceLoc loc_;
};

class SyntaxError : public PddlError {
public:
    using PddlError::PddlError;
};

// Input uses a construct outside the supported fragment
// (:strips, :typing, :equality with negated equality in preconditions).
class UnsupportedConstructError : public PddlError {
public:
    UnsupportedConstructError(const std::string& construct, SourceLoc loc)
        : PddlError("unsupported construct '" + construct + "'", loc),
          construct_(construct) {}
    const std::string& construct() const { return construct_; }

private:
    std::string construct_;
};

// Well-formed s-expression, ill-formed planning input (unknown names,
// arity or type mismatches, non-ground goals, ...).
class SemanticError : public PddlError {
public:
    using PddlError::PddlError;
};

}  // namespace sitplan::pddl
