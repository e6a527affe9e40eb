#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "sitplan/pddl/errors.hpp"

namespace sitplan::pddl {

struct Token {
    enum class Kind { LParen, RParen, Name, Variable, Keyword, Number, End };
    Kind kind;
    std::string text;  // lower-cased; keywords without the ':', variables without the '?'
    SourceLoc loc;
};

// Tokenizes PDDL s-expressions. Names are case-folded (PDDL identifiers
// are case-insensitive); ';' starts a comment running to end of line.
class Lexer {
public:
    explicit Lexer(std::string_view text);

    const Token& peek() const { return tokens_[pos_]; }
    const Token& peek2() const { return tokens_[pos_ + 1 < tokens_.size() ? pos_ + 1 : pos_]; }
    Token next() { return tokens_[pos_ == tokens_.size() - 1 ? pos_ : pos_++]; }
    bool at_end() const { return peek().kind == Token::Kind::End; }

private:
    std::vector<Token> tokens_;
    size_t pos_ = 0;
};

}  // namespace sitplan::pddl
