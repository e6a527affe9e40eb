#include "sitplan/pddl/lexer.hpp"

#include <cctype>

namespace sitplan::pddl {

namespace {

bool is_name_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_';
}

}  // namespace

Lexer::Lexer(std::string_view text) {
    int line = 1, col = 1;
    size_t i = 0;
    auto advance = [&](size_t n) {
        for (size_t k = 0; k < n; ++k) {
            if (text[i + k] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        i += n;
    };
    while (i < text.size()) {
        char c = text[i];
        SourceLoc loc{line, col};
        if (c == ';') {
            size_t j = i;
            while (j < text.size() && text[j] != '\n') ++j;
            advance(j - i);
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(1);
            continue;
        }
        if (c == '(') {
            tokens_.push_back({Token::Kind::LParen, "(", loc});
            advance(1);
            continue;
        }
        if (c == ')') {
            tokens_.push_back({Token::Kind::RParen, ")", loc});
            advance(1);
            continue;
        }
        if (c == '=') {
            tokens_.push_back({Token::Kind::Name, "=", loc});
            advance(1);
            continue;
        }
        if (c == '?' || c == ':') {
            size_t j = i + 1;
            while (j < text.size() && is_name_char(text[j])) ++j;
            if (j == i + 1) throw SyntaxError(std::string("dangling '") + c + "'", loc);
            std::string word(text.substr(i + 1, j - i - 1));
            for (char& ch : word) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
            tokens_.push_back({c == '?' ? Token::Kind::Variable : Token::Kind::Keyword,
                               std::move(word), loc});
            advance(j - i);
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t j = i;
            while (j < text.size() && (std::isdigit(static_cast<unsigned char>(text[j])) || text[j] == '.')) ++j;
            tokens_.push_back({Token::Kind::Number, std::string(text.substr(i, j - i)), loc});
            advance(j - i);
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            size_t j = i;
            while (j < text.size() && is_name_char(text[j])) ++j;
            std::string word(text.substr(i, j - i));
            for (char& ch : word) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
            tokens_.push_back({Token::Kind::Name, std::move(word), loc});
            advance(j - i);
            continue;
        }
        throw SyntaxError(std::string("unexpected character '") + c + "'", loc);
    }
    tokens_.push_back({Token::Kind::End, "", {line, col}});
}

}  // namespace sitplan::pddl
