#pragma once

#include <map>
#include <string>
#include <vector>

#include "twistkit/linalg.hpp"
#include "twistkit/model.hpp"

namespace twistkit {

enum class TokenKind {
    Integer,
    Ident,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    Tilde,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    Equals,
    Newline,
    End,
};

struct Token {
    TokenKind kind;
    std::string text;
    int line;
    int column;
};

/// Tokenizes the full model-file character set; '#' starts a comment that
/// runs to end of line. Newlines are significant tokens.
std::vector<Token> tokenize(const std::string& text);

/// Name resolution for expressions: coframe elements become basis 1-forms,
/// coordinates become Scalar variables, and named forms substitute in place.
struct SymbolTable {
    const CoframeModel* model = nullptr;
    std::map<std::string, Form> named_forms;
};

/// Graded expression value: a form or a vector field (from '~name').
struct ExprValue {
    bool is_vector = false;
    Form form;
    VectorField vector;
};

/// Recursive-descent parser over a token stream; cursor-style interface so
/// the model-file reader can parse expressions mid-line.
class ExprParser {
public:
    ExprParser(const std::vector<Token>& tokens, size_t pos, const SymbolTable& symbols)
        : tokens_(tokens), pos_(pos), symbols_(symbols) {}

    size_t position() const { return pos_; }
    const Token& peek() const { return tokens_[pos_]; }

    /// Full graded expression; vectors admitted only when allow_vector.
    ExprValue parse_expression(bool allow_vector);

    Form parse_form();
    Scalar parse_scalar();
    VectorField parse_vector_field();
    Matrix parse_matrix();

private:
    ExprValue parse_term(bool allow_vector);
    ExprValue parse_unary(bool allow_vector);
    ExprValue parse_power(bool allow_vector);
    ExprValue parse_atom(bool allow_vector);

    [[noreturn]] void fail(const std::string& msg) const;
    Token expect(TokenKind kind, const std::string& what);

    const std::vector<Token>& tokens_;
    size_t pos_;
    const SymbolTable& symbols_;
};

/// Convenience wrappers for whole-string parsing (shared CLI grammar).
Scalar parse_scalar_expression(const std::string& text, const CoframeModel& model);
Form parse_form_expression(const std::string& text, const CoframeModel& model);

}  // namespace twistkit
