#include "twistkit/expr.hpp"

#include <cctype>

#include "twistkit/errors.hpp"

namespace twistkit {

std::vector<Token> tokenize(const std::string& text) {
    std::vector<Token> tokens;
    int line = 1, col = 1;
    size_t k = 0;
    auto push = [&](TokenKind kind, const std::string& s, int c) {
        tokens.push_back({kind, s, line, c});
    };
    while (k < text.size()) {
        char c = text[k];
        if (c == '#') {
            while (k < text.size() && text[k] != '\n') ++k;
            continue;
        }
        if (c == '\n') {
            push(TokenKind::Newline, "\n", col);
            ++k;
            ++line;
            col = 1;
            continue;
        }
        if (c == ' ' || c == '\t' || c == '\r') {
            ++k;
            ++col;
            continue;
        }
        int start_col = col;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num;
            while (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k]))) {
                num += text[k++];
                ++col;
            }
            push(TokenKind::Integer, num, start_col);
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string name;
            while (k < text.size() && (std::isalnum(static_cast<unsigned char>(text[k])) || text[k] == '_')) {
                name += text[k++];
                ++col;
            }
            push(TokenKind::Ident, name, start_col);
            continue;
        }
        TokenKind kind;
        switch (c) {
            case '+': kind = TokenKind::Plus; break;
            case '-': kind = TokenKind::Minus; break;
            case '*': kind = TokenKind::Star; break;
            case '/': kind = TokenKind::Slash; break;
            case '^': kind = TokenKind::Caret; break;
            case '~': kind = TokenKind::Tilde; break;
            case '(': kind = TokenKind::LParen; break;
            case ')': kind = TokenKind::RParen; break;
            case '[': kind = TokenKind::LBracket; break;
            case ']': kind = TokenKind::RBracket; break;
            case ',': kind = TokenKind::Comma; break;
            case '=': kind = TokenKind::Equals; break;
            default:
                throw ParseError(line, col, std::string("unexpected character '") + c + "'");
        }
        push(kind, std::string(1, c), start_col);
        ++k;
        ++col;
    }
    tokens.push_back({TokenKind::End, "", line, col});
    return tokens;
}

void ExprParser::fail(const std::string& msg) const {
    const Token& t = tokens_[pos_];
    throw ParseError(t.line, t.column, msg);
}

Token ExprParser::expect(TokenKind kind, const std::string& what) {
    if (tokens_[pos_].kind != kind) fail("expected " + what);
    return tokens_[pos_++];
}

namespace {

ExprValue form_value(Form f) {
    ExprValue v;
    v.form = std::move(f);
    return v;
}

ExprValue vector_value(VectorField x) {
    ExprValue v;
    v.is_vector = true;
    v.vector = std::move(x);
    return v;
}

}  // namespace

ExprValue ExprParser::parse_expression(bool allow_vector) {
    ExprValue left = parse_term(allow_vector);
    while (peek().kind == TokenKind::Plus || peek().kind == TokenKind::Minus) {
        bool minus = peek().kind == TokenKind::Minus;
        ++pos_;
        ExprValue right = parse_term(allow_vector);
        if (left.is_vector != right.is_vector) fail("cannot add a form and a vector field");
        if (left.is_vector) {
            left.vector = minus ? left.vector - right.vector : left.vector + right.vector;
        } else {
            left.form = minus ? left.form - right.form : left.form + right.form;
        }
    }
    return left;
}

ExprValue ExprParser::parse_term(bool allow_vector) {
    ExprValue left = parse_unary(allow_vector);
    while (peek().kind == TokenKind::Star || peek().kind == TokenKind::Slash) {
        bool divide = peek().kind == TokenKind::Slash;
        ++pos_;
        ExprValue right = parse_unary(allow_vector);
        if (divide) {
            if (left.is_vector || right.is_vector) fail("cannot divide vector fields");
            if (right.form.degree() != 0) fail("division requires a degree-0 divisor");
            Scalar d = right.form.scalar_value();
            if (d.is_zero()) fail("division by zero");
            left.form = left.form.scaled(d.inverse());
        } else if (left.is_vector && right.is_vector) {
            fail("cannot multiply vector fields");
        } else if (left.is_vector || right.is_vector) {
            const ExprValue& vec = left.is_vector ? left : right;
            const ExprValue& scal = left.is_vector ? right : left;
            if (scal.form.degree() != 0) fail("vector fields scale by degree-0 factors only");
            left = vector_value(vec.vector.scaled(scal.form.scalar_value()));
        } else if (left.form.degree() == 0 || right.form.degree() == 0) {
            if (left.form.degree() == 0) left.form = right.form.scaled(left.form.scalar_value());
            else left.form = left.form.scaled(right.form.scalar_value());
        } else {
            fail("'*' needs a degree-0 factor; use '^' for wedge products");
        }
    }
    return left;
}

ExprValue ExprParser::parse_unary(bool allow_vector) {
    if (peek().kind == TokenKind::Minus) {
        ++pos_;
        ExprValue v = parse_unary(allow_vector);
        if (v.is_vector) v.vector = -v.vector;
        else v.form = -v.form;
        return v;
    }
    return parse_power(allow_vector);
}

ExprValue ExprParser::parse_power(bool allow_vector) {
    ExprValue left = parse_atom(allow_vector);
    while (peek().kind == TokenKind::Caret) {
        ++pos_;
        if (left.is_vector) fail("'^' does not apply to vector fields");
        // A literal integer exponent is the wedge power (plain power on
        // degree-0 factors).
        if (peek().kind == TokenKind::Integer) {
            unsigned long n = std::stoul(tokens_[pos_++].text);
            left.form = wedge_pow(left.form, static_cast<unsigned>(n));
            continue;
        }
        ExprValue right = parse_atom(allow_vector);
        if (right.is_vector) fail("'^' does not apply to vector fields");
        left.form = wedge(left.form, right.form);
    }
    return left;
}

ExprValue ExprParser::parse_atom(bool allow_vector) {
    const Token& t = peek();
    switch (t.kind) {
        case TokenKind::Integer: {
            ++pos_;
            return form_value(Form(Scalar(Polynomial(GaussianRational(Rational(t.text))))));
        }
        case TokenKind::Tilde: {
            ++pos_;
            if (!allow_vector) fail("vector fields are not allowed here");
            Token name = expect(TokenKind::Ident, "a coframe name after '~'");
            if (!symbols_.model) fail("no model in scope");
            return vector_value(VectorField::frame(symbols_.model->coframe_index(name.text)));
        }
        case TokenKind::Ident: {
            ++pos_;
            if (t.text == "i") return form_value(Form(Scalar::i()));
            auto named = symbols_.named_forms.find(t.text);
            if (named != symbols_.named_forms.end()) return form_value(named->second);
            if (symbols_.model) {
                const auto& names = symbols_.model->coframe_names;
                for (size_t k = 0; k < names.size(); ++k) {
                    if (names[k] == t.text)
                        return form_value(Form::basis({static_cast<int>(k)}));
                }
                const auto& coords = symbols_.model->coordinates;
                for (const auto& c : coords) {
                    if (c == t.text) return form_value(Form(Scalar::variable(t.text)));
                }
            }
            throw ParseError(t.line, t.column, "unknown name '" + t.text + "'");
        }
        case TokenKind::LParen: {
            ++pos_;
            ExprValue v = parse_expression(allow_vector);
            expect(TokenKind::RParen, "')'");
            return v;
        }
        default:
            fail("expected a value");
    }
    throw ParseError(t.line, t.column, "unreachable");
}

Form ExprParser::parse_form() {
    ExprValue v = parse_expression(false);
    return v.form;
}

Scalar ExprParser::parse_scalar() {
    const Token& at = peek();
    Form f = parse_form();
    if (f.degree() != 0) throw ParseError(at.line, at.column, "expected a scalar expression");
    return f.scalar_value();
}

VectorField ExprParser::parse_vector_field() {
    const Token& at = peek();
    ExprValue v = parse_expression(true);
    if (!v.is_vector) {
        if (v.form.is_zero()) return VectorField{};
        throw ParseError(at.line, at.column, "expected a vector field");
    }
    return v.vector;
}

Matrix ExprParser::parse_matrix() {
    expect(TokenKind::LBracket, "'['");
    std::vector<std::vector<Scalar>> rows;
    while (true) {
        expect(TokenKind::LBracket, "'[' starting a matrix row");
        std::vector<Scalar> row;
        if (peek().kind != TokenKind::RBracket) {
            row.push_back(parse_scalar());
            while (peek().kind == TokenKind::Comma) {
                ++pos_;
                row.push_back(parse_scalar());
            }
        }
        expect(TokenKind::RBracket, "']' ending a matrix row");
        rows.push_back(std::move(row));
        if (peek().kind == TokenKind::Comma) {
            ++pos_;
            continue;
        }
        break;
    }
    expect(TokenKind::RBracket, "']' ending the matrix");
    return Matrix::from_rows(rows);
}

Scalar parse_scalar_expression(const std::string& text, const CoframeModel& model) {
    std::vector<Token> tokens = tokenize(text);
    SymbolTable symbols;
    symbols.model = &model;
    ExprParser p(tokens, 0, symbols);
    Scalar s = p.parse_scalar();
    if (p.peek().kind != TokenKind::End && p.peek().kind != TokenKind::Newline)
        throw ParseError(p.peek().line, p.peek().column, "trailing input");
    return s;
}

Form parse_form_expression(const std::string& text, const CoframeModel& model) {
    std::vector<Token> tokens = tokenize(text);
    SymbolTable symbols;
    symbols.model = &model;
    ExprParser p(tokens, 0, symbols);
    Form f = p.parse_form();
    if (p.peek().kind != TokenKind::End && p.peek().kind != TokenKind::Newline)
        throw ParseError(p.peek().line, p.peek().column, "trailing input");
    return f;
}

}  // namespace twistkit
