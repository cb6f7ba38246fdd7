#include "twistkit/modelfile.hpp"

#include <sstream>

#include "twistkit/checks.hpp"
#include "twistkit/errors.hpp"
#include "twistkit/expr.hpp"
#include "twistkit/quaternionic.hpp"

namespace twistkit {

const AlmostComplexStructure& ModelFile::complex_structure(const std::string& name) const {
    for (const auto& [n, v] : complexes) {
        if (n == name) return v;
    }
    throw UnknownName("unknown complex structure '" + name + "'");
}

const HermitianMetric& ModelFile::metric(const std::string& name) const {
    for (const auto& [n, v] : metrics) {
        if (n == name) return v;
    }
    throw UnknownName("unknown metric '" + name + "'");
}

const std::array<std::string, 3>& ModelFile::triple(const std::string& name) const {
    for (const auto& [n, v] : triples) {
        if (n == name) return v;
    }
    throw UnknownName("unknown hypercomplex triple '" + name + "'");
}

const Form& ModelFile::named_form(const std::string& name) const {
    for (const auto& [n, v] : forms) {
        if (n == name) return v;
    }
    throw UnknownName("unknown form '" + name + "'");
}

bool operator==(const ModelFile& a, const ModelFile& b) {
    auto model_eq = [](const CoframeModel& x, const CoframeModel& y) {
        return x.coframe_names == y.coframe_names && x.coordinates == y.coordinates &&
               x.structure == y.structure && x.coordinate_differentials == y.coordinate_differentials;
    };
    if (!model_eq(a.model, b.model)) return false;
    if (a.complexes.size() != b.complexes.size() || a.metrics.size() != b.metrics.size())
        return false;
    for (size_t k = 0; k < a.complexes.size(); ++k) {
        if (a.complexes[k].first != b.complexes[k].first ||
            a.complexes[k].second.matrix() != b.complexes[k].second.matrix())
            return false;
    }
    for (size_t k = 0; k < a.metrics.size(); ++k) {
        if (a.metrics[k].first != b.metrics[k].first ||
            a.metrics[k].second.matrix() != b.metrics[k].second.matrix())
            return false;
    }
    if (a.triples != b.triples || a.forms != b.forms || a.checks != b.checks) return false;
    if (a.twist.has_value() != b.twist.has_value()) return false;
    if (a.twist) {
        if (a.twist->xi != b.twist->xi || a.twist->F != b.twist->F || a.twist->a != b.twist->a)
            return false;
    }
    return true;
}

namespace {

class FileParser {
public:
    explicit FileParser(const std::string& text) : tokens_(tokenize(text)) {}

    ModelFile parse() {
        skip_newlines();
        while (peek().kind != TokenKind::End) {
            Token header = expect_ident("a section header");
            end_line();
            if (header.text == "MODEL") parse_model_section();
            else if (header.text == "STRUCTURE") parse_structure_section();
            else if (header.text == "TWIST") parse_twist_section();
            else if (header.text == "CHECKS") parse_checks_section();
            else throw ParseError(header.line, header.column,
                                  "unknown section '" + header.text + "'");
        }
        finalize();
        return std::move(file_);
    }

private:
    const Token& peek() const { return tokens_[pos_]; }

    void skip_newlines() {
        while (peek().kind == TokenKind::Newline) ++pos_;
    }

    void end_line() {
        if (peek().kind == TokenKind::Newline || peek().kind == TokenKind::End) {
            skip_newlines();
            return;
        }
        throw ParseError(peek().line, peek().column, "expected end of line");
    }

    Token expect_ident(const std::string& what) {
        if (peek().kind != TokenKind::Ident)
            throw ParseError(peek().line, peek().column, "expected " + what);
        return tokens_[pos_++];
    }

    void expect_equals() {
        if (peek().kind != TokenKind::Equals)
            throw ParseError(peek().line, peek().column, "expected '='");
        ++pos_;
    }

    bool at_section_end() const {
        if (peek().kind != TokenKind::Ident) return peek().kind == TokenKind::End;
        const std::string& t = peek().text;
        return t == "MODEL" || t == "STRUCTURE" || t == "TWIST" || t == "CHECKS";
    }

    SymbolTable symbols() const {
        SymbolTable s;
        s.model = &file_.model;
        for (const auto& [name, f] : file_.forms) s.named_forms[name] = f;
        return s;
    }

    Form parse_form_here(int expected_degree, const char* what) {
        Token at = peek();
        SymbolTable syms = symbols();
        ExprParser p(tokens_, pos_, syms);
        Form f = p.parse_form();
        pos_ = p.position();
        if (!f.is_zero() && expected_degree >= 0 && f.degree() != expected_degree)
            throw ParseError(at.line, at.column,
                             std::string(what) + " must have degree " +
                                 std::to_string(expected_degree));
        if (f.is_zero() && expected_degree >= 0) return Form(expected_degree);
        return f;
    }

    void parse_model_section() {
        while (!at_section_end()) {
            Token kw = expect_ident("a model statement");
            if (kw.text == "coframe") {
                if (!file_.model.coframe_names.empty())
                    throw ParseError(kw.line, kw.column, "duplicate coframe declaration");
                while (peek().kind == TokenKind::Ident) {
                    file_.model.coframe_names.push_back(tokens_[pos_++].text);
                }
                if (file_.model.coframe_names.empty())
                    throw ParseError(kw.line, kw.column, "empty coframe");
                file_.model.structure.assign(file_.model.coframe_names.size(), Form(2));
            } else if (kw.text == "coordinates") {
                while (peek().kind == TokenKind::Ident) {
                    file_.model.coordinates.push_back(tokens_[pos_++].text);
                }
                file_.model.coordinate_differentials.assign(file_.model.coordinates.size(),
                                                            Form(1));
            } else if (kw.text == "d") {
                Token name = expect_ident("a coframe name after 'd'");
                int idx;
                try {
                    idx = file_.model.coframe_index(name.text);
                } catch (const UnknownName& e) {
                    throw ParseError(name.line, name.column, e.what());
                }
                expect_equals();
                file_.model.structure[static_cast<size_t>(idx)] =
                    parse_form_here(2, "a structure equation");
            } else if (kw.text == "dx") {
                Token name = expect_ident("a coordinate name after 'dx'");
                int idx;
                try {
                    idx = file_.model.coordinate_index(name.text);
                } catch (const UnknownName& e) {
                    throw ParseError(name.line, name.column, e.what());
                }
                expect_equals();
                file_.model.coordinate_differentials[static_cast<size_t>(idx)] =
                    parse_form_here(1, "a coordinate differential");
            } else {
                throw ParseError(kw.line, kw.column, "unknown model statement '" + kw.text + "'");
            }
            end_line();
        }
    }

    Matrix parse_matrix_here() {
        SymbolTable syms = symbols();
        ExprParser p(tokens_, pos_, syms);
        Matrix m = p.parse_matrix();
        pos_ = p.position();
        return m;
    }

    void parse_structure_section() {
        while (!at_section_end()) {
            Token kw = expect_ident("a structure statement");
            if (kw.text == "complex") {
                Token name = expect_ident("a structure name");
                expect_equals();
                Matrix m = parse_matrix_here();
                try {
                    file_.complexes.emplace_back(name.text, AlmostComplexStructure(m));
                } catch (const Error& e) {
                    throw ParseError(name.line, name.column, e.what());
                }
            } else if (kw.text == "metric") {
                Token name = expect_ident("a metric name");
                expect_equals();
                Matrix m = parse_matrix_here();
                try {
                    file_.metrics.emplace_back(name.text, HermitianMetric(m));
                } catch (const Error& e) {
                    throw ParseError(name.line, name.column, e.what());
                }
            } else if (kw.text == "hypercomplex") {
                Token name = expect_ident("a triple name");
                expect_equals();
                Token i = expect_ident("a complex-structure name");
                Token j = expect_ident("a complex-structure name");
                Token k = expect_ident("a complex-structure name");
                try {
                    HypercomplexTriple probe(file_.complex_structure(i.text),
                                             file_.complex_structure(j.text),
                                             file_.complex_structure(k.text));
                    file_.triples.emplace_back(
                        name.text, std::array<std::string, 3>{i.text, j.text, k.text});
                } catch (const Error& e) {
                    throw ParseError(name.line, name.column, e.what());
                }
            } else if (kw.text == "form") {
                Token name = expect_ident("a form name");
                expect_equals();
                file_.forms.emplace_back(name.text, parse_form_here(-1, "a form"));
            } else {
                throw ParseError(kw.line, kw.column,
                                 "unknown structure statement '" + kw.text + "'");
            }
            end_line();
        }
    }

    void parse_twist_section() {
        TwistData data;
        bool have_xi = false, have_f = false, have_a = false;
        while (!at_section_end()) {
            Token kw = expect_ident("a twist statement");
            expect_equals();
            if (kw.text == "xi") {
                have_xi = true;
                SymbolTable syms = symbols();
                while (true) {
                    ExprParser p(tokens_, pos_, syms);
                    data.xi.push_back(p.parse_vector_field());
                    pos_ = p.position();
                    if (peek().kind == TokenKind::Comma) {
                        ++pos_;
                        continue;
                    }
                    break;
                }
            } else if (kw.text == "F") {
                have_f = true;
                while (true) {
                    data.F.push_back(parse_form_here(2, "a curvature form"));
                    if (peek().kind == TokenKind::Comma) {
                        ++pos_;
                        continue;
                    }
                    break;
                }
            } else if (kw.text == "a") {
                have_a = true;
                Token at = peek();
                data.a = parse_matrix_here();
                if (data.a.rows() != data.a.cols())
                    throw ParseError(at.line, at.column, "lifting matrix a must be square");
            } else {
                throw ParseError(kw.line, kw.column, "unknown twist statement '" + kw.text + "'");
            }
            end_line();
        }
        if (!(have_xi && have_f && have_a))
            throw ParseError(peek().line, peek().column,
                             "TWIST section needs xi, F and a");
        if (data.F.size() != data.xi.size() || data.a.rows() != data.xi.size())
            throw ParseError(peek().line, peek().column,
                             "twist data sizes disagree (xi, F, a must share rank)");
        file_.twist = std::move(data);
    }

    void parse_checks_section() {
        while (!at_section_end()) {
            Token kw = expect_ident("a check name");
            CheckInvocation inv;
            inv.name = kw.text;
            while (peek().kind == TokenKind::Ident || peek().kind == TokenKind::Integer) {
                inv.args.push_back(tokens_[pos_++].text);
            }
            std::string problem = validate_check_invocation(file_, inv);
            if (!problem.empty()) throw ParseError(kw.line, kw.column, problem);
            file_.checks.push_back(std::move(inv));
            end_line();
        }
    }

    void finalize() {
        if (file_.model.coframe_names.empty())
            throw ParseError(1, 1, "missing MODEL section with a coframe");
    }

    std::vector<Token> tokens_;
    size_t pos_ = 0;
    ModelFile file_;
};

}  // namespace

ModelFile parse_model_file(const std::string& text) { return FileParser(text).parse(); }

std::string print_model_file(const ModelFile& f) {
    std::ostringstream os;
    const auto& names = f.model.coframe_names;
    os << "MODEL\n";
    os << "  coframe";
    for (const auto& n : names) os << " " << n;
    os << "\n";
    if (!f.model.coordinates.empty()) {
        os << "  coordinates";
        for (const auto& c : f.model.coordinates) os << " " << c;
        os << "\n";
    }
    for (size_t k = 0; k < names.size(); ++k) {
        if (!f.model.structure[k].is_zero())
            os << "  d " << names[k] << " = " << f.model.structure[k].str(names) << "\n";
    }
    for (size_t j = 0; j < f.model.coordinates.size(); ++j) {
        os << "  dx " << f.model.coordinates[j] << " = "
           << f.model.coordinate_differentials[j].str(names) << "\n";
    }
    if (!f.complexes.empty() || !f.metrics.empty() || !f.triples.empty() || !f.forms.empty()) {
        os << "STRUCTURE\n";
        for (const auto& [n, v] : f.complexes) os << "  complex " << n << " = " << v.matrix().str() << "\n";
        for (const auto& [n, v] : f.metrics) os << "  metric " << n << " = " << v.matrix().str() << "\n";
        for (const auto& [n, v] : f.triples)
            os << "  hypercomplex " << n << " = " << v[0] << " " << v[1] << " " << v[2] << "\n";
        for (const auto& [n, v] : f.forms) os << "  form " << n << " = " << v.str(names) << "\n";
    }
    if (f.twist) {
        os << "TWIST\n";
        os << "  xi =";
        for (size_t k = 0; k < f.twist->xi.size(); ++k) {
            os << (k ? ", " : " ") << f.twist->xi[k].str(names);
        }
        os << "\n  F =";
        for (size_t k = 0; k < f.twist->F.size(); ++k) {
            os << (k ? ", " : " ") << f.twist->F[k].str(names);
        }
        os << "\n  a = " << f.twist->a.str() << "\n";
    }
    if (!f.checks.empty()) {
        os << "CHECKS\n";
        for (const auto& c : f.checks) {
            os << "  " << c.name;
            for (const auto& a : c.args) os << " " << a;
            os << "\n";
        }
    }
    return os.str();
}

}  // namespace twistkit
