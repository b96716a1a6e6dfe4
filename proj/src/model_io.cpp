#include "rht/model_io.hpp"

#include <cctype>
#include <sstream>

namespace rht {

namespace {

struct Token {
    enum class Kind { Name, Number, Star, Plus, Minus, Slash, LParen, RParen, Equals, End };
    Kind kind;
    std::string text;
    int column;
};

class Lexer {
public:
    Lexer(const std::string& line, int line_no) : line_(line), line_no_(line_no) { advance(); }

    const Token& peek() const { return current_; }
    Token take() {
        Token t = current_;
        advance();
        return t;
    }
    int line_no() const { return line_no_; }

private:
    void advance() {
        while (pos_ < line_.size() && std::isspace(static_cast<unsigned char>(line_[pos_]))) ++pos_;
        const int col = static_cast<int>(pos_) + 1;
        if (pos_ >= line_.size() || line_[pos_] == '#') {
            current_ = {Token::Kind::End, "", col};
            return;
        }
        const char c = line_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos_;
            while (pos_ < line_.size() &&
                   (std::isalnum(static_cast<unsigned char>(line_[pos_])) || line_[pos_] == '_'))
                ++pos_;
            current_ = {Token::Kind::Name, line_.substr(start, pos_ - start), col};
            return;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < line_.size() && std::isdigit(static_cast<unsigned char>(line_[pos_]))) ++pos_;
            current_ = {Token::Kind::Number, line_.substr(start, pos_ - start), col};
            return;
        }
        ++pos_;
        switch (c) {
            case '*': current_ = {Token::Kind::Star, "*", col}; return;
            case '+': current_ = {Token::Kind::Plus, "+", col}; return;
            case '-': current_ = {Token::Kind::Minus, "-", col}; return;
            case '/': current_ = {Token::Kind::Slash, "/", col}; return;
            case '(': current_ = {Token::Kind::LParen, "(", col}; return;
            case ')': current_ = {Token::Kind::RParen, ")", col}; return;
            case '=': current_ = {Token::Kind::Equals, "=", col}; return;
            default: throw ParseError(line_no_, col, std::string("unexpected character '") + c + "'");
        }
    }

    std::string line_;
    int line_no_;
    size_t pos_ = 0;
    Token current_{Token::Kind::End, "", 1};
};

class ExprParser {
public:
    ExprParser(Lexer& lex, const Algebra& alg) : lex_(lex), alg_(alg) {}

    Element parse() {
        Element e = expression();
        if (lex_.peek().kind != Token::Kind::End)
            throw ParseError(lex_.line_no(), lex_.peek().column, "trailing input after expression");
        return e;
    }

    Element expression() {
        bool negate = false;
        if (lex_.peek().kind == Token::Kind::Minus) {
            lex_.take();
            negate = true;
        }
        Element acc = term();
        if (negate) acc = -acc;
        while (lex_.peek().kind == Token::Kind::Plus || lex_.peek().kind == Token::Kind::Minus) {
            const bool minus = lex_.take().kind == Token::Kind::Minus;
            Element t = term();
            acc = minus ? acc - t : acc + t;
        }
        return acc;
    }

private:
    Element term() {
        Element acc = factor();
        while (lex_.peek().kind == Token::Kind::Star) {
            lex_.take();
            acc = alg_.multiply(acc, factor());
        }
        return acc;
    }

    Element factor() {
        const Token t = lex_.peek();
        switch (t.kind) {
            case Token::Kind::LParen: {
                lex_.take();
                Element e = expression();
                if (lex_.peek().kind != Token::Kind::RParen)
                    throw ParseError(lex_.line_no(), lex_.peek().column, "expected ')'");
                lex_.take();
                return e;
            }
            case Token::Kind::Number: {
                lex_.take();
                Rational value(t.text);
                if (lex_.peek().kind == Token::Kind::Slash) {
                    lex_.take();
                    const Token d = lex_.take();
                    if (d.kind != Token::Kind::Number)
                        throw ParseError(lex_.line_no(), d.column, "expected denominator");
                    Rational den(d.text);
                    if (den == 0) throw ParseError(lex_.line_no(), d.column, "zero denominator");
                    value /= den;
                }
                return Algebra::unit_element().scaled(value);
            }
            case Token::Kind::Name: {
                lex_.take();
                auto idx = alg_.find(t.text);
                if (!idx)
                    throw ParseError(lex_.line_no(), t.column, "undeclared generator '" + t.text + "'");
                return alg_.generator_element(*idx);
            }
            default:
                throw ParseError(lex_.line_no(), t.column, "expected a factor");
        }
    }

    Lexer& lex_;
    const Algebra& alg_;
};

}  // namespace

ParsedModel parse_model(const std::string& text, bool strict_minimal) {
    std::vector<Generator> gens;
    struct PendingDiff {
        std::string name;
        std::string expr;
        int line;
    };
    std::vector<PendingDiff> pending;

    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        Lexer lex(line, line_no);
        if (lex.peek().kind == Token::Kind::End) continue;
        Token head = lex.take();
        if (head.kind != Token::Kind::Name)
            throw ParseError(line_no, head.column, "expected 'gen' or 'd' directive");
        if (head.text == "gen") {
            Token name = lex.take();
            if (name.kind != Token::Kind::Name)
                throw ParseError(line_no, name.column, "expected generator name");
            Token deg = lex.take();
            if (deg.kind != Token::Kind::Number)
                throw ParseError(line_no, deg.column, "expected generator degree");
            if (lex.peek().kind != Token::Kind::End)
                throw ParseError(line_no, lex.peek().column, "trailing input after gen directive");
            for (const Generator& g : gens)
                if (g.name == name.text)
                    throw ParseError(line_no, name.column, "duplicate generator '" + name.text + "'");
            const int d = std::stoi(deg.text);
            if (d < 1) throw ParseError(line_no, deg.column, "generator degree must be >= 1");
            gens.push_back(Generator{name.text, d});
        } else if (head.text == "d") {
            Token name = lex.take();
            if (name.kind != Token::Kind::Name)
                throw ParseError(line_no, name.column, "expected generator name after 'd'");
            Token eq = lex.take();
            if (eq.kind != Token::Kind::Equals)
                throw ParseError(line_no, eq.column, "expected '='");
            bool declared = false;
            for (const Generator& g : gens) declared = declared || g.name == name.text;
            if (!declared)
                throw ParseError(line_no, name.column, "undeclared generator '" + name.text + "'");
            for (const PendingDiff& p : pending)
                if (p.name == name.text)
                    throw ParseError(line_no, name.column, "duplicate differential for '" + name.text + "'");
            // Remember the raw expression; it is parsed against the full
            // generator list once all declarations are in.
            size_t cut = line.find('=');
            pending.push_back(PendingDiff{name.text, line.substr(cut + 1), line_no});
        } else {
            throw ParseError(line_no, head.column, "unknown directive '" + head.text + "'");
        }
    }

    Algebra alg(gens);
    std::vector<Element> diffs(gens.size());
    std::vector<int> diff_lines(gens.size(), 0);
    for (const PendingDiff& p : pending) {
        Lexer lex(p.expr, p.line);
        ExprParser parser(lex, alg);
        Element e = parser.parse();
        const int idx = *alg.find(p.name);
        diffs[idx] = e;
        diff_lines[idx] = p.line;

        if (!e.is_zero()) {
            auto deg = e.homogeneous_degree();
            if (!deg || *deg != alg.generator(idx).degree + 1)
                throw ParseError(p.line, 1,
                                 "differential of '" + p.name + "' must be homogeneous of degree " +
                                     std::to_string(alg.generator(idx).degree + 1));
        }
    }

    ParsedModel out{Cdga(alg, diffs), {}};
    ValidationReport report = out.model.validate(true);
    for (const ValidationIssue& issue : report.issues) {
        const int idx = *alg.find(issue.generator);
        const int at = diff_lines[idx] ? diff_lines[idx] : 1;
        if (issue.kind == ValidationIssue::Kind::DSquared)
            throw ParseError(at, 1, "d^2 != 0 at generator '" + issue.generator + "': " + issue.detail);
        if (issue.kind == ValidationIssue::Kind::Inhomogeneous)
            throw ParseError(at, 1, "inhomogeneous differential at '" + issue.generator + "'");
        if (issue.kind == ValidationIssue::Kind::NonMinimal) {
            if (strict_minimal)
                throw ParseError(at, 1,
                                 "non-minimal differential at '" + issue.generator + "': " + issue.detail);
            out.warnings.push_back("line " + std::to_string(at) + ": non-minimal differential at '" +
                                   issue.generator + "' (" + issue.detail + ")");
        }
    }
    return out;
}

std::string emit_model(const Cdga& model) {
    std::ostringstream out;
    if (!model.truncation_note().empty()) out << "# " << model.truncation_note() << "\n";
    const Algebra& alg = model.algebra();
    for (int i = 0; i < alg.generator_count(); ++i)
        out << "gen " << alg.generator(i).name << " " << alg.generator(i).degree << "\n";
    for (int i = 0; i < alg.generator_count(); ++i) {
        if (model.diff(i).is_zero()) continue;
        out << "d " << alg.generator(i).name << " = " << alg.format(model.diff(i)) << "\n";
    }
    return out.str();
}

Element parse_expression(const Cdga& model, const std::string& text) {
    Lexer lex(text, 1);
    ExprParser parser(lex, model.algebra());
    return parser.parse();
}

}  // namespace rht
