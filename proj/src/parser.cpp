#include "scurve/parser.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace scurve {

namespace {

struct Token {
    enum class Kind { number, imag, var, plus, minus, star, caret, lparen, rparen, sep, end };
    Kind kind;
    Rational value;  // number
    int var_index = 0;
    int line, col;
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : s_(text) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        while (pos_ < s_.size()) {
            char c = s_[pos_];
            if (c == '#') {
                while (pos_ < s_.size() && s_[pos_] != '\n') advance();
                continue;
            }
            if (c == '\n') {
                out.push_back(tok(Token::Kind::sep));
                advance();
                continue;
            }
            if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
                continue;
            }
            if (std::isdigit(static_cast<unsigned char>(c))) {
                out.push_back(number());
                continue;
            }
            int line = line_, col = col_;
            switch (c) {
                case ';': out.push_back(tok(Token::Kind::sep)); break;
                case '+': out.push_back(tok(Token::Kind::plus)); break;
                case '-': out.push_back(tok(Token::Kind::minus)); break;
                case '*': out.push_back(tok(Token::Kind::star)); break;
                case '^': out.push_back(tok(Token::Kind::caret)); break;
                case '(': out.push_back(tok(Token::Kind::lparen)); break;
                case ')': out.push_back(tok(Token::Kind::rparen)); break;
                case 'i': out.push_back(tok(Token::Kind::imag)); break;
                case 'x': {
                    advance();
                    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
                        throw ParseError("variable needs an index (x1, x2, ...)", line, col);
                    long idx = 0;
                    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                        idx = idx * 10 + (s_[pos_] - '0');
                        if (idx > 1000) throw ParseError("variable index too large", line, col);
                        advance();
                    }
                    if (idx == 0) throw ParseError("variable indices start at 1", line, col);
                    Token t{Token::Kind::var, 0, static_cast<int>(idx), line, col};
                    out.push_back(t);
                    continue;
                }
                case '.':
                    throw ParseError("decimal literals are not supported; use p/q", line, col);
                default:
                    throw ParseError(std::string("unexpected character '") + c + "'", line, col);
            }
            advance();
        }
        out.push_back({Token::Kind::end, 0, 0, line_, col_});
        return out;
    }

private:
    Token tok(Token::Kind k) const { return {k, 0, 0, line_, col_}; }

    void advance() {
        if (s_[pos_] == '\n') { ++line_; col_ = 1; } else { ++col_; }
        ++pos_;
    }

    Token number() {
        int line = line_, col = col_;
        Int num = read_digits();
        if (pos_ < s_.size() && s_[pos_] == '.')
            throw ParseError("decimal literals are not supported; use p/q", line_, col_);
        Rational v(num);
        if (pos_ < s_.size() && s_[pos_] == '/') {
            size_t save = pos_;
            int sl = line_, sc = col_;
            advance();
            if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                Int den = read_digits();
                if (den == 0) throw ParseError("zero denominator", sl, sc);
                v = Rational(num, den);
            } else {
                pos_ = save;  // lone '/' is an error, surfaced by the parser
                line_ = sl;
                col_ = sc;
            }
        }
        return {Token::Kind::number, v, 0, line, col};
    }

    Int read_digits() {
        Int v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = v * 10 + (s_[pos_] - '0');
            advance();
        }
        return v;
    }

    const std::string& s_;
    size_t pos_ = 0;
    int line_ = 1, col_ = 1;
};

class Parser {
public:
    Parser(std::vector<Token> toks, int nvars) : t_(std::move(toks)), n_(nvars) {}

    // expr := ['+'|'-'] term (('+'|'-') term)*
    Polynomial expr() {
        bool neg = false;
        if (peek().kind == Token::Kind::minus) { neg = true; next(); }
        else if (peek().kind == Token::Kind::plus) next();
        Polynomial acc = term();
        if (neg) acc = -acc;
        for (;;) {
            if (peek().kind == Token::Kind::plus) { next(); acc += term(); }
            else if (peek().kind == Token::Kind::minus) { next(); acc -= term(); }
            else break;
        }
        return acc;
    }

    void expect_end() {
        if (peek().kind != Token::Kind::end)
            throw ParseError("expected '+', '-', '*', '^' or end of polynomial",
                             peek().line, peek().col);
    }

private:
    // term := factor ('*' factor)*
    Polynomial term() {
        Polynomial acc = factor();
        while (peek().kind == Token::Kind::star) {
            next();
            acc = acc * factor();
        }
        return acc;
    }

    // factor := atom ['^' ['-'] digits]
    Polynomial factor() {
        Polynomial base = atom();
        if (peek().kind != Token::Kind::caret) return base;
        Token caret = next();
        bool neg = false;
        if (peek().kind == Token::Kind::minus) { neg = true; next(); }
        Token e = next();
        if (e.kind != Token::Kind::number || denominator(e.value) != 1)
            throw ParseError("exponent must be an integer", caret.line, caret.col);
        Int ev = numerator(e.value);
        if (ev > 64) throw ParseError("exponent too large", e.line, e.col);
        long k = ev.convert_to<long>();
        if (!neg) return base.pow(static_cast<unsigned>(k));
        // Negative powers only make sense for single monomials (Laurent terms).
        if (base.term_count() != 1)
            throw ParseError("negative exponent on a non-monomial", caret.line, caret.col);
        const auto& [be, bc] = *base.terms().begin();
        Expt inv(n_, 0);
        for (int i = 0; i < n_; ++i) inv[i] = static_cast<int32_t>(-k * be[i]);
        QC c = bc.exact_value();
        return Polynomial::monomial(n_, inv, Coefficient::exact(qc_pow(c, -k)));
    }

    Polynomial atom() {
        Token t = next();
        switch (t.kind) {
            case Token::Kind::number:
                return Polynomial::constant(n_, Coefficient::exact(QC(t.value)));
            case Token::Kind::imag:
                return Polynomial::constant(n_, Coefficient::exact(QC(0, 1)));
            case Token::Kind::var: {
                Expt e(n_, 0);
                e[t.var_index - 1] = 1;
                return Polynomial::monomial(n_, e, Coefficient::exact(QC(1)));
            }
            case Token::Kind::lparen: {
                Polynomial p = expr();
                Token close = next();
                if (close.kind != Token::Kind::rparen)
                    throw ParseError("expected ')'", close.line, close.col);
                return p;
            }
            default:
                throw ParseError("expected a number, variable, 'i' or '('", t.line, t.col);
        }
    }

    const Token& peek() const { return t_[pos_]; }
    const Token& next() { return t_[pos_++]; }

    std::vector<Token> t_;
    size_t pos_ = 0;
    int n_;
};

std::vector<std::vector<Token>> split_segments(std::vector<Token> toks) {
    std::vector<std::vector<Token>> segs;
    std::vector<Token> cur;
    for (auto& t : toks) {
        if (t.kind == Token::Kind::sep || t.kind == Token::Kind::end) {
            if (!cur.empty()) {
                cur.push_back({Token::Kind::end, 0, 0, t.line, t.col});
                segs.push_back(std::move(cur));
                cur.clear();
            }
        } else {
            cur.push_back(std::move(t));
        }
    }
    return segs;
}

int max_var_index(const std::vector<std::vector<Token>>& segs) {
    int n = 0;
    for (const auto& seg : segs)
        for (const auto& t : seg)
            if (t.kind == Token::Kind::var && t.var_index > n) n = t.var_index;
    return n;
}

}  // namespace

PolynomialSystem parse_system(const std::string& text) {
    auto segs = split_segments(Lexer(text).run());
    PolynomialSystem sys;
    sys.nvars = max_var_index(segs);
    for (auto& seg : segs) {
        Parser p(std::move(seg), sys.nvars);
        Polynomial poly = p.expr();
        p.expect_end();
        sys.polys.push_back(std::move(poly));
    }
    return sys;
}

Polynomial parse_polynomial(const std::string& text) {
    PolynomialSystem sys = parse_system(text);
    if (sys.polys.size() != 1)
        throw ParseError("expected exactly one polynomial", 1, 1);
    return sys.polys[0];
}

PolynomialSystem load_system_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_system(ss.str());
}

}  // namespace scurve
