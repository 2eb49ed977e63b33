#include "ncalg/parser.hpp"

#include <cctype>
#include <sstream>

namespace ncalg {

namespace {

enum class Tok { Number, Ident, Plus, Minus, Star, Caret, Slash, LParen, RParen,
                 LBracket, RBracket, Comma, End };

struct Token {
    Tok kind = Tok::End;
    std::string text;
    size_t pos = 0;
};

struct Lexer {
    const std::string &src;
    size_t at = 0;

    explicit Lexer(const std::string &s) : src(s) {}

    Token next() {
        while (at < src.size() && std::isspace(static_cast<unsigned char>(src[at])))
            ++at;
        size_t start = at;
        if (at >= src.size())
            return {Tok::End, "", start};
        unsigned char c = static_cast<unsigned char>(src[at]);
        if (std::isdigit(c)) {
            while (at < src.size() && std::isdigit(static_cast<unsigned char>(src[at])))
                ++at;
            return {Tok::Number, src.substr(start, at - start), start};
        }
        if (std::isalpha(c) || c == '_') {
            while (at < src.size() &&
                   (std::isalnum(static_cast<unsigned char>(src[at])) || src[at] == '_'))
                ++at;
            return {Tok::Ident, src.substr(start, at - start), start};
        }
        // Greek aliases (UTF-8): ζ, ω, θ.
        if (at + 1 < src.size()) {
            unsigned char c2 = static_cast<unsigned char>(src[at + 1]);
            if (c == 0xCE && c2 == 0xB6) { at += 2; return {Tok::Ident, "zeta", start}; }
            if (c == 0xCF && c2 == 0x89) { at += 2; return {Tok::Ident, "omega", start}; }
            if (c == 0xCE && c2 == 0xB8) { at += 2; return {Tok::Ident, "theta", start}; }
        }
        ++at;
        switch (c) {
        case '+': return {Tok::Plus, "+", start};
        case '-': return {Tok::Minus, "-", start};
        case '*': return {Tok::Star, "*", start};
        case '^': return {Tok::Caret, "^", start};
        case '/': return {Tok::Slash, "/", start};
        case '(': return {Tok::LParen, "(", start};
        case ')': return {Tok::RParen, ")", start};
        case '[': return {Tok::LBracket, "[", start};
        case ']': return {Tok::RBracket, "]", start};
        case ',': return {Tok::Comma, ",", start};
        default:
            throw ParseError("unexpected character '" + std::string(1, static_cast<char>(c)) +
                                 "'", start);
        }
    }
};

struct Parser {
    std::vector<Token> toks;
    size_t at = 0;

    explicit Parser(const std::string &text) {
        Lexer lex(text);
        for (;;) {
            Token t = lex.next();
            toks.push_back(t);
            if (t.kind == Tok::End)
                break;
        }
    }

    const Token &peek(size_t ahead = 0) const {
        size_t i = std::min(at + ahead, toks.size() - 1);
        return toks[i];
    }
    Token take() { return toks[at == toks.size() - 1 ? at : at++]; }

    void expect(Tok kind, const char *what) {
        if (peek().kind != kind)
            throw ParseError(std::string("expected ") + what, peek().pos);
        take();
    }

    Expr parse_expr() {
        Expr sum;
        sum.kind = Expr::Kind::Sum;
        sum.pos = peek().pos;
        int sign = 1;
        if (peek().kind == Tok::Minus) {
            take();
            sign = -1;
        }
        sum.children.push_back(parse_term());
        sum.signs.push_back(sign);
        while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
            sign = take().kind == Tok::Plus ? 1 : -1;
            sum.children.push_back(parse_term());
            sum.signs.push_back(sign);
        }
        if (sum.children.size() == 1 && sum.signs[0] == 1)
            return std::move(sum.children[0]);
        return sum;
    }

    Expr parse_term() {
        Expr prod;
        prod.kind = Expr::Kind::Prod;
        prod.pos = peek().pos;
        prod.children.push_back(parse_factor());
        for (;;) {
            if (peek().kind == Tok::Star) {
                take();
                prod.children.push_back(parse_factor());
                continue;
            }
            // Implicit multiplication: only a literal followed by an identifier.
            if (peek().kind == Tok::Ident &&
                prod.children.back().kind == Expr::Kind::Literal) {
                prod.children.push_back(parse_factor());
                continue;
            }
            break;
        }
        if (prod.children.size() == 1)
            return std::move(prod.children[0]);
        return prod;
    }

    Expr parse_factor() {
        Expr atom = parse_atom();
        if (peek().kind == Tok::Caret) {
            size_t caret_pos = take().pos;
            int sign = 1;
            if (peek().kind == Tok::Minus) {
                take();
                sign = -1;
            }
            if (peek().kind != Tok::Number)
                throw ParseError("expected integer exponent", peek().pos);
            Token t = take();
            long long v = 0;
            try {
                v = std::stoll(t.text);
            } catch (...) {
                throw ParseError("exponent out of range", t.pos);
            }
            Expr p;
            p.kind = Expr::Kind::Power;
            p.pos = caret_pos;
            p.exponent = static_cast<int>(sign * v);
            p.children.push_back(std::move(atom));
            return p;
        }
        return atom;
    }

    Expr parse_atom() {
        const Token &t = peek();
        switch (t.kind) {
        case Tok::Number: {
            Token n = take();
            Expr e;
            e.kind = Expr::Kind::Literal;
            e.pos = n.pos;
            Integer numerator(n.text);
            Integer denominator(1);
            if (peek().kind == Tok::Slash && peek(1).kind == Tok::Number) {
                take();
                Token d = take();
                denominator = Integer(d.text);
                if (denominator == 0)
                    throw ParseError("zero denominator", d.pos);
            }
            e.literal = Rational(numerator, denominator);
            return e;
        }
        case Tok::Ident: {
            Token n = take();
            Expr e;
            e.kind = Expr::Kind::Ident;
            e.pos = n.pos;
            e.ident = n.text;
            return e;
        }
        case Tok::LParen: {
            take();
            Expr inner = parse_expr();
            expect(Tok::RParen, "')'");
            return inner;
        }
        case Tok::LBracket: {
            size_t pos = take().pos;
            Expr b;
            b.kind = Expr::Kind::Bracket;
            b.pos = pos;
            b.children.push_back(parse_expr());
            expect(Tok::Comma, "','");
            b.children.push_back(parse_expr());
            expect(Tok::RBracket, "']'");
            return b;
        }
        default:
            throw ParseError("expected an atom", t.pos);
        }
    }
};

WordSum product_of(const WordSum &a, const WordSum &b) {
    WordSum r;
    r.reserve(a.size() * b.size());
    for (const Word &wa : a)
        for (const Word &wb : b) {
            Word w;
            w.coefficient = wa.coefficient * wb.coefficient;
            w.factors = wa.factors;
            w.factors.insert(w.factors.end(), wb.factors.begin(), wb.factors.end());
            r.push_back(std::move(w));
        }
    return r;
}

void negate(WordSum &ws) {
    for (Word &w : ws)
        w.coefficient = -w.coefficient;
}

} // namespace

Expr parse_expression(const std::string &text) {
    Parser p(text);
    Expr e = p.parse_expr();
    if (p.peek().kind != Tok::End)
        throw ParseError("trailing input", p.peek().pos);
    return e;
}

WordSum elaborate_words(const Expr &e, const AlgebraPresentation &pres,
                        const DistinguishedTable *distinguished) {
    switch (e.kind) {
    case Expr::Kind::Literal:
        return {Word{e.literal, {}}};
    case Expr::Kind::Ident: {
        int pos = pres.position_of(e.ident);
        if (pos >= 0)
            return {Word{Rational(1), {{pos, 1}}}};
        if (distinguished) {
            auto it = distinguished->find(e.ident);
            if (it != distinguished->end())
                return words_of_polynomial(it->second, pres);
        }
        throw UnknownGeneratorError("unknown identifier '" + e.ident + "' in algebra " +
                                    pres.name);
    }
    case Expr::Kind::Negate: {
        WordSum ws = elaborate_words(e.children[0], pres, distinguished);
        negate(ws);
        return ws;
    }
    case Expr::Kind::Sum: {
        WordSum ws;
        for (size_t i = 0; i < e.children.size(); ++i) {
            WordSum part = elaborate_words(e.children[i], pres, distinguished);
            if (e.signs[i] < 0)
                negate(part);
            ws.insert(ws.end(), part.begin(), part.end());
        }
        return ws;
    }
    case Expr::Kind::Prod: {
        WordSum ws{Word{Rational(1), {}}};
        for (const Expr &child : e.children)
            ws = product_of(ws, elaborate_words(child, pres, distinguished));
        return ws;
    }
    case Expr::Kind::Bracket: {
        WordSum a = elaborate_words(e.children[0], pres, distinguished);
        WordSum b = elaborate_words(e.children[1], pres, distinguished);
        WordSum ab = product_of(a, b);
        WordSum ba = product_of(b, a);
        negate(ba);
        ab.insert(ab.end(), ba.begin(), ba.end());
        return ab;
    }
    case Expr::Kind::Power: {
        int n = e.exponent;
        if (n == 0)
            return {Word{Rational(1), {}}};
        WordSum base = elaborate_words(e.children[0], pres, distinguished);
        if (n > 0) {
            WordSum ws{Word{Rational(1), {}}};
            for (int i = 0; i < n; ++i)
                ws = product_of(ws, base);
            return ws;
        }
        // Negative power: a bare invertible generator power or a scalar.
        if (base.size() == 1 && base[0].factors.empty()) {
            if (base[0].coefficient == 0)
                throw ParseError("zero to a negative power", e.pos);
            Rational c(1);
            for (int i = 0; i < -n; ++i)
                c /= base[0].coefficient;
            return {Word{c, {}}};
        }
        if (base.size() == 1 && base[0].factors.size() == 1 &&
            base[0].coefficient == 1) {
            WordFactor f = base[0].factors[0];
            if (!pres.is_invertible(f.generator))
                throw NegativeExponentError("negative power of non-invertible '" +
                                            pres.generator(f.generator).name + "'");
            long long total = static_cast<long long>(f.exponent) * n;
            if (total > INT16_MAX || total < INT16_MIN)
                throw ExponentOverflowError("exponent overflow in power");
            return {Word{Rational(1), {{f.generator, static_cast<int>(total)}}}};
        }
        throw NegativeExponentError("negative power of a non-generator expression");
    }
    }
    throw Error("unreachable expression kind");
}

NcPolynomial parse_polynomial(const std::string &text, const AlgebraPresentation &pres,
                              const DistinguishedTable *distinguished) {
    Expr e = parse_expression(text);
    return normal_form(elaborate_words(e, pres, distinguished), pres);
}

std::string format_monomial(const Monomial &m, const AlgebraPresentation &pres) {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < pres.generator_count(); ++i) {
        int e = m.exponent(i);
        if (e == 0)
            continue;
        if (!first)
            os << "*";
        os << pres.generator(i).name;
        if (e != 1)
            os << "^" << e;
        first = false;
    }
    if (first)
        os << "1";
    return os.str();
}

std::string format_polynomial(const NcPolynomial &p, const AlgebraPresentation &pres) {
    if (p.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto &[m, c] : sorted_terms(p)) {
        Rational a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0)
                a = -a;
        }
        if (m.is_identity()) {
            os << to_string(a);
        } else {
            if (a != 1)
                os << to_string(a) << "*";
            os << format_monomial(m, pres);
        }
        first = false;
    }
    return os.str();
}

} // namespace ncalg
