#include "algderiv/parse.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

namespace algderiv {

std::string ParseError::code_for(Kind kind) {
    switch (kind) {
        case Kind::Syntax: return "parse-syntax";
        case Kind::UnknownVariable: return "unknown-variable";
        case Kind::NegativeExponent: return "negative-exponent";
    }
    return "parse-syntax";
}

ParseError::ParseError(Kind kind, std::size_t position, const std::string& what)
    : Error(code_for(kind), what + " at position " + std::to_string(position)),
      kind_(kind),
      position_(position) {}

namespace {

struct Token {
    enum class Type { Number, Ident, Plus, Minus, Star, Caret, Slash, LParen, RParen, End };
    Type type;
    std::string text;
    std::size_t pos; // 1-based column of the first character
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) { advance(); }

    const Token& peek() const { return current_; }
    Token take() {
        Token t = current_;
        advance();
        return t;
    }

private:
    void advance() {
        while (i_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[i_]))) ++i_;
        std::size_t pos = i_ + 1;
        if (i_ >= text_.size()) {
            current_ = {Token::Type::End, "", pos};
            return;
        }
        char c = text_[i_];
        auto single = [&](Token::Type t) {
            ++i_;
            current_ = {t, std::string(1, c), pos};
        };
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = i_;
            while (i_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i_]))) ++i_;
            current_ = {Token::Type::Number, std::string(text_.substr(start, i_ - start)), pos};
            return;
        }
        if (std::islower(static_cast<unsigned char>(c))) {
            std::size_t start = i_;
            while (i_ < text_.size() &&
                   (std::islower(static_cast<unsigned char>(text_[i_])) ||
                    std::isdigit(static_cast<unsigned char>(text_[i_]))))
                ++i_;
            current_ = {Token::Type::Ident, std::string(text_.substr(start, i_ - start)), pos};
            return;
        }
        switch (c) {
            case '+': return single(Token::Type::Plus);
            case '-': return single(Token::Type::Minus);
            case '*': return single(Token::Type::Star);
            case '^': return single(Token::Type::Caret);
            case '/': return single(Token::Type::Slash);
            case '(': return single(Token::Type::LParen);
            case ')': return single(Token::Type::RParen);
            default:
                throw ParseError(ParseError::Kind::Syntax, pos,
                                 std::string("unexpected character '") + c + "'");
        }
    }

    std::string_view text_;
    std::size_t i_ = 0;
    Token current_{Token::Type::End, "", 1};
};

class Parser {
public:
    Parser(std::string_view text, RingPtr ring) : lex_(text), ring_(std::move(ring)) {}

    Poly parse() {
        Poly p = expr();
        const Token& t = lex_.peek();
        if (t.type != Token::Type::End)
            throw ParseError(ParseError::Kind::Syntax, t.pos,
                             "unexpected trailing input '" + t.text + "'");
        return p;
    }

private:
    Poly expr() {
        Poly acc = term();
        while (true) {
            const Token& t = lex_.peek();
            if (t.type == Token::Type::Plus) {
                lex_.take();
                acc += term();
            } else if (t.type == Token::Type::Minus) {
                lex_.take();
                acc -= term();
            } else {
                return acc;
            }
        }
    }

    Poly term() {
        Poly acc = factor();
        while (lex_.peek().type == Token::Type::Star) {
            lex_.take();
            acc = acc * factor();
        }
        return acc;
    }

    Poly factor() {
        Poly b = base();
        if (lex_.peek().type != Token::Type::Caret) return b;
        lex_.take();
        const Token& t = lex_.peek();
        if (t.type == Token::Type::Minus)
            throw ParseError(ParseError::Kind::NegativeExponent, t.pos,
                             "negative exponent");
        if (t.type != Token::Type::Number)
            throw ParseError(ParseError::Kind::Syntax, t.pos,
                             "expected a non-negative integer exponent");
        Token num = lex_.take();
        unsigned long e = 0;
        try {
            std::size_t used = 0;
            e = std::stoul(num.text, &used);
            if (used != num.text.size()) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw ParseError(ParseError::Kind::Syntax, num.pos, "exponent out of range");
        }
        return b.pow(static_cast<unsigned>(e));
    }

    Poly base() {
        Token t = lex_.peek();
        switch (t.type) {
            case Token::Type::Minus: {
                // A sign is only valid when it starts a rational literal.
                lex_.take();
                const Token& n = lex_.peek();
                if (n.type != Token::Type::Number)
                    throw ParseError(ParseError::Kind::Syntax, n.pos,
                                     "expected a number after '-'");
                return rational_tail(true);
            }
            case Token::Type::Number:
                return rational_tail(false);
            case Token::Type::Ident: {
                lex_.take();
                auto index = ring_->index_of(t.text);
                if (!index)
                    throw ParseError(ParseError::Kind::UnknownVariable, t.pos,
                                     "unknown variable '" + t.text + "'");
                return Poly::variable(ring_, *index);
            }
            case Token::Type::LParen: {
                lex_.take();
                Poly inner = expr();
                const Token& close = lex_.peek();
                if (close.type != Token::Type::RParen)
                    throw ParseError(ParseError::Kind::Syntax, close.pos, "expected ')'");
                lex_.take();
                return inner;
            }
            default:
                throw ParseError(ParseError::Kind::Syntax, t.pos,
                                 "expected a number, variable or '('");
        }
    }

    Poly rational_tail(bool negative) {
        Token num = lex_.take();
        // Base fixed to 10: gmp's auto-detection would read a leading
        // zero as an octal prefix.
        mpz_class n(num.text, 10);
        if (negative) n = -n;
        mpz_class d(1);
        if (lex_.peek().type == Token::Type::Slash) {
            lex_.take();
            const Token& dt = lex_.peek();
            if (dt.type != Token::Type::Number)
                throw ParseError(ParseError::Kind::Syntax, dt.pos,
                                 "expected a positive integer denominator");
            Token den = lex_.take();
            d = mpz_class(den.text, 10);
            if (d == 0)
                throw ParseError(ParseError::Kind::Syntax, den.pos, "zero denominator");
        }
        return Poly::constant(ring_, Rational(n, d));
    }

    Lexer lex_;
    RingPtr ring_;
};

void format_term(std::ostream& os, const Ring& ring, const Monomial& m, const Rational& coeff,
                 bool leading) {
    Rational c = coeff;
    if (!leading) {
        os << (c.sign() < 0 ? " - " : " + ");
        c = c.abs();
    }
    // The leading term keeps its sign inside the numeral so the output
    // stays within the grammar (no unary minus).
    if (m.is_constant()) {
        os << c.str();
        return;
    }
    if (!c.is_one()) os << c.str() << "*";
    bool first = true;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (!first) os << "*";
        os << ring.var(i);
        if (m[i] > 1) os << "^" << m[i];
        first = false;
    }
}

} // namespace

Poly parse_poly(std::string_view text, const RingPtr& ring) {
    if (!ring) throw DomainError("parse_poly requires a ring");
    return Parser(text, ring).parse();
}

std::string format_poly(const Poly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool leading = true;
    const auto& terms = p.terms();
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        format_term(os, *p.ring(), it->first, it->second, leading);
        leading = false;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << format_poly(p); }

Eigenvalue parse_weight_expr(std::string_view text, const WeightSymbolsPtr& symbols) {
    std::vector<std::string> names = symbols ? *symbols : std::vector<std::string>{};
    RingPtr symbol_ring = make_ring(names);
    Poly p = parse_poly(text, symbol_ring);
    if (p.total_degree() > 1)
        throw DomainError("weight expression must be linear in the weight symbols");
    Rational constant = p.constant_coeff();
    std::vector<Rational> coords(names.size(), Rational(0));
    for (const auto& [m, c] : p.terms()) {
        if (m.is_constant()) continue;
        for (std::size_t i = 0; i < names.size(); ++i)
            if (m[i] == 1) coords[i] = c;
    }
    return Eigenvalue(constant, std::move(coords), symbols);
}

} // namespace algderiv
