#include "loglie/polynomial.hpp"

#include <cctype>

namespace loglie {

namespace {

class Parser {
public:
    Parser(std::string_view text, const RingPtr& ring) : text_(text), ring_(ring) {}

    Polynomial parse()
    {
        Polynomial p = expr();
        skip_ws();
        if (pos_ != text_.size())
            throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
        return p;
    }

private:
    void skip_ws()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool accept(char c)
    {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Polynomial expr()
    {
        skip_ws();
        bool negate = false;
        if (accept('-'))
            negate = true;
        else
            accept('+');
        Polynomial acc = term();
        if (negate)
            acc = -acc;
        for (;;) {
            if (accept('+'))
                acc += term();
            else if (accept('-'))
                acc -= term();
            else
                return acc;
        }
    }

    Polynomial term()
    {
        Polynomial acc = factor();
        while (accept('*'))
            acc = acc * factor();
        return acc;
    }

    Polynomial factor()
    {
        Polynomial b = base();
        if (accept('^')) {
            skip_ws();
            std::size_t start = pos_;
            Integer e = uint_literal();
            if (e > 1000)
                throw ParseError("exponent too large", start);
            b = b.pow(static_cast<unsigned>(e.get_ui()));
        }
        return b;
    }

    Integer uint_literal()
    {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (start == pos_)
            throw ParseError("expected unsigned integer", start);
        return Integer(std::string(text_.substr(start, pos_ - start)));
    }

    Polynomial base()
    {
        skip_ws();
        if (pos_ >= text_.size())
            throw ParseError("unexpected end of input", pos_);
        char c = text_[pos_];
        if (c == '(') {
            std::size_t open = pos_++;
            Polynomial inner = expr();
            if (!accept(')'))
                throw ParseError("unclosed parenthesis", open);
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Integer num = uint_literal();
            Integer den = 1;
            if (accept('/')) {
                skip_ws();
                std::size_t at = pos_;
                den = uint_literal();
                if (den == 0)
                    throw ParseError("zero denominator", at);
            }
            Rational r(num, den);
            r.canonicalize();
            return Polynomial::constant(ring_, r);
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            std::string_view name = text_.substr(start, pos_ - start);
            auto idx = ring_->index_of(name);
            if (!idx)
                throw ParseError("unknown variable '" + std::string(name) + "'", start);
            return Polynomial::variable(ring_, *idx);
        }
        throw ParseError(std::string("unexpected '") + c + "'", pos_);
    }

    std::string_view text_;
    const RingPtr& ring_;
    std::size_t pos_ = 0;
};

} // namespace

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring)
{
    return Parser(text, ring).parse();
}

} // namespace loglie
