#include "extverts/expr.hpp"

#include <cctype>
#include <string>

namespace extverts {

namespace {

class parser {
public:
    explicit parser(std::string_view text) : text_(text) {}

    ratfun parse()
    {
        ratfun r = expr();
        skip_ws();
        if (pos_ != text_.size())
            fail("unexpected character");
        return r;
    }

private:
    [[noreturn]] void fail(const std::string& what) const
    {
        throw algebra_error("parse error at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "': " + what);
    }

    void skip_ws()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool accept(std::string_view token)
    {
        skip_ws();
        if (text_.substr(pos_, token.size()) == token) {
            pos_ += token.size();
            return true;
        }
        return false;
    }

    ratfun expr()
    {
        ratfun acc;
        bool negate = false;
        if (accept("-"))
            negate = true;
        else
            accept("+");
        acc = product();
        if (negate)
            acc = -acc;
        for (;;) {
            if (accept("+"))
                acc += product();
            else if (accept("-"))
                acc -= product();
            else
                return acc;
        }
    }

    ratfun product()
    {
        ratfun acc = unary();
        for (;;) {
            if (accept("*") || accept("·"))
                acc *= unary();
            else if (accept("/"))
                acc /= unary();
            else
                return acc;
        }
    }

    ratfun unary()
    {
        if (accept("-"))
            return -unary();
        return power();
    }

    ratfun power()
    {
        ratfun base = atom();
        if (accept("^")) {
            bool negative = accept("-");
            skip_ws();
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            if (start == pos_)
                fail("expected integer exponent");
            int e = std::stoi(std::string(text_.substr(start, pos_ - start)));
            return base.pow(negative ? -e : e);
        }
        return base;
    }

    static bool ident_char(char c)
    {
        auto u = static_cast<unsigned char>(c);
        return std::isalnum(u) || c == '_' || u >= 0x80;
    }

    ratfun atom()
    {
        skip_ws();
        if (pos_ >= text_.size())
            fail("unexpected end of input");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            ratfun r = expr();
            if (!accept(")"))
                fail("expected ')'");
            return r;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            return ratfun(parse_rational(text_.substr(start, pos_ - start)));
        }
        if (ident_char(c)) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && ident_char(text_[pos_]))
                ++pos_;
            auto name = text_.substr(start, pos_ - start);
            auto v = var_from_name(name);
            if (!v) {
                pos_ = start;
                fail("unknown variable '" + std::string(name) + "'");
            }
            return ratfun::variable(*v);
        }
        fail("unexpected character");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

ratfun parse_ratfun(std::string_view text)
{
    return parser(text).parse();
}

} // namespace extverts
