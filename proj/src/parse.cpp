#include "superq/parse.hpp"

#include <cctype>

namespace superq {

namespace {

class Parser {
public:
    Parser(const PresentationPtr& pres, std::string_view text) : pres_(pres), text_(text) {}

    Polynomial run()
    {
        auto p = expr();
        skip();
        if (pos_ != text_.size())
            throw ParseError("unexpected character '" + std::string(1, text_[pos_]) + "'", pos_);
        return p;
    }

private:
    void skip()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool accept(char c)
    {
        skip();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    std::string digits()
    {
        skip();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (start == pos_)
            throw ParseError("expected integer", pos_);
        return std::string(text_.substr(start, pos_ - start));
    }

    Polynomial expr()
    {
        Polynomial result(pres_);
        bool negate = false;
        if (accept('-'))
            negate = true;
        else
            accept('+');
        for (;;) {
            auto t = term();
            result += negate ? -t : t;
            if (accept('+'))
                negate = false;
            else if (accept('-'))
                negate = true;
            else
                break;
        }
        return result;
    }

    Polynomial term()
    {
        auto p = factor();
        while (accept('*'))
            p = p * factor();
        return p;
    }

    Polynomial factor()
    {
        skip();
        if (pos_ >= text_.size())
            throw ParseError("unexpected end of input", pos_);
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            auto p = expr();
            if (!accept(')'))
                throw ParseError("expected ')'", pos_);
            return maybe_power(p);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Scalar v{mpz_class(digits())};
            if (accept('/')) {
                std::size_t at = pos_;
                mpz_class den(digits());
                if (den == 0)
                    throw ParseError("zero denominator", at);
                v /= Scalar(den);
            }
            return Polynomial::constant(pres_, v);
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < text_.size()
                   && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'
                       || text_[pos_] == '\''))
                ++pos_;
            std::string name(text_.substr(start, pos_ - start));
            if (!pres_->index_of(name))
                throw ParseError("unknown generator '" + name + "'", start);
            return maybe_power(Polynomial::variable(pres_, name));
        }
        throw ParseError("unexpected character '" + std::string(1, c) + "'", pos_);
    }

    Polynomial maybe_power(Polynomial p)
    {
        if (!accept('^'))
            return p;
        auto e = std::stoul(digits());
        return p.pow(static_cast<unsigned>(e));
    }

    const PresentationPtr& pres_;
    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const PresentationPtr& pres, std::string_view text)
{
    return Parser(pres, text).run();
}

}  // namespace superq
