#include "irrcert/poly_text.hpp"

#include <cctype>
#include <map>

namespace irrcert {

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::runtime_error(message + " at position " + std::to_string(position)), position_(position)
{
}

namespace {

class Lexer {
public:
    explicit Lexer(std::string_view s) : s_(s) {}

    void skip_ws()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }
    bool done()
    {
        skip_ws();
        return pos_ >= s_.size();
    }
    char peek()
    {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    bool accept(char c)
    {
        if (peek() != c)
            return false;
        ++pos_;
        return true;
    }
    void expect(char c, const char* what)
    {
        if (!accept(c))
            fail(std::string("expected ") + what);
    }
    std::string digits()
    {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
        if (start == pos_)
            fail("expected a decimal number");
        return std::string(s_.substr(start, pos_ - start));
    }
    [[noreturn]] void fail(const std::string& msg)
    {
        skip_ws();
        std::string found = pos_ < s_.size() ? std::string("'") + s_[pos_] + "'" : "end of input";
        throw ParseError(msg + ", found " + found, pos_);
    }
    std::size_t pos() const { return pos_; }

private:
    std::string_view s_;
    std::size_t pos_ = 0;
};

std::size_t parse_exponent(Lexer& lx)
{
    std::size_t at = (lx.skip_ws(), lx.pos());
    std::string e = lx.digits();
    Integer v(e);
    if (v > kMaxParsedExponent)
        throw ParseError("exponent " + e + " exceeds limit " + std::to_string(kMaxParsedExponent), at);
    return v.get_ui();
}

// After 'x': optional "^e".
std::size_t parse_power(Lexer& lx)
{
    if (lx.accept('^'))
        return parse_exponent(lx);
    return 1;
}

}  // namespace

Polynomial parse_polynomial(std::string_view text)
{
    Lexer lx(text);
    if (lx.done())
        throw ParseError("empty polynomial", 0);

    std::map<std::size_t, Integer> terms;
    bool first = true;
    while (!lx.done()) {
        int sign = 1;
        if (lx.accept('-'))
            sign = -1;
        else if (!lx.accept('+') && !first)
            lx.fail("expected '+' or '-' between terms");
        first = false;

        Integer c = 1;
        std::size_t e = 0;
        char ch = lx.peek();
        if (ch == 'x') {
            lx.accept('x');
            e = parse_power(lx);
        } else if (std::isdigit(static_cast<unsigned char>(ch))) {
            c = Integer(lx.digits());
            if (lx.accept('*')) {
                lx.expect('x', "'x'");
                e = parse_power(lx);
            }
        } else {
            lx.fail("expected a coefficient or 'x'");
        }
        terms[e] += sign * c;
    }

    std::vector<Integer> coeffs(terms.rbegin()->first + 1, Integer(0));
    for (auto& [e, c] : terms)
        coeffs[e] = c;
    return Polynomial(std::move(coeffs));
}

std::string to_string(const Polynomial& f)
{
    if (f.is_zero())
        return "0";
    std::string out;
    for (std::size_t i = f.size(); i-- > 0;) {
        const Integer& c = f[i];
        if (c == 0)
            continue;
        const bool neg = c < 0;
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        const Integer mag = abs(c);
        if (i == 0) {
            out += mag.get_str();
            continue;
        }
        if (mag != 1)
            out += mag.get_str() + "*";
        out += "x";
        if (i > 1)
            out += "^" + std::to_string(i);
    }
    return out;
}

Integer parse_integer(std::string_view text)
{
    std::size_t i = 0;
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
        ++i;
    std::size_t start = i;
    if (i < text.size() && (text[i] == '-' || text[i] == '+'))
        ++i;
    std::size_t digits_at = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        ++i;
    if (i == digits_at)
        throw ParseError("expected a decimal integer", digits_at);
    std::size_t end = i;
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
        ++i;
    if (i != text.size())
        throw ParseError("trailing characters after integer", i);
    std::string s(text.substr(start, end - start));
    if (s[0] == '+')
        s.erase(0, 1);
    return Integer(s);
}

}  // namespace irrcert
