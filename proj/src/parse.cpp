#include "monogen/polynomial.hpp"

#include <cctype>
#include <map>

namespace monogen {

ParseError::ParseError(std::size_t position, const std::string& what)
    : InputError("parse error at position " + std::to_string(position) + ": " + what), position_(position)
{
}

namespace {

constexpr unsigned long kMaxExponent = 100'000;

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    IntPoly run()
    {
        skip_ws();
        if (at_end())
            throw ParseError(pos_, "empty polynomial");
        bool negative = false;
        if (peek() == '+' || peek() == '-') {
            negative = peek() == '-';
            ++pos_;
        }
        term(negative);
        while (true) {
            skip_ws();
            if (at_end())
                break;
            const char c = peek();
            if (c != '+' && c != '-')
                throw ParseError(pos_, unexpected(c));
            ++pos_;
            term(c == '-');
        }
        std::size_t top = 0;
        for (const auto& [e, c] : terms_)
            top = std::max<std::size_t>(top, e);
        std::vector<Integer> coeffs(top + 1);
        for (const auto& [e, c] : terms_)
            coeffs[e] += c;
        return IntPoly(std::move(coeffs));
    }

private:
    void term(bool negative)
    {
        skip_ws();
        // A literal may carry its own sign right after a binary operator.
        if (!at_end() && (peek() == '+' || peek() == '-')) {
            negative ^= peek() == '-';
            ++pos_;
            skip_ws();
        }
        if (at_end())
            throw ParseError(pos_, "expected a term");
        Integer coeff = 1;
        bool have_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            coeff = digits("coefficient");
            have_coeff = true;
            skip_ws();
            if (!at_end() && (peek() == '.' || peek() == '/'))
                throw ParseError(pos_, "non-integer coefficient");
            if (!at_end() && peek() == '*') {
                ++pos_;
                skip_ws();
                if (at_end() || peek() != 'x')
                    throw ParseError(pos_, "expected 'x' after '*'");
            }
        }
        unsigned long exponent = 0;
        if (!at_end() && peek() == 'x') {
            ++pos_;
            exponent = 1;
            skip_ws();
            if (!at_end() && peek() == '^') {
                ++pos_;
                skip_ws();
                if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
                    throw ParseError(pos_, "expected a non-negative integer exponent");
                const std::size_t start = pos_;
                Integer e = digits("exponent");
                if (e > kMaxExponent)
                    throw ParseError(start, "exponent too large");
                exponent = e.get_ui();
                skip_ws();
                if (!at_end() && peek() == '^')
                    throw ParseError(pos_, "nested powers are not supported");
            }
        } else if (!have_coeff) {
            throw ParseError(pos_, at_end() ? "expected a term" : unexpected(peek()));
        }
        skip_ws();
        if (!at_end() && (peek() == '.' || peek() == '/'))
            throw ParseError(pos_, "non-integer coefficient");
        terms_.emplace_back(exponent, negative ? Integer(-coeff) : coeff);
    }

    Integer digits(const char* what)
    {
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek())))
            ++pos_;
        if (start == pos_)
            throw ParseError(pos_, std::string("expected ") + what);
        return Integer(std::string(text_.substr(start, pos_ - start)));
    }

    static std::string unexpected(char c) { return std::string("unexpected character '") + c + "'"; }

    void skip_ws()
    {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek())))
            ++pos_;
    }
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::vector<std::pair<unsigned long, Integer>> terms_;
};

} // namespace

IntPoly parse_poly(std::string_view text)
{
    return Parser(text).run();
}

} // namespace monogen
