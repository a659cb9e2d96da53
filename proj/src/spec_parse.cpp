#include "qcyclo/spec_parse.hpp"

#include "qcyclo/errors.hpp"

#include <cctype>
#include <cstdlib>

namespace qcyclo {

namespace {

struct Cursor {
    const std::string& text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }

    bool done() {
        skip_ws();
        return pos >= text.size();
    }

    void expect(char c) {
        skip_ws();
        if (pos >= text.size() || text[pos] != c)
            throw parse_error(std::string("expected '") + c + "'", pos);
        ++pos;
    }

    long integer() {
        skip_ws();
        std::size_t start = pos;
        if (pos < text.size() && (text[pos] == '+' || text[pos] == '-'))
            ++pos;
        std::size_t digits = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (pos == digits)
            throw parse_error("expected an integer", start);
        errno = 0;
        long value = std::strtol(text.c_str() + start, nullptr, 10);
        if (errno == ERANGE)
            throw parse_error("integer out of range", start);
        return value;
    }
};

bool is_empty_marker(const std::string& text) {
    std::size_t i = 0;
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
        ++i;
    if (i >= text.size() || text[i] != '-')
        return false;
    ++i;
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
        ++i;
    return i == text.size();
}

} // namespace

std::vector<PochParams> parse_pairs(const std::string& text) {
    std::vector<PochParams> out;
    if (is_empty_marker(text))
        return out;
    Cursor c{text};
    while (!c.done()) {
        c.expect('(');
        long r = c.integer();
        c.expect(',');
        c.skip_ws();
        std::size_t s_pos = c.pos;
        long s = c.integer();
        c.expect(')');
        if (s == 0)
            throw zero_modulus("modulus s must be non-zero (at position " + std::to_string(s_pos) +
                               ")");
        out.emplace_back(r, s);
    }
    if (out.empty())
        throw parse_error("expected '(r,s)' pairs or '-'", 0);
    return out;
}

HypergeomSpec parse_spec(const std::string& num_text, const std::string& den_text) {
    return HypergeomSpec(parse_pairs(num_text), parse_pairs(den_text));
}

Rational parse_rational(const std::string& text) {
    Cursor c{text};
    long num = c.integer();
    c.skip_ws();
    if (c.pos < text.size() && text[c.pos] == '/') {
        ++c.pos;
        std::size_t den_pos = c.pos;
        long den = c.integer();
        if (!c.done())
            throw parse_error("trailing characters after rational", c.pos);
        if (den == 0)
            throw parse_error("zero denominator", den_pos);
        return Rational(num, den);
    }
    if (!c.done())
        throw parse_error("trailing characters after integer", c.pos);
    return Rational(num);
}

std::vector<Rational> parse_rationals(const std::string& text) {
    std::vector<Rational> out;
    if (is_empty_marker(text))
        return out;
    Cursor c{text};
    while (true) {
        long num = c.integer();
        c.skip_ws();
        if (c.pos < text.size() && text[c.pos] == '/') {
            ++c.pos;
            std::size_t den_pos = c.pos;
            long den = c.integer();
            if (den == 0)
                throw parse_error("zero denominator", den_pos);
            out.emplace_back(num, den);
        } else {
            out.emplace_back(num);
        }
        if (c.done())
            break;
        c.expect(',');
    }
    return out;
}

std::vector<long> parse_integers(const std::string& text) {
    std::vector<long> out;
    if (is_empty_marker(text))
        return out;
    Cursor c{text};
    while (true) {
        out.push_back(c.integer());
        if (c.done())
            break;
        c.expect(',');
    }
    return out;
}

} // namespace qcyclo
