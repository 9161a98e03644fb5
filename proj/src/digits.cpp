#include "altradix/digits.hpp"

#include <cctype>
#include <numeric>

namespace altradix {

DigitSequence DigitSequence::normalized() const
{
    if (!has_period()) {
        DigitSequence out = *this;
        while (!out.prefix_digits.empty() && out.prefix_digits.back() == 0)
            out.prefix_digits.pop_back();
        return out;
    }
    PeriodicSeq<long long> seq{prefix_digits, *period_digits};
    seq = seq.normalized();
    return DigitSequence{std::move(seq.prefix), std::move(seq.period)};
}

bool same_digits(const DigitSequence& a, const DigitSequence& b)
{
    // treat a missing period as the explicit cycle (0)
    PeriodicSeq<long long> pa{a.prefix_digits,
                              a.has_period() ? *a.period_digits : std::vector<long long>{0}};
    PeriodicSeq<long long> pb{b.prefix_digits,
                              b.has_period() ? *b.period_digits : std::vector<long long>{0}};
    return pa.same_function(pb);
}

namespace {

struct Token {
    enum Kind { number, lparen, rparen } kind;
    long long value = 0;
    std::size_t pos = 0; // 1-based character position, for diagnostics
};

std::vector<Token> lex_digits(std::string_view text)
{
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < text.size()) {
        const char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
        } else if (c == '(') {
            out.push_back({Token::lparen, 0, i + 1});
            ++i;
        } else if (c == ')') {
            out.push_back({Token::rparen, 0, i + 1});
            ++i;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t start = i;
            long long v = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                if (v > 100000000000000LL)
                    throw parse_error("digit value too large at position " +
                                      std::to_string(start + 1));
                v = v * 10 + (text[i] - '0');
                ++i;
            }
            out.push_back({Token::number, v, start + 1});
        } else {
            throw parse_error("syntax error at position " + std::to_string(i + 1) +
                              " in digit string");
        }
    }
    return out;
}

} // namespace

DigitSequence parse_digits(std::string_view text)
{
    const std::vector<Token> toks = lex_digits(text);
    DigitSequence seq;
    std::size_t i = 0;
    while (i < toks.size() && toks[i].kind == Token::number)
        seq.prefix_digits.push_back(toks[i++].value);
    if (i < toks.size()) {
        if (toks[i].kind != Token::lparen)
            throw parse_error("syntax error at position " + std::to_string(toks[i].pos) +
                              " in digit string");
        const std::size_t open_pos = toks[i].pos;
        ++i;
        std::vector<long long> period;
        while (i < toks.size() && toks[i].kind == Token::number)
            period.push_back(toks[i++].value);
        if (i == toks.size() || toks[i].kind != Token::rparen)
            throw parse_error("unclosed period group starting at position " +
                              std::to_string(open_pos));
        if (period.empty())
            throw parse_error("empty period group at position " + std::to_string(open_pos));
        ++i;
        if (i != toks.size())
            throw parse_error("syntax error at position " + std::to_string(toks[i].pos) +
                              " in digit string: trailing input after period");
        seq.period_digits = std::move(period);
    }
    return seq;
}

std::string format_digits(const DigitSequence& seq)
{
    std::string out;
    for (std::size_t i = 0; i < seq.prefix_digits.size(); ++i) {
        if (i)
            out += ' ';
        out += std::to_string(seq.prefix_digits[i]);
    }
    if (seq.has_period()) {
        if (!out.empty())
            out += ' ';
        out += '(';
        for (std::size_t i = 0; i < seq.period_digits->size(); ++i) {
            if (i)
                out += ' ';
            out += std::to_string((*seq.period_digits)[i]);
        }
        out += ')';
    }
    return out;
}

} // namespace altradix
