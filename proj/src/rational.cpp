#include "altradix/rational.hpp"

#include <cctype>
#include <cstdlib>

#include <boost/multiprecision/cpp_int.hpp>

namespace altradix {

Integer int_pow(const Integer& b, long long e)
{
    if (e < 0)
        throw validation_error("int_pow: negative exponent");
    Integer acc = 1;
    Integer base = b;
    // standard square-and-multiply
    for (unsigned long long k = static_cast<unsigned long long>(e); k != 0; k >>= 1) {
        if (k & 1ULL)
            acc *= base;
        if (k > 1)
            base *= base;
    }
    return acc;
}

RationalNumber rat_from_parts(const Integer& p, const Integer& q)
{
    if (q == 0)
        throw validation_error("rational with zero denominator");
    // boost's (p, q) constructor canonicalizes gcd but rejects q < 0
    if (q < 0)
        return RationalNumber(Integer(-p), Integer(-q));
    return RationalNumber(p, q);
}

namespace {

bool parse_integer_token(std::string_view text, Integer& out)
{
    if (text.empty())
        return false;
    std::size_t i = 0;
    if (text[0] == '-' || text[0] == '+')
        i = 1;
    if (i == text.size())
        return false;
    for (std::size_t j = i; j < text.size(); ++j)
        if (!std::isdigit(static_cast<unsigned char>(text[j])))
            return false;
    out = Integer(std::string(text));
    return true;
}

} // namespace

RationalNumber parse_rational(std::string_view text)
{
    // trim surrounding whitespace
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
        text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
        text.remove_suffix(1);
    if (text.empty())
        throw parse_error("empty rational text");

    const std::size_t slash = text.find('/');
    Integer p, q = 1;
    if (slash == std::string_view::npos) {
        if (!parse_integer_token(text, p))
            throw parse_error("malformed rational '" + std::string(text) + "'");
    } else {
        if (!parse_integer_token(text.substr(0, slash), p) ||
            !parse_integer_token(text.substr(slash + 1), q))
            throw parse_error("malformed rational '" + std::string(text) + "'");
    }
    return rat_from_parts(p, q);
}

std::string format_rational(const RationalNumber& r)
{
    const Integer den = denominator(r);
    std::string out = numerator(r).str();
    if (den != 1) {
        out += '/';
        out += den.str();
    }
    return out;
}

std::string format_rational_explicit(const RationalNumber& r)
{
    return numerator(r).str() + "/" + denominator(r).str();
}

std::string decimal_string(const RationalNumber& r, long long places)
{
    if (places < 0)
        throw validation_error("decimal_string: negative places");
    Integer num = numerator(r);
    const Integer den = denominator(r);
    std::string out;
    if (num < 0) {
        out += '-';
        num = -num;
    }
    out += Integer(num / den).str();
    if (places == 0)
        return out;
    out += '.';
    Integer rem = num % den;
    for (long long i = 0; i < places; ++i) {
        rem *= 10;
        out += static_cast<char>('0' + static_cast<int>(Integer(rem / den)));
        rem %= den;
    }
    return out;
}

RationalNumber geometric_series_sum(const RationalNumber& first_term,
                                    const RationalNumber& ratio)
{
    if (abs(ratio) >= 1)
        throw validation_error("geometric_series_sum: |ratio| must be < 1");
    return first_term / (1 - ratio);
}

RationalNumber eventually_periodic_value(const std::vector<RationalNumber>& prefix_terms,
                                         const std::vector<RationalNumber>& period_terms,
                                         const RationalNumber& period_ratio)
{
    RationalNumber total = 0;
    for (const auto& t : prefix_terms)
        total += t;
    if (!period_terms.empty()) {
        RationalNumber block = 0;
        for (const auto& t : period_terms)
            block += t;
        total += geometric_series_sum(block, period_ratio);
    }
    return total;
}

} // namespace altradix
