#include "altradix/sign_set.hpp"

namespace altradix {

std::vector<long long> SignSet::enumerate_b(long long limit) const
{
    if (limit < 1)
        throw validation_error("enumerate_b: limit must be >= 1");
    std::vector<long long> out;
    for (long long n = 1; n <= limit; ++n)
        if (member(n))
            out.push_back(n);
    return out;
}

SignClass SignSet::classify() const
{
    const SignSet s = normalized();
    if (!s.prefix_mask().empty())
        return SignClass::other;
    const auto& per = s.period_mask();
    if (per.size() == 1)
        return per[0] ? SignClass::other /* all positions: not a named case */
                      : SignClass::empty;
    if (per.size() == 2) {
        if (per[0] && !per[1])
            return SignClass::all_odd;
        if (!per[0] && per[1])
            return SignClass::all_even;
    }
    return SignClass::other;
}

namespace {

std::vector<bool> parse_bits(std::string_view bits, std::string_view what)
{
    std::vector<bool> out;
    out.reserve(bits.size());
    for (char c : bits) {
        if (c == '0')
            out.push_back(false);
        else if (c == '1')
            out.push_back(true);
        else
            throw parse_error("bad character '" + std::string(1, c) + "' in " +
                              std::string(what) + " mask bits");
    }
    return out;
}

} // namespace

SignSet SignSet::parse(std::string_view text)
{
    constexpr std::string_view pre_tag = "pre:";
    constexpr std::string_view per_tag = "per:";
    if (text.substr(0, pre_tag.size()) != pre_tag)
        throw parse_error("mask must start with 'pre:'");
    text.remove_prefix(pre_tag.size());
    const std::size_t comma = text.find(',');
    if (comma == std::string_view::npos)
        throw parse_error("mask needs a ',per:' section");
    std::string_view pre_bits = text.substr(0, comma);
    std::string_view rest = text.substr(comma + 1);
    if (rest.substr(0, per_tag.size()) != per_tag)
        throw parse_error("mask needs a 'per:' section after the comma");
    std::string_view per_bits = rest.substr(per_tag.size());

    std::vector<bool> pre = parse_bits(pre_bits, "pre");
    std::vector<bool> per = parse_bits(per_bits, "per");
    if (per.empty())
        per.push_back(false); // "per:" with no bits spells the empty set
    return SignSet(std::move(pre), std::move(per));
}

std::string SignSet::format() const
{
    std::string out = "pre:";
    for (bool b : prefix_mask())
        out += b ? '1' : '0';
    out += ",per:";
    for (bool b : period_mask())
        out += b ? '1' : '0';
    return out;
}

} // namespace altradix
