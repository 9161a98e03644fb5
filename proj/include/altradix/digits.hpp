#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "altradix/periodic.hpp"

namespace altradix {

/*
 * A digit string: finite prefix plus optional repeating block.  A sequence
 * without a period is read as ending in zeros forever, so every sequence is
 * evaluable.  Anchoring is absolute (see PeriodicSeq): digit(n) for
 * n > |prefix| is period[(n-1) mod L].
 */
struct DigitSequence {
    std::vector<long long> prefix_digits;
    std::optional<std::vector<long long>> period_digits; // nonempty when present

    bool has_period() const { return period_digits.has_value(); }
    long long prefix_length() const { return static_cast<long long>(prefix_digits.size()); }
    long long period_length() const
    {
        return has_period() ? static_cast<long long>(period_digits->size()) : 0;
    }

    // 1-based; positions past a finite prefix read as 0
    long long digit_at(long long n) const
    {
        if (n < 1)
            throw validation_error("digit position must be >= 1");
        if (n <= prefix_length())
            return prefix_digits[static_cast<std::size_t>(n - 1)];
        if (!has_period())
            return 0;
        return (*period_digits)[static_cast<std::size_t>((n - 1) % period_length())];
    }

    // Canonical form: minimal period, prefix entries that agree with the
    // cycle absorbed; finite strings drop trailing zeros.
    DigitSequence normalized() const;

    bool operator==(const DigitSequence&) const = default;
};

// Equality as infinite digit functions (finite strings zero-padded).
bool same_digits(const DigitSequence& a, const DigitSequence& b);

/*
 * Grammar:  digit* ( '(' digit+ ')' )?   with whitespace-separated
 * nonnegative integers; parens may abut digits.  "1 0 2 (1 2)", "0", "(2)".
 */
DigitSequence parse_digits(std::string_view text);
std::string format_digits(const DigitSequence& seq);

} // namespace altradix
