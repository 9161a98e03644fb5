#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "altradix/periodic.hpp"

namespace altradix {

enum class SignClass { empty, all_odd, all_even, other };

/*
 * The set N_B of "minus" positions.  Position n carries sign (-1)^{delta(n)}
 * with delta(n) = 1 on N_B and 2 off it, so members contribute negatively.
 * Restricted to eventually periodic sets so that every tail sum the library
 * needs has a closed form.
 */
class SignSet {
public:
    // default: the empty set
    SignSet() : mask_{{}, {false}} {}

    SignSet(std::vector<bool> prefix_mask, std::vector<bool> period_mask)
        : mask_{std::move(prefix_mask), std::move(period_mask)}
    {
        if (mask_.period.empty())
            throw validation_error("sign set needs a nonempty period mask");
    }

    bool member(long long n) const
    {
        if (n < 1)
            throw validation_error("sign set position must be >= 1");
        return mask_.at(n);
    }

    // delta(n) = 1 on N_B (sign -), 2 off N_B (sign +)
    int delta(long long n) const { return member(n) ? 1 : 2; }
    int sign(long long n) const { return member(n) ? -1 : +1; }

    std::vector<long long> enumerate_b(long long limit) const;

    SignClass classify() const;

    SignSet normalized() const
    {
        const auto m = mask_.normalized();
        return SignSet(m.prefix.empty() && m.period.empty() ? std::vector<bool>{} : m.prefix,
                       m.period);
    }

    bool same_set(const SignSet& other) const { return mask_.same_function(other.mask_); }

    long long prefix_length() const { return mask_.prefix_length(); }
    long long period_length() const { return mask_.period_length(); }
    const std::vector<bool>& prefix_mask() const { return mask_.prefix; }
    const std::vector<bool>& period_mask() const { return mask_.period; }

    // Text form: "pre:<bits>,per:<bits>", e.g. "pre:,per:01" (evens).
    // An empty per section is accepted and means the empty set.
    static SignSet parse(std::string_view text);
    std::string format() const;

private:
    PeriodicSeq<bool> mask_;
};

} // namespace altradix
