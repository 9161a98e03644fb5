#pragma once

#include <numeric>
#include <vector>

#include "altradix/errors.hpp"

namespace altradix {

/*
 * Eventually periodic sequence with *absolute* anchoring: the element at
 * 1-based position n is
 *
 *     prefix[n-1]              for n <= |prefix|
 *     period[(n-1) mod L]      for n >  |prefix|   (L = |period|)
 *
 * i.e. the cycle's phase is locked to position 1, not to the end of the
 * prefix.  Every eventually periodic object in the library (sign masks,
 * digit sequences, Cantor bases, Q-tilde columns) uses this one convention,
 * which is what makes positionwise maps and lcm alignment between different
 * objects straightforward.
 *
 * `period` may be empty only where the owning wrapper allows a finite
 * sequence (digit strings); at() then refuses positions past the prefix.
 */
template <typename T>
struct PeriodicSeq {
    std::vector<T> prefix;
    std::vector<T> period;

    long long prefix_length() const { return static_cast<long long>(prefix.size()); }
    long long period_length() const { return static_cast<long long>(period.size()); }
    bool has_period() const { return !period.empty(); }

    // by value: vector<bool> has no stable element references
    T at(long long n) const
    {
        if (n < 1)
            throw internal_error("PeriodicSeq::at: position < 1");
        if (n <= prefix_length())
            return prefix[static_cast<std::size_t>(n - 1)];
        if (period.empty())
            throw internal_error("PeriodicSeq::at: past the end of a finite sequence");
        return period[static_cast<std::size_t>((n - 1) % period_length())];
    }

    /*
     * Canonical form: shrink the period to its minimal length (any valid
     * reduction is to a divisor of L, and under absolute anchoring the
     * reduced content is period[j mod d]), then absorb prefix entries that
     * already agree with the cycle.  Under absolute anchoring there is no
     * rotation freedom, so the result is unique.
     */
    PeriodicSeq normalized() const
    {
        PeriodicSeq out = *this;
        if (!out.period.empty()) {
            const long long L = out.period_length();
            for (long long d = 1; d < L; ++d) {
                if (L % d != 0)
                    continue;
                bool ok = true;
                for (long long j = 0; j < L && ok; ++j)
                    ok = out.period[static_cast<std::size_t>(j)] ==
                         out.period[static_cast<std::size_t>(j % d)];
                if (ok) {
                    out.period.resize(static_cast<std::size_t>(d));
                    break;
                }
            }
            while (!out.prefix.empty()) {
                const long long p = out.prefix_length(); // position of the last prefix entry
                const T& cyc = out.period[static_cast<std::size_t>((p - 1) % out.period_length())];
                if (out.prefix.back() == cyc)
                    out.prefix.pop_back();
                else
                    break;
            }
        }
        return out;
    }

    // Equality as functions on positions 1,2,3,...  Both sides must be
    // infinite (have periods); finite digit strings get their own comparison
    // in the digits module where zero padding gives them a meaning.
    bool same_function(const PeriodicSeq& other) const
    {
        if (!has_period() || !other.has_period())
            throw internal_error("PeriodicSeq::same_function needs periodic operands");
        const long long P = std::max(prefix_length(), other.prefix_length());
        const long long L = std::lcm(period_length(), other.period_length());
        for (long long n = 1; n <= P + L; ++n)
            if (at(n) != other.at(n))
                return false;
        return true;
    }
};

} // namespace altradix
