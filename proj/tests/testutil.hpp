#pragma once

#include <random>
#include <vector>

#include "altradix/digits.hpp"
#include "altradix/eval.hpp"
#include "altradix/systems.hpp"

namespace testutil {

using namespace altradix;

/*
 * Independent partial-sum oracle: add up the first N signed terms the
 * straightforward way (running weight, one term at a time), no
 * closed-form shortcuts.  |true value - partial| <= 1/(d_1...d_N) because
 * the tail past N lies inside a rank-N cylinder.
 */
inline RationalNumber partial_sum_oracle(const SystemDescriptor& sys, const DigitSequence& seq,
                                         long long N)
{
    RationalNumber total = 0;
    RationalNumber w = 1;
    const SignSet& b = sign_set(sys);
    for (long long n = 1; n <= N; ++n) {
        w /= alphabet_size(sys, n);
        total += b.sign(n) * RationalNumber(seq.digit_at(n)) * w;
    }
    return total;
}

inline RationalNumber weight_after(const SystemDescriptor& sys, long long N)
{
    RationalNumber w = 1;
    for (long long n = 1; n <= N; ++n)
        w /= alphabet_size(sys, n);
    return w;
}

// check |closed - oracle_N| <= 1/(d_1...d_N)
inline bool matches_partial_oracle(const SystemDescriptor& sys, const DigitSequence& seq,
                                   const RationalNumber& closed, long long N = 200)
{
    const RationalNumber diff = closed - partial_sum_oracle(sys, seq, N);
    return abs(diff) <= weight_after(sys, N);
}

// --- random generators shared by property tests and the acceptance suite ---

inline SignSet random_sign_set(std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> len_pre(0, 3), len_per(1, 4), bit(0, 1);
    std::vector<bool> pre(len_pre(rng)), per(len_per(rng));
    for (std::size_t i = 0; i < pre.size(); ++i)
        pre[i] = bit(rng);
    for (std::size_t i = 0; i < per.size(); ++i)
        per[i] = bit(rng);
    return SignSet(std::move(pre), std::move(per));
}

inline SAdicSystem random_sadic(std::mt19937_64& rng)
{
    std::uniform_int_distribution<long long> base(2, 10);
    return SAdicSystem(base(rng), random_sign_set(rng));
}

inline CantorSystem random_cantor(std::mt19937_64& rng)
{
    std::uniform_int_distribution<long long> base(2, 5);
    std::uniform_int_distribution<int> len_pre(0, 2), len_per(1, 3);
    std::vector<long long> pre(len_pre(rng)), per(len_per(rng));
    for (auto& d : pre)
        d = base(rng);
    for (auto& d : per)
        d = base(rng);
    return CantorSystem(std::move(pre), std::move(per), random_sign_set(rng));
}

inline Column random_column(std::mt19937_64& rng)
{
    // split 1 into m+1 positive parts with small denominators
    std::uniform_int_distribution<int> m_dist(1, 3);
    const int m = m_dist(rng);
    std::uniform_int_distribution<int> part(1, 5);
    std::vector<long long> cuts(m + 1);
    long long total = 0;
    for (auto& c : cuts) {
        c = part(rng);
        total += c;
    }
    Column col;
    for (long long c : cuts)
        col.q.push_back(RationalNumber(c, total));
    return col;
}

inline QTildeSystem random_qtilde(std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> len_pre(0, 2), len_per(1, 3);
    std::vector<Column> pre(len_pre(rng)), per(len_per(rng));
    for (auto& c : pre)
        c = random_column(rng);
    for (auto& c : per)
        c = random_column(rng);
    return QTildeSystem(std::move(pre), std::move(per), random_sign_set(rng));
}

// random valid digit string for a system; always has a period
inline DigitSequence random_sequence_for(const SystemDescriptor& sys, std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> len_pre(0, 4), len_per(1, 4);
    DigitSequence seq;
    const int np = len_pre(rng);
    // keep the digit period aligned enough: any length works because
    // validation and evaluation align by lcm; draw each digit within the
    // *minimum* alphabet over its residue class so the string stays valid
    // at every alignment.
    const long long sysP = system_prefix_length(sys);
    const long long sysL = system_period_length(sys);
    const int nper = len_per(rng);
    auto min_alphabet_on_class = [&](long long pos, long long step) {
        long long lo = alphabet_size(sys, pos);
        // the class {pos, pos+step, ...} meets the system structure
        // periodically once past the prefix; scan one full joint cycle
        // beyond wherever the later of the two starts
        const long long limit = std::max(pos, sysP) + std::lcm<long long>(step, sysL) + step;
        for (long long k = pos; k <= limit; k += step)
            lo = std::min(lo, alphabet_size(sys, k));
        return lo;
    };
    for (int i = 1; i <= np; ++i) {
        std::uniform_int_distribution<long long> digit(0, alphabet_size(sys, i) - 1);
        seq.prefix_digits.push_back(digit(rng));
    }
    seq.period_digits.emplace();
    for (int j = 0; j < nper; ++j) {
        // slot j of the cycle serves positions np + j + 1, np + j + 1 + nper, ...
        // under absolute anchoring the class is (np + j) mod nper — but the
        // first served position is what matters for the scan start
        const long long first = np + j + 1;
        std::uniform_int_distribution<long long> digit(0, min_alphabet_on_class(first, nper) - 1);
        seq.period_digits->push_back(digit(rng));
    }
    // slots are drawn by served position, but stored anchored: rotate so that
    // entry (first-1) mod nper holds the digit drawn for `first`
    std::vector<long long> anchored(static_cast<std::size_t>(nper));
    for (int j = 0; j < nper; ++j) {
        const long long first = np + j + 1;
        anchored[static_cast<std::size_t>((first - 1) % nper)] =
            (*seq.period_digits)[static_cast<std::size_t>(j)];
    }
    *seq.period_digits = std::move(anchored);
    return seq;
}

inline RationalNumber random_rational_in(const ClosedInterval& box, std::mt19937_64& rng)
{
    std::uniform_int_distribution<long long> den_dist(1, 9999);
    const long long den = den_dist(rng);
    // lo + k/den clamped into the box
    const RationalNumber width = box.width();
    std::uniform_int_distribution<long long> num_dist(0, den);
    return box.lo + width * RationalNumber(num_dist(rng), den);
}

} // namespace testutil
