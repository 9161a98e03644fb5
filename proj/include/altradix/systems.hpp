#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "altradix/digits.hpp"
#include "altradix/rational.hpp"
#include "altradix/sign_set.hpp"

namespace altradix {

/*
 * The three system families.
 *
 *  - SAdicSystem: one base s >= 2, alphabet {0..s-1} at every position,
 *    position weight 1/s^n, sign (-1)^{delta(n)} from the sign set.
 *  - CantorSystem: eventually periodic bases d_n >= 2, alphabet {0..d_n-1}
 *    at position n, weight 1/(d_1 d_2 ... d_n).
 *  - QTildeSystem: eventually periodic columns of positive rationals
 *    summing to 1; digit i at position n has column entry q_{i,n} and
 *    cumulative sum a_{i,n} = q_{0,n} + ... + q_{i-1,n}.
 */

struct SAdicSystem {
    long long s;
    SignSet b;

    SAdicSystem(long long s_, SignSet b_) : s(s_), b(std::move(b_))
    {
        if (s < 2)
            throw validation_error("s-adic base must be >= 2");
    }
};

struct CantorSystem {
    std::vector<long long> d_prefix;
    std::vector<long long> d_period; // nonempty
    SignSet b;

    CantorSystem(std::vector<long long> pre, std::vector<long long> per, SignSet b_);

    long long base_at(long long n) const
    {
        if (n < 1)
            throw validation_error("base position must be >= 1");
        if (n <= static_cast<long long>(d_prefix.size()))
            return d_prefix[static_cast<std::size_t>(n - 1)];
        return d_period[static_cast<std::size_t>((n - 1) %
                                                 static_cast<long long>(d_period.size()))];
    }

    long long base_prefix_length() const { return static_cast<long long>(d_prefix.size()); }
    long long base_period_length() const { return static_cast<long long>(d_period.size()); }
};

// One Q-tilde column: entries q_0 .. q_m with m >= 1.
struct Column {
    std::vector<RationalNumber> q;

    long long m() const { return static_cast<long long>(q.size()) - 1; }
    bool operator==(const Column&) const = default;
};

struct QTildeSystem {
    std::vector<Column> column_prefix;
    std::vector<Column> column_period; // nonempty
    SignSet b;

    QTildeSystem(std::vector<Column> pre, std::vector<Column> per, SignSet b_);

    const Column& column_at(long long n) const
    {
        if (n < 1)
            throw validation_error("column position must be >= 1");
        if (n <= static_cast<long long>(column_prefix.size()))
            return column_prefix[static_cast<std::size_t>(n - 1)];
        return column_period[static_cast<std::size_t>(
            (n - 1) % static_cast<long long>(column_period.size()))];
    }

    long long m_at(long long n) const { return column_at(n).m(); }
    long long column_prefix_length() const { return static_cast<long long>(column_prefix.size()); }
    long long column_period_length() const { return static_cast<long long>(column_period.size()); }
};

using SystemDescriptor = std::variant<SAdicSystem, CantorSystem, QTildeSystem>;

const SignSet& sign_set(const SystemDescriptor& sys);

// Alphabet size at position n: s / d_n / m_n + 1.
long long alphabet_size(const SystemDescriptor& sys, long long n);

// Structural prefix/period of the system itself (mask aligned with
// bases/columns); digit-independent.  For the s-adic case this is just the
// mask's shape.
long long system_prefix_length(const SystemDescriptor& sys);
long long system_period_length(const SystemDescriptor& sys);

// Every digit within its position alphabet; checks the prefix region plus
// one full lcm(digit period, system period) window so that all alignments
// of the digit period against the base/column period are covered.
// Throws validation_error naming the first offending position.
void validate(const DigitSequence& seq, const SystemDescriptor& sys);
bool is_valid(const DigitSequence& seq, const SystemDescriptor& sys);

/*
 * Extremal tail digit sequences (s-adic and Cantor only):
 *   beta_n  = 0 off N_B, (alphabet max) on N_B   — tail infimum digits
 *   gamma_n = (alphabet max) off N_B, 0 on N_B   — tail supremum digits
 */
DigitSequence beta_sequence(const SAdicSystem& sys);
DigitSequence gamma_sequence(const SAdicSystem& sys);
DigitSequence beta_sequence(const CantorSystem& sys);
DigitSequence gamma_sequence(const CantorSystem& sys);
DigitSequence beta_sequence(const SystemDescriptor& sys); // validation_error for Q-tilde
DigitSequence gamma_sequence(const SystemDescriptor& sys);

/*
 * One-line system spec:
 *   sadic(s=<int>;B=pre:<bits>,per:<bits>)
 *   cantor(D=pre:<ints>,per:<ints>;B=...)      ints: digits, '.'-separated if multi-digit
 *   qtilde(file=<path>;B=...)
 * `qfile_override`, when nonempty, supplies/overrides the qtilde file path.
 */
SystemDescriptor parse_system(std::string_view spec, std::string_view qfile_override = {});

// Q-tilde column file: section headers PRE / PER; each following line is one
// column of rationals ("1/2 1/2"); blank lines and #-comments skipped.
QTildeSystem parse_qtilde_columns(std::istream& in, SignSet b);

} // namespace altradix
