#include "altradix/identities.hpp"

#include <numeric>
#include <random>

namespace altradix {

DualCase dual_case(const SignSet& b, long long n)
{
    const bool here = b.member(n), next = b.member(n + 1);
    if (here && next)
        return DualCase::both_in;
    if (here)
        return DualCase::in_out;
    if (next)
        return DualCase::out_in;
    return DualCase::both_out;
}

namespace {

// positionwise map over one joint window of seq and the system structure;
// always yields a periodic sequence (finite inputs are zero-padded first)
template <typename Fn>
DigitSequence map_positionwise(const SystemDescriptor& sys, const DigitSequence& seq, Fn&& fn)
{
    const long long P = std::max(seq.prefix_length(), system_prefix_length(sys));
    const long long L = std::lcm(std::max<long long>(seq.period_length(), 1),
                                 system_period_length(sys));
    DigitSequence out;
    out.period_digits.emplace(static_cast<std::size_t>(L), 0);
    for (long long n = 1; n <= P + L; ++n) {
        const long long digit = fn(n, seq.digit_at(n));
        if (n <= P)
            out.prefix_digits.push_back(digit);
        else // absolute anchoring: position n lives at cycle slot (n-1) mod L
            (*out.period_digits)[static_cast<std::size_t>((n - 1) % L)] = digit;
    }
    return out.normalized();
}

StandardForm to_standard_impl(const SystemDescriptor& sys, const DigitSequence& seq)
{
    validate(seq, sys);
    const SignSet& b = sign_set(sys);
    StandardForm out;
    // shift = sum of (top digit)/weight over N_B = -x'_0
    out.shift = -range_bounds(sys).lo;
    out.digits = map_positionwise(sys, seq, [&](long long n, long long digit) {
        return b.member(n) ? alphabet_size(sys, n) - 1 - digit : digit;
    });
    return out;
}

} // namespace

StandardForm to_standard(const SAdicSystem& sys, const DigitSequence& seq)
{
    return to_standard_impl(SystemDescriptor{sys}, seq);
}

StandardForm to_standard(const CantorSystem& sys, const DigitSequence& seq)
{
    return to_standard_impl(SystemDescriptor{sys}, seq);
}

StandardForm to_standard(const SystemDescriptor& sys, const DigitSequence& seq)
{
    if (std::holds_alternative<QTildeSystem>(sys))
        throw validation_error("to_standard supports s-adic and Cantor systems only");
    return to_standard_impl(sys, seq);
}

DigitSequence to_standard_qtilde(const QTildeSystem& sys, const DigitSequence& seq)
{
    const SystemDescriptor d{sys};
    validate(seq, d);
    return map_positionwise(d, seq, [&](long long n, long long digit) {
        return sys.b.member(n) ? sys.m_at(n) - digit : digit;
    });
}

namespace {

/*
 * Last position where seq differs from the (periodic) pattern, or 0 when
 * they agree everywhere, or nullopt when they differ at infinitely many
 * positions.  Compared as infinite digit functions over the joint window.
 */
std::optional<long long> last_mismatch(const DigitSequence& seq, const DigitSequence& pattern)
{
    const long long P = std::max(seq.prefix_length(), pattern.prefix_length());
    const long long L = std::lcm(std::max<long long>(seq.period_length(), 1),
                                 std::max<long long>(pattern.period_length(), 1));
    // tails must agree on every residue class past P
    for (long long n = P + 1; n <= P + L; ++n)
        if (seq.digit_at(n) != pattern.digit_at(n))
            return std::nullopt;
    for (long long n = P; n >= 1; --n)
        if (seq.digit_at(n) != pattern.digit_at(n))
            return n;
    return 0;
}

std::optional<DigitSequence> dual_impl(const SystemDescriptor& sys, const DigitSequence& seq)
{
    validate(seq, sys);
    const SignSet& b = sign_set(sys);
    const DigitSequence beta = beta_sequence(sys);
    const DigitSequence gamma = gamma_sequence(sys);

    // try the beta-side reading first: seq = prefix + beta tail from n+1
    for (const bool beta_side : {true, false}) {
        const DigitSequence& tail_here = beta_side ? beta : gamma;
        const DigitSequence& tail_there = beta_side ? gamma : beta;
        const auto n = last_mismatch(seq, tail_here);
        if (!n || *n == 0)
            continue; // not this tail, or the extremal sequence itself (unique rep)
        // partner: step the digit at n toward the other tail, swap the tail
        DigitSequence partner;
        for (long long k = 1; k < *n; ++k)
            partner.prefix_digits.push_back(seq.digit_at(k));
        const long long step = (beta_side != b.member(*n)) ? -1 : +1;
        partner.prefix_digits.push_back(seq.digit_at(*n) + step);
        // splice the other tail from n+1
        const long long P = std::max(*n, tail_there.prefix_length());
        for (long long k = *n + 1; k <= P; ++k)
            partner.prefix_digits.push_back(tail_there.digit_at(k));
        partner.period_digits = tail_there.period_digits;
        return partner.normalized();
    }
    return std::nullopt;
}

} // namespace

std::optional<DigitSequence> dual_representation(const SAdicSystem& sys, const DigitSequence& seq)
{
    return dual_impl(SystemDescriptor{sys}, seq);
}

std::optional<DigitSequence> dual_representation(const CantorSystem& sys,
                                                 const DigitSequence& seq)
{
    return dual_impl(SystemDescriptor{sys}, seq);
}

std::optional<DigitSequence> dual_representation(const SystemDescriptor& sys,
                                                 const DigitSequence& seq)
{
    if (std::holds_alternative<QTildeSystem>(sys))
        throw validation_error("dual_representation supports s-adic and Cantor systems only");
    return dual_impl(sys, seq);
}

namespace {

/*
 * Independent oracle for the named masks: positional series with signs given
 * directly by parity (all +, -+-+..., +-+-...), summed by its own two-block
 * closed form (prefix window, then one period window closed with 1/(1-r)).
 * Shares nothing with the SignSet/eventually_periodic_value machinery.
 */
RationalNumber parity_sign_oracle(const SystemDescriptor& sys, const DigitSequence& seq,
                                  SignClass cls)
{
    const long long P = std::max(seq.prefix_length(), system_prefix_length(sys));
    const long long L0 = std::lcm(std::max<long long>(seq.period_length(), 1),
                                  system_period_length(sys));
    const long long L = (L0 % 2 == 0) ? L0 : 2 * L0; // keep the sign pattern aligned
    auto sign_of = [&](long long n) -> int {
        if (cls == SignClass::empty)
            return +1;
        const bool odd = (n % 2 == 1);
        return (cls == SignClass::all_odd) == odd ? -1 : +1;
    };
    RationalNumber head = 0, w = 1;
    for (long long n = 1; n <= P; ++n) {
        w /= alphabet_size(sys, n);
        head += sign_of(n) * RationalNumber(seq.digit_at(n)) * w;
    }
    RationalNumber block = 0, ratio = 1;
    for (long long n = P + 1; n <= P + L; ++n) {
        w /= alphabet_size(sys, n);
        ratio /= alphabet_size(sys, n);
        block += sign_of(n) * RationalNumber(seq.digit_at(n)) * w;
    }
    return head + block / (1 - ratio);
}

} // namespace

SpecializationReport is_specialization_consistent(const SystemDescriptor& sys, long long trials,
                                                  unsigned long long seed)
{
    if (std::holds_alternative<QTildeSystem>(sys))
        throw validation_error("specialization check supports s-adic and Cantor systems only");
    const SignClass cls = sign_set(sys).classify();
    if (cls == SignClass::other)
        throw validation_error("specialization check applies to empty/all-odd/all-even "
                               "sign sets only");

    SpecializationReport report;
    report.mask_class = cls;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> len_pre(0, 4), len_per(1, 4);
    for (long long t = 0; t < trials; ++t) {
        // random valid sequence: digits drawn below the minimum alphabet
        // size so any alignment stays valid
        long long min_alpha = alphabet_size(sys, 1);
        for (long long n = 1; n <= system_prefix_length(sys) + system_period_length(sys); ++n)
            min_alpha = std::min(min_alpha, alphabet_size(sys, n));
        std::uniform_int_distribution<long long> digit(0, min_alpha - 1);
        DigitSequence seq;
        const int np = len_pre(rng), nq = len_per(rng);
        for (int i = 0; i < np; ++i)
            seq.prefix_digits.push_back(digit(rng));
        seq.period_digits.emplace();
        for (int i = 0; i < nq; ++i)
            seq.period_digits->push_back(digit(rng));

        ++report.cases;
        if (eval(sys, seq) != parity_sign_oracle(sys, seq, cls))
            ++report.failures;
    }
    return report;
}

} // namespace altradix
