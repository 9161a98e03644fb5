#include "altradix/eval.hpp"

#include <numeric>

namespace altradix {

namespace {

// Shared shape of every closed-form evaluation: terms 1..P are the prefix,
// terms P+1..P+L repeat with a fixed rational ratio per block.
struct Window {
    long long P;
    long long L;
};

Window window_for(const SystemDescriptor& sys, const DigitSequence& seq)
{
    return {std::max(seq.prefix_length(), system_prefix_length(sys)),
            std::lcm(std::max<long long>(seq.period_length(), 1), system_period_length(sys))};
}

RationalNumber eval_weighted(const SystemDescriptor& sys, const DigitSequence& seq)
{
    const SignSet& b = sign_set(sys);
    const auto [P, L] = window_for(sys, seq);
    std::vector<RationalNumber> prefix_terms, period_terms;
    Integer weight = 1;      // d_1 ... d_n (s^n in the s-adic case)
    Integer block_ratio = 1; // product of bases across the period window
    for (long long n = 1; n <= P + L; ++n) {
        weight *= alphabet_size(sys, n);
        if (n > P)
            block_ratio *= alphabet_size(sys, n);
        const long long digit = seq.digit_at(n);
        RationalNumber term = rat_from_parts(b.sign(n) * digit, weight);
        (n <= P ? prefix_terms : period_terms).push_back(std::move(term));
    }
    return eventually_periodic_value(prefix_terms, period_terms,
                                     rat_from_parts(1, block_ratio));
}

} // namespace

RationalNumber eval_sadic(const SAdicSystem& sys, const DigitSequence& seq)
{
    SystemDescriptor d{sys};
    validate(seq, d);
    return eval_weighted(d, seq);
}

RationalNumber eval_cantor(const CantorSystem& sys, const DigitSequence& seq)
{
    SystemDescriptor d{sys};
    validate(seq, d);
    return eval_weighted(d, seq);
}

RationalNumber cumulative_a(const QTildeSystem& sys, long long i, long long n)
{
    const Column& col = sys.column_at(n);
    if (i < 0 || i > col.m())
        throw validation_error("digit " + std::to_string(i) + " out of range for column " +
                               std::to_string(n));
    RationalNumber sum = 0;
    for (long long l = 0; l < i; ++l)
        sum += col.q[static_cast<std::size_t>(l)];
    return sum;
}

namespace {

Window window_for_qtilde(const QTildeSystem& sys, const DigitSequence& seq, bool with_mask)
{
    long long P = std::max(seq.prefix_length(), sys.column_prefix_length());
    long long L = std::lcm(std::max<long long>(seq.period_length(), 1),
                           sys.column_period_length());
    if (with_mask) {
        P = std::max(P, sys.b.prefix_length());
        L = std::lcm(L, sys.b.period_length());
    }
    return {std::max<long long>(P, 1), L}; // keep the n=1 term in the prefix
}

} // namespace

RationalNumber eval_qtilde_standard(const QTildeSystem& sys, const DigitSequence& seq)
{
    validate(seq, SystemDescriptor{sys});
    const auto [P, L] = window_for_qtilde(sys, seq, /*with_mask=*/false);
    std::vector<RationalNumber> prefix_terms, period_terms;
    RationalNumber product = 1;    // q_{i_1,1} ... q_{i_{n-1},n-1}
    RationalNumber block_ratio = 1;
    for (long long n = 1; n <= P + L; ++n) {
        const long long digit = seq.digit_at(n);
        (n <= P ? prefix_terms : period_terms)
            .push_back(cumulative_a(sys, digit, n) * product);
        const RationalNumber q = sys.column_at(n).q[static_cast<std::size_t>(digit)];
        product *= q;
        if (n > P)
            block_ratio *= q;
    }
    return eventually_periodic_value(prefix_terms, period_terms, block_ratio);
}

RationalNumber eval_qtilde_quasinega(const QTildeSystem& sys, const DigitSequence& seq)
{
    validate(seq, SystemDescriptor{sys});
    const SignSet& b = sys.b;
    const auto [P, L] = window_for_qtilde(sys, seq, /*with_mask=*/true);
    std::vector<RationalNumber> prefix_terms, period_terms;
    RationalNumber product = 1;    // qprime_{i_1,1} ... qprime_{i_{n-1},n-1}
    RationalNumber block_ratio = 1;
    for (long long n = 1; n <= P + L; ++n) {
        const long long digit = seq.digit_at(n);
        const Column& col = sys.column_at(n);
        const long long m = col.m();
        const bool in_b = b.member(n);

        // dprime: three cases
        RationalNumber dprime;
        if (in_b) {
            dprime = 0; // upper sum q_{m-i} + ... + q_m
            for (long long l = m - digit; l <= m; ++l)
                dprime += col.q[static_cast<std::size_t>(l)];
        } else {
            dprime = (digit == 0) ? RationalNumber(0) : cumulative_a(sys, digit, n);
        }

        // term: sign * dprime * product, the n=1 constant, and for n > 1 on
        // N_B the correction product
        RationalNumber term = dprime * product;
        if (in_b)
            term = -term;
        if (n == 1)
            term += in_b ? 1 : 0; // 2 - rho_1
        else if (in_b)
            term += product;
        (n <= P ? prefix_terms : period_terms).push_back(std::move(term));

        // qprime: mirrored column entry on N_B
        const RationalNumber qp = col.q[static_cast<std::size_t>(in_b ? m - digit : digit)];
        product *= qp;
        if (n > P)
            block_ratio *= qp;
    }
    return eventually_periodic_value(prefix_terms, period_terms, block_ratio);
}

RationalNumber eval_series8(const QTildeSystem& sys, const DigitSequence& seq, long long terms)
{
    if (terms < 1)
        throw validation_error("eval_series8: terms must be >= 1");
    validate(seq, SystemDescriptor{sys});
    RationalNumber total = 0;
    RationalNumber product = 1;
    for (long long n = 1; n <= terms; ++n) {
        const long long digit = seq.digit_at(n);
        const RationalNumber a = cumulative_a(sys, digit, n);
        total += sys.b.sign(n) * a * product;
        product *= sys.column_at(n).q[static_cast<std::size_t>(digit)];
    }
    return total;
}

RationalNumber eval(const SystemDescriptor& sys, const DigitSequence& seq)
{
    if (const auto* sa = std::get_if<SAdicSystem>(&sys))
        return eval_sadic(*sa, seq);
    if (const auto* ca = std::get_if<CantorSystem>(&sys))
        return eval_cantor(*ca, seq);
    return eval_qtilde_quasinega(std::get<QTildeSystem>(sys), seq);
}

ClosedInterval range_bounds(const SystemDescriptor& sys)
{
    if (std::holds_alternative<QTildeSystem>(sys))
        return {0, 1};
    return {eval(sys, beta_sequence(sys)), eval(sys, gamma_sequence(sys))};
}

RationalNumber partial_value(const SystemDescriptor& sys, const DigitSequence& seq, long long n)
{
    if (n < 0)
        throw validation_error("partial_value: n must be >= 0");
    if (std::holds_alternative<QTildeSystem>(sys))
        throw validation_error("partial_value supports s-adic and Cantor systems only");
    validate(seq, sys);
    const SignSet& b = sign_set(sys);
    RationalNumber total = 0;
    Integer weight = 1;
    for (long long k = 1; k <= n; ++k) {
        weight *= alphabet_size(sys, k);
        total += rat_from_parts(b.sign(k) * seq.digit_at(k), weight);
    }
    return total;
}

ClosedInterval tail_bounds(const SystemDescriptor& sys, long long n)
{
    if (n < 0)
        throw validation_error("tail_bounds: n must be >= 0");
    if (std::holds_alternative<QTildeSystem>(sys))
        throw validation_error("tail_bounds supports s-adic and Cantor systems only");
    const DigitSequence beta = beta_sequence(sys);
    const DigitSequence gamma = gamma_sequence(sys);
    return {eval(sys, beta) - partial_value(sys, beta, n),
            eval(sys, gamma) - partial_value(sys, gamma, n)};
}

RationalNumber position_weight(const SystemDescriptor& sys, long long n)
{
    if (n < 0)
        throw validation_error("position_weight: n must be >= 0");
    if (std::holds_alternative<QTildeSystem>(sys))
        throw validation_error("position_weight supports s-adic and Cantor systems only");
    Integer w = 1;
    for (long long k = 1; k <= n; ++k)
        w *= alphabet_size(sys, k);
    return rat_from_parts(1, w);
}

} // namespace altradix
