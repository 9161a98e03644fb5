#include "altradix/encode.hpp"

#include <map>
#include <numeric>
#include <utility>

#include "altradix/identities.hpp"

namespace altradix {

namespace {

// positions 1..n from `emitted`, the tail pattern from n+1 on
DigitSequence splice_tail(const std::vector<long long>& emitted, const DigitSequence& tail)
{
    const long long n = static_cast<long long>(emitted.size());
    DigitSequence out;
    const long long P = std::max(n, tail.prefix_length());
    for (long long k = 1; k <= P; ++k)
        out.prefix_digits.push_back(k <= n ? emitted[static_cast<std::size_t>(k - 1)]
                                           : tail.digit_at(k));
    out.period_digits = tail.period_digits; // anchored absolutely, so reusable as-is
    return out.normalized();
}

// emitted digits repeat from position m+1 with period p (state recurrence)
DigitSequence close_cycle(const std::vector<long long>& emitted, long long m, long long p)
{
    DigitSequence out;
    out.prefix_digits.assign(emitted.begin(), emitted.begin() + m);
    out.period_digits.emplace(static_cast<std::size_t>(p));
    for (long long j = 0; j < p; ++j) {
        const long long idx = m + (((j - m) % p) + p) % p;
        (*out.period_digits)[static_cast<std::size_t>(j)] =
            emitted[static_cast<std::size_t>(idx)];
    }
    return out.normalized();
}

/*
 * Greedy core for s-adic and Cantor.  Work with the scaled residual
 * v_n = (x - partial_n) * d_1...d_n, for which the tail interval endpoints
 * obey the integer-friendly recurrences
 *
 *   lam_n = d_n*lam_{n-1} + (d_n - 1 on N_B)     (scaled tail infimum)
 *   eta_n = d_n*eta_{n-1} - (d_n - 1 off N_B)    (scaled tail supremum)
 *
 * with eta_n - lam_n = 1 throughout.  Digit choice: steer v toward lam
 * (v' = u - a off N_B, v' = u + a on N_B), where u = d_n * v.
 */
/*
 * `P` and `L` give the window for cycle detection; any window that the
 * system's structure recurs over is sound, so callers may pass a coarser
 * one (the via-transform route passes the masked system's window to the
 * plain run, which keeps the two routes' truncation behaviour identical).
 */
EncodeResult encode_weighted(const SystemDescriptor& sys, const RationalNumber& x,
                             long long max_digits, long long P, long long L)
{
    if (max_digits < 1)
        throw validation_error("max_digits must be >= 1");
    const ClosedInterval box = range_bounds(sys);
    if (!box.contains(x))
        throw range_error("value " + format_rational(x) + " outside range [" +
                          format_rational(box.lo) + ", " + format_rational(box.hi) + "]");

    const DigitSequence beta = beta_sequence(sys);
    const DigitSequence gamma = gamma_sequence(sys);
    const SignSet& b = sign_set(sys);

    EncodeResult res;
    if (x == box.lo) {
        res.digits = beta;
        res.exact = true;
        return res;
    }
    if (x == box.hi) {
        res.digits = gamma;
        res.exact = true;
        return res;
    }
    RationalNumber v = x, lam = box.lo, eta = box.hi;
    Integer scale = 1; // d_1 ... d_n
    std::vector<long long> emitted;
    std::map<std::pair<long long, RationalNumber>, long long> seen;

    for (long long n = 1; n <= max_digits; ++n) {
        const long long d = alphabet_size(sys, n);
        const bool in_b = b.member(n);
        scale *= d;
        const RationalNumber u = v * d;
        lam = lam * d + (in_b ? d - 1 : 0);
        eta = eta * d - (in_b ? 0 : d - 1);

        // steer v as close to lam as the alphabet allows (beta preference):
        // off N_B, v = u - a needs the largest a <= u - lam (floor); on N_B,
        // v = u + a needs the smallest a >= lam - u (ceiling)
        Integer a_int = 0;
        if (in_b) {
            const RationalNumber target = lam - u;
            if (target > 0)
                a_int = (numerator(target) + denominator(target) - 1) / denominator(target);
        } else {
            const RationalNumber target = u - lam;
            if (target > 0)
                a_int = numerator(target) / denominator(target);
        }
        if (a_int > d - 1)
            a_int = d - 1;
        const long long a = static_cast<long long>(a_int);

        v = u;
        if (in_b)
            v += a;
        else
            v -= a;
        if (v < lam || v > eta)
            throw internal_error("encoder residual left the tail interval at position " +
                                 std::to_string(n));
        emitted.push_back(a);

        if (v == lam) {
            res.digits = splice_tail(emitted, beta);
            res.exact = true;
            return res;
        }
        if (v == eta) {
            res.digits = splice_tail(emitted, gamma);
            res.exact = true;
            return res;
        }
        if (n >= P) {
            // for n >= P the pair (n mod L, v) determines the whole future
            const auto key = std::make_pair(n % L, v);
            if (const auto it = seen.find(key); it != seen.end()) {
                res.digits = close_cycle(emitted, it->second, n - it->second);
                res.exact = true;
                return res;
            }
            seen.emplace(key, n);
        }
    }

    res.digits = DigitSequence{std::move(emitted), std::nullopt}.normalized();
    res.exact = false;
    res.residual_interval = ClosedInterval(lam / RationalNumber(scale),
                                           eta / RationalNumber(scale));
    return res;
}

} // namespace

EncodeResult encode_sadic(const SAdicSystem& sys, const RationalNumber& x, long long max_digits)
{
    const SystemDescriptor d{sys};
    return encode_weighted(d, x, max_digits, system_prefix_length(d), system_period_length(d));
}

EncodeResult encode_cantor(const CantorSystem& sys, const RationalNumber& x, long long max_digits)
{
    const SystemDescriptor d{sys};
    return encode_weighted(d, x, max_digits, system_prefix_length(d), system_period_length(d));
}

EncodeResult encode_qtilde(const QTildeSystem& sys, const RationalNumber& x, long long max_digits)
{
    if (max_digits < 1)
        throw validation_error("max_digits must be >= 1");
    if (x < 0 || x > 1)
        throw range_error("value " + format_rational(x) + " outside range [0, 1]");

    const long long P = sys.column_prefix_length();
    const long long L = sys.column_period_length();

    // the forced standard tails: all zeros / all column maxima
    const DigitSequence std_zero = parse_digits("(0)");
    DigitSequence std_max;
    std_max.period_digits.emplace(static_cast<std::size_t>(L), 0);
    for (long long n = 1; n <= P + L; ++n) {
        if (n <= P)
            std_max.prefix_digits.push_back(sys.m_at(n));
        else // absolute anchoring: position n lives at cycle slot (n-1) mod L
            (*std_max.period_digits)[static_cast<std::size_t>((n - 1) % L)] = sys.m_at(n);
    }
    std_max = std_max.normalized();

    DigitSequence std_digits;
    bool exact = false;
    std::vector<long long> emitted;
    RationalNumber r = x;
    if (r == 0) {
        std_digits = std_zero;
        exact = true;
    } else if (r == 1) {
        std_digits = std_max;
        exact = true;
    } else {
        std::map<std::pair<long long, RationalNumber>, long long> seen;
        for (long long n = 1; n <= max_digits; ++n) {
            const Column& col = sys.column_at(n);
            // largest digit whose cumulative sum still fits under r
            long long i = 0;
            RationalNumber a = 0;
            while (i < col.m() && a + col.q[static_cast<std::size_t>(i)] <= r)
                a += col.q[static_cast<std::size_t>(i++)];
            r = (r - a) / col.q[static_cast<std::size_t>(i)];
            emitted.push_back(i);
            if (r == 0) {
                std_digits = splice_tail(emitted, std_zero);
                exact = true;
                break;
            }
            if (r == 1) {
                std_digits = splice_tail(emitted, std_max);
                exact = true;
                break;
            }
            if (n >= P) {
                const auto key = std::make_pair(n % L, r);
                if (const auto it = seen.find(key); it != seen.end()) {
                    std_digits = close_cycle(emitted, it->second, n - it->second);
                    exact = true;
                    break;
                }
                seen.emplace(key, n);
            }
        }
    }

    EncodeResult res;
    res.exact = exact;
    if (exact) {
        // the mirror is an involution, so mapping the standard digits back
        // yields the sign-alternating ones
        res.digits = to_standard_qtilde(sys, std_digits).normalized();
    } else {
        // mirror just the emitted prefix; extending would zero-pad the
        // standard string and invent digits we never computed
        for (long long n = 1; n <= static_cast<long long>(emitted.size()); ++n) {
            const long long i = emitted[static_cast<std::size_t>(n - 1)];
            res.digits.prefix_digits.push_back(sys.b.member(n) ? sys.m_at(n) - i : i);
        }
        // x sits in the standard rank-n cylinder [partial, partial + prod]
        RationalNumber partial = 0, prod = 1;
        for (long long n = 1; n <= static_cast<long long>(emitted.size()); ++n) {
            const long long i = emitted[static_cast<std::size_t>(n - 1)];
            partial += cumulative_a(sys, i, n) * prod;
            prod *= sys.column_at(n).q[static_cast<std::size_t>(i)];
        }
        const RationalNumber v0 = eval_qtilde_quasinega(
            sys, DigitSequence{res.digits.prefix_digits, std::nullopt});
        res.residual_interval = ClosedInterval(partial - v0, partial + prod - v0);
        res.digits = res.digits.normalized();
    }
    return res;
}

namespace {

EncodeResult via_transform_impl(const SystemDescriptor& sys, const SystemDescriptor& plain,
                                const RationalNumber& x, long long max_digits)
{
    const ClosedInterval box = range_bounds(sys);
    if (!box.contains(x))
        throw range_error("value " + format_rational(x) + " outside range [" +
                          format_rational(box.lo) + ", " + format_rational(box.hi) + "]");

    // shift into the plain system, encode there, mirror the digits back;
    // the masked window keeps cycle detection in step with the direct route
    EncodeResult plain_res = encode_weighted(plain, x - box.lo, max_digits,
                                             system_prefix_length(sys),
                                             system_period_length(sys));
    const SignSet& b = sign_set(sys);

    EncodeResult res;
    res.exact = plain_res.exact;
    auto mirror = [&](long long n, long long digit) {
        return b.member(n) ? alphabet_size(sys, n) - 1 - digit : digit;
    };
    if (plain_res.digits.has_period()) {
        const long long P = std::max(plain_res.digits.prefix_length(),
                                     system_prefix_length(sys));
        const long long L = std::lcm(plain_res.digits.period_length(),
                                     system_period_length(sys));
        res.digits.period_digits.emplace(static_cast<std::size_t>(L), 0);
        for (long long n = 1; n <= P + L; ++n) {
            const long long digit = mirror(n, plain_res.digits.digit_at(n));
            if (n <= P)
                res.digits.prefix_digits.push_back(digit);
            else // absolute anchoring: position n lives at cycle slot (n-1) mod L
                (*res.digits.period_digits)[static_cast<std::size_t>((n - 1) % L)] = digit;
        }
        res.digits = res.digits.normalized();
    } else {
        // the full emitted window, not the normalized prefix: a trimmed
        // trailing zero mirrors to a nonzero top digit on N_B
        for (long long n = 1; n <= max_digits; ++n)
            res.digits.prefix_digits.push_back(mirror(n, plain_res.digits.digit_at(n)));
        // inexact: same residual contract as the direct encoders
        res.digits = res.digits.normalized();
        res.residual_interval = tail_bounds(sys, max_digits);
    }
    return res;
}

} // namespace

EncodeResult encode_via_transform(const SAdicSystem& sys, const RationalNumber& x,
                                  long long max_digits)
{
    const SAdicSystem plain(sys.s, SignSet{});
    return via_transform_impl(SystemDescriptor{sys}, SystemDescriptor{plain}, x, max_digits);
}

EncodeResult encode_via_transform(const CantorSystem& sys, const RationalNumber& x,
                                  long long max_digits)
{
    const CantorSystem plain(sys.d_prefix, sys.d_period, SignSet{});
    return via_transform_impl(SystemDescriptor{sys}, SystemDescriptor{plain}, x, max_digits);
}

EncodeResult encode(const SystemDescriptor& sys, const RationalNumber& x, long long max_digits)
{
    if (const auto* sa = std::get_if<SAdicSystem>(&sys))
        return encode_sadic(*sa, x, max_digits);
    if (const auto* ca = std::get_if<CantorSystem>(&sys))
        return encode_cantor(*ca, x, max_digits);
    return encode_qtilde(std::get<QTildeSystem>(sys), x, max_digits);
}

} // namespace altradix
