#pragma once

#include "altradix/eval.hpp"

namespace altradix {

/*
 * Digit extraction.  The residual after n digits always lies inside the
 * rank-n tail interval; hitting either endpoint means the rest of the
 * expansion is forced (the beta tail on the low side, the gamma tail on the
 * high side) and the result is exact.  A repeated (phase, residual) state
 * also closes the expansion into a periodic tail.  Ties between two
 * admissible digits are broken toward the tail infimum, so terminating
 * expansions prefer the beta form ("5 (0)" rather than "4 (9)").
 */
struct EncodeResult {
    DigitSequence digits;
    bool exact = false;
    // bounds on x - value(prefix) when exact = false; [0, 0] when exact
    ClosedInterval residual_interval{0, 0};
};

EncodeResult encode_sadic(const SAdicSystem& sys, const RationalNumber& x, long long max_digits);
EncodeResult encode_cantor(const CantorSystem& sys, const RationalNumber& x, long long max_digits);

// Standard greedy expansion of x in the unsigned column system, then the
// positionwise digit mirror (i -> m_n - i on N_B).
EncodeResult encode_qtilde(const QTildeSystem& sys, const RationalNumber& x, long long max_digits);

// Independent route for s-adic/Cantor: shift x by -x'_0 into [0, 1], encode
// in the plain (empty sign set) system, map digits back positionwise
// (alpha -> top - alpha on N_B).  Must agree with the direct encoders in
// value; digit-for-digit except at dual-representation points.
EncodeResult encode_via_transform(const SAdicSystem& sys, const RationalNumber& x,
                                  long long max_digits);
EncodeResult encode_via_transform(const CantorSystem& sys, const RationalNumber& x,
                                  long long max_digits);

// dispatch over the system family
EncodeResult encode(const SystemDescriptor& sys, const RationalNumber& x, long long max_digits);

} // namespace altradix
