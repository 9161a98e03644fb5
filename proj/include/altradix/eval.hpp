#pragma once

#include "altradix/interval.hpp"
#include "altradix/systems.hpp"

namespace altradix {

/*
 * Exact series evaluation.  Position n carries the signed term
 *
 *   s-adic:   (-1)^{delta(n)} * digit_n / s^n
 *   Cantor:   (-1)^{delta(n)} * digit_n / (d_1 d_2 ... d_n)
 *
 * and the Q-tilde variants use cumulative column sums with products of
 * column entries as weights.  Everything reduces to
 * eventually_periodic_value over one lcm-aligned period window, so results
 * are exact rationals.
 */

RationalNumber eval_sadic(const SAdicSystem& sys, const DigitSequence& seq);
RationalNumber eval_cantor(const CantorSystem& sys, const DigitSequence& seq);

// a_{i,n} = q_{0,n} + ... + q_{i-1,n};  a_{0,n} = 0.  Requires 0 <= i <= m_n.
RationalNumber cumulative_a(const QTildeSystem& sys, long long i, long long n);

// Classic value: a_{i_1,1} + sum_{n>=2} a_{i_n,n} * prod_{j<n} q_{i_j,j}.
RationalNumber eval_qtilde_standard(const QTildeSystem& sys, const DigitSequence& seq);

/*
 * Sign-alternating value: the constant (2 - rho_1), then per position the
 * term (-1)^{rho_n} * dprime_{i_n,n} * prod_{j<n} qprime_{i_j,j}, plus for
 * every position n > 1 inside N_B an extra correction term equal to the
 * same product.  dprime has three cases (0 for digit 0 off N_B; the
 * cumulative sum off N_B; the complementary upper sum on N_B) and qprime
 * two (column entry off N_B, mirrored entry on N_B).  Evaluated literally
 * from those cases — the digit-mirror route lives in the identities module
 * and serves as an independent cross-check.
 */
RationalNumber eval_qtilde_quasinega(const QTildeSystem& sys, const DigitSequence& seq);

// Partial sum of the first `terms` terms of the signed series
// (-1)^{rho_n} a_{i_n,n} prod_{j<n} q_{i_j,j}  (evaluation utility only).
RationalNumber eval_series8(const QTildeSystem& sys, const DigitSequence& seq, long long terms);

// Dispatch: s-adic / Cantor / Q-tilde sign-alternating value.
RationalNumber eval(const SystemDescriptor& sys, const DigitSequence& seq);

// Exact [x'_0, x''_0]: the values of the beta and gamma digit sequences
// (all-sup-on-N_B and all-sup-off-N_B).  Q-tilde: [0, 1].
ClosedInterval range_bounds(const SystemDescriptor& sys);

// Exact bounds of the tail sum over positions > n, any admissible digits.
// s-adic/Cantor only (Q-tilde tails depend on the digit prefix).
ClosedInterval tail_bounds(const SystemDescriptor& sys, long long n);

// Sum of the first n signed terms (s-adic/Cantor only).
RationalNumber partial_value(const SystemDescriptor& sys, const DigitSequence& seq, long long n);

// 1/s^n resp. 1/(d_1...d_n): the width of a rank-n cylinder.
RationalNumber position_weight(const SystemDescriptor& sys, long long n);

} // namespace altradix
