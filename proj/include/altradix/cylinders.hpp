#pragma once

#include <vector>

#include "altradix/eval.hpp"

namespace altradix {

/*
 * Cylinder: all numbers whose expansion starts with the given digits.  As a
 * set it is the closed interval [partial + tail_lo, partial + tail_hi] of
 * width 1/s^n (resp. 1/(d_1...d_n)).  s-adic and Cantor families only.
 */
struct Cylinder {
    SystemDescriptor sys;
    std::vector<long long> base; // c_1 ... c_n, may be empty (whole range)

    Cylinder(SystemDescriptor sys_, std::vector<long long> base_);

    long long rank() const { return static_cast<long long>(base.size()); }
};

ClosedInterval interval(const Cylinder& cyl);

// width of the interval; equals the closed-form weight of the rank
RationalNumber length(const Cylinder& cyl);

// one child per digit of the next position's alphabet, in digit order
std::vector<Cylinder> children(const Cylinder& cyl);

/*
 * Endpoint sharing between the cylinder and its sibling with last digit + 1:
 * sup(this) = inf(sibling) off N_B, inf(this) = sup(sibling) on N_B (the
 * digit-to-position orientation flips on minus positions).  Throws
 * validation_error when the last digit is already maximal.
 */
bool adjacency_check(const Cylinder& cyl);

// intervals of the depth-1..depth prefixes of seq; each contains eval(seq)
std::vector<ClosedInterval> refine_to_point(const SystemDescriptor& sys,
                                            const DigitSequence& seq, long long depth);

} // namespace altradix
