#include "altradix/cylinders.hpp"

#include <string>
#include <utility>

#include "altradix/errors.hpp"

namespace altradix {

namespace {

void check_family(const SystemDescriptor& sys) {
    if (std::holds_alternative<QTildeSystem>(sys)) {
        throw validation_error("cylinders are defined for s-adic and Cantor systems only");
    }
}

DigitSequence finite_sequence(const std::vector<long long>& digits) {
    DigitSequence seq;
    seq.prefix_digits = digits;
    return seq;
}

} // namespace

Cylinder::Cylinder(SystemDescriptor sys_, std::vector<long long> base_)
    : sys(std::move(sys_)), base(std::move(base_)) {
    check_family(sys);
    for (std::size_t i = 0; i < base.size(); ++i) {
        const long long n = static_cast<long long>(i) + 1;
        const long long d = alphabet_size(sys, n);
        if (base[i] < 0 || base[i] >= d) {
            throw validation_error("digit " + std::to_string(base[i]) +
                                   " out of alphabet at position " + std::to_string(n));
        }
    }
}

ClosedInterval interval(const Cylinder& cyl) {
    const RationalNumber partial = partial_value(cyl.sys, finite_sequence(cyl.base), cyl.rank());
    const ClosedInterval tail = tail_bounds(cyl.sys, cyl.rank());
    return ClosedInterval(partial + tail.lo, partial + tail.hi);
}

RationalNumber length(const Cylinder& cyl) {
    return interval(cyl).width();
}

std::vector<Cylinder> children(const Cylinder& cyl) {
    const long long next = cyl.rank() + 1;
    const long long d = alphabet_size(cyl.sys, next);
    std::vector<Cylinder> out;
    out.reserve(static_cast<std::size_t>(d));
    for (long long a = 0; a < d; ++a) {
        std::vector<long long> digits = cyl.base;
        digits.push_back(a);
        out.emplace_back(cyl.sys, std::move(digits));
    }
    return out;
}

bool adjacency_check(const Cylinder& cyl) {
    if (cyl.base.empty()) {
        throw validation_error("adjacency is defined for cylinders of rank >= 1");
    }
    const long long n = cyl.rank();
    const long long top = alphabet_size(cyl.sys, n) - 1;
    if (cyl.base.back() >= top) {
        throw validation_error("digit " + std::to_string(cyl.base.back()) +
                               " at position " + std::to_string(n) +
                               " is maximal; no next sibling");
    }
    std::vector<long long> next_digits = cyl.base;
    next_digits.back() += 1;
    const Cylinder sibling(cyl.sys, next_digits);
    const ClosedInterval a = interval(cyl);
    const ClosedInterval b = interval(sibling);
    // increasing the digit moves the value down on minus positions, up elsewhere
    if (sign_set(cyl.sys).member(n)) {
        return a.lo == b.hi;
    }
    return a.hi == b.lo;
}

std::vector<ClosedInterval> refine_to_point(const SystemDescriptor& sys,
                                            const DigitSequence& seq, long long depth) {
    check_family(sys);
    if (depth < 0) {
        throw validation_error("refinement depth must be nonnegative");
    }
    validate(seq, sys);
    std::vector<ClosedInterval> out;
    out.reserve(static_cast<std::size_t>(depth));
    std::vector<long long> digits;
    digits.reserve(static_cast<std::size_t>(depth));
    for (long long n = 1; n <= depth; ++n) {
        digits.push_back(seq.digit_at(n));
        out.push_back(interval(Cylinder(sys, digits)));
    }
    return out;
}

} // namespace altradix
