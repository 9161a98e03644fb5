#pragma once

#include "altradix/errors.hpp"
#include "altradix/rational.hpp"

namespace altradix {

// Closed interval [lo, hi] with exact rational endpoints.
struct ClosedInterval {
    RationalNumber lo;
    RationalNumber hi;

    ClosedInterval() = default;
    ClosedInterval(RationalNumber lo_, RationalNumber hi_)
        : lo(std::move(lo_)), hi(std::move(hi_))
    {
        if (lo > hi)
            throw validation_error("interval endpoints out of order");
    }

    RationalNumber width() const { return hi - lo; }

    bool contains(const RationalNumber& x) const { return lo <= x && x <= hi; }

    bool operator==(const ClosedInterval&) const = default;
};

} // namespace altradix
