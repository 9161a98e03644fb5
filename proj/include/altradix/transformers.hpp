#pragma once

#include <string>
#include <vector>

#include "altradix/cylinders.hpp"
#include "altradix/digits.hpp"
#include "altradix/rational.hpp"

namespace altradix {

// bijection on the digit alphabet {0, ..., s-1}
struct DigitPermutation {
    long long s = 2;
    std::vector<long long> table; // table[d] = image of d

    DigitPermutation(long long s_, std::vector<long long> table_);

    long long apply(long long digit) const;
    DigitPermutation inverse() const;
    static DigitPermutation identity(long long s);
};

// result.apply(x) == second.apply(first.apply(x))
DigitPermutation compose(const DigitPermutation& first, const DigitPermutation& second);

// the six permutations of {0,1,2} in lexicographic table order
std::vector<DigitPermutation> ternary_permutations();

/*
 * Bijection on blocks of k consecutive digits.  A block (c_1, ..., c_k) is
 * packed big-endian into an index c_1 s^{k-1} + ... + c_k; table[index] is
 * the packed image block.
 */
struct BlockTransformer {
    long long s = 2;
    long long k = 1;
    std::vector<long long> table; // s^k entries, a permutation of 0..s^k-1

    BlockTransformer(long long s_, long long k_, std::vector<long long> table_);

    static BlockTransformer from_permutation(const DigitPermutation& perm);
    BlockTransformer inverse() const;

    std::vector<long long> apply_block(const std::vector<long long>& block) const;
};

/*
 * A cyclic schedule of block transformers over a common alphabet: item t
 * consumes the next k_t positions, and after the last item the schedule
 * restarts from the first.  One full pass spans sum(k_t) positions.
 */
struct TransformerSchedule {
    std::vector<BlockTransformer> blocks;

    explicit TransformerSchedule(std::vector<BlockTransformer> blocks_);

    long long s() const { return blocks.front().s; }
    long long span() const;
};

TransformerSchedule invert_schedule(const TransformerSchedule& sch);

/*
 * Text forms:
 *   perm:s=3;map=0,2,1
 *   block:s=2;k=2;map=00>01,01>00,10>10,11>11
 * A schedule is items joined by ";".  Block map keys/values are one digit
 * character per position, so the block form is limited to s <= 10.
 */
DigitPermutation parse_permutation(const std::string& text);
BlockTransformer parse_block_transformer(const std::string& text);
TransformerSchedule parse_schedule(const std::string& text);
std::string format_permutation(const DigitPermutation& perm);
std::string format_block_transformer(const BlockTransformer& block);
std::string format_schedule(const TransformerSchedule& sch);

// transformed digit sequence; finite input yields finite output when possible
DigitSequence apply_schedule(const TransformerSchedule& sch, const DigitSequence& seq);

// value of a pseudo representation: plain s-adic value of the transformed digits
RationalNumber eval_pseudo(const TransformerSchedule& sch, const DigitSequence& seq);

/*
 * Image of a cylinder under the schedule.  The system must be the plain
 * s-adic system of the schedule's alphabet and the rank must land on a
 * completed-blocks boundary.
 */
Cylinder cylinder_image(const TransformerSchedule& sch, const Cylinder& cyl);

struct SparseSeriesResult {
    RationalNumber value;
    DigitSequence digits;
};

/*
 * Partial sums of the ternary series sum_k (2 - g_k) / 3^(a_1 + ... + a_k)
 * with g_k in {1,2} and gap lengths a_k >= 1, together with the digit string
 * that carries sigma(g_k) at position a_1 + ... + a_k (sigma = 0,2,1) and
 * zeros elsewhere.
 */
SparseSeriesResult sparse_series_value(const std::vector<long long>& a,
                                       const std::vector<long long>& g, long long terms);

} // namespace altradix
