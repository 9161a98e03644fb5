#include "altradix/transformers.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "altradix/errors.hpp"
#include "altradix/eval.hpp"

namespace altradix {

namespace {

void check_permutation_table(const std::vector<long long>& table, long long size,
                             const char* what) {
    if (static_cast<long long>(table.size()) != size) {
        throw validation_error(std::string(what) + " table must have " + std::to_string(size) +
                               " entries");
    }
    std::vector<bool> seen(static_cast<std::size_t>(size), false);
    for (long long v : table) {
        if (v < 0 || v >= size || seen[static_cast<std::size_t>(v)]) {
            throw validation_error(std::string(what) + " table is not a bijection");
        }
        seen[static_cast<std::size_t>(v)] = true;
    }
}

// s^k with a hard cap so block tables stay addressable
long long block_table_size(long long s, long long k) {
    constexpr long long cap = 1'048'576;
    long long size = 1;
    for (long long i = 0; i < k; ++i) {
        if (size > cap / s) {
            throw validation_error("block transformer table exceeds " + std::to_string(cap) +
                                   " entries");
        }
        size *= s;
    }
    return size;
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = text.find(sep, start);
        if (pos == std::string::npos) {
            out.push_back(text.substr(start));
            return out;
        }
        out.push_back(text.substr(start, pos - start));
        start = pos + 1;
    }
}

long long parse_int_field(const std::string& text, const std::string& what) {
    if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
        throw parse_error("expected a nonnegative integer for " + what + ", got '" + text + "'");
    }
    if (text.size() > 9) {
        throw parse_error(what + " value '" + text + "' is too large");
    }
    long long v = 0;
    for (char c : text) v = v * 10 + (c - '0');
    return v;
}

// key=value fields after the kind prefix; every key required exactly once
std::string take_field(const std::vector<std::string>& fields, const std::string& key,
                       const std::string& kind) {
    std::string found;
    bool have = false;
    for (const std::string& f : fields) {
        const std::size_t eq = f.find('=');
        if (eq == std::string::npos) {
            throw parse_error("malformed field '" + f + "' in " + kind + " transformer");
        }
        if (f.substr(0, eq) == key) {
            if (have) {
                throw parse_error("duplicate field '" + key + "' in " + kind + " transformer");
            }
            found = f.substr(eq + 1);
            have = true;
        }
    }
    if (!have) {
        throw parse_error("missing field '" + key + "' in " + kind + " transformer");
    }
    return found;
}

long long pack_block(const std::vector<long long>& block, long long s) {
    long long idx = 0;
    for (long long d : block) idx = idx * s + d;
    return idx;
}

std::vector<long long> unpack_block(long long idx, long long s, long long k) {
    std::vector<long long> block(static_cast<std::size_t>(k));
    for (long long j = k - 1; j >= 0; --j) {
        block[static_cast<std::size_t>(j)] = idx % s;
        idx /= s;
    }
    return block;
}

} // namespace

DigitPermutation::DigitPermutation(long long s_, std::vector<long long> table_)
    : s(s_), table(std::move(table_)) {
    if (s < 2) {
        throw validation_error("permutation alphabet must have s >= 2");
    }
    check_permutation_table(table, s, "permutation");
}

long long DigitPermutation::apply(long long digit) const {
    if (digit < 0 || digit >= s) {
        throw validation_error("digit " + std::to_string(digit) + " outside alphabet 0.." +
                               std::to_string(s - 1));
    }
    return table[static_cast<std::size_t>(digit)];
}

DigitPermutation DigitPermutation::inverse() const {
    std::vector<long long> inv(table.size());
    for (long long d = 0; d < s; ++d) {
        inv[static_cast<std::size_t>(table[static_cast<std::size_t>(d)])] = d;
    }
    return DigitPermutation(s, std::move(inv));
}

DigitPermutation DigitPermutation::identity(long long s) {
    std::vector<long long> table(static_cast<std::size_t>(s));
    std::iota(table.begin(), table.end(), 0);
    return DigitPermutation(s, std::move(table));
}

DigitPermutation compose(const DigitPermutation& first, const DigitPermutation& second) {
    if (first.s != second.s) {
        throw validation_error("cannot compose permutations over different alphabets");
    }
    std::vector<long long> table(static_cast<std::size_t>(first.s));
    for (long long d = 0; d < first.s; ++d) {
        table[static_cast<std::size_t>(d)] = second.apply(first.apply(d));
    }
    return DigitPermutation(first.s, std::move(table));
}

std::vector<DigitPermutation> ternary_permutations() {
    return {
        DigitPermutation(3, {0, 1, 2}), DigitPermutation(3, {0, 2, 1}),
        DigitPermutation(3, {1, 0, 2}), DigitPermutation(3, {1, 2, 0}),
        DigitPermutation(3, {2, 0, 1}), DigitPermutation(3, {2, 1, 0}),
    };
}

BlockTransformer::BlockTransformer(long long s_, long long k_, std::vector<long long> table_)
    : s(s_), k(k_), table(std::move(table_)) {
    if (s < 2) {
        throw validation_error("block transformer alphabet must have s >= 2");
    }
    if (k < 1) {
        throw validation_error("block length must be >= 1");
    }
    check_permutation_table(table, block_table_size(s, k), "block transformer");
}

BlockTransformer BlockTransformer::from_permutation(const DigitPermutation& perm) {
    return BlockTransformer(perm.s, 1, perm.table);
}

BlockTransformer BlockTransformer::inverse() const {
    std::vector<long long> inv(table.size());
    for (std::size_t i = 0; i < table.size(); ++i) {
        inv[static_cast<std::size_t>(table[i])] = static_cast<long long>(i);
    }
    return BlockTransformer(s, k, std::move(inv));
}

std::vector<long long> BlockTransformer::apply_block(const std::vector<long long>& block) const {
    if (static_cast<long long>(block.size()) != k) {
        throw validation_error("block has " + std::to_string(block.size()) +
                               " digits, expected " + std::to_string(k));
    }
    for (long long d : block) {
        if (d < 0 || d >= s) {
            throw validation_error("digit " + std::to_string(d) + " outside alphabet 0.." +
                                   std::to_string(s - 1));
        }
    }
    return unpack_block(table[static_cast<std::size_t>(pack_block(block, s))], s, k);
}

TransformerSchedule::TransformerSchedule(std::vector<BlockTransformer> blocks_)
    : blocks(std::move(blocks_)) {
    if (blocks.empty()) {
        throw validation_error("transformer schedule must contain at least one item");
    }
    for (const BlockTransformer& b : blocks) {
        if (b.s != blocks.front().s) {
            throw validation_error("all schedule items must share one alphabet");
        }
    }
}

long long TransformerSchedule::span() const {
    long long total = 0;
    for (const BlockTransformer& b : blocks) total += b.k;
    return total;
}

TransformerSchedule invert_schedule(const TransformerSchedule& sch) {
    std::vector<BlockTransformer> inv;
    inv.reserve(sch.blocks.size());
    // items act on disjoint position chunks, so inversion keeps their order
    for (const BlockTransformer& b : sch.blocks) inv.push_back(b.inverse());
    return TransformerSchedule(std::move(inv));
}

DigitPermutation parse_permutation(const std::string& text) {
    constexpr std::string_view prefix = "perm:";
    if (text.rfind(prefix, 0) != 0) {
        throw parse_error("permutation must start with 'perm:'");
    }
    const std::vector<std::string> fields = split(text.substr(prefix.size()), ';');
    const long long s = parse_int_field(take_field(fields, "s", "perm"), "s");
    const std::string map = take_field(fields, "map", "perm");
    std::vector<long long> table;
    for (const std::string& entry : split(map, ',')) {
        table.push_back(parse_int_field(entry, "map entry"));
    }
    try {
        return DigitPermutation(s, std::move(table));
    } catch (const validation_error& e) {
        throw parse_error(e.what());
    }
}

BlockTransformer parse_block_transformer(const std::string& text) {
    constexpr std::string_view prefix = "block:";
    if (text.rfind(prefix, 0) != 0) {
        throw parse_error("block transformer must start with 'block:'");
    }
    const std::vector<std::string> fields = split(text.substr(prefix.size()), ';');
    const long long s = parse_int_field(take_field(fields, "s", "block"), "s");
    const long long k = parse_int_field(take_field(fields, "k", "block"), "k");
    if (s > 10) {
        throw parse_error("block transformer text form uses one digit character per "
                          "position and requires s <= 10");
    }
    if (s < 2 || k < 1) {
        throw parse_error("block transformer needs s >= 2 and k >= 1");
    }
    const long long size = block_table_size(s, k);
    std::vector<long long> table(static_cast<std::size_t>(size), -1);
    const auto parse_side = [&](const std::string& side) {
        if (static_cast<long long>(side.size()) != k) {
            throw parse_error("block '" + side + "' must have exactly " + std::to_string(k) +
                              " digits");
        }
        long long idx = 0;
        for (char c : side) {
            if (c < '0' || c >= '0' + s) {
                throw parse_error("character '" + std::string(1, c) + "' in block '" + side +
                                  "' is not a digit below " + std::to_string(s));
            }
            idx = idx * s + (c - '0');
        }
        return idx;
    };
    for (const std::string& entry : split(take_field(fields, "map", "block"), ',')) {
        const std::size_t gt = entry.find('>');
        if (gt == std::string::npos) {
            throw parse_error("block map entry '" + entry + "' must look like IN>OUT");
        }
        const long long in = parse_side(entry.substr(0, gt));
        const long long out = parse_side(entry.substr(gt + 1));
        if (table[static_cast<std::size_t>(in)] != -1) {
            throw parse_error("block map lists input '" + entry.substr(0, gt) + "' twice");
        }
        table[static_cast<std::size_t>(in)] = out;
    }
    for (long long i = 0; i < size; ++i) {
        if (table[static_cast<std::size_t>(i)] == -1) {
            throw parse_error("block map is missing an entry for packed input " +
                              std::to_string(i));
        }
    }
    try {
        return BlockTransformer(s, k, std::move(table));
    } catch (const validation_error& e) {
        throw parse_error(e.what());
    }
}

TransformerSchedule parse_schedule(const std::string& text) {
    const std::vector<std::string> chunks = split(text, ';');
    std::vector<std::string> items;
    for (const std::string& chunk : chunks) {
        if (chunk.rfind("perm:", 0) == 0 || chunk.rfind("block:", 0) == 0) {
            items.push_back(chunk);
        } else if (!items.empty()) {
            items.back() += ';' + chunk; // continuation of the current item's fields
        } else {
            throw parse_error("schedule must start with 'perm:' or 'block:'");
        }
    }
    std::vector<BlockTransformer> blocks;
    for (const std::string& item : items) {
        if (item.rfind("perm:", 0) == 0) {
            blocks.push_back(BlockTransformer::from_permutation(parse_permutation(item)));
        } else {
            blocks.push_back(parse_block_transformer(item));
        }
    }
    try {
        return TransformerSchedule(std::move(blocks));
    } catch (const validation_error& e) {
        throw parse_error(e.what());
    }
}

std::string format_permutation(const DigitPermutation& perm) {
    std::string out = "perm:s=" + std::to_string(perm.s) + ";map=";
    for (std::size_t i = 0; i < perm.table.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(perm.table[i]);
    }
    return out;
}

std::string format_block_transformer(const BlockTransformer& block) {
    if (block.s > 10) {
        throw validation_error("block transformer text form requires s <= 10");
    }
    std::string out =
        "block:s=" + std::to_string(block.s) + ";k=" + std::to_string(block.k) + ";map=";
    const auto side = [&](long long idx) {
        std::string digits;
        for (long long d : unpack_block(idx, block.s, block.k)) {
            digits += static_cast<char>('0' + d);
        }
        return digits;
    };
    for (std::size_t i = 0; i < block.table.size(); ++i) {
        if (i > 0) out += ',';
        out += side(static_cast<long long>(i)) + '>' + side(block.table[i]);
    }
    return out;
}

std::string format_schedule(const TransformerSchedule& sch) {
    std::string out;
    for (std::size_t i = 0; i < sch.blocks.size(); ++i) {
        if (i > 0) out += ';';
        const BlockTransformer& b = sch.blocks[i];
        if (b.k == 1) {
            out += format_permutation(DigitPermutation(b.s, b.table));
        } else {
            out += format_block_transformer(b);
        }
    }
    return out;
}

DigitSequence apply_schedule(const TransformerSchedule& sch, const DigitSequence& seq) {
    const long long s = sch.s();
    const auto check_digit = [&](long long d) {
        if (d < 0 || d >= s) {
            throw validation_error("digit " + std::to_string(d) + " outside alphabet 0.." +
                                   std::to_string(s - 1));
        }
    };
    for (long long d : seq.prefix_digits) check_digit(d);
    if (seq.period_digits) {
        for (long long d : *seq.period_digits) check_digit(d);
    }

    const bool was_finite = !seq.period_digits.has_value();
    const long long p_in = static_cast<long long>(seq.prefix_digits.size());
    const long long l_in =
        was_finite ? 1 : static_cast<long long>(seq.period_digits->size());
    const long long span = sch.span();

    // output prefix ends at the first completed-blocks boundary covering the
    // input prefix; the period spans whole schedule passes
    long long p_out = 0;
    std::size_t t = 0;
    while (p_out < p_in) {
        p_out += sch.blocks[t].k;
        t = (t + 1) % sch.blocks.size();
    }
    const long long l_out = std::lcm(l_in, span);

    std::vector<long long> out;
    out.reserve(static_cast<std::size_t>(p_out + l_out));
    t = 0;
    long long pos = 1; // next input position to consume
    while (static_cast<long long>(out.size()) < p_out + l_out) {
        const BlockTransformer& b = sch.blocks[t];
        t = (t + 1) % sch.blocks.size();
        std::vector<long long> block(static_cast<std::size_t>(b.k));
        for (long long j = 0; j < b.k; ++j) {
            block[static_cast<std::size_t>(j)] = seq.digit_at(pos++);
        }
        for (long long d : b.apply_block(block)) out.push_back(d);
    }
    out.resize(static_cast<std::size_t>(p_out + l_out));

    // absolute anchoring: position n lives at cycle slot (n-1) mod l_out, so
    // the slice out[p_out..p_out+l_out) is rotated into place, not copied
    std::vector<long long> period(static_cast<std::size_t>(l_out));
    for (long long n = p_out + 1; n <= p_out + l_out; ++n) {
        period[static_cast<std::size_t>((n - 1) % l_out)] = out[static_cast<std::size_t>(n - 1)];
    }
    if (was_finite && std::all_of(period.begin(), period.end(), [](long long d) { return d == 0; })) {
        DigitSequence fin;
        fin.prefix_digits.assign(out.begin(), out.begin() + p_out);
        return fin.normalized();
    }
    DigitSequence res;
    res.prefix_digits.assign(out.begin(), out.begin() + p_out);
    res.period_digits = std::move(period);
    return res.normalized();
}

RationalNumber eval_pseudo(const TransformerSchedule& sch, const DigitSequence& seq) {
    const SAdicSystem plain(sch.s(), SignSet{});
    return eval_sadic(plain, apply_schedule(sch, seq));
}

Cylinder cylinder_image(const TransformerSchedule& sch, const Cylinder& cyl) {
    const SAdicSystem* sa = std::get_if<SAdicSystem>(&cyl.sys);
    if (sa == nullptr || sa->b.classify() != SignClass::empty) {
        throw validation_error("cylinder images require the plain s-adic system of the "
                               "schedule's alphabet");
    }
    if (sa->s != sch.s()) {
        throw validation_error("cylinder alphabet s=" + std::to_string(sa->s) +
                               " does not match schedule alphabet s=" + std::to_string(sch.s()));
    }
    const long long rank = cyl.rank();
    std::vector<long long> image;
    image.reserve(cyl.base.size());
    std::size_t t = 0;
    long long pos = 0; // input digits consumed so far
    while (pos < rank) {
        const BlockTransformer& b = sch.blocks[t];
        t = (t + 1) % sch.blocks.size();
        if (pos + b.k > rank) {
            throw validation_error("cylinder rank " + std::to_string(rank) +
                                   " does not end on a completed-blocks boundary");
        }
        std::vector<long long> block(cyl.base.begin() + pos, cyl.base.begin() + pos + b.k);
        for (long long d : b.apply_block(block)) image.push_back(d);
        pos += b.k;
    }
    return Cylinder(cyl.sys, std::move(image));
}

SparseSeriesResult sparse_series_value(const std::vector<long long>& a,
                                       const std::vector<long long>& g, long long terms) {
    if (terms < 0) {
        throw validation_error("sparse series term count must be >= 0");
    }
    if (static_cast<long long>(a.size()) < terms || static_cast<long long>(g.size()) < terms) {
        throw validation_error("sparse series needs " + std::to_string(terms) +
                               " gap lengths and marks");
    }
    RationalNumber value = 0;
    long long cum = 0;
    std::vector<long long> digits;
    // sigma carries the mark into the digit string: 1 -> 2, 2 -> 1
    const long long sigma[3] = {0, 2, 1};
    for (long long kk = 0; kk < terms; ++kk) {
        const long long gap = a[static_cast<std::size_t>(kk)];
        const long long mark = g[static_cast<std::size_t>(kk)];
        if (gap < 1) {
            throw validation_error("gap lengths must be >= 1");
        }
        if (mark < 1 || mark > 2) {
            throw validation_error("marks must be 1 or 2");
        }
        cum += gap;
        if (cum > 100000) {
            throw validation_error("sparse series positions grow past 100000");
        }
        value += rat_from_parts(2 - mark, int_pow(3, cum));
        digits.resize(static_cast<std::size_t>(cum), 0);
        digits.back() = sigma[mark];
    }
    SparseSeriesResult res;
    res.value = value;
    res.digits.prefix_digits = std::move(digits);
    return res;
}

} // namespace altradix
