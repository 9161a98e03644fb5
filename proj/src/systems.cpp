#include "altradix/systems.hpp"

#include <cctype>
#include <fstream>
#include <istream>
#include <numeric>
#include <sstream>

namespace altradix {

CantorSystem::CantorSystem(std::vector<long long> pre, std::vector<long long> per, SignSet b_)
    : d_prefix(std::move(pre)), d_period(std::move(per)), b(std::move(b_))
{
    if (d_period.empty())
        throw validation_error("Cantor system needs a nonempty base period");
    for (long long d : d_prefix)
        if (d < 2)
            throw validation_error("Cantor base " + std::to_string(d) + " must be >= 2");
    for (long long d : d_period)
        if (d < 2)
            throw validation_error("Cantor base " + std::to_string(d) + " must be >= 2");
}

namespace {

void check_column(const Column& col, long long index_for_message)
{
    const std::string where = "column " + std::to_string(index_for_message);
    if (col.m() < 1)
        throw validation_error(where + ": needs at least two entries (m_n >= 1)");
    RationalNumber sum = 0;
    for (const auto& q : col.q) {
        if (q <= 0)
            throw validation_error(where + ": entries must be positive");
        if (q >= 1)
            throw validation_error(where + ": entries must be < 1");
        sum += q;
    }
    if (sum != 1)
        throw validation_error(where + ": entries must sum to exactly 1 (got " +
                               format_rational(sum) + ")");
}

} // namespace

QTildeSystem::QTildeSystem(std::vector<Column> pre, std::vector<Column> per, SignSet b_)
    : column_prefix(std::move(pre)), column_period(std::move(per)), b(std::move(b_))
{
    if (column_period.empty())
        throw validation_error("Q-tilde system needs a nonempty column period");
    long long n = 1;
    for (const auto& c : column_prefix)
        check_column(c, n++);
    for (const auto& c : column_period)
        check_column(c, n++);
}

const SignSet& sign_set(const SystemDescriptor& sys)
{
    return std::visit([](const auto& s) -> const SignSet& { return s.b; }, sys);
}

long long alphabet_size(const SystemDescriptor& sys, long long n)
{
    if (const auto* sa = std::get_if<SAdicSystem>(&sys))
        return sa->s;
    if (const auto* ca = std::get_if<CantorSystem>(&sys))
        return ca->base_at(n);
    return std::get<QTildeSystem>(sys).m_at(n) + 1;
}

long long system_prefix_length(const SystemDescriptor& sys)
{
    const long long mask = sign_set(sys).prefix_length();
    if (std::holds_alternative<SAdicSystem>(sys))
        return mask;
    if (const auto* ca = std::get_if<CantorSystem>(&sys))
        return std::max(mask, ca->base_prefix_length());
    return std::max(mask, std::get<QTildeSystem>(sys).column_prefix_length());
}

long long system_period_length(const SystemDescriptor& sys)
{
    const long long mask = sign_set(sys).period_length();
    if (std::holds_alternative<SAdicSystem>(sys))
        return mask;
    if (const auto* ca = std::get_if<CantorSystem>(&sys))
        return std::lcm(mask, ca->base_period_length());
    return std::lcm(mask, std::get<QTildeSystem>(sys).column_period_length());
}

void validate(const DigitSequence& seq, const SystemDescriptor& sys)
{
    // Cover the prefixes plus one full joint period, so every alignment of
    // the digit cycle against the base/column cycle gets checked.
    const long long P = std::max(seq.prefix_length(), system_prefix_length(sys));
    const long long L = std::lcm(std::max<long long>(seq.period_length(), 1),
                                 system_period_length(sys));
    for (long long n = 1; n <= P + L; ++n) {
        const long long digit = seq.digit_at(n);
        const long long size = alphabet_size(sys, n);
        if (digit < 0 || digit >= size)
            throw validation_error("digit " + std::to_string(digit) +
                                   " out of alphabet at position " + std::to_string(n));
    }
}

bool is_valid(const DigitSequence& seq, const SystemDescriptor& sys)
{
    try {
        validate(seq, sys);
        return true;
    } catch (const validation_error&) {
        return false;
    }
}

namespace {

// beta picks the alphabet max on N_B and 0 off it; gamma the reverse.
DigitSequence extremal_sequence(const SystemDescriptor& sys, bool beta)
{
    const SignSet& b = sign_set(sys);
    const long long P = system_prefix_length(sys);
    const long long L = system_period_length(sys);
    DigitSequence out;
    out.period_digits.emplace(static_cast<std::size_t>(L), 0);
    for (long long n = 1; n <= P + L; ++n) {
        const bool in_b = b.member(n);
        const long long top = alphabet_size(sys, n) - 1;
        const long long digit = (beta == in_b) ? top : 0;
        if (n <= P)
            out.prefix_digits.push_back(digit);
        else // absolute anchoring: position n lives at cycle slot (n-1) mod L
            (*out.period_digits)[static_cast<std::size_t>((n - 1) % L)] = digit;
    }
    return out.normalized();
}

} // namespace

DigitSequence beta_sequence(const SAdicSystem& sys) { return extremal_sequence(sys, true); }
DigitSequence gamma_sequence(const SAdicSystem& sys) { return extremal_sequence(sys, false); }
DigitSequence beta_sequence(const CantorSystem& sys) { return extremal_sequence(sys, true); }
DigitSequence gamma_sequence(const CantorSystem& sys) { return extremal_sequence(sys, false); }

DigitSequence beta_sequence(const SystemDescriptor& sys)
{
    if (std::holds_alternative<QTildeSystem>(sys))
        throw validation_error("beta_sequence is not defined for Q-tilde systems");
    return extremal_sequence(sys, true);
}

DigitSequence gamma_sequence(const SystemDescriptor& sys)
{
    if (std::holds_alternative<QTildeSystem>(sys))
        throw validation_error("gamma_sequence is not defined for Q-tilde systems");
    return extremal_sequence(sys, false);
}

namespace {

// "key=value" pairs split on ';' inside "name(...)"
struct SpecBody {
    std::string name;
    std::vector<std::pair<std::string, std::string>> args;

    const std::string* find(const std::string& key) const
    {
        for (const auto& [k, v] : args)
            if (k == key)
                return &v;
        return nullptr;
    }
};

SpecBody split_spec(std::string_view spec)
{
    const std::size_t open = spec.find('(');
    if (open == std::string_view::npos || spec.back() != ')')
        throw parse_error("system spec must look like name(key=value;...)");
    SpecBody out;
    out.name = std::string(spec.substr(0, open));
    std::string_view body = spec.substr(open + 1, spec.size() - open - 2);
    while (!body.empty()) {
        const std::size_t semi = body.find(';');
        std::string_view item = body.substr(0, semi);
        const std::size_t eq = item.find('=');
        if (eq == std::string_view::npos)
            throw parse_error("system spec item '" + std::string(item) + "' needs key=value");
        out.args.emplace_back(std::string(item.substr(0, eq)), std::string(item.substr(eq + 1)));
        if (semi == std::string_view::npos)
            break;
        body.remove_prefix(semi + 1);
    }
    return out;
}

long long parse_small_int(std::string_view text, const char* what)
{
    if (text.empty())
        throw parse_error(std::string(what) + ": empty integer");
    long long v = 0;
    for (char c : text) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw parse_error(std::string(what) + ": bad integer '" + std::string(text) + "'");
        if (v > 100000000000000LL)
            throw parse_error(std::string(what) + ": integer too large");
        v = v * 10 + (c - '0');
    }
    return v;
}

// "23" -> [2,3]; "12.10" -> [12,10]
std::vector<long long> parse_int_list(std::string_view text, const char* what)
{
    std::vector<long long> out;
    if (text.empty())
        return out;
    if (text.find('.') != std::string_view::npos) {
        while (true) {
            const std::size_t dot = text.find('.');
            out.push_back(parse_small_int(text.substr(0, dot), what));
            if (dot == std::string_view::npos)
                break;
            text.remove_prefix(dot + 1);
        }
    } else {
        for (char c : text)
            out.push_back(parse_small_int(std::string_view(&c, 1), what));
    }
    return out;
}

// "pre:<ints>,per:<ints>"
std::pair<std::vector<long long>, std::vector<long long>> parse_base_lists(std::string_view text)
{
    constexpr std::string_view pre_tag = "pre:";
    constexpr std::string_view per_tag = "per:";
    if (text.substr(0, pre_tag.size()) != pre_tag)
        throw parse_error("base list must start with 'pre:'");
    text.remove_prefix(pre_tag.size());
    const std::size_t comma = text.find(',');
    if (comma == std::string_view::npos)
        throw parse_error("base list needs a ',per:' section");
    std::string_view pre = text.substr(0, comma);
    std::string_view rest = text.substr(comma + 1);
    if (rest.substr(0, per_tag.size()) != per_tag)
        throw parse_error("base list needs 'per:' after the comma");
    return {parse_int_list(pre, "base"), parse_int_list(rest.substr(per_tag.size()), "base")};
}

} // namespace

QTildeSystem parse_qtilde_columns(std::istream& in, SignSet b)
{
    std::vector<Column> pre, per;
    std::vector<Column>* target = nullptr;
    std::string line;
    long long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        // strip comment and surrounding whitespace
        if (const std::size_t hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos)
            continue;
        std::size_t last = line.find_last_not_of(" \t\r");
        std::string trimmed = line.substr(first, last - first + 1);
        if (trimmed == "PRE") {
            target = &pre;
            continue;
        }
        if (trimmed == "PER") {
            target = &per;
            continue;
        }
        if (!target)
            throw parse_error("line " + std::to_string(lineno) +
                              ": column data before a PRE/PER header");
        Column col;
        std::istringstream row(trimmed);
        std::string tok;
        while (row >> tok)
            col.q.push_back(parse_rational(tok));
        target->push_back(std::move(col));
    }
    if (per.empty())
        throw parse_error("Q-tilde file needs a nonempty PER section");
    return QTildeSystem(std::move(pre), std::move(per), std::move(b));
}

SystemDescriptor parse_system(std::string_view spec, std::string_view qfile_override)
{
    const SpecBody body = split_spec(spec);
    const std::string* mask_text = body.find("B");
    if (!mask_text)
        throw parse_error("system spec needs a B=pre:...,per:... mask");
    SignSet b = SignSet::parse(*mask_text);

    if (body.name == "sadic") {
        const std::string* s_text = body.find("s");
        if (!s_text)
            throw parse_error("sadic spec needs s=<int>");
        return SAdicSystem(parse_small_int(*s_text, "s"), std::move(b));
    }
    if (body.name == "cantor") {
        const std::string* d_text = body.find("D");
        if (!d_text)
            throw parse_error("cantor spec needs D=pre:<ints>,per:<ints>");
        auto [pre, per] = parse_base_lists(*d_text);
        return CantorSystem(std::move(pre), std::move(per), std::move(b));
    }
    if (body.name == "qtilde") {
        const std::string* file_text = body.find("file");
        std::string path = qfile_override.empty()
                               ? (file_text ? *file_text : std::string())
                               : std::string(qfile_override);
        if (path.empty())
            throw parse_error("qtilde spec needs file=<path> (or a --qfile override)");
        std::ifstream in(path);
        if (!in)
            throw parse_error("cannot open Q-tilde file '" + path + "'");
        return parse_qtilde_columns(in, std::move(b));
    }
    throw parse_error("unknown system family '" + body.name + "'");
}

} // namespace altradix
