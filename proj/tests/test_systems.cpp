#include <doctest.h>

#include <sstream>

#include "altradix/systems.hpp"

using namespace altradix;

namespace {
const SignSet evens({}, {false, true});
const SignSet empty_set({}, {false});
const SignSet first_only({true}, {false}); // N_B = {1}
} // namespace

TEST_CASE("system constructors validate")
{
    CHECK_THROWS_AS(SAdicSystem(1, evens), validation_error);
    CHECK_THROWS_AS(CantorSystem({2, 1}, {2}, evens), validation_error);
    CHECK_THROWS_AS(CantorSystem({}, {}, evens), validation_error);
    CHECK_NOTHROW(CantorSystem({}, {2, 3}, evens));

    Column half{{RationalNumber(1, 2), RationalNumber(1, 2)}};
    CHECK_NOTHROW(QTildeSystem({}, {half}, evens));
    Column bad_sum{{RationalNumber(1, 2), RationalNumber(1, 3)}};
    CHECK_THROWS_AS(QTildeSystem({}, {bad_sum}, evens), validation_error);
    Column single{{RationalNumber(1)}}; // m = 0
    CHECK_THROWS_AS(QTildeSystem({}, {single}, evens), validation_error);
    Column zero_entry{{RationalNumber(0), RationalNumber(1)}};
    CHECK_THROWS_AS(QTildeSystem({}, {zero_entry}, evens), validation_error);
}

TEST_CASE("base and column lookup anchor absolutely")
{
    const CantorSystem c({4}, {2, 3}, empty_set);
    CHECK(c.base_at(1) == 4);
    CHECK(c.base_at(2) == 3); // cycle slot (2-1) mod 2 = 1
    CHECK(c.base_at(3) == 2);
    CHECK(c.base_at(4) == 3);

    Column a{{RationalNumber(1, 2), RationalNumber(1, 2)}};
    Column b{{RationalNumber(1, 4), RationalNumber(1, 4), RationalNumber(1, 2)}};
    const QTildeSystem q({a}, {a, b}, empty_set);
    CHECK(q.m_at(1) == 1);
    CHECK(q.m_at(2) == 2); // period slot 1
    CHECK(q.m_at(3) == 1);
}

TEST_CASE("validate against alphabets")
{
    const SystemDescriptor s3{SAdicSystem(3, empty_set)};
    CHECK_NOTHROW(validate(parse_digits("2 (0)"), s3));
    CHECK_THROWS_WITH_AS(validate(parse_digits("3 (0)"), s3),
                         "digit 3 out of alphabet at position 1", validation_error);

    const SystemDescriptor c23{CantorSystem({}, {2, 3}, empty_set)};
    CHECK_NOTHROW(validate(parse_digits("(1 2)"), c23));
    CHECK_THROWS_WITH_AS(validate(parse_digits("(2 1)"), c23),
                         "digit 2 out of alphabet at position 1", validation_error);
    // misaligned digit period vs base period: period (1) is fine for D=(2,3),
    // period (2) is not (positions 1,3,5,... have base 2)
    CHECK_NOTHROW(validate(parse_digits("(1)"), c23));
    CHECK_THROWS_AS(validate(parse_digits("(2)"), c23), validation_error);
    // the offense may sit past the digit prefix
    CHECK_THROWS_WITH_AS(validate(parse_digits("1 1 (0 0 2)"), c23),
                         "digit 2 out of alphabet at position 3", validation_error);
    // finite strings zero-pad and zeros are always admissible
    CHECK_NOTHROW(validate(parse_digits("1 1"), c23));
    CHECK(is_valid(parse_digits("1 1"), c23));
    CHECK(!is_valid(parse_digits("(2)"), c23));
}

TEST_CASE("beta/gamma sequences")
{
    const SystemDescriptor s3{SAdicSystem(3, evens)};
    CHECK(format_digits(beta_sequence(s3)) == "(0 2)");
    CHECK(format_digits(gamma_sequence(s3)) == "(2 0)");

    const SystemDescriptor s10{SAdicSystem(10, empty_set)};
    CHECK(format_digits(beta_sequence(s10)) == "(0)");
    CHECK(format_digits(gamma_sequence(s10)) == "(9)");

    const SystemDescriptor c23{CantorSystem({}, {2, 3}, first_only)};
    CHECK(format_digits(beta_sequence(c23)) == "1 (0)");
    CHECK(format_digits(gamma_sequence(c23)) == "0 (1 2)");

    // positionwise oracle: beta picks the alphabet max exactly on N_B
    for (long long n = 1; n <= 12; ++n) {
        const auto b = beta_sequence(c23), g = gamma_sequence(c23);
        const bool in_b = sign_set(c23).member(n);
        CHECK(b.digit_at(n) == (in_b ? alphabet_size(c23, n) - 1 : 0));
        CHECK(g.digit_at(n) == (in_b ? 0 : alphabet_size(c23, n) - 1));
    }
    // beta/gamma validate against their system
    CHECK_NOTHROW(validate(beta_sequence(c23), c23));
    CHECK_NOTHROW(validate(gamma_sequence(c23), c23));

    Column half{{RationalNumber(1, 2), RationalNumber(1, 2)}};
    const SystemDescriptor qt{QTildeSystem({}, {half}, evens)};
    CHECK_THROWS_AS(beta_sequence(qt), validation_error);
    CHECK_THROWS_AS(gamma_sequence(qt), validation_error);
}

TEST_CASE("parse_system grammar")
{
    {
        const SystemDescriptor sys = parse_system("sadic(s=3;B=pre:,per:01)");
        const auto& sa = std::get<SAdicSystem>(sys);
        CHECK(sa.s == 3);
        CHECK(sa.b.same_set(evens));
    }
    {
        const SystemDescriptor sys = parse_system("cantor(D=pre:,per:23;B=pre:1,per:0)");
        const auto& ca = std::get<CantorSystem>(sys);
        CHECK(ca.d_prefix.empty());
        CHECK(ca.d_period == std::vector<long long>{2, 3});
        CHECK(ca.b.same_set(first_only));
    }
    {
        // multi-digit bases use '.' separators
        const SystemDescriptor sys = parse_system("cantor(D=pre:12.10,per:7;B=pre:,per:)");
        const auto& ca = std::get<CantorSystem>(sys);
        CHECK(ca.d_prefix == std::vector<long long>{12, 10});
        CHECK(ca.d_period == std::vector<long long>{7});
    }
    CHECK_THROWS_AS(parse_system("sadic(s=3)"), parse_error);
    CHECK_THROWS_AS(parse_system("sadic(B=pre:,per:)"), parse_error);
    CHECK_THROWS_AS(parse_system("fancy(s=3;B=pre:,per:)"), parse_error);
    CHECK_THROWS_AS(parse_system("sadic(s=1;B=pre:,per:)"), validation_error);
    CHECK_THROWS_AS(parse_system("qtilde(B=pre:,per:)"), parse_error); // no file anywhere
}

TEST_CASE("qtilde column file")
{
    std::istringstream in(
        "# two-column cycle\n"
        "PRE\n"
        "1/3 2/3\n"
        "PER\n"
        "1/2 1/2\n"
        "1/4 1/4 1/2\n");
    const QTildeSystem sys = parse_qtilde_columns(in, empty_set);
    CHECK(sys.column_prefix_length() == 1);
    CHECK(sys.column_period_length() == 2);
    CHECK(sys.m_at(1) == 1);
    // absolute anchoring: position 2 reads period slot (2-1) mod 2 = 1,
    // the three-entry column
    CHECK(sys.m_at(2) == 2);
    CHECK(sys.column_at(2).q.size() == 3);
    CHECK(sys.column_at(3).q.size() == 2);

    std::istringstream missing_per("PRE\n1/2 1/2\n");
    CHECK_THROWS_AS(parse_qtilde_columns(missing_per, empty_set), parse_error);
    std::istringstream headerless("1/2 1/2\n");
    CHECK_THROWS_AS(parse_qtilde_columns(headerless, empty_set), parse_error);
    std::istringstream bad_sum("PER\n1/2 1/3\n");
    CHECK_THROWS_AS(parse_qtilde_columns(bad_sum, empty_set), validation_error);
}
