#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "altradix/cylinders.hpp"
#include "altradix/encode.hpp"
#include "altradix/identities.hpp"
#include "altradix/selfcheck.hpp"
#include "altradix/transformers.hpp"

namespace {

using namespace altradix;

std::string exact_line(const std::vector<RationalNumber>& vals) {
    std::string out;
    for (std::size_t i = 0; i < vals.size(); ++i) {
        if (i > 0) out += "  ";
        out += format_rational_explicit(vals[i]);
    }
    return out;
}

std::string decimal_line(const std::vector<RationalNumber>& vals, long long places) {
    std::string out;
    for (std::size_t i = 0; i < vals.size(); ++i) {
        if (i > 0) out += "  ";
        out += decimal_string(vals[i], places);
    }
    return out;
}

RationalNumber residual_bound(const ClosedInterval& box) {
    const RationalNumber alo = box.lo < 0 ? RationalNumber(-box.lo) : box.lo;
    const RationalNumber ahi = box.hi < 0 ? RationalNumber(-box.hi) : box.hi;
    return alo > ahi ? alo : ahi;
}

std::vector<long long> finite_base_digits(const DigitSequence& seq) {
    if (seq.has_period()) {
        throw validation_error("cylinder bases are finite digit strings (no period group)");
    }
    return seq.prefix_digits;
}

int run(int argc, char** argv) {
    CLI::App app{"Exact arithmetic for sign-alternating positional numeral systems"};
    app.require_subcommand(1);

    std::string system_spec;
    std::string digits_text;
    std::string value_text;
    std::string qfile;
    std::string schedule_text;
    long long places = 12;
    long long max_digits = 64;
    long long depth = 0;
    long long trials = 1;
    unsigned long long seed = 1;
    bool invert = false;

    const auto add_system = [&](CLI::App* cmd) {
        cmd->add_option("--system", system_spec, "system spec, e.g. sadic(s=3;B=pre:,per:01)")
            ->required();
        cmd->add_option("--qfile", qfile, "column file for qtilde systems");
    };

    CLI::App* c_eval = app.add_subcommand("eval", "value of a digit string");
    add_system(c_eval);
    c_eval->add_option("--digits", digits_text, "digit string")->required();
    c_eval->add_option("--places", places, "decimal places on the second line");

    CLI::App* c_convert = app.add_subcommand("convert", "digit string of a rational");
    add_system(c_convert);
    c_convert->add_option("--value", value_text, "rational p/q")->required();
    c_convert->add_option("--max-digits", max_digits, "positions before truncating");

    CLI::App* c_range = app.add_subcommand("range", "exact representable interval");
    add_system(c_range);
    c_range->add_option("--places", places, "decimal places on the second line");

    CLI::App* c_duals = app.add_subcommand("duals", "both representations of a value");
    add_system(c_duals);
    c_duals->add_option("--digits", digits_text, "digit string")->required();

    CLI::App* c_cyl = app.add_subcommand("cylinder", "interval of a digit prefix");
    add_system(c_cyl);
    c_cyl->add_option("--digits", digits_text, "finite base, or any string with --depth")
        ->required();
    c_cyl->add_option("--depth", depth, "print the nested intervals of ranks 1..depth");
    c_cyl->add_option("--places", places, "decimal places on the second line");

    CLI::App* c_tf = app.add_subcommand("transform", "apply a transformer schedule");
    add_system(c_tf);
    c_tf->add_option("--digits", digits_text, "digit string")->required();
    c_tf->add_option("--schedule", schedule_text, "e.g. perm:s=3;map=0,2,1")->required();
    c_tf->add_flag("--invert", invert, "apply the inverted schedule");
    c_tf->add_option("--places", places, "decimal places");

    CLI::App* c_check = app.add_subcommand("selfcheck", "run the invariant suites");
    c_check->add_option("--trials", trials, "trial count multiplier");
    c_check->add_option("--seed", seed, "random seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        std::cout << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        std::cout << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 1;
    }
    if (places < 1 || max_digits < 1 || depth < 0 || trials < 1) {
        std::cerr << "usage error: --places/--max-digits/--trials must be positive\n";
        return 1;
    }

    if (c_eval->parsed()) {
        const SystemDescriptor sys = parse_system(system_spec, qfile);
        const DigitSequence seq = parse_digits(digits_text);
        validate(seq, sys);
        const RationalNumber v = eval(sys, seq);
        std::cout << exact_line({v}) << '\n' << decimal_line({v}, places) << '\n';
        return 0;
    }
    if (c_convert->parsed()) {
        const SystemDescriptor sys = parse_system(system_spec, qfile);
        const RationalNumber x = parse_rational(value_text);
        const EncodeResult res = encode(sys, x, max_digits);
        std::cout << format_digits(res.digits) << '\n';
        if (res.exact) {
            std::cout << "exact: " << format_rational_explicit(x) << '\n';
        } else {
            std::cout << "residual<=: "
                      << format_rational_explicit(residual_bound(res.residual_interval)) << '\n';
        }
        return 0;
    }
    if (c_range->parsed()) {
        const SystemDescriptor sys = parse_system(system_spec, qfile);
        const ClosedInterval box = range_bounds(sys);
        std::cout << exact_line({box.lo, box.hi}) << '\n'
                  << decimal_line({box.lo, box.hi}, places) << '\n';
        return 0;
    }
    if (c_duals->parsed()) {
        const SystemDescriptor sys = parse_system(system_spec, qfile);
        const DigitSequence seq = parse_digits(digits_text);
        validate(seq, sys);
        const auto partner = dual_representation(sys, seq);
        if (!partner) {
            std::cout << "none\n";
        } else {
            std::cout << format_digits(seq.normalized()) << '\n'
                      << format_digits(*partner) << '\n';
        }
        return 0;
    }
    if (c_cyl->parsed()) {
        const SystemDescriptor sys = parse_system(system_spec, qfile);
        const DigitSequence seq = parse_digits(digits_text);
        if (depth > 0) {
            validate(seq, sys);
            for (const ClosedInterval& box : refine_to_point(sys, seq, depth)) {
                std::cout << exact_line({box.lo, box.hi, box.width()}) << '\n';
            }
        } else {
            const Cylinder cyl(sys, finite_base_digits(seq));
            const ClosedInterval box = interval(cyl);
            std::cout << exact_line({box.lo, box.hi, box.width()}) << '\n'
                      << decimal_line({box.lo, box.hi, box.width()}, places) << '\n';
        }
        return 0;
    }
    if (c_tf->parsed()) {
        const SystemDescriptor sys = parse_system(system_spec, qfile);
        const SAdicSystem* sa = std::get_if<SAdicSystem>(&sys);
        TransformerSchedule sch = parse_schedule(schedule_text);
        if (invert) sch = invert_schedule(sch);
        if (sa == nullptr || sa->s != sch.s()) {
            throw validation_error("transform needs an s-adic system matching the schedule "
                                   "alphabet");
        }
        const DigitSequence seq = parse_digits(digits_text);
        validate(seq, sys);
        const DigitSequence image = apply_schedule(sch, seq);
        const RationalNumber v = eval(sys, image);
        std::cout << format_digits(image) << '\n'
                  << exact_line({v}) << '\n'
                  << decimal_line({v}, places) << '\n';
        return 0;
    }
    // selfcheck
    const auto suites = run_selfcheck(trials, seed);
    long long cases = 0, failures = 0;
    for (const SuiteResult& s : suites) {
        std::cout << s.name << ": " << s.cases << " cases, " << s.failures << " failures";
        if (!s.notes.empty()) std::cout << " [" << s.notes << "]";
        std::cout << '\n';
        cases += s.cases;
        failures += s.failures;
    }
    if (failures > 0) {
        std::cout << "selfcheck: FAIL (" << failures << "/" << cases << " checks failed)\n";
        return 4;
    }
    std::cout << "selfcheck: PASS (" << cases << " checks)\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const range_error& e) {
        std::cerr << "range error: " << e.what() << '\n';
        return 2;
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return 3;
    } catch (const validation_error& e) {
        std::cerr << "validation error: " << e.what() << '\n';
        return 3;
    } catch (const internal_error& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 4;
    }
}
