#pragma once

#include <optional>
#include <utility>

#include "altradix/eval.hpp"

namespace altradix {

// which of the four duality cases applies at position n, by the membership
// pattern of (n, n+1)
enum class DualCase { both_in, in_out, out_in, both_out };

DualCase dual_case(const SignSet& b, long long n);

struct StandardForm {
    RationalNumber shift;   // the constant sum over N_B positions
    DigitSequence digits;   // mirrored digits: top - digit on N_B, unchanged off it
};

/*
 * Quasi-to-standard digit identity: eval_quasi(seq) + shift equals the plain
 * (empty sign set) value of the mirrored digits, exactly.
 */
StandardForm to_standard(const SAdicSystem& sys, const DigitSequence& seq);
StandardForm to_standard(const CantorSystem& sys, const DigitSequence& seq);
StandardForm to_standard(const SystemDescriptor& sys, const DigitSequence& seq);

// Positionwise digit mirror i -> m_n - i on N_B; an involution.  The
// sign-alternating value of seq equals the standard value of the result.
DigitSequence to_standard_qtilde(const QTildeSystem& sys, const DigitSequence& seq);

/*
 * The second representation of the same value, when one exists.  A sequence
 * has a partner exactly when it agrees with the beta tail (or the gamma
 * tail) everywhere past some position n >= 1 and differs at n; the partner
 * changes the digit at n one step toward the other tail and swaps the tail.
 * Numbers with a unique representation return nullopt.
 */
std::optional<DigitSequence> dual_representation(const SAdicSystem& sys,
                                                 const DigitSequence& seq);
std::optional<DigitSequence> dual_representation(const CantorSystem& sys,
                                                 const DigitSequence& seq);
std::optional<DigitSequence> dual_representation(const SystemDescriptor& sys,
                                                 const DigitSequence& seq);

/*
 * Named-mask specialization check: with an empty sign set the evaluator must
 * coincide with the plain positional value, and with the all-odd/all-even
 * sets with an independently coded alternating-sign evaluator, on random
 * sequences.  Throws validation_error for other masks.
 */
struct SpecializationReport {
    SignClass mask_class;
    long long cases = 0;
    long long failures = 0;

    bool ok() const { return failures == 0; }
};

SpecializationReport is_specialization_consistent(const SystemDescriptor& sys,
                                                  long long trials = 100,
                                                  unsigned long long seed = 1);

} // namespace altradix
