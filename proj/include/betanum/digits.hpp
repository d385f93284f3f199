#pragma once

#include "betanum/ring.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace betanum {

/// A finite digit string over nonnegative integer digits, most significant
/// first, anchored by the exponent of its first digit; positions decrease
/// by one per digit.  Canonical form carries no leading and no trailing
/// zero digit; the empty string denotes 0.  Digits are unbounded on input,
/// only expansions are admissibility-constrained.
class DigitString {
public:
    DigitString() = default; // zero

    /// Trims leading/trailing zeros and fixes the anchor accordingly.
    static DigitString make(std::vector<Int> digits, std::int64_t msd_exponent);

    /// Builds from an integer part (may be empty) and a fractional part
    /// whose first digit sits at position -1.
    static DigitString from_parts(std::vector<Int> integer_digits,
                                  std::vector<Int> fractional_digits);

    bool is_zero() const { return digits_.empty(); }
    const std::vector<Int>& digits() const { return digits_; }
    std::int64_t msd_exponent() const { return msd_exp_; }

    /// Exponent of the last stored digit; 0 for the zero string.
    std::int64_t lsd_exponent() const {
        return digits_.empty() ? 0 : msd_exp_ - static_cast<std::int64_t>(digits_.size()) + 1;
    }

    /// Number of digits strictly below position 0.
    std::int64_t fractional_length() const {
        const std::int64_t lsd = lsd_exponent();
        return lsd < 0 ? -lsd : 0;
    }

    /// Digit at the given exponent, 0 outside the stored range.
    Int digit_at(std::int64_t position) const;

    Int digit_sum() const;
    Int fractional_digit_sum() const;

    friend bool operator==(const DigitString&, const DigitString&) = default;

private:
    std::vector<Int> digits_;
    std::int64_t msd_exp_ = 0;
};

/// Text form: digits juxtaposed when all are <= 9, comma-separated
/// otherwise; the fractional point prints as "." and replaces the
/// separator at its boundary (e.g. "1200.3", "12,0,0.11").  A wide string
/// that would come out comma-free gains a redundant leading "0," token so
/// parsing stays unambiguous.
std::string to_text(const DigitString& ds);

/// Inverse of to_text; also accepts the UTF-8 bullet for the point and
/// ignores whitespace.  parse_digits(to_text(d)) == d exactly.
DigitString parse_digits(std::string_view text);

/// Exact value sum digits[i] * beta^position(i), as a canonical FinElem.
FinElem evaluate(const Params& P, const DigitString& ds);

/// True iff every digit is <= p and no factor p q^s d with d > q occurs.
/// Scanning stops at the explicit digits: a terminal run p q^s is fine
/// because only zeros follow conceptually.
bool is_admissible(const Params& P, const DigitString& ds);

/// Repeatedly rewrites the leftmost violation until admissible:
///   - a digit d >= p+1 loses k(p+1) with k = d div (p+1), sending k one
///     position up and k(p-q) one position down;
///   - a pattern p q^s d with d >= q+1 is flattened to zeros (d keeps
///     d-q-1), sending 1 above and p-q below the pattern.
/// Both moves preserve the value and strictly decrease the digit sum, so
/// the rewriting terminates, and the admissible result is the expansion
/// of the value.
DigitString normalize_rewrite(const Params& P, const DigitString& ds);

/// Fractional length of an admissible string; throws NotAdmissible.
std::int64_t fp(const Params& P, const DigitString& ds);

} // namespace betanum
