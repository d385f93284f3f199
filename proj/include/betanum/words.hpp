#pragma once

#include "betanum/ring.hpp"

#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace betanum {

/// Default cap on materialized word length.
inline constexpr std::size_t kDefaultWordBudget = 2'000'000;

/// Gap alphabet of the beta-integers: A codes the long gap 1, B the short
/// gap beta - p.
enum class Letter : char { A = 'A', B = 'B' };

/// Words are ASCII strings over {'A', 'B'}.
using Word = std::string;

/// Image under the substitution A -> A^p B, B -> A^q B.
Word substitute(const Params& P, std::string_view w);

/// The infinite gap word u: fixed point of the substitution, coding the
/// gaps between consecutive nonnegative beta-integers.  Prefixes are
/// materialized on demand and every materialized prefix is a prefix of
/// its own image.
class GapWord {
public:
    explicit GapWord(const Params& P) : params_(P), buf_("A") {}

    std::string_view prefix(std::size_t n);

private:
    Params params_;
    Word buf_;
};

/// The infinite word w with w = B phi(w); its prefixes carry at least as
/// many Bs as any equal-length factor of the gap word.
class CompanionWord {
public:
    explicit CompanionWord(const Params& P) : params_(P), buf_("B") {}

    std::string_view prefix(std::size_t n);

private:
    Params params_;
    Word buf_;
};

/// Convenience copies of stream prefixes.
Word u_prefix(const Params& P, std::size_t n);
Word companion_prefix(const Params& P, std::size_t n);

/// The n-th companion word w^(1) = B, w^(n) = B phi(w^(n-1)); n >= 1.
Word companion_word(const Params& P, std::int64_t n);

/// Letter counts of w^(n), computed without materializing it:
/// A' = p A + q B, B' = A + B + 1 from (0, 1).
struct LetterCounts {
    std::int64_t a;
    std::int64_t b;
    std::int64_t length() const { return a + b; }
};
LetterCounts companion_counts(const Params& P, std::int64_t n);

std::int64_t count_letter(std::string_view w, Letter l);

enum class DefectMethod { Bruteforce, Recurrence, ClosedForm };

/// Defect sequence D_n: count of B in w^(n) minus count of B in the gap
/// word prefix of the same length.  Bruteforce counts both words;
/// Recurrence uses D_{n+1} = 1 + |v|_B with v the suffix of the image of
/// the gap prefix of length (p-q)D_n - 1; ClosedForm is
///   D_n = n for n <= t, n-1 for t+1 <= n <= T+1, T for n >= T+1,
/// with t = defect_knee() and T = balance_bound().  All three agree.
std::vector<std::int64_t> defect_sequence(const Params& P, std::int64_t n_max,
                                          DefectMethod method,
                                          std::size_t word_budget = kDefaultWordBudget);

/// Checks the claimed suffix of the gap-word prefix of length |w^(n)|:
/// A^{(n-1)q+n} for n <= t, A^p B A^{(n-1)(q+1)-p} for t+1 <= n <= T+1,
/// A^{T-1} for n >= T+1.
bool suffix_form_check(const Params& P, std::int64_t n,
                       std::size_t word_budget = kDefaultWordBudget);

struct WindowStats {
    std::int64_t window;
    std::int64_t min_a;
    std::int64_t max_a;
    std::int64_t prefix_a; // A-count of the gap-word prefix of this length
    std::int64_t spread() const { return max_a - min_a; }
};

struct BalanceReport {
    std::vector<WindowStats> windows;
    std::int64_t max_spread = 0;
};

/// Sliding-window letter counts over the gap-word prefix for every window
/// length up to max_window.
BalanceReport balance_scan(const Params& P, std::size_t prefix_len, std::size_t max_window);

/// The beta-integer addressed by the gap-word prefix of length n:
/// |prefix|_A * 1 + |prefix|_B * (beta - p).
FinElem beta_integer_from_prefix(const Params& P, std::size_t n);

struct StructureReport {
    std::size_t prefix_budget = 0;
    bool runs_ok = false;                    // interior A-runs have length p or q
    std::set<std::int64_t> run_lengths;      // observed interior run lengths
    std::int64_t companion_words_checked = 0;
    bool companion_factors_ok = false;       // each w^(n) occurs in the gap word
    bool companion_chain_ok = false;         // w^(n+1) = w^(n) . (gap prefix) . B
    std::size_t preimage_samples = 0;
    bool preimage_ok = false;                // sampled BvB factors have a unique preimage
    bool q1_extrapolation = false;           // q == 1 sits outside the q > 1 regime
                                             // the word analysis assumes

    bool all_ok() const {
        return runs_ok && companion_factors_ok && companion_chain_ok && preimage_ok;
    }
};

/// Scans a materialized prefix for the structural facts above.  A factor
/// not found within the budget is reported as a failure of the bounded
/// check, not as a refutation.
StructureReport structure_checks(const Params& P, std::size_t prefix_budget);

} // namespace betanum
