#pragma once

#include "betanum/expansion.hpp"
#include "betanum/words.hpp"

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace betanum {

/// Least beta-integer greater than x together with the letter coding the
/// gap: the short gap beta - p (letter B) is tried first, the long gap 1
/// (letter A) otherwise.
std::pair<FinElem, Letter> successor(const Params& P, const FinElem& x);

/// The first count nonnegative beta-integers in increasing order.
std::vector<FinElem> enumerate_beta_integers(const Params& P, std::size_t count);

/// x + beta^l for an integer expansion x (admissible, no fractional part):
/// bumps the digit at position l and rewrites.  Either the sum is again a
/// beta-integer, or the result carries the single fractional digit p-q.
DigitString add_beta_power(const Params& P, const DigitString& x, std::int64_t l);

struct AdditionReport {
    DigitString sum_expansion;
    std::int64_t fp;      // fractional length, at most ceil(p/q)
    std::int64_t epsilon; // the unique eps with sum - eps(p-q)/beta a beta-integer
};

/// Exact expansion of x + y for nonnegative beta-integers, with the
/// fractional length and the epsilon decomposition.
AdditionReport add_beta_integers(const Params& P, const FinElem& x, const FinElem& y);

/// The unique eps in {0..ceil(p/q)} such that sum - eps*(p-q)/beta is a
/// beta-integer; existence and uniqueness are asserted, not assumed.
/// Note (p-q)/beta = (p+1) - beta exactly.
std::int64_t epsilon_decomposition(const Params& P, const FinElem& sum);

/// Expansion of j*(p-q)/beta for 1 <= j <= floor((p-1)/q):
/// (j-1) . a_j ... a_1 with a_1 = p-q and a_i = (p-1) - i q.
DigitString fractional_multiple_expansion(const Params& P, std::int64_t j);

enum class DifferenceKind { BetaInteger, NotInFinite };

struct DifferenceResult {
    DifferenceKind kind;
    FinElem value; // x - y (meaningful for BetaInteger)
};

/// x - y for beta-integers x >= y >= 0: either again a beta-integer or
/// with no finite expansion at all.  A finite expansion with a nonzero
/// fractional part would violate that dichotomy and raises a logic error.
DifferenceResult subtract_check(const Params& P, const FinElem& x, const FinElem& y);

struct SearchOptions {
    int threads = 0;              // 0 = hardware concurrency
    std::size_t witness_cap = 16; // extremal pairs retained in the report
};

struct SearchReport {
    std::int64_t p = 0;
    std::int64_t q = 0;
    std::int64_t digit_bound = 0;
    std::int64_t max_fp = 0;
    std::map<std::int64_t, std::uint64_t> histogram; // fp -> ordered-pair count
    std::vector<std::pair<DigitString, DigitString>> witnesses;
};

/// Exhaustive fp(x+y) scan over all ordered pairs of nonnegative
/// beta-integers with at most digit_bound expansion digits.  The sum value
/// depends only on the digitwise sums, which are memoized; pair iteration
/// may be split across workers, merged deterministically.
SearchReport lplus_search(const Params& P, std::int64_t digit_bound,
                          const SearchOptions& options = {});

/// All admissible integer digit strings with at most digit_bound digits
/// (exactly the beta-integers below beta^digit_bound), in increasing order.
std::vector<DigitString> admissible_integers(const Params& P, std::int64_t digit_bound);

struct LowerBoundWitness {
    FinElem x;
    FinElem z;
    std::int64_t fp_value;
};

/// A concrete pair with fp(x + z) >= floor((p-1)/q): x starts the segment
/// of beta-integers whose gaps spell the B-maximal factor w^(T+1), z is
/// the beta-integer addressed by the equal-length gap-word prefix.
/// Requires q <= p-2 (the bound is trivial for the quadratic unit).
LowerBoundWitness lower_bound_witness(const Params& P, std::size_t search_budget = 4'000'000);

} // namespace betanum
