#pragma once

#include "betanum/digits.hpp"

#include <variant>
#include <vector>

namespace betanum {

/// Default cap on emitted fractional digits for user-facing expansion;
/// the finite expansions of interest here have far fewer.
inline constexpr std::int64_t kDefaultFractionalBudget = 64;

/// Cap used when an operation must decide finiteness.  Remainders live in
/// a finite set (both embeddings of the remainder orbit are bounded), so a
/// repeat always occurs; hitting this cap is reported as a logic error
/// rather than guessed around.
inline constexpr std::int64_t kDecisionBudget = 1'000'000;

struct Finite {
    DigitString digits;
};

struct EventuallyPeriodic {
    DigitString preperiod;    // digits before the repeating block
    std::vector<Int> period;  // the repeating fractional digit block
    std::int64_t period_start; // exponent of period.front(), always < 0
};

struct BudgetExceeded {
    DigitString partial; // digits emitted before the budget ran out
};

using ExpansionResult = std::variant<Finite, EventuallyPeriodic, BudgetExceeded>;

/// Greedy expansion of x >= 0 with exact comparisons throughout: the
/// leading exponent k satisfies beta^k <= x < beta^(k+1) and each digit is
/// the largest d <= p with d*beta^i <= remainder.  Stops on a zero
/// remainder (Finite), on a remainder seen before at a fractional position
/// (EventuallyPeriodic, cycle read off the remainder log), or once
/// fractional_budget fractional digits were emitted (BudgetExceeded).
ExpansionResult greedy_expand(const Params& P, const FinElem& x,
                              std::int64_t fractional_budget = kDefaultFractionalBudget);

/// True iff the expansion of |x| is finite with no fractional digits.
/// Negative inputs use the sign symmetry of the beta-integers.
bool is_beta_integer(const Params& P, const FinElem& x);

inline const Finite* as_finite(const ExpansionResult& r) { return std::get_if<Finite>(&r); }
inline const EventuallyPeriodic* as_periodic(const ExpansionResult& r) {
    return std::get_if<EventuallyPeriodic>(&r);
}
inline const BudgetExceeded* as_budget_exceeded(const ExpansionResult& r) {
    return std::get_if<BudgetExceeded>(&r);
}

} // namespace betanum
