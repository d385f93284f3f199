#include "betanum/expansion.hpp"

#include <map>
#include <stdexcept>
#include <utility>

namespace betanum {

namespace {

// Largest d <= p with d <= t; t is subtracted down to the residue.
std::int64_t take_digit(const Params& P, FinElem& t) {
    const FinElem one{RingElem{1, 0}};
    std::int64_t d = 0;
    for (;;) {
        if (d > P.p()) throw std::logic_error("greedy digit exceeded p");
        if (cmp(P, t, one) < 0) break;
        t = sub(P, t, one);
        ++d;
    }
    return d;
}

} // namespace

ExpansionResult greedy_expand(const Params& P, const FinElem& x, std::int64_t fractional_budget) {
    if (fractional_budget < 1) throw OutOfRange("fractional budget must be positive");
    if (x.is_zero()) return Finite{DigitString{}};
    if (sign(P, x) < 0) throw NegativeInput("expansion is defined for x >= 0");

    std::vector<Int> digits;
    std::int64_t msd = -1;
    FinElem rem; // scaled remainder in [0, 1) once the integer digits are out
    const FinElem one{RingElem{1, 0}};
    if (cmp(P, x, one) >= 0) {
        // leading exponent k >= 0 with beta^k <= x < beta^(k+1)
        std::int64_t k = 0;
        FinElem pow = one;
        for (;;) {
            const FinElem next = times_beta_pow(P, pow, 1);
            if (cmp(P, next, x) > 0) break;
            pow = next;
            ++k;
        }
        msd = k;
        FinElem r = x;
        for (std::int64_t pos = k; pos >= 0; --pos) {
            std::int64_t d = 0;
            for (;;) {
                if (d > P.p()) throw std::logic_error("greedy digit exceeded p");
                if (cmp(P, pow, r) > 0) break;
                r = sub(P, r, pow);
                ++d;
            }
            digits.emplace_back(d);
            if (pos > 0) pow = times_beta_pow(P, pow, -1);
        }
        rem = r;
    } else {
        rem = x;
    }

    // fractional phase on the scaled remainder: digit = floor(beta * rem)
    std::map<FinElem, std::int64_t, FinElemKeyLess> seen;
    std::int64_t pos = -1;
    std::int64_t emitted = 0;
    for (;;) {
        if (rem.is_zero()) return Finite{DigitString::make(std::move(digits), msd)};
        const auto [it, inserted] = seen.emplace(rem, pos);
        if (!inserted) {
            const std::int64_t first = it->second;
            const auto cycle = static_cast<std::size_t>(first - pos);
            std::vector<Int> period(digits.end() - static_cast<std::ptrdiff_t>(cycle),
                                    digits.end());
            digits.resize(digits.size() - cycle);
            return EventuallyPeriodic{DigitString::make(std::move(digits), msd),
                                      std::move(period), first};
        }
        if (emitted >= fractional_budget)
            return BudgetExceeded{DigitString::make(std::move(digits), msd)};
        ++emitted;
        FinElem t = times_beta_pow(P, rem, 1);
        digits.emplace_back(take_digit(P, t));
        rem = std::move(t);
        --pos;
    }
}

bool is_beta_integer(const Params& P, const FinElem& x) {
    if (x.is_zero()) return true;
    if (sign(P, x) < 0) return is_beta_integer(P, x.negated());
    if (!x.in_ring()) return false; // beta-integers lie in Z[beta]
    const auto r = greedy_expand(P, x, kDecisionBudget);
    if (const Finite* fin = as_finite(r)) return fin->digits.fractional_length() == 0;
    if (as_budget_exceeded(r))
        throw std::logic_error("expansion did not cycle within the decision budget");
    return false;
}

} // namespace betanum
