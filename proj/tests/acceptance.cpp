// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.  Budgets and tolerances are fixed here; every comparison is
// exact.

#include "betanum/cli.hpp"
#include "betanum/digits.hpp"
#include "betanum/expansion.hpp"
#include "betanum/words.hpp"
#include "betanum/zbeta.hpp"

#include <cstdint>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace betanum;

namespace {

using Pair = std::pair<std::int64_t, std::int64_t>;

// the seven reference parameter pairs used by the heavy suites
const std::vector<Pair> kGrid7{{3, 1}, {4, 1}, {4, 2}, {5, 2}, {5, 3}, {7, 2}, {9, 4}};
// quadratic units exercised where q = p-1 has its own claims
const std::vector<Pair> kUnits{{3, 2}, {4, 3}, {5, 4}};

std::vector<Pair> range_grid() {
    std::vector<Pair> out;
    for (std::int64_t p = 3; p <= 20; ++p)
        for (std::int64_t q = 1; q <= p - 2; ++q) out.push_back({p, q});
    return out;
}

DigitString ds(std::vector<std::int64_t> digits, std::int64_t msd) {
    std::vector<Int> v(digits.begin(), digits.end());
    return DigitString::make(std::move(v), msd);
}

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string& what) {
        pass = false;
        if (!detail.empty()) detail += "; ";
        detail += what;
    }
};

std::string pq(std::int64_t p, std::int64_t q) {
    return "(" + std::to_string(p) + "," + std::to_string(q) + ")";
}

// 1. normalize((p+2) q (q+1).) = 1200.(p-q) for 1 <= q <= p-2 <= 18
Outcome criterion1() {
    Outcome out;
    int cases = 0;
    for (const auto& [p, q] : range_grid()) {
        const Params P(p, q);
        const DigitString input = ds({p + 2, q, q + 1}, 2);
        const DigitString want = DigitString::from_parts(
            {Int(1), Int(2), Int(0), Int(0)}, {Int(p - q)});
        if (!(normalize_rewrite(P, input) == want)) out.fail("mismatch at " + pq(p, q));
        ++cases;
    }
    out.detail = std::to_string(cases) + " parameter pairs, exact" +
                 (out.pass ? "" : "; " + out.detail);
    return out;
}

// 2. the two rewrite rules are exact value identities, s <= 6
Outcome criterion2() {
    Outcome out;
    auto grid = range_grid();
    grid.insert(grid.end(), kUnits.begin(), kUnits.end());
    int cases = 0;
    for (const auto& [p, q] : grid) {
        const Params P(p, q);
        if (!(evaluate(P, ds({p + 1}, 0)) ==
              evaluate(P, DigitString::from_parts({Int(1), Int(0)}, {Int(p - q)}))))
            out.fail("rule 1 at " + pq(p, q));
        for (std::int64_t s = 0; s <= 6; ++s) {
            std::vector<std::int64_t> lhs{p};
            lhs.insert(lhs.end(), static_cast<std::size_t>(s), q);
            lhs.push_back(q + 1);
            std::vector<Int> rhs_int{Int(1)};
            rhs_int.insert(rhs_int.end(), static_cast<std::size_t>(s) + 2, Int(0));
            if (!(evaluate(P, ds(std::move(lhs), s + 1)) ==
                  evaluate(P, DigitString::from_parts(std::move(rhs_int), {Int(p - q)}))))
                out.fail("rule 2 s=" + std::to_string(s) + " at " + pq(p, q));
            ++cases;
        }
    }
    out.detail = std::to_string(cases) + " identities, exact ring equality" +
                 (out.pass ? "" : "; " + out.detail);
    return out;
}

// 3. normalize_rewrite == greedy_expand . evaluate on 10^4 random strings
Outcome criterion3() {
    Outcome out;
    for (const auto& [p, q] : kGrid7) {
        const Params P(p, q);
        std::mt19937_64 rng(static_cast<std::uint64_t>(7'000'000 + 100 * p + q));
        std::uniform_int_distribution<std::int64_t> len(1, 8);
        std::uniform_int_distribution<std::int64_t> digit(0, 2 * p + 2);
        std::uniform_int_distribution<std::int64_t> anchor(-4, 4);
        for (int i = 0; i < 10000; ++i) {
            std::vector<Int> digits;
            const std::int64_t n = len(rng);
            for (std::int64_t k = 0; k < n; ++k) digits.emplace_back(digit(rng));
            const DigitString d = DigitString::make(std::move(digits), anchor(rng));
            const DigitString normalized = normalize_rewrite(P, d);
            const auto oracle = greedy_expand(P, evaluate(P, d), kDecisionBudget);
            const Finite* fin = as_finite(oracle);
            if (fin == nullptr || !(fin->digits == normalized)) {
                out.fail("divergence at " + pq(p, q) + " sample " + std::to_string(i));
                break;
            }
        }
    }
    out.detail = "7 pairs x 10^4 random strings" + (out.pass ? "" : "; " + out.detail);
    return out;
}

// 4. add_beta_power equals the greedy oracle; carried results end in (p-q)
Outcome criterion4() {
    Outcome out;
    std::uint64_t cases = 0;
    for (const auto& [p, q] : kGrid7) {
        const Params P(p, q);
        const auto corpus = admissible_integers(P, 4);
        for (const DigitString& x : corpus) {
            const FinElem vx = evaluate(P, x);
            for (std::int64_t l = 0; l <= 4; ++l) {
                const DigitString got = add_beta_power(P, x, l);
                const auto oracle =
                    greedy_expand(P, add(P, vx, FinElem{beta_pow(P, l)}), kDecisionBudget);
                const Finite* fin = as_finite(oracle);
                if (fin == nullptr || !(fin->digits == got)) {
                    out.fail("oracle mismatch at " + pq(p, q) + " x=" + to_text(x) +
                             " l=" + std::to_string(l));
                    return out;
                }
                if (got.fractional_length() != 0 &&
                    !(got.fractional_length() == 1 && got.digit_at(-1) == P.norm())) {
                    out.fail("fractional tail is not (p-q) at " + pq(p, q) +
                             " x=" + to_text(x) + " l=" + std::to_string(l));
                    return out;
                }
                ++cases;
            }
        }
    }
    out.detail = std::to_string(cases) + " (x, l) cases, exact string equality";
    return out;
}

// 5. defect sequence: bruteforce == recurrence == closed form while
//    |w^(n)| <= 2*10^5
Outcome criterion5() {
    Outcome out;
    const std::size_t budget = 200000;
    for (const auto& [p, q] : kGrid7) {
        const Params P(p, q);
        std::int64_t n_max = 0;
        while (static_cast<std::size_t>(companion_counts(P, n_max + 1).length()) <= budget)
            ++n_max;
        const auto brute = defect_sequence(P, n_max, DefectMethod::Bruteforce, budget);
        const auto rec = defect_sequence(P, n_max, DefectMethod::Recurrence, budget);
        const auto closed = defect_sequence(P, n_max, DefectMethod::ClosedForm);
        if (!(brute == rec) || !(rec == closed))
            out.fail("three-way mismatch at " + pq(p, q));
        if (p == 5 && q == 2) {
            const std::vector<std::int64_t> want{1, 2, 2, 2, 2};
            if (!std::equal(want.begin(), want.end(), brute.begin()))
                out.fail("(5,2) prefix mismatch");
        }
        if (p == 4 && q == 1) {
            const std::vector<std::int64_t> want{1, 2, 2, 3, 3, 3};
            if (!std::equal(want.begin(), want.end(), brute.begin()))
                out.fail("(4,1) prefix mismatch");
        }
    }
    out.detail = "7 pairs, all n with |w^(n)| <= 2*10^5" + (out.pass ? "" : "; " + out.detail);
    return out;
}

// 6. balance over u_prefix(10^5), windows <= 2000: bounded by and attaining
//    ceil((p-1)/q); prefix A-maximality; companion-prefix B-maximality
Outcome criterion6() {
    Outcome out;
    for (const auto& [p, q] : kGrid7) {
        const Params P(p, q);
        const std::size_t prefix_len = 100000;
        const std::size_t max_window = 2000;
        const BalanceReport rep = balance_scan(P, prefix_len, max_window);
        if (rep.max_spread != P.balance_bound())
            out.fail("spread " + std::to_string(rep.max_spread) + " != bound " +
                     std::to_string(P.balance_bound()) + " at " + pq(p, q));
        CompanionWord wstream(P);
        const std::string_view wpref = wstream.prefix(max_window);
        std::vector<std::int32_t> wb(max_window + 1, 0);
        for (std::size_t i = 0; i < max_window; ++i)
            wb[i + 1] = wb[i] + (wpref[i] == 'B' ? 1 : 0);
        for (const auto& wnd : rep.windows) {
            if (wnd.max_a != wnd.prefix_a) {
                out.fail("A-maximality fails at " + pq(p, q) + " window " +
                         std::to_string(wnd.window));
                break;
            }
            if (wnd.window - wnd.min_a > wb[static_cast<std::size_t>(wnd.window)]) {
                out.fail("B-maximality fails at " + pq(p, q) + " window " +
                         std::to_string(wnd.window));
                break;
            }
        }
    }
    out.detail = "7 pairs, prefix 10^5, windows <= 2000" + (out.pass ? "" : "; " + out.detail);
    return out;
}

// 7. exhaustive search bracket at digit_bound 4; == 1 for quadratic units
Outcome criterion7() {
    Outcome out;
    std::string conjecture;
    for (const auto& [p, q] : kGrid7) {
        const Params P(p, q);
        const SearchReport rep = lplus_search(P, 4);
        if (rep.max_fp < P.sum_fp_floor() || rep.max_fp > P.sum_fp_bound())
            out.fail("bracket violated at " + pq(p, q) + ": max_fp=" +
                     std::to_string(rep.max_fp));
        conjecture += pq(p, q) + (rep.max_fp == P.sum_fp_floor() ? "=yes " : "=NO ");
    }
    for (const auto& [p, q] : kUnits) {
        const Params P(p, q);
        const SearchReport rep = lplus_search(P, 4);
        if (rep.max_fp != 1)
            out.fail("unit case " + pq(p, q) + " gave max_fp=" + std::to_string(rep.max_fp));
    }
    out.detail = "bracket holds; conjectured value matched: " + conjecture +
                 (out.pass ? "" : "; " + out.detail);
    return out;
}

// 8. the scaled multiples j(p-q)/beta expand as claimed with fp = j
Outcome criterion8() {
    Outcome out;
    auto grid = range_grid();
    grid.insert(grid.end(), kGrid7.begin(), kGrid7.end());
    int cases = 0;
    for (const auto& [p, q] : grid) {
        const Params P(p, q);
        for (std::int64_t j = 1; j <= P.sum_fp_floor(); ++j) {
            const DigitString d = fractional_multiple_expansion(P, j);
            if (!(evaluate(P, d) == FinElem{scale(RingElem{p + 1, -1}, j)}))
                out.fail("value mismatch at " + pq(p, q) + " j=" + std::to_string(j));
            if (fp(P, d) != j) out.fail("fp mismatch at " + pq(p, q) + " j=" + std::to_string(j));
            ++cases;
        }
    }
    out.detail = std::to_string(cases) + " multiples, exact" +
                 (out.pass ? "" : "; " + out.detail);
    return out;
}

// 9. successor enumeration vs prefix addressing, gaps and letters
Outcome criterion9() {
    Outcome out;
    for (const auto& [p, q] : kGrid7) {
        const Params P(p, q);
        const std::size_t count = 10000;
        GapWord u(P);
        const std::string_view pref = u.prefix(count);
        FinElem x;
        std::int64_t na = 0;
        std::int64_t nb = 0;
        for (std::size_t i = 0; i < count; ++i) {
            if (!(x == FinElem{RingElem{na - nb * p, nb}})) {
                out.fail("prefix address mismatch at " + pq(p, q) + " n=" +
                         std::to_string(i));
                break;
            }
            const auto [next, letter] = successor(P, x);
            if (static_cast<char>(letter) != pref[i]) {
                out.fail("letter mismatch at " + pq(p, q) + " n=" + std::to_string(i));
                break;
            }
            const RingElem gap = next.num() - x.num();
            if (!(gap == RingElem{1, 0}) && !(gap == RingElem{-p, 1})) {
                out.fail("gap mismatch at " + pq(p, q) + " n=" + std::to_string(i));
                break;
            }
            (letter == Letter::A ? na : nb) += 1;
            x = next;
        }
    }
    out.detail = "7 pairs x 10^4 beta-integers" + (out.pass ? "" : "; " + out.detail);
    return out;
}

// 10. beta - 1 expands as (p-1).(q)^w
Outcome criterion10() {
    Outcome out;
    auto grid = range_grid();
    grid.insert(grid.end(), kGrid7.begin(), kGrid7.end());
    grid.insert(grid.end(), kUnits.begin(), kUnits.end());
    int cases = 0;
    for (const auto& [p, q] : grid) {
        const Params P(p, q);
        const auto r = greedy_expand(P, FinElem{RingElem{-1, 1}});
        const EventuallyPeriodic* ep = as_periodic(r);
        if (ep == nullptr || !(ep->preperiod == ds({p - 1}, 0)) ||
            !(ep->period == std::vector<Int>{Int(q)}) || ep->period_start != -1)
            out.fail("mismatch at " + pq(p, q));
        ++cases;
    }
    out.detail = std::to_string(cases) + " parameter pairs" +
                 (out.pass ? "" : "; " + out.detail);
    return out;
}

// 11. over the criterion-7 corpus: unique epsilon for every sum, fractional
//     monotonicity, and the integer-or-infinite difference dichotomy
Outcome criterion11() {
    Outcome out;
    for (const auto& [p, q] : kGrid7) {
        const Params P(p, q);
        const std::int64_t digit_bound = 4;
        const auto corpus = admissible_integers(P, digit_bound);
        const std::size_t n = corpus.size();
        const auto length = static_cast<std::size_t>(digit_bound);
        std::vector<std::int32_t> mat(n * length);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < length; ++k)
                mat[i * length + k] = static_cast<std::int32_t>(
                    corpus[i].digit_at(digit_bound - 1 - static_cast<std::int64_t>(k))
                        .convert_to<std::int64_t>());

        const std::uint64_t base = static_cast<std::uint64_t>(2 * p + 1);
        std::uint64_t table_size = 1;
        for (std::size_t k = 0; k < length; ++k) table_size *= base;
        std::vector<bool> sum_seen(table_size, false);
        std::vector<bool> diff_seen(table_size, false);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i; j < n; ++j) {
                std::uint64_t skey = 0;
                std::uint64_t dkey = 0;
                for (std::size_t k = 0; k < length; ++k) {
                    const std::int32_t a = mat[i * length + k];
                    const std::int32_t b = mat[j * length + k];
                    skey = skey * base + static_cast<std::uint64_t>(a + b);
                    dkey = dkey * base + static_cast<std::uint64_t>(b - a + p);
                }
                sum_seen[skey] = true;
                diff_seen[dkey] = true;
            }
        }

        const auto decode_value = [&](std::uint64_t key, std::int32_t offset) {
            std::vector<std::int64_t> digits(length);
            for (std::size_t k = length; k-- > 0;) {
                digits[k] = static_cast<std::int64_t>(key % base) - offset;
                key /= base;
            }
            RingElem v{0, 0};
            for (std::size_t k = 0; k < length; ++k) {
                v = mul_beta(P, v);
                v.a += digits[k];
            }
            return FinElem{std::move(v)};
        };

        // (a) epsilon exists uniquely for every distinct sum value
        bool eps_ok = true;
        std::vector<std::pair<FinElem, std::int64_t>> fractional_sums;
        for (std::uint64_t key = 0; key < table_size && eps_ok; ++key) {
            if (!sum_seen[key]) continue;
            const FinElem sum = decode_value(key, 0);
            try {
                epsilon_decomposition(P, sum); // throws unless exactly one
            } catch (const std::logic_error&) {
                eps_ok = false;
                out.fail("epsilon not unique at " + pq(p, q));
            }
            if (fractional_sums.size() < 150) {
                const auto e = greedy_expand(P, sum, kDecisionBudget);
                if (const Finite* fin = as_finite(e)) {
                    const std::int64_t f = fin->digits.fractional_length();
                    if (f >= 1) fractional_sums.push_back({sum, f});
                }
            }
        }

        // (b) adding a beta-integer never shortens the fractional part
        const std::size_t stride = std::max<std::size_t>(1, n / 150);
        for (const auto& [x, fx] : fractional_sums) {
            for (std::size_t j = 0; j < n; j += stride) {
                const FinElem s = add(P, x, evaluate(P, corpus[j]));
                const auto e = greedy_expand(P, s, kDecisionBudget);
                const Finite* fin = as_finite(e);
                if (fin == nullptr || fin->digits.fractional_length() < fx) {
                    out.fail("monotonicity fails at " + pq(p, q));
                    break;
                }
            }
            if (!out.pass) break;
        }

        // (c) differences: beta-integer or no finite expansion
        for (std::uint64_t key = 0; key < table_size; ++key) {
            if (!diff_seen[key]) continue;
            FinElem d = decode_value(key, static_cast<std::int32_t>(p));
            if (sign(P, d) < 0) d = d.negated();
            const auto e = greedy_expand(P, d, kDecisionBudget);
            if (const Finite* fin = as_finite(e)) {
                if (fin->digits.fractional_length() != 0) {
                    out.fail("difference dichotomy fails at " + pq(p, q));
                    break;
                }
            } else if (as_budget_exceeded(e) != nullptr) {
                out.fail("difference undecided at " + pq(p, q));
                break;
            }
        }
        if (!out.pass) break;
    }
    out.detail = "7 pairs over the digit-bound-4 corpus" + (out.pass ? "" : "; " + out.detail);
    return out;
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"rewrite example (p+2)q(q+1). = 1200.(p-q)", criterion1},
        {"rewrite rules are exact identities", criterion2},
        {"normalization equals the greedy oracle", criterion3},
        {"power addition equals the greedy oracle", criterion4},
        {"defect sequence three-way agreement", criterion5},
        {"balance bounded and attained; prefix maximality", criterion6},
        {"search bracket for the maximal fractional length", criterion7},
        {"scaled multiples expand with fp = j", criterion8},
        {"enumeration matches prefix addressing", criterion9},
        {"beta-1 eventually periodic as (p-1).(q)^w", criterion10},
        {"epsilon uniqueness, monotonicity, difference dichotomy", criterion11},
    };
    bool all = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome out;
        try {
            out = criteria[i].second();
        } catch (const std::exception& e) {
            out.pass = false;
            out.detail = std::string("exception: ") + e.what();
        }
        all = all && out.pass;
        std::cout << (out.pass ? "[PASS]" : "[FAIL]") << " criterion " << (i + 1) << ": "
                  << criteria[i].first << " - " << out.detail << '\n';
    }
    return all ? 0 : 1;
}
