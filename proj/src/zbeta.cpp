#include "betanum/zbeta.hpp"

#include <algorithm>
#include <cstdlib>
#include <memory>
#include <stdexcept>
#include <thread>
#include <unordered_map>

namespace betanum {

std::pair<FinElem, Letter> successor(const Params& P, const FinElem& x) {
    if (sign(P, x) < 0 || !is_beta_integer(P, x))
        throw NotABetaInteger("successor needs a nonnegative beta-integer");
    FinElem shorter{x.num() + RingElem{-P.p(), 1}}; // x + (beta - p)
    if (is_beta_integer(P, shorter)) return {std::move(shorter), Letter::B};
    FinElem longer{x.num() + RingElem{1, 0}};
    if (!is_beta_integer(P, longer)) throw std::logic_error("gap structure violated");
    return {std::move(longer), Letter::A};
}

std::vector<FinElem> enumerate_beta_integers(const Params& P, std::size_t count) {
    std::vector<FinElem> out;
    out.reserve(count);
    FinElem x;
    for (std::size_t i = 0; i < count; ++i) {
        out.push_back(x);
        if (i + 1 < count) x = successor(P, x).first;
    }
    return out;
}

DigitString add_beta_power(const Params& P, const DigitString& x, std::int64_t l) {
    if (l < 0) throw OutOfRange("the exponent must be nonnegative");
    if (!is_admissible(P, x) || x.fractional_length() != 0)
        throw NotAdmissible("expected the expansion of a beta-integer");
    const std::int64_t hi = std::max(x.msd_exponent(), l);
    const std::int64_t lo = std::min(x.is_zero() ? l : x.lsd_exponent(), l);
    std::vector<Int> digits;
    digits.reserve(static_cast<std::size_t>(hi - lo + 1));
    for (std::int64_t pos = hi; pos >= lo; --pos) digits.push_back(x.digit_at(pos));
    digits[static_cast<std::size_t>(hi - l)] += 1;
    return normalize_rewrite(P, DigitString::make(std::move(digits), hi));
}

std::int64_t epsilon_decomposition(const Params& P, const FinElem& sum) {
    const RingElem unit{P.p() + 1, -1}; // (p-q)/beta
    std::int64_t found = -1;
    for (std::int64_t e = 0; e <= P.sum_fp_bound(); ++e) {
        const FinElem cand = sub(P, sum, FinElem{scale(unit, e)});
        if (is_beta_integer(P, cand)) {
            if (found >= 0) throw std::logic_error("epsilon decomposition not unique");
            found = e;
        }
    }
    if (found < 0) throw std::logic_error("no epsilon decomposition exists");
    return found;
}

AdditionReport add_beta_integers(const Params& P, const FinElem& x, const FinElem& y) {
    if (sign(P, x) < 0 || sign(P, y) < 0)
        throw NotABetaInteger("addition is reduced to nonnegative operands");
    if (!is_beta_integer(P, x) || !is_beta_integer(P, y))
        throw NotABetaInteger("addition operands must be beta-integers");
    const FinElem s = add(P, x, y);
    const auto expansion = greedy_expand(P, s, kDecisionBudget);
    const Finite* fin = as_finite(expansion);
    if (!fin) throw std::logic_error("sum of beta-integers has no finite expansion");
    const std::int64_t frac = fin->digits.fractional_length();
    if (frac > P.sum_fp_bound()) throw std::logic_error("fractional length bound violated");
    return {fin->digits, frac, epsilon_decomposition(P, s)};
}

DigitString fractional_multiple_expansion(const Params& P, std::int64_t j) {
    if (j < 1 || j > P.sum_fp_floor())
        throw OutOfRange("index must lie in 1..floor((p-1)/q)");
    std::vector<Int> frac;
    frac.reserve(static_cast<std::size_t>(j));
    for (std::int64_t i = j; i >= 1; --i)
        frac.emplace_back(i == 1 ? P.norm() : (P.p() - 1) - i * P.q());
    return DigitString::from_parts({Int(j - 1)}, std::move(frac));
}

DifferenceResult subtract_check(const Params& P, const FinElem& x, const FinElem& y) {
    if (sign(P, y) < 0 || cmp(P, x, y) < 0)
        throw OutOfRange("subtraction expects x >= y >= 0");
    if (!is_beta_integer(P, x) || !is_beta_integer(P, y))
        throw NotABetaInteger("subtraction operands must be beta-integers");
    FinElem d = sub(P, x, y);
    const auto expansion = greedy_expand(P, d, kDecisionBudget);
    if (const Finite* fin = as_finite(expansion)) {
        if (fin->digits.fractional_length() != 0)
            throw std::logic_error("difference is finite but not a beta-integer");
        return {DifferenceKind::BetaInteger, std::move(d)};
    }
    return {DifferenceKind::NotInFinite, std::move(d)};
}

namespace {

// Admissibility automaton over one digit: state -1 = neutral, s >= 0 =
// behind a factor p q^s.  Returns the next state or -2 when forbidden.
std::int64_t admissible_step(const Params& P, std::int64_t state, std::int64_t digit) {
    if (digit > P.p()) return -2;
    if (state >= 0) {
        if (digit > P.q()) return -2;
        if (digit == P.q()) return state + 1;
        return -1;
    }
    return digit == P.p() ? 0 : -1;
}

void gen_admissible(const Params& P, std::vector<std::int32_t>& cur, std::int64_t state,
                    std::size_t pos, std::vector<std::vector<std::int32_t>>& out) {
    if (pos == cur.size()) {
        out.push_back(cur);
        return;
    }
    for (std::int64_t d = 0; d <= P.p(); ++d) {
        const std::int64_t next = admissible_step(P, state, d);
        if (next == -2) continue;
        cur[pos] = static_cast<std::int32_t>(d);
        gen_admissible(P, cur, next, pos + 1, out);
    }
    cur[pos] = 0;
}

// fp of the value with the given digitwise sums (MSD first), by greedy
// expansion of the exact value.
std::int64_t fp_of_digit_sums(const Params& P, const std::vector<std::int32_t>& sums) {
    RingElem v{0, 0};
    for (const std::int32_t s : sums) {
        v = mul_beta(P, v);
        v.a += s;
    }
    const auto expansion = greedy_expand(P, FinElem{std::move(v)}, kDecisionBudget);
    const Finite* fin = as_finite(expansion);
    if (!fin) throw std::logic_error("sum of beta-integers has no finite expansion");
    return fin->digits.fractional_length();
}

// memo keyed by the packed digit-sum vector; a flat table when small
class FpMemo {
public:
    FpMemo(const Params& P, std::size_t length, std::uint64_t table_size)
        : params_(P), length_(length) {
        if (table_size <= kMaxFlat) flat_.assign(table_size, -1);
    }

    std::int64_t get(std::uint64_t key, const std::vector<std::int32_t>& sums) {
        if (!flat_.empty()) {
            if (flat_[key] < 0) flat_[key] = static_cast<std::int8_t>(fp_of_digit_sums(params_, sums));
            return flat_[key];
        }
        const auto it = map_.find(key);
        if (it != map_.end()) return it->second;
        const std::int64_t v = fp_of_digit_sums(params_, sums);
        map_.emplace(key, v);
        return v;
    }

private:
    static constexpr std::uint64_t kMaxFlat = std::uint64_t{1} << 24;
    Params params_;
    std::size_t length_;
    std::vector<std::int8_t> flat_;
    std::unordered_map<std::uint64_t, std::int64_t> map_;
};

struct WorkerResult {
    std::vector<std::uint64_t> histogram;
    // per fractional length, the first few (i, j) index pairs encountered
    std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> witnesses;
};

int resolve_threads(int requested) {
    if (requested > 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

} // namespace

std::vector<DigitString> admissible_integers(const Params& P, std::int64_t digit_bound) {
    if (digit_bound < 1) throw OutOfRange("digit bound must be >= 1");
    std::vector<std::vector<std::int32_t>> raw;
    std::vector<std::int32_t> cur(static_cast<std::size_t>(digit_bound), 0);
    gen_admissible(P, cur, -1, 0, raw);
    std::vector<DigitString> out;
    out.reserve(raw.size());
    for (const auto& digits : raw) {
        std::vector<Int> ds(digits.begin(), digits.end());
        out.push_back(DigitString::make(std::move(ds), digit_bound - 1));
    }
    return out;
}

SearchReport lplus_search(const Params& P, std::int64_t digit_bound,
                          const SearchOptions& options) {
    if (digit_bound < 1) throw OutOfRange("digit bound must be >= 1");
    const auto length = static_cast<std::size_t>(digit_bound);
    const std::uint64_t base = static_cast<std::uint64_t>(2 * P.p() + 1);
    std::uint64_t table_size = 1;
    bool flat_ok = P.sum_fp_bound() <= 126; // flat entries are int8
    for (std::size_t i = 0; i < length; ++i) {
        if (table_size > (std::uint64_t{1} << 40) / base) {
            flat_ok = false;
            break;
        }
        table_size *= base;
    }

    std::vector<std::vector<std::int32_t>> corpus;
    {
        std::vector<std::int32_t> cur(length, 0);
        gen_admissible(P, cur, -1, 0, corpus);
    }
    const std::size_t n = corpus.size();
    const std::size_t max_fp_slots = static_cast<std::size_t>(P.sum_fp_bound()) + 2;

    const int threads = std::min<int>(resolve_threads(options.threads),
                                      static_cast<int>(std::max<std::size_t>(n, 1)));
    // split rows so each worker sees about the same number of pairs;
    // row i contributes n - i of them
    std::vector<std::size_t> bounds{0};
    {
        const double total = 0.5 * static_cast<double>(n) * static_cast<double>(n + 1);
        double seen = 0;
        std::size_t i = 0;
        for (int w = 1; w < threads; ++w) {
            const double target = total * w / threads;
            while (i < n && seen < target) {
                seen += static_cast<double>(n - i);
                ++i;
            }
            bounds.push_back(i);
        }
        bounds.push_back(n);
    }

    std::vector<WorkerResult> results(static_cast<std::size_t>(threads));
    std::vector<std::exception_ptr> failures(static_cast<std::size_t>(threads));
    const auto work = [&](int w) {
        try {
            WorkerResult& res = results[static_cast<std::size_t>(w)];
            res.histogram.assign(max_fp_slots, 0);
            res.witnesses.assign(max_fp_slots, {});
            FpMemo memo(P, length, flat_ok ? table_size : (std::uint64_t{1} << 62));
            std::vector<std::int32_t> sums(length);
            for (std::size_t i = bounds[static_cast<std::size_t>(w)];
                 i < bounds[static_cast<std::size_t>(w) + 1]; ++i) {
                const auto& di = corpus[i];
                for (std::size_t j = i; j < n; ++j) {
                    const auto& dj = corpus[j];
                    std::uint64_t key = 0;
                    for (std::size_t k = 0; k < length; ++k) {
                        sums[k] = di[k] + dj[k];
                        key = key * base + static_cast<std::uint64_t>(sums[k]);
                    }
                    const std::int64_t f = memo.get(key, sums);
                    if (f + 1 >= static_cast<std::int64_t>(max_fp_slots))
                        throw std::logic_error("fractional length bound violated in search");
                    res.histogram[static_cast<std::size_t>(f)] += (i == j) ? 1 : 2;
                    auto& wit = res.witnesses[static_cast<std::size_t>(f)];
                    if (wit.size() < options.witness_cap)
                        wit.emplace_back(static_cast<std::uint32_t>(i),
                                         static_cast<std::uint32_t>(j));
                }
            }
        } catch (...) {
            failures[static_cast<std::size_t>(w)] = std::current_exception();
        }
    };

    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(threads));
        for (int w = 0; w < threads; ++w) pool.emplace_back(work, w);
        for (auto& t : pool) t.join();
    }
    for (const auto& failure : failures)
        if (failure) std::rethrow_exception(failure);

    SearchReport rep;
    rep.p = P.p();
    rep.q = P.q();
    rep.digit_bound = digit_bound;
    std::vector<std::uint64_t> hist(max_fp_slots, 0);
    for (const auto& res : results)
        for (std::size_t f = 0; f < max_fp_slots; ++f) hist[f] += res.histogram[f];
    for (std::size_t f = 0; f < max_fp_slots; ++f) {
        if (hist[f] == 0) continue;
        rep.histogram[static_cast<std::int64_t>(f)] = hist[f];
        rep.max_fp = static_cast<std::int64_t>(f);
    }
    // witnesses merge in worker order = ascending (i, j)
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
    for (const auto& res : results) {
        const auto& wit = res.witnesses[static_cast<std::size_t>(rep.max_fp)];
        pairs.insert(pairs.end(), wit.begin(), wit.end());
    }
    if (pairs.size() > options.witness_cap) pairs.resize(options.witness_cap);
    for (const auto& [i, j] : pairs) {
        std::vector<Int> a(corpus[i].begin(), corpus[i].end());
        std::vector<Int> b(corpus[j].begin(), corpus[j].end());
        rep.witnesses.emplace_back(DigitString::make(std::move(a), digit_bound - 1),
                                   DigitString::make(std::move(b), digit_bound - 1));
    }
    return rep;
}

LowerBoundWitness lower_bound_witness(const Params& P, std::size_t search_budget) {
    if (P.quadratic_unit())
        throw UnsupportedParams("the lower bound is trivial for q = p - 1");
    const std::int64_t n = P.balance_bound() + 1;
    const LetterCounts counts = companion_counts(P, n);
    if (static_cast<std::size_t>(counts.length()) > search_budget / 2)
        throw BudgetError("the witness factor exceeds the search budget");
    const Word w = companion_word(P, n);

    GapWord u(P);
    std::size_t search_len = std::max<std::size_t>(4 * w.size(), 4096);
    std::size_t at = std::string_view::npos;
    for (;;) {
        search_len = std::min(search_len, search_budget);
        at = u.prefix(search_len).find(w);
        if (at != std::string_view::npos || search_len == search_budget) break;
        search_len *= 2;
    }
    if (at == std::string_view::npos)
        throw BudgetError("witness factor not found within the search budget");

    FinElem x = beta_integer_from_prefix(P, at);
    FinElem z = beta_integer_from_prefix(P, w.size());
    const AdditionReport rep = add_beta_integers(P, x, z);
    if (rep.fp < P.sum_fp_floor()) throw std::logic_error("witness bound violated");
    return {std::move(x), std::move(z), rep.fp};
}

} // namespace betanum
