#include "betanum/cli.hpp"

#include "betanum/digits.hpp"
#include "betanum/expansion.hpp"
#include "betanum/params.hpp"
#include "betanum/words.hpp"
#include "betanum/zbeta.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <ostream>
#include <sstream>
#include <string_view>

namespace betanum::cli {
namespace {

using nlohmann::json;

int env_threads() {
    const char* v = std::getenv("BETANUM_THREADS");
    if (v == nullptr || *v == '\0') return 0;
    return std::atoi(v);
}

Int parse_decimal(const std::string& s) {
    if (s.empty()) throw ParseError("empty integer");
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw ParseError("--value takes a nonnegative decimal integer");
    return Int(s);
}

std::string render_periodic(const EventuallyPeriodic& ep) {
    bool wide = false;
    for (const Int& d : ep.preperiod.digits())
        if (d > 9) wide = true;
    for (const Int& d : ep.period)
        if (d > 9) wide = true;
    const std::int64_t hi = std::max<std::int64_t>(ep.preperiod.msd_exponent(), 0);
    std::string s;
    for (std::int64_t pos = hi; pos > ep.period_start; --pos) {
        s += ep.preperiod.digit_at(pos).str();
        if (pos == 0)
            s += '.';
        else if (wide && pos > ep.period_start + 1)
            s += ',';
    }
    s += '(';
    for (std::size_t i = 0; i < ep.period.size(); ++i) {
        if (i > 0 && wide) s += ',';
        s += ep.period[i].str();
    }
    s += ")^w";
    return s;
}

std::string render_expansion_text(const ExpansionResult& r) {
    if (const Finite* fin = as_finite(r)) return to_text(fin->digits);
    if (const EventuallyPeriodic* ep = as_periodic(r)) return render_periodic(*ep);
    const BudgetExceeded& be = std::get<BudgetExceeded>(r);
    return to_text(be.partial) + "... (fractional budget exceeded)";
}

json expansion_to_json(const ExpansionResult& r) {
    json j;
    if (const Finite* fin = as_finite(r)) {
        j["variant"] = "finite";
        j["digits"] = to_text(fin->digits);
    } else if (const EventuallyPeriodic* ep = as_periodic(r)) {
        j["variant"] = "eventually_periodic";
        j["preperiod"] = to_text(ep->preperiod);
        json per = json::array();
        for (const Int& d : ep->period) per.push_back(d.str());
        j["period"] = per;
        j["period_start"] = ep->period_start;
    } else {
        const BudgetExceeded& be = std::get<BudgetExceeded>(r);
        j["variant"] = "budget_exceeded";
        j["partial"] = to_text(be.partial);
    }
    return j;
}

json search_report_to_json(const SearchReport& rep) {
    json j;
    j["p"] = rep.p;
    j["q"] = rep.q;
    j["digit_bound"] = rep.digit_bound;
    j["max_fp"] = rep.max_fp;
    json hist;
    for (const auto& [f, count] : rep.histogram) hist[std::to_string(f)] = count;
    j["histogram"] = hist;
    json wit = json::array();
    for (const auto& [x, y] : rep.witnesses) wit.push_back(json::array({to_text(x), to_text(y)}));
    j["witnesses"] = wit;
    return j;
}

struct Ctx {
    Params params;
    std::string format;
    std::int64_t budget;
    std::ostream& out;
};

void emit(const Ctx& ctx, const json& j, const std::string& text, const std::string& csv) {
    if (ctx.format == "json")
        ctx.out << j.dump(2) << '\n';
    else if (ctx.format == "csv" && !csv.empty())
        ctx.out << csv;
    else
        ctx.out << text;
}

void note_q1(const Ctx& ctx) {
    if (ctx.params.q() == 1 && ctx.format == "text")
        ctx.out << "note: q = 1 lies outside the q > 1 range the word analysis assumes; "
                   "results are empirical\n";
}

// ---- subcommand runners ----------------------------------------------

Int parse_signed_decimal(const std::string& s) {
    if (s.empty()) throw ParseError("empty integer");
    const bool neg = s.front() == '-';
    const std::string body = neg ? s.substr(1) : s;
    Int v = parse_decimal(body);
    return neg ? -v : v;
}

FinElem parse_ring_value(const Params& P, const std::string& s) {
    // "a,b" or "a,b,f" for (a + b*beta) / beta^f
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (start <= s.size()) {
        const std::size_t comma = s.find(',', start);
        parts.push_back(s.substr(start, comma == std::string::npos ? std::string::npos
                                                                   : comma - start));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (parts.size() < 2 || parts.size() > 3)
        throw ParseError("--ring takes \"a,b\" or \"a,b,f\"");
    const Int a = parse_signed_decimal(parts[0]);
    const Int b = parse_signed_decimal(parts[1]);
    std::int64_t f = 0;
    if (parts.size() == 3) {
        const Int fi = parse_decimal(parts[2]);
        f = fi.convert_to<std::int64_t>();
    }
    return FinElem::make(P, RingElem{a, b}, f);
}

void run_expand(const Ctx& ctx, const std::string& value, const std::string& digits,
                const std::string& ring) {
    const int given = (!value.empty()) + (!digits.empty()) + (!ring.empty());
    if (given != 1) throw ParseError("expand needs exactly one of --value, --digits, --ring");
    FinElem x;
    if (!value.empty())
        x = FinElem{RingElem{parse_decimal(value), 0}};
    else if (!digits.empty())
        x = evaluate(ctx.params, parse_digits(digits));
    else
        x = parse_ring_value(ctx.params, ring);
    const auto r = greedy_expand(ctx.params, x, ctx.budget);
    emit(ctx, expansion_to_json(r), render_expansion_text(r) + "\n", "");
}

void run_normalize(const Ctx& ctx, const std::string& digits) {
    const DigitString out = normalize_rewrite(ctx.params, parse_digits(digits));
    json j;
    j["digits"] = to_text(out);
    emit(ctx, j, to_text(out) + "\n", "");
}

void run_add(const Ctx& ctx, const std::string& xs, const std::string& ys) {
    const FinElem x = evaluate(ctx.params, parse_digits(xs));
    const FinElem y = evaluate(ctx.params, parse_digits(ys));
    const AdditionReport rep = add_beta_integers(ctx.params, x, y);
    json j;
    j["sum"] = to_text(rep.sum_expansion);
    j["fp"] = rep.fp;
    j["epsilon"] = rep.epsilon;
    std::ostringstream text;
    text << "sum=" << to_text(rep.sum_expansion) << " fp=" << rep.fp
         << " epsilon=" << rep.epsilon << '\n';
    std::ostringstream csv;
    csv << "sum,fp,epsilon\n"
        << to_text(rep.sum_expansion) << ',' << rep.fp << ',' << rep.epsilon << '\n';
    emit(ctx, j, text.str(), csv.str());
}

void run_addpow(const Ctx& ctx, const std::string& xs, std::int64_t l) {
    const DigitString out = add_beta_power(ctx.params, parse_digits(xs), l);
    json j;
    j["digits"] = to_text(out);
    emit(ctx, j, to_text(out) + "\n", "");
}

void run_list(const Ctx& ctx, std::int64_t count) {
    if (count < 0) throw OutOfRange("--count must be nonnegative");
    const auto xs = enumerate_beta_integers(ctx.params, static_cast<std::size_t>(count));
    json arr = json::array();
    std::ostringstream text;
    std::ostringstream csv;
    csv << "n,digits,a,b\n";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const auto expansion = greedy_expand(ctx.params, xs[i], ctx.budget);
        const Finite* fin = as_finite(expansion);
        if (!fin) throw std::logic_error("beta-integer with non-finite expansion");
        const std::string ds = to_text(fin->digits);
        text << ds << '\n';
        csv << i << ',' << ds << ',' << xs[i].num().a.str() << ',' << xs[i].num().b.str()
            << '\n';
        json row;
        row["digits"] = ds;
        row["a"] = xs[i].num().a.str();
        row["b"] = xs[i].num().b.str();
        arr.push_back(row);
    }
    emit(ctx, arr, text.str(), csv.str());
}

void run_succ(const Ctx& ctx, const std::string& xs) {
    const FinElem x = evaluate(ctx.params, parse_digits(xs));
    const auto [next, letter] = successor(ctx.params, x);
    const auto expansion = greedy_expand(ctx.params, next, ctx.budget);
    const Finite* fin = as_finite(expansion);
    if (!fin) throw std::logic_error("successor with non-finite expansion");
    json j;
    j["next"] = to_text(fin->digits);
    j["letter"] = std::string(1, static_cast<char>(letter));
    emit(ctx, j,
         to_text(fin->digits) + " " + std::string(1, static_cast<char>(letter)) + "\n", "");
}

void run_lplus(const Ctx& ctx, std::int64_t digit_bound) {
    SearchOptions opt;
    opt.threads = env_threads();
    const SearchReport rep = lplus_search(ctx.params, digit_bound, opt);
    std::ostringstream text;
    text << "max_fp=" << rep.max_fp << " bracket=[" << ctx.params.sum_fp_floor() << ","
         << ctx.params.sum_fp_bound() << "]\n";
    for (const auto& [f, count] : rep.histogram)
        text << "fp " << f << ": " << count << " ordered pairs\n";
    for (const auto& [x, y] : rep.witnesses)
        text << "witness " << to_text(x) << " + " << to_text(y) << '\n';
    std::ostringstream csv;
    csv << "fp,count\n";
    for (const auto& [f, count] : rep.histogram) csv << f << ',' << count << '\n';
    emit(ctx, search_report_to_json(rep), text.str(), csv.str());
}

void run_lemmaf(const Ctx& ctx, std::int64_t j_index) {
    const DigitString out = fractional_multiple_expansion(ctx.params, j_index);
    json j;
    j["digits"] = to_text(out);
    emit(ctx, j, to_text(out) + "\n", "");
}

void run_balance(const Ctx& ctx, std::int64_t prefix_len, std::int64_t max_window,
                 bool per_window) {
    if (prefix_len < 1 || max_window < 1) throw OutOfRange("budgets must be positive");
    const BalanceReport rep = balance_scan(ctx.params, static_cast<std::size_t>(prefix_len),
                                           static_cast<std::size_t>(max_window));
    json j;
    j["max_spread"] = rep.max_spread;
    j["balance_bound"] = ctx.params.balance_bound();
    json rows = json::array();
    std::ostringstream text;
    std::ostringstream csv;
    text << "max_spread=" << rep.max_spread
         << " balance_bound=" << ctx.params.balance_bound() << '\n';
    csv << "window,min_a,max_a,spread\n";
    for (const auto& wnd : rep.windows) {
        csv << wnd.window << ',' << wnd.min_a << ',' << wnd.max_a << ',' << wnd.spread()
            << '\n';
        if (per_window)
            text << "window " << wnd.window << ": min_a=" << wnd.min_a
                 << " max_a=" << wnd.max_a << " spread=" << wnd.spread() << '\n';
        json row;
        row["window"] = wnd.window;
        row["min_a"] = wnd.min_a;
        row["max_a"] = wnd.max_a;
        row["spread"] = wnd.spread();
        rows.push_back(row);
    }
    j["windows"] = rows;
    note_q1(ctx);
    emit(ctx, j, text.str(), csv.str());
}

void run_dn(const Ctx& ctx, std::int64_t n_max, std::int64_t word_budget) {
    if (word_budget < 1) throw OutOfRange("--word-budget must be positive");
    const auto brute = defect_sequence(ctx.params, n_max, DefectMethod::Bruteforce,
                                       static_cast<std::size_t>(word_budget));
    const auto rec = defect_sequence(ctx.params, n_max, DefectMethod::Recurrence,
                                     static_cast<std::size_t>(word_budget));
    const auto closed = defect_sequence(ctx.params, n_max, DefectMethod::ClosedForm);
    json arr = json::array();
    std::ostringstream text;
    std::ostringstream csv;
    csv << "n,D_bruteforce,D_recurrence,D_closed\n";
    for (std::int64_t n = 1; n <= n_max; ++n) {
        const auto i = static_cast<std::size_t>(n - 1);
        csv << n << ',' << brute[i] << ',' << rec[i] << ',' << closed[i] << '\n';
        text << "D_" << n << " = " << brute[i] << " / " << rec[i] << " / " << closed[i]
             << '\n';
        json row;
        row["n"] = n;
        row["bruteforce"] = brute[i];
        row["recurrence"] = rec[i];
        row["closed_form"] = closed[i];
        arr.push_back(row);
    }
    note_q1(ctx);
    emit(ctx, arr, text.str(), csv.str());
}

void run_words(const Ctx& ctx, std::int64_t u_len, std::int64_t w_index,
               const std::string& image_of, std::int64_t structure_budget,
               std::int64_t suffix_n, std::int64_t word_budget) {
    const int chosen = (u_len >= 0) + (w_index >= 0) + (!image_of.empty() ? 1 : 0) +
                       (structure_budget >= 0) + (suffix_n >= 0);
    if (chosen != 1)
        throw ParseError("words needs exactly one of --u-prefix, --w-index, --image, "
                         "--structure, --suffix-check");
    if (u_len >= 0) {
        const Word w = u_prefix(ctx.params, static_cast<std::size_t>(u_len));
        json j;
        j["word"] = w;
        emit(ctx, j, w + "\n", "");
    } else if (w_index >= 0) {
        const LetterCounts c = companion_counts(ctx.params, w_index);
        if (c.length() > word_budget)
            throw BudgetError("companion word longer than --word-budget");
        const Word w = companion_word(ctx.params, w_index);
        json j;
        j["word"] = w;
        emit(ctx, j, w + "\n", "");
    } else if (!image_of.empty()) {
        const Word w = substitute(ctx.params, image_of);
        json j;
        j["word"] = w;
        emit(ctx, j, w + "\n", "");
    } else if (suffix_n >= 0) {
        const bool ok = suffix_form_check(ctx.params, suffix_n,
                                          static_cast<std::size_t>(word_budget));
        json j;
        j["suffix_ok"] = ok;
        note_q1(ctx);
        emit(ctx, j, std::string(ok ? "suffix ok" : "suffix MISMATCH") + "\n", "");
    } else {
        const StructureReport rep =
            structure_checks(ctx.params, static_cast<std::size_t>(structure_budget));
        json j;
        j["runs_ok"] = rep.runs_ok;
        json runs = json::array();
        for (const auto r : rep.run_lengths) runs.push_back(r);
        j["run_lengths"] = runs;
        j["companion_words_checked"] = rep.companion_words_checked;
        j["companion_factors_ok"] = rep.companion_factors_ok;
        j["companion_chain_ok"] = rep.companion_chain_ok;
        j["preimage_samples"] = rep.preimage_samples;
        j["preimage_ok"] = rep.preimage_ok;
        j["q1_extrapolation"] = rep.q1_extrapolation;
        std::ostringstream text;
        text << "runs_ok=" << (rep.runs_ok ? "yes" : "no") << " run_lengths={";
        bool first = true;
        for (const auto r : rep.run_lengths) {
            if (!first) text << ',';
            text << r;
            first = false;
        }
        text << "} companion_factors_ok=" << (rep.companion_factors_ok ? "yes" : "no")
             << " companion_chain_ok=" << (rep.companion_chain_ok ? "yes" : "no")
             << " preimage_ok=" << (rep.preimage_ok ? "yes" : "no") << '\n';
        note_q1(ctx);
        emit(ctx, j, text.str(), "");
    }
}

// ---- verify ------------------------------------------------------------

struct CheckOutcome {
    bool pass;
    std::string measured;
};

CheckOutcome check_balance(const Params& P, std::int64_t prefix_len, std::int64_t max_window,
                           std::int64_t attain_budget) {
    const BalanceReport rep = balance_scan(P, static_cast<std::size_t>(prefix_len),
                                           static_cast<std::size_t>(max_window));
    const std::int64_t bound = P.balance_bound();
    if (rep.max_spread > bound)
        return {false, "scanned spread " + std::to_string(rep.max_spread) + " exceeds " +
                           std::to_string(bound)};
    // attainment at the window |w^(T+1)| via the B-maximal factor
    const std::int64_t n = bound + 1;
    const LetterCounts counts = companion_counts(P, n);
    if (counts.length() > attain_budget)
        return {false, "attainment window " + std::to_string(counts.length()) +
                           " exceeds the budget"};
    const Word w = companion_word(P, n);
    GapWord u(P);
    std::size_t search_len = std::max<std::size_t>(4 * w.size(), 4096);
    std::size_t at = std::string_view::npos;
    for (;;) {
        search_len = std::min(search_len, static_cast<std::size_t>(attain_budget));
        at = u.prefix(search_len).find(w);
        if (at != std::string_view::npos ||
            search_len == static_cast<std::size_t>(attain_budget))
            break;
        search_len *= 2;
    }
    if (at == std::string_view::npos) return {false, "witness factor not found in budget"};
    const std::int64_t factor_a = count_letter(w, Letter::A);
    const std::int64_t prefix_a = count_letter(u.prefix(w.size()), Letter::A);
    const std::int64_t attained = prefix_a - factor_a;
    const std::int64_t spread = std::max(rep.max_spread, attained);
    return {attained == bound, "spread=" + std::to_string(spread) + " bound=" +
                                   std::to_string(bound)};
}

CheckOutcome check_dn(const Params& P, std::int64_t word_budget) {
    std::int64_t n_max = 0;
    while (true) {
        const LetterCounts c = companion_counts(P, n_max + 1);
        if (c.length() > word_budget) break;
        ++n_max;
    }
    if (n_max < 1) return {false, "word budget too small"};
    const auto brute =
        defect_sequence(P, n_max, DefectMethod::Bruteforce, static_cast<std::size_t>(word_budget));
    const auto rec =
        defect_sequence(P, n_max, DefectMethod::Recurrence, static_cast<std::size_t>(word_budget));
    const auto closed = defect_sequence(P, n_max, DefectMethod::ClosedForm);
    const bool ok = brute == rec && rec == closed;
    return {ok, "three-way agreement for n<=" + std::to_string(n_max) +
                    (ok ? "" : " FAILED")};
}

CheckOutcome check_lplus(const Params& P, std::int64_t digit_bound) {
    SearchOptions opt;
    opt.threads = env_threads();
    const SearchReport rep = lplus_search(P, digit_bound, opt);
    bool pass = rep.max_fp <= P.sum_fp_bound();
    if (P.quadratic_unit()) pass = pass && rep.max_fp == 1;
    const bool conjectured = rep.max_fp == P.sum_fp_floor() || P.quadratic_unit();
    return {pass, "max_fp=" + std::to_string(rep.max_fp) + " bracket=[" +
                      std::to_string(P.sum_fp_floor()) + "," +
                      std::to_string(P.sum_fp_bound()) + "]" +
                      (conjectured ? " (conjectured value)" : "")};
}

CheckOutcome check_periodicity(const Params& P) {
    const FinElem beta_minus_one{RingElem{-1, 1}};
    const auto r = greedy_expand(P, beta_minus_one, kDefaultFractionalBudget);
    const EventuallyPeriodic* ep = as_periodic(r);
    const DigitString want = DigitString::make({Int(P.p() - 1)}, 0);
    const bool ok = ep != nullptr && ep->preperiod == want &&
                    ep->period == std::vector<Int>{Int(P.q())} && ep->period_start == -1;
    return {ok, ok ? "beta-1 periodic as expected" : "beta-1 expansion mismatch"};
}

CheckOutcome check_lemmaf(const Params& P) {
    for (std::int64_t j = 1; j <= P.sum_fp_floor(); ++j) {
        const DigitString ds = fractional_multiple_expansion(P, j);
        const FinElem want{scale(RingElem{P.p() + 1, -1}, j)};
        if (!(evaluate(P, ds) == want) || fp(P, ds) != j)
            return {false, "mismatch at j=" + std::to_string(j)};
    }
    return {true, "all j<=" + std::to_string(P.sum_fp_floor()) + " exact"};
}

CheckOutcome check_enum(const Params& P, std::int64_t count) {
    GapWord u(P);
    const std::string_view pref = u.prefix(static_cast<std::size_t>(count));
    FinElem x;
    std::int64_t na = 0;
    std::int64_t nb = 0;
    for (std::int64_t i = 0; i < count; ++i) {
        const FinElem want{RingElem{na - nb * P.p(), nb}};
        if (!(x == want)) return {false, "value mismatch at index " + std::to_string(i)};
        const auto [next, letter] = successor(P, x);
        if (static_cast<char>(letter) != pref[static_cast<std::size_t>(i)])
            return {false, "letter mismatch at index " + std::to_string(i)};
        const RingElem gap = next.num() - x.num();
        if (!(gap == RingElem{1, 0}) && !(gap == RingElem{-P.p(), 1}))
            return {false, "gap mismatch at index " + std::to_string(i)};
        (letter == Letter::A ? na : nb) += 1;
        x = next;
    }
    return {true, "first " + std::to_string(count) + " beta-integers consistent"};
}

struct VerifyConfig {
    std::int64_t p_min = 2;
    std::int64_t p_max = 8;
    std::vector<std::string> checks{"balance", "dn", "lplus", "periodicity", "lemmaf", "enum"};
    std::int64_t digit_bound = 3;
    std::int64_t prefix_len = 20000;
    std::int64_t max_window = 400;
    std::int64_t word_budget = 100000;
    std::int64_t count = 2000;
    std::int64_t attain_budget = 30'000'000;
};

int run_verify(const Ctx& ctx, const VerifyConfig& cfg) {
    bool all_pass = true;
    json rows = json::array();
    std::ostringstream text;
    std::ostringstream csv;
    csv << "p,q,check,result,measured\n";
    for (std::int64_t p = std::max<std::int64_t>(cfg.p_min, 2); p <= cfg.p_max; ++p) {
        for (std::int64_t q = 1; q < p; ++q) {
            const Params P(p, q);
            for (const std::string& check : cfg.checks) {
                CheckOutcome outcome{false, "unknown check"};
                if (check == "balance")
                    outcome = check_balance(P, cfg.prefix_len, cfg.max_window, cfg.attain_budget);
                else if (check == "dn")
                    outcome = check_dn(P, cfg.word_budget);
                else if (check == "lplus")
                    outcome = check_lplus(P, cfg.digit_bound);
                else if (check == "periodicity")
                    outcome = check_periodicity(P);
                else if (check == "lemmaf")
                    outcome = check_lemmaf(P);
                else if (check == "enum")
                    outcome = check_enum(P, cfg.count);
                else
                    throw ParseError("unknown check: " + check);
                all_pass = all_pass && outcome.pass;
                text << "p=" << p << " q=" << q << " check=" << check << " "
                     << (outcome.pass ? "PASS" : "FAIL") << " " << outcome.measured << '\n';
                csv << p << ',' << q << ',' << check << ','
                    << (outcome.pass ? "PASS" : "FAIL") << ",\"" << outcome.measured
                    << "\"\n";
                json row;
                row["p"] = p;
                row["q"] = q;
                row["check"] = check;
                row["pass"] = outcome.pass;
                row["measured"] = outcome.measured;
                rows.push_back(row);
            }
        }
    }
    emit(ctx, rows, text.str(), csv.str());
    return all_pass ? 0 : 1;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact arithmetic and word combinatorics for quadratic bases "
                 "with expansion-of-one digits p q q q ..."};
    app.name("betanum");

    std::int64_t p = 0;
    std::int64_t q = 0;
    std::string format = "text";
    std::int64_t budget = kDefaultFractionalBudget;
    app.add_option("--p", p, "parameter p (p > q >= 1)")->required();
    app.add_option("--q", q, "parameter q (p > q >= 1)")->required();
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--budget", budget, "fractional digit budget for expansions");
    app.require_subcommand(1);

    // expand
    auto* c_expand = app.add_subcommand("expand", "greedy expansion of an exact value");
    std::string expand_value;
    std::string expand_digits;
    std::string expand_ring;
    c_expand->add_option("--value", expand_value, "nonnegative decimal integer");
    c_expand->add_option("--digits", expand_digits, "digit string to evaluate first");
    c_expand->add_option("--ring", expand_ring, "exact element \"a,b\" or \"a,b,f\" for "
                                                "(a+b*beta)/beta^f");

    // normalize
    auto* c_norm = app.add_subcommand("normalize", "rewrite a digit string into an expansion");
    std::string norm_digits;
    c_norm->add_option("--digits", norm_digits, "digit string")->required();

    // add
    auto* c_add = app.add_subcommand("add", "add two beta-integers with a fractional report");
    std::string add_x;
    std::string add_y;
    c_add->add_option("--x", add_x, "beta-integer digit string")->required();
    c_add->add_option("--y", add_y, "beta-integer digit string")->required();

    // addpow
    auto* c_addpow = app.add_subcommand("addpow", "add a power of the base to a beta-integer");
    std::string addpow_x;
    std::int64_t addpow_l = 0;
    c_addpow->add_option("--x", addpow_x, "beta-integer digit string")->required();
    c_addpow->add_option("--l", addpow_l, "exponent of the added power")->required();

    // list
    auto* c_list = app.add_subcommand("list", "enumerate the first beta-integers");
    std::int64_t list_count = 0;
    c_list->add_option("--count", list_count, "how many")->required();

    // succ
    auto* c_succ = app.add_subcommand("succ", "successor beta-integer and its gap letter");
    std::string succ_x;
    c_succ->add_option("--x", succ_x, "beta-integer digit string")->required();

    // lplus
    auto* c_lplus = app.add_subcommand("lplus", "exhaustive fractional-length search over sums");
    std::int64_t lplus_bound = 0;
    c_lplus->add_option("--digit-bound", lplus_bound, "max expansion digits per operand")
        ->required();

    // lemmaf
    auto* c_lemmaf = app.add_subcommand("lemmaf", "expansion of j(p-q)/beta");
    std::int64_t lemmaf_j = 0;
    c_lemmaf->add_option("--j", lemmaf_j, "multiple, 1..floor((p-1)/q)")->required();

    // balance
    auto* c_balance = app.add_subcommand("balance", "sliding-window balance scan");
    std::int64_t balance_prefix = 10000;
    std::int64_t balance_window = 500;
    bool balance_rows = false;
    c_balance->add_option("--prefix-len", balance_prefix, "scanned prefix length");
    c_balance->add_option("--max-window", balance_window, "largest window length");
    c_balance->add_flag("--per-window", balance_rows, "print one line per window");

    // dn
    auto* c_dn = app.add_subcommand("dn", "defect sequence by three methods");
    std::int64_t dn_max = 0;
    std::int64_t dn_budget = static_cast<std::int64_t>(kDefaultWordBudget);
    c_dn->add_option("--n-max", dn_max, "last index")->required();
    c_dn->add_option("--word-budget", dn_budget, "materialization cap");

    // words
    auto* c_words = app.add_subcommand("words", "substitution words and structure scans");
    std::int64_t words_u = -1;
    std::int64_t words_w = -1;
    std::string words_image;
    std::int64_t words_structure = -1;
    std::int64_t words_suffix = -1;
    std::int64_t words_budget = static_cast<std::int64_t>(kDefaultWordBudget);
    c_words->add_option("--u-prefix", words_u, "print the gap-word prefix of this length");
    c_words->add_option("--w-index", words_w, "print the n-th companion word");
    c_words->add_option("--image", words_image, "print the substitution image of a word");
    c_words->add_option("--structure", words_structure, "run structure checks on a prefix");
    c_words->add_option("--suffix-check", words_suffix, "check the claimed suffix form at n");
    c_words->add_option("--word-budget", words_budget, "materialization cap");

    // verify
    auto* c_verify = app.add_subcommand("verify", "grid sweep of consistency checks");
    VerifyConfig vcfg;
    std::string verify_checks;
    c_verify->add_option("--p-min", vcfg.p_min, "smallest p");
    c_verify->add_option("--p-max", vcfg.p_max, "largest p");
    c_verify->add_option("--checks", verify_checks, "comma-separated subset of "
                                                    "balance,dn,lplus,periodicity,lemmaf,enum");
    c_verify->add_option("--digit-bound", vcfg.digit_bound, "search bound for lplus");
    c_verify->add_option("--prefix-len", vcfg.prefix_len, "balance scan prefix");
    c_verify->add_option("--max-window", vcfg.max_window, "balance scan window cap");
    c_verify->add_option("--word-budget", vcfg.word_budget, "defect materialization cap");
    c_verify->add_option("--count", vcfg.count, "enumeration length");
    c_verify->add_option("--attain-budget", vcfg.attain_budget,
                         "prefix cap for locating the balance witness");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) {
            out << app.help();
            return 0;
        }
        err << "usage error: " << e.what() << '\n';
        return 2;
    }

    try {
        Ctx ctx{Params(p, q), format, budget, out};
        if (c_expand->parsed())
            run_expand(ctx, expand_value, expand_digits, expand_ring);
        else if (c_norm->parsed())
            run_normalize(ctx, norm_digits);
        else if (c_add->parsed())
            run_add(ctx, add_x, add_y);
        else if (c_addpow->parsed())
            run_addpow(ctx, addpow_x, addpow_l);
        else if (c_list->parsed())
            run_list(ctx, list_count);
        else if (c_succ->parsed())
            run_succ(ctx, succ_x);
        else if (c_lplus->parsed())
            run_lplus(ctx, lplus_bound);
        else if (c_lemmaf->parsed())
            run_lemmaf(ctx, lemmaf_j);
        else if (c_balance->parsed())
            run_balance(ctx, balance_prefix, balance_window, balance_rows);
        else if (c_dn->parsed())
            run_dn(ctx, dn_max, dn_budget);
        else if (c_words->parsed())
            run_words(ctx, words_u, words_w, words_image, words_structure, words_suffix,
                      words_budget);
        else if (c_verify->parsed()) {
            if (!verify_checks.empty()) {
                vcfg.checks.clear();
                std::stringstream ss(verify_checks);
                std::string item;
                while (std::getline(ss, item, ','))
                    if (!item.empty()) vcfg.checks.push_back(item);
            }
            return run_verify(ctx, vcfg);
        }
        return 0;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return 1;
    }
}

} // namespace betanum::cli
