#include "betanum/words.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace betanum {

Word substitute(const Params& P, std::string_view w) {
    Word img_a(static_cast<std::size_t>(P.p()), 'A');
    img_a += 'B';
    Word img_b(static_cast<std::size_t>(P.q()), 'A');
    img_b += 'B';
    Word out;
    out.reserve(w.size() * img_a.size());
    for (char c : w) {
        if (c == 'A')
            out += img_a;
        else if (c == 'B')
            out += img_b;
        else
            throw ParseError("words use the alphabet {A, B}");
    }
    return out;
}

std::string_view GapWord::prefix(std::size_t n) {
    while (buf_.size() < n) buf_ = substitute(params_, buf_);
    return {buf_.data(), n};
}

std::string_view CompanionWord::prefix(std::size_t n) {
    while (buf_.size() < n) {
        Word next = "B";
        next += substitute(params_, buf_);
        buf_ = std::move(next);
    }
    return {buf_.data(), n};
}

Word u_prefix(const Params& P, std::size_t n) {
    GapWord u(P);
    return Word(u.prefix(n));
}

Word companion_prefix(const Params& P, std::size_t n) {
    CompanionWord w(P);
    return Word(w.prefix(n));
}

Word companion_word(const Params& P, std::int64_t n) {
    if (n < 1) throw OutOfRange("companion words are indexed from 1");
    Word w = "B";
    for (std::int64_t i = 1; i < n; ++i) {
        Word next = "B";
        next += substitute(P, w);
        w = std::move(next);
    }
    return w;
}

LetterCounts companion_counts(const Params& P, std::int64_t n) {
    if (n < 1) throw OutOfRange("companion words are indexed from 1");
    LetterCounts c{0, 1};
    constexpr std::int64_t cap = std::numeric_limits<std::int64_t>::max() / 4;
    for (std::int64_t i = 1; i < n; ++i) {
        if (c.a > cap / (P.p() + 1) || c.b > cap / (P.q() + 1))
            throw BudgetError("companion word length overflows the counter");
        c = {P.p() * c.a + P.q() * c.b, c.a + c.b + 1};
    }
    return c;
}

std::int64_t count_letter(std::string_view w, Letter l) {
    return static_cast<std::int64_t>(std::count(w.begin(), w.end(), static_cast<char>(l)));
}

namespace {

std::int64_t closed_form_defect(const Params& P, std::int64_t n) {
    const std::int64_t t = P.defect_knee();
    const std::int64_t cap = P.balance_bound();
    if (n <= t) return n;
    if (n <= cap + 1) return n - 1;
    return cap;
}

std::int64_t companion_length_checked(const Params& P, std::int64_t n, std::size_t budget) {
    const LetterCounts c = companion_counts(P, n);
    if (c.length() < 0 || static_cast<std::size_t>(c.length()) > budget)
        throw BudgetError("companion word longer than the word budget");
    return c.length();
}

} // namespace

std::vector<std::int64_t> defect_sequence(const Params& P, std::int64_t n_max,
                                          DefectMethod method, std::size_t word_budget) {
    if (n_max < 1) throw OutOfRange("defect sequence needs n_max >= 1");
    std::vector<std::int64_t> out;
    out.reserve(static_cast<std::size_t>(n_max));

    switch (method) {
    case DefectMethod::ClosedForm: {
        for (std::int64_t n = 1; n <= n_max; ++n) out.push_back(closed_form_defect(P, n));
        return out;
    }
    case DefectMethod::Bruteforce: {
        GapWord u(P);
        CompanionWord w(P);
        for (std::int64_t n = 1; n <= n_max; ++n) {
            const auto len = static_cast<std::size_t>(companion_length_checked(P, n, word_budget));
            out.push_back(count_letter(w.prefix(len), Letter::B) -
                          count_letter(u.prefix(len), Letter::B));
        }
        return out;
    }
    case DefectMethod::Recurrence: {
        GapWord u(P);
        std::int64_t d = 1;
        out.push_back(d);
        for (std::int64_t n = 1; n < n_max; ++n) {
            const std::int64_t len = companion_length_checked(P, n, word_budget);
            const std::int64_t suffix_len = P.norm() * d - 1;
            if (suffix_len == 0) {
                d = 1;
            } else {
                // the image of the last suffix_len letters is at least
                // suffix_len long (every image has length >= 2)
                const std::int64_t tail_len = std::min(suffix_len, len);
                const auto pref = u.prefix(static_cast<std::size_t>(len));
                const Word img = substitute(P, pref.substr(pref.size() - static_cast<std::size_t>(tail_len)));
                const std::string_view suffix(img.data() + img.size() - static_cast<std::size_t>(suffix_len),
                                              static_cast<std::size_t>(suffix_len));
                d = 1 + count_letter(suffix, Letter::B);
            }
            out.push_back(d);
        }
        return out;
    }
    }
    throw std::logic_error("unknown defect method");
}

bool suffix_form_check(const Params& P, std::int64_t n, std::size_t word_budget) {
    if (n < 1) throw OutOfRange("suffix check needs n >= 1");
    const auto len = static_cast<std::size_t>(companion_length_checked(P, n, word_budget));
    GapWord u(P);
    const std::string_view pref = u.prefix(len);
    const auto ends_with = [&](const Word& suffix) {
        return suffix.size() <= pref.size() &&
               pref.substr(pref.size() - suffix.size()) == suffix;
    };
    const std::int64_t t = P.defect_knee();
    const std::int64_t cap = P.balance_bound();
    bool ok = true;
    if (n <= t) {
        ok = ok && ends_with(Word(static_cast<std::size_t>((n - 1) * P.q() + n), 'A'));
    }
    if (t + 1 <= n && n <= cap + 1) {
        Word suffix(static_cast<std::size_t>(P.p()), 'A');
        suffix += 'B';
        suffix += Word(static_cast<std::size_t>((n - 1) * (P.q() + 1) - P.p()), 'A');
        ok = ok && ends_with(suffix);
    }
    if (n >= cap + 1) {
        ok = ok && ends_with(Word(static_cast<std::size_t>(cap - 1), 'A'));
    }
    return ok;
}

BalanceReport balance_scan(const Params& P, std::size_t prefix_len, std::size_t max_window) {
    if (prefix_len == 0) throw OutOfRange("balance scan needs a nonempty prefix");
    max_window = std::min(max_window, prefix_len);
    GapWord u(P);
    const std::string_view pref = u.prefix(prefix_len);
    std::vector<std::int32_t> acc(prefix_len + 1, 0);
    for (std::size_t i = 0; i < prefix_len; ++i)
        acc[i + 1] = acc[i] + (pref[i] == 'A' ? 1 : 0);

    BalanceReport rep;
    rep.windows.reserve(max_window);
    for (std::size_t k = 1; k <= max_window; ++k) {
        std::int32_t lo = std::numeric_limits<std::int32_t>::max();
        std::int32_t hi = std::numeric_limits<std::int32_t>::min();
        for (std::size_t i = 0; i + k <= prefix_len; ++i) {
            const std::int32_t c = acc[i + k] - acc[i];
            lo = std::min(lo, c);
            hi = std::max(hi, c);
        }
        rep.windows.push_back({static_cast<std::int64_t>(k), lo, hi, acc[k]});
        rep.max_spread = std::max(rep.max_spread, static_cast<std::int64_t>(hi - lo));
    }
    return rep;
}

FinElem beta_integer_from_prefix(const Params& P, std::size_t n) {
    GapWord u(P);
    const std::string_view pref = u.prefix(n);
    const std::int64_t na = count_letter(pref, Letter::A);
    const std::int64_t nb = count_letter(pref, Letter::B);
    // na * 1 + nb * (beta - p)
    return FinElem{RingElem{na - nb * P.p(), nb}};
}

StructureReport structure_checks(const Params& P, std::size_t prefix_budget) {
    StructureReport rep;
    rep.prefix_budget = prefix_budget;
    rep.q1_extrapolation = (P.q() == 1);
    GapWord ug(P);
    const std::string_view u = ug.prefix(prefix_budget);

    // interior A-run lengths between consecutive Bs
    rep.runs_ok = true;
    std::vector<std::size_t> b_positions;
    for (std::size_t i = 0; i < u.size(); ++i)
        if (u[i] == 'B') b_positions.push_back(i);
    for (std::size_t k = 0; k + 1 < b_positions.size(); ++k) {
        const std::int64_t run =
            static_cast<std::int64_t>(b_positions[k + 1] - b_positions[k]) - 1;
        rep.run_lengths.insert(run);
        if (run != P.p() && run != P.q()) rep.runs_ok = false;
    }

    // companion words occur as factors; consecutive ones extend by a gap
    // prefix plus B
    rep.companion_factors_ok = true;
    rep.companion_chain_ok = true;
    Word prev;
    for (std::int64_t n = 1;; ++n) {
        const LetterCounts c = companion_counts(P, n);
        if (static_cast<std::size_t>(c.length()) * 2 > prefix_budget) break;
        const Word w = companion_word(P, n);
        ++rep.companion_words_checked;
        if (u.find(w) == std::string_view::npos) rep.companion_factors_ok = false;
        if (n > 1) {
            const bool ok = w.size() > prev.size() + 1 && w.compare(0, prev.size(), prev) == 0 &&
                            w.back() == 'B' &&
                            std::string_view(w).substr(prev.size(), w.size() - prev.size() - 1) ==
                                ug.prefix(w.size() - prev.size() - 1);
            if (!ok) rep.companion_chain_ok = false;
        }
        prev = w;
    }

    // unique preimage of sampled BvB factors: the block decomposition of
    // vB into images A^pB / A^qB exists and is forced
    rep.preimage_ok = true;
    const std::size_t strides[] = {1, 2, 5};
    for (const std::size_t stride : strides) {
        for (std::size_t k = 0; k + stride < b_positions.size();
             k += std::max<std::size_t>(1, b_positions.size() / 24)) {
            ++rep.preimage_samples;
            const std::size_t from = b_positions[k] + 1;
            const std::size_t to = b_positions[k + stride]; // inclusive end of vB
            std::string_view target = u.substr(from, to - from + 1);
            std::int64_t run = 0;
            bool ok = true;
            for (char c : target) {
                if (c == 'A') {
                    ++run;
                } else {
                    if (run != P.p() && run != P.q()) ok = false;
                    run = 0;
                }
            }
            if (run != 0) ok = false; // must end exactly on a block boundary
            if (!ok) rep.preimage_ok = false;
        }
    }
    return rep;
}

} // namespace betanum
