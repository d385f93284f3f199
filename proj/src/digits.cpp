#include "betanum/digits.hpp"

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <stdexcept>

namespace betanum {

DigitString DigitString::make(std::vector<Int> digits, std::int64_t msd_exponent) {
    for (const Int& d : digits)
        if (d < 0) throw std::invalid_argument("digit strings take nonnegative digits");
    std::size_t lead = 0;
    while (lead < digits.size() && digits[lead].is_zero()) ++lead;
    if (lead == digits.size()) return {};
    digits.erase(digits.begin(), digits.begin() + static_cast<std::ptrdiff_t>(lead));
    msd_exponent -= static_cast<std::int64_t>(lead);
    while (!digits.empty() && digits.back().is_zero()) digits.pop_back();
    DigitString r;
    r.digits_ = std::move(digits);
    r.msd_exp_ = msd_exponent;
    return r;
}

DigitString DigitString::from_parts(std::vector<Int> integer_digits,
                                    std::vector<Int> fractional_digits) {
    const std::int64_t msd = static_cast<std::int64_t>(integer_digits.size()) - 1;
    integer_digits.insert(integer_digits.end(),
                          std::make_move_iterator(fractional_digits.begin()),
                          std::make_move_iterator(fractional_digits.end()));
    return make(std::move(integer_digits), msd);
}

Int DigitString::digit_at(std::int64_t position) const {
    const std::int64_t idx = msd_exp_ - position;
    if (idx < 0 || idx >= static_cast<std::int64_t>(digits_.size())) return 0;
    return digits_[static_cast<std::size_t>(idx)];
}

Int DigitString::digit_sum() const {
    Int s = 0;
    for (const Int& d : digits_) s += d;
    return s;
}

Int DigitString::fractional_digit_sum() const {
    Int s = 0;
    const std::int64_t lsd = lsd_exponent();
    for (std::int64_t pos = lsd; pos < 0; ++pos) s += digit_at(pos);
    return s;
}

std::string to_text(const DigitString& ds) {
    if (ds.is_zero()) return "0.";
    bool wide = false;
    for (const Int& d : ds.digits())
        if (d > 9) wide = true;
    const std::int64_t hi = std::max<std::int64_t>(ds.msd_exponent(), 0);
    const std::int64_t lo = std::min<std::int64_t>(ds.lsd_exponent(), 0);
    std::string s;
    for (std::int64_t pos = hi; pos >= lo; --pos) {
        s += ds.digit_at(pos).str();
        if (pos == 0)
            s += '.';
        else if (wide && pos > lo)
            s += ',';
    }
    // keep comma mode recognizable when the point ate the only separator
    if (wide && s.find(',') == std::string::npos) s.insert(0, "0,");
    return s;
}

namespace {

Int parse_digit_token(std::string_view tok) {
    if (tok.empty()) throw ParseError("empty digit in digit string");
    for (char c : tok)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw ParseError("invalid digit character in digit string");
    return Int(std::string(tok));
}

} // namespace

DigitString parse_digits(std::string_view text) {
    // normalize: bullet -> '.', drop whitespace
    std::string s;
    s.reserve(text.size());
    for (std::size_t i = 0; i < text.size();) {
        if (text.compare(i, 3, "\xE2\x80\xA2") == 0) {
            s += '.';
            i += 3;
        } else if (std::isspace(static_cast<unsigned char>(text[i]))) {
            ++i;
        } else {
            s += text[i];
            ++i;
        }
    }
    if (s.empty()) throw ParseError("empty digit string");
    if (std::count(s.begin(), s.end(), '.') > 1)
        throw ParseError("more than one fractional point");

    std::vector<Int> digits;
    std::int64_t point_index = -1;
    if (s.find(',') != std::string::npos) {
        std::size_t start = 0;
        while (start <= s.size()) {
            const std::size_t comma = s.find(',', start);
            const std::size_t end = comma == std::string::npos ? s.size() : comma;
            std::string_view tok(s.data() + start, end - start);
            const std::size_t dot = tok.find('.');
            if (dot == std::string_view::npos) {
                digits.push_back(parse_digit_token(tok));
            } else {
                std::string_view before = tok.substr(0, dot);
                std::string_view after = tok.substr(dot + 1);
                if (!before.empty()) digits.push_back(parse_digit_token(before));
                point_index = static_cast<std::int64_t>(digits.size());
                if (!after.empty()) digits.push_back(parse_digit_token(after));
            }
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
    } else {
        for (char c : s) {
            if (c == '.') {
                point_index = static_cast<std::int64_t>(digits.size());
            } else if (std::isdigit(static_cast<unsigned char>(c))) {
                digits.push_back(Int(c - '0'));
            } else {
                throw ParseError("invalid character in digit string");
            }
        }
    }
    if (point_index < 0) point_index = static_cast<std::int64_t>(digits.size());
    return DigitString::make(std::move(digits), point_index - 1);
}

FinElem evaluate(const Params& P, const DigitString& ds) {
    if (ds.is_zero()) return {};
    RingElem z{0, 0};
    for (const Int& d : ds.digits()) {
        z = mul_beta(P, z);
        z.a += d;
    }
    const std::int64_t lsd = ds.lsd_exponent();
    if (lsd >= 0) {
        for (std::int64_t i = 0; i < lsd; ++i) z = mul_beta(P, z);
        return FinElem{std::move(z)};
    }
    return FinElem::make(P, std::move(z), -lsd);
}

bool is_admissible(const Params& P, const DigitString& ds) {
    const std::int64_t p = P.p();
    const std::int64_t q = P.q();
    bool run = false; // inside a factor p q^s
    for (const Int& d : ds.digits()) {
        if (d > p) return false;
        if (run) {
            if (d > q) return false;
            run = (d == q);
        } else {
            run = (d == p);
        }
    }
    return true;
}

DigitString normalize_rewrite(const Params& P, const DigitString& ds) {
    if (ds.is_zero()) return ds;
    const std::int64_t p = P.p();
    const std::int64_t q = P.q();
    const std::int64_t pq = P.norm();
    std::vector<Int> w(ds.digits());
    std::int64_t msd = ds.msd_exponent();

    const auto grow_front = [&](std::size_t& i, std::size_t& j) {
        w.insert(w.begin(), Int(0));
        ++msd;
        ++i;
        ++j;
    };

    for (;;) {
        bool changed = false;
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (w[i] >= p + 1) {
                Int k = w[i] / (p + 1);
                w[i] %= (p + 1);
                std::size_t j = i;
                if (i == 0) grow_front(i, j);
                w[i - 1] += k;
                if (i + 1 == w.size()) w.emplace_back(0);
                w[i + 1] += k * pq;
                changed = true;
                break;
            }
            if (w[i] == p) {
                std::size_t j = i + 1;
                while (j < w.size() && w[j] == q) ++j;
                if (j < w.size() && w[j] >= q + 1) {
                    w[i] = 0;
                    for (std::size_t k = i + 1; k < j; ++k) w[k] = 0;
                    w[j] -= q + 1;
                    if (i == 0) grow_front(i, j);
                    w[i - 1] += 1;
                    if (j + 2 > w.size()) w.resize(j + 2, Int(0));
                    w[j + 1] += pq;
                    changed = true;
                    break;
                }
            }
        }
        if (!changed) break;
    }
    return DigitString::make(std::move(w), msd);
}

std::int64_t fp(const Params& P, const DigitString& ds) {
    if (!is_admissible(P, ds)) throw NotAdmissible("digit string is not an expansion");
    return ds.fractional_length();
}

} // namespace betanum
