#include "betanum/ring.hpp"

#include <stdexcept>

namespace betanum {

RingElem mul(const Params& P, const RingElem& x, const RingElem& y) {
    const Int bd = x.b * y.b;
    return {x.a * y.a - bd * P.norm(), x.a * y.b + x.b * y.a + bd * (P.p() + 1)};
}

RingElem mul_beta(const Params& P, const RingElem& x) {
    return {-x.b * P.norm(), x.a + x.b * (P.p() + 1)};
}

RingElem beta_pow(const Params& P, std::int64_t k) {
    RingElem r{1, 0};
    for (std::int64_t i = 0; i < k; ++i) r = mul_beta(P, r);
    return r;
}

RingElem scale(const RingElem& x, const Int& c) { return {x.a * c, x.b * c}; }

int sign(const Params& P, const RingElem& x) {
    const Int u = 2 * x.a + x.b * (P.p() + 1);
    const Int& v = x.b;
    const int su = u.sign();
    const int sv = v.sign();
    if (su == sv || sv == 0) return su;
    if (su == 0) return sv;
    const Int lhs = u * u;
    const Int rhs = v * v * P.discriminant();
    if (lhs == rhs) throw std::logic_error("square discriminant in sign test");
    return lhs > rhs ? su : sv;
}

std::optional<RingElem> try_divide_beta(const Params& P, const RingElem& x) {
    if (x.a % P.norm() != 0) return std::nullopt;
    Int d = -x.a / P.norm();
    Int c = x.b - d * (P.p() + 1);
    return RingElem{std::move(c), std::move(d)};
}

RingElem divide_beta(const Params& P, const RingElem& x) {
    auto q = try_divide_beta(P, x);
    if (!q) throw NotDivisible("element not divisible by beta");
    return *std::move(q);
}

FinElem FinElem::make(const Params& P, RingElem num, std::int64_t exp) {
    FinElem r;
    if (num.is_zero()) return r;
    if (exp < 0) throw std::logic_error("FinElem exponent must be nonnegative");
    while (exp > 0) {
        auto q = try_divide_beta(P, num);
        if (!q) break;
        num = *std::move(q);
        --exp;
    }
    r.num_ = std::move(num);
    r.exp_ = exp;
    return r;
}

namespace {

// Numerators over the common denominator beta^max(fx, fy).
std::pair<RingElem, RingElem> aligned(const Params& P, const FinElem& x, const FinElem& y) {
    RingElem zx = x.num();
    RingElem zy = y.num();
    for (std::int64_t i = x.exp(); i < y.exp(); ++i) zx = mul_beta(P, zx);
    for (std::int64_t i = y.exp(); i < x.exp(); ++i) zy = mul_beta(P, zy);
    return {std::move(zx), std::move(zy)};
}

} // namespace

FinElem add(const Params& P, const FinElem& x, const FinElem& y) {
    auto [zx, zy] = aligned(P, x, y);
    return FinElem::make(P, zx + zy, std::max(x.exp(), y.exp()));
}

FinElem sub(const Params& P, const FinElem& x, const FinElem& y) {
    auto [zx, zy] = aligned(P, x, y);
    return FinElem::make(P, zx - zy, std::max(x.exp(), y.exp()));
}

FinElem negate(const FinElem& x) { return x.negated(); }

int sign(const Params& P, const FinElem& x) { return sign(P, x.num()); }

int cmp(const Params& P, const FinElem& x, const FinElem& y) {
    auto [zx, zy] = aligned(P, x, y);
    return sign(P, zx - zy);
}

FinElem times_beta_pow(const Params& P, const FinElem& x, std::int64_t k) {
    if (x.is_zero()) return {};
    if (k >= 0) {
        RingElem z = x.num();
        for (std::int64_t i = 0; i < k; ++i) z = mul_beta(P, z);
        return FinElem::make(P, std::move(z), x.exp());
    }
    return FinElem::make(P, x.num(), x.exp() - k);
}

} // namespace betanum
