#pragma once

#include "betanum/params.hpp"

#include <cstdint>
#include <optional>
#include <utility>

namespace betanum {

/// Element a + b*beta of Z[beta].  beta is irrational, so the coordinate
/// pair is unique and equality is componentwise.
struct RingElem {
    Int a;
    Int b;

    bool is_zero() const { return a.is_zero() && b.is_zero(); }

    friend RingElem operator+(const RingElem& x, const RingElem& y) {
        return {x.a + y.a, x.b + y.b};
    }
    friend RingElem operator-(const RingElem& x, const RingElem& y) {
        return {x.a - y.a, x.b - y.b};
    }
    friend RingElem operator-(const RingElem& x) { return {-x.a, -x.b}; }
    friend bool operator==(const RingElem&, const RingElem&) = default;
};

/// Product reduced with beta^2 = (p+1)beta - (p-q):
/// (a+b.beta)(c+d.beta) = (ac - bd(p-q)) + (ad + bc + bd(p+1)).beta.
RingElem mul(const Params& P, const RingElem& x, const RingElem& y);

/// beta * (a + b.beta) = -b(p-q) + (a + b(p+1)).beta.
RingElem mul_beta(const Params& P, const RingElem& x);

/// beta^k for k >= 0.
RingElem beta_pow(const Params& P, std::int64_t k);

/// Integer scalar multiple.
RingElem scale(const RingElem& x, const Int& c);

/// Sign of the real number a + b*beta, decided exactly: 2x = u + v*sqrt(D)
/// with u = 2a + b(p+1), v = b; a mixed-sign pair is resolved by comparing
/// u^2 against v^2 D (never equal, D is not a square).
int sign(const Params& P, const RingElem& x);

/// x / beta within Z[beta] when it exists: a + b*beta is divisible by beta
/// exactly when (p-q) | a, with quotient (b + a(p+1)/(p-q), -a/(p-q)).
std::optional<RingElem> try_divide_beta(const Params& P, const RingElem& x);

/// Throwing form of try_divide_beta.
RingElem divide_beta(const Params& P, const RingElem& x);

/// Value num / beta^exp with num in Z[beta] and exp >= 0.  Canonical:
/// exp == 0 or num not divisible by beta, so equality is structural.
/// The nonnegative values of this shape are exactly the numbers the
/// library expands; they are in the ring Z[beta] iff exp == 0.
class FinElem {
public:
    FinElem() = default; // zero
    explicit FinElem(RingElem z) : num_(std::move(z)) {}

    /// Canonicalizes by peeling beta factors while exp > 0.
    static FinElem make(const Params& P, RingElem num, std::int64_t exp);

    const RingElem& num() const { return num_; }
    std::int64_t exp() const { return exp_; }
    bool is_zero() const { return num_.is_zero(); }
    bool in_ring() const { return exp_ == 0; }

    /// Negation keeps the canonical exponent.
    FinElem negated() const {
        FinElem r = *this;
        r.num_ = -r.num_;
        return r;
    }

    friend bool operator==(const FinElem&, const FinElem&) = default;

private:
    RingElem num_{0, 0};
    std::int64_t exp_ = 0;
};

FinElem add(const Params& P, const FinElem& x, const FinElem& y);
FinElem sub(const Params& P, const FinElem& x, const FinElem& y);
FinElem negate(const FinElem& x);

int sign(const Params& P, const FinElem& x);

/// Three-way numeric comparison: sign of x - y.
int cmp(const Params& P, const FinElem& x, const FinElem& y);

/// x * beta^k for any integer k, re-canonicalized.
FinElem times_beta_pow(const Params& P, const FinElem& x, std::int64_t k);

/// Structural ordering for use as a map key; unrelated to numeric order.
struct FinElemKeyLess {
    bool operator()(const FinElem& x, const FinElem& y) const {
        if (x.exp() != y.exp()) return x.exp() < y.exp();
        if (x.num().a != y.num().a) return x.num().a < y.num().a;
        return x.num().b < y.num().b;
    }
};

} // namespace betanum
