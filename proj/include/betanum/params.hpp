#pragma once

#include "betanum/errors.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace betanum {

/// Arbitrary-precision integer used throughout; coefficients produced by
/// exhaustive searches grow beyond any fixed width.
using Int = boost::multiprecision::cpp_int;

/// The pair (p, q) with p > q >= 1 defining the base: beta is the larger
/// root of x^2 - (p+1)x + (p-q).  It satisfies p < beta < p+1, and the
/// expansion of 1 has the leading digit p followed by the digit q forever.
/// All derived constants the library relies on live here.
class Params {
public:
    Params(std::int64_t p, std::int64_t q) : p_(p), q_(q) {
        if (q < 1 || p <= q)
            throw InvalidParams("require p > q >= 1, got p=" + std::to_string(p) +
                                " q=" + std::to_string(q));
        // D sits strictly between (p-1)^2 and (p+1)^2 and D = p^2 forces
        // 4q = 2p - 1, so D is never a perfect square; checked regardless
        // since the exact sign test depends on it.
        const Int d = discriminant();
        const Int r = boost::multiprecision::sqrt(d);
        if (r * r == d) throw InvalidParams("discriminant is a perfect square");
        knee_ = (p + q) / (q + 1);
        bound_ = (p + q - 2) / q; // ceil((p-1)/q)
    }

    std::int64_t p() const noexcept { return p_; }
    std::int64_t q() const noexcept { return q_; }

    /// p - q: the norm of beta and the constant term of its minimal
    /// polynomial; x = a + b*beta is divisible by beta iff norm() | a.
    std::int64_t norm() const noexcept { return p_ - q_; }

    /// (p+1)^2 - 4(p-q), positive and not a perfect square.
    Int discriminant() const {
        const Int m = p_ + 1;
        return m * m - 4 * (p_ - q_);
    }

    /// ceil((p-1)/q): the optimal balance constant of the gap word and the
    /// eventual value of the defect sequence.
    std::int64_t balance_bound() const noexcept { return bound_; }

    /// floor((p+q)/(q+1)): the index where the defect sequence leaves its
    /// initial ramp.
    std::int64_t defect_knee() const noexcept { return knee_; }

    /// floor((p-1)/q): lower bound on the maximal fractional length of a
    /// sum of two beta-integers (and the conjectured exact value).
    std::int64_t sum_fp_floor() const noexcept { return (p_ - 1) / q_; }

    /// ceil(p/q): upper bound on the maximal fractional length of a sum of
    /// two beta-integers.
    std::int64_t sum_fp_bound() const noexcept { return (p_ + q_ - 1) / q_; }

    /// q == p-1 makes beta a quadratic unit (norm 1).
    bool quadratic_unit() const noexcept { return q_ == p_ - 1; }

    friend bool operator==(const Params&, const Params&) = default;

private:
    std::int64_t p_;
    std::int64_t q_;
    std::int64_t knee_ = 0;
    std::int64_t bound_ = 0;
};

} // namespace betanum
