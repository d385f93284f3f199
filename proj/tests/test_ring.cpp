#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "betanum/ring.hpp"

#include <cmath>
#include <random>

using namespace betanum;

namespace {

const Params kP52{5, 2};

RingElem random_elem(std::mt19937_64& rng, std::int64_t span) {
    std::uniform_int_distribution<std::int64_t> d(-span, span);
    return {Int(d(rng)), Int(d(rng))};
}

} // namespace

TEST_CASE("params validate and expose derived constants") {
    CHECK_THROWS_AS(Params(2, 2), InvalidParams);
    CHECK_THROWS_AS(Params(1, 1), InvalidParams);
    CHECK_THROWS_AS(Params(3, 0), InvalidParams);
    const Params P(5, 2);
    CHECK(P.norm() == 3);
    CHECK(P.discriminant() == 24);
    CHECK(P.balance_bound() == 2);
    CHECK(P.defect_knee() == 2);
    CHECK(P.sum_fp_floor() == 2);
    CHECK(P.sum_fp_bound() == 3);
    CHECK_FALSE(P.quadratic_unit());
    CHECK(Params(3, 2).quadratic_unit());
    const Params P41(4, 1);
    CHECK(P41.defect_knee() == 2);
    CHECK(P41.balance_bound() == 3);
    // upper and lower sum bounds always differ by exactly one
    for (std::int64_t p = 2; p <= 25; ++p)
        for (std::int64_t q = 1; q < p; ++q) {
            const Params G(p, q);
            CHECK(G.sum_fp_bound() == G.sum_fp_floor() + 1);
        }
}

TEST_CASE("componentwise ring operations") {
    CHECK(RingElem{1, 0} + RingElem{-1, 1} == RingElem{0, 1});
    CHECK(RingElem{2, 3} + RingElem{4, -1} == RingElem{6, 2});
    CHECK(RingElem{0, 0} + RingElem{5, 7} == RingElem{5, 7});
}

TEST_CASE("products reduce the square of the base") {
    CHECK(mul(kP52, RingElem{0, 1}, RingElem{0, 1}) == RingElem{-3, 6});
    CHECK(mul(kP52, RingElem{1, 1}, RingElem{1, -1}) == RingElem{4, -6});
    CHECK(mul(kP52, RingElem{2, 0}, RingElem{3, 0}) == RingElem{6, 0});
    CHECK(mul_beta(kP52, RingElem{0, 1}) == RingElem{-3, 6});
    CHECK(beta_pow(kP52, 2) == RingElem{-3, 6});
}

TEST_CASE("exact sign determination") {
    CHECK(sign(kP52, RingElem{0, 0}) == 0);
    CHECK(sign(kP52, RingElem{-5, 1}) == 1);  // v^2 D = 24 > u^2 = 16
    CHECK(sign(kP52, RingElem{-6, 1}) == -1); // 24 < 36
    CHECK(sign(kP52, RingElem{7, 0}) == 1);
    CHECK(sign(kP52, RingElem{0, -2}) == -1);
}

TEST_CASE("the base exceeds p for every parameter choice") {
    for (std::int64_t p = 2; p <= 30; ++p)
        for (std::int64_t q = 1; q < p; ++q) CHECK(sign(Params(p, q), RingElem{-p, 1}) == 1);
}

TEST_CASE("division by the base") {
    CHECK(divide_beta(kP52, RingElem{-3, 6}) == RingElem{0, 1});
    CHECK(divide_beta(kP52, RingElem{3, 0}) == RingElem{6, -1});
    CHECK_FALSE(try_divide_beta(kP52, RingElem{1, 0}).has_value());
    CHECK_THROWS_AS(divide_beta(kP52, RingElem{1, 0}), NotDivisible);
}

TEST_CASE("divide after multiply is the identity") {
    std::mt19937_64 rng(20260809);
    for (int i = 0; i < 1000; ++i) {
        const RingElem x = random_elem(rng, 1000000);
        CHECK(divide_beta(kP52, mul_beta(kP52, x)) == x);
    }
    const Params P94(9, 4);
    for (int i = 0; i < 1000; ++i) {
        const RingElem x = random_elem(rng, 1000000);
        CHECK(divide_beta(P94, mul_beta(P94, x)) == x);
    }
}

TEST_CASE("sign is multiplicative") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 2000; ++i) {
        const RingElem x = random_elem(rng, 50);
        const RingElem y = random_elem(rng, 50);
        CHECK(sign(kP52, mul(kP52, x, y)) == sign(kP52, x) * sign(kP52, y));
    }
}

TEST_CASE("scaled elements canonicalize") {
    // 6/beta = 12 - 2 beta, checked by squaring: (12-2b)^2 * b^2 = 36
    const FinElem x = times_beta_pow(kP52, FinElem{RingElem{6, 0}}, -1);
    CHECK(x == FinElem{RingElem{12, -2}});
    CHECK(x.exp() == 0);
    const RingElem sq = mul(kP52, x.num(), x.num());
    CHECK(mul(kP52, sq, beta_pow(kP52, 2)) == RingElem{36, 0});

    // beta^2 / beta^2 canonicalizes to exponent zero
    CHECK(FinElem::make(kP52, RingElem{-3, 6}, 2) == FinElem{RingElem{1, 0}});
    // 1 / beta^2 is already canonical for p - q = 3
    const FinElem y = FinElem::make(kP52, RingElem{1, 0}, 2);
    CHECK(y.exp() == 2);
    // in the unit case everything folds back into the ring
    const Params unit(3, 2);
    CHECK(FinElem::make(unit, RingElem{1, 0}, 1) == FinElem{RingElem{4, -1}});
}

TEST_CASE("exact comparison of scaled elements") {
    CHECK(cmp(kP52, FinElem{RingElem{6, 0}}, FinElem{RingElem{0, 1}}) == 1);
    CHECK(add(kP52, FinElem{RingElem{1, 0}}, FinElem{RingElem{-1, 1}}) ==
          FinElem{RingElem{0, 1}});
    CHECK(sub(kP52, FinElem{RingElem{0, 1}}, FinElem{RingElem{0, 1}}).is_zero());
    const FinElem half = FinElem::make(kP52, RingElem{1, 0}, 1); // 1/beta
    CHECK(cmp(kP52, half, FinElem{RingElem{1, 0}}) == -1);
    CHECK(cmp(kP52, add(kP52, half, half), half) == 1);
    CHECK(times_beta_pow(kP52, half, 1) == FinElem{RingElem{1, 0}});
}

TEST_CASE("comparison agrees with floating evaluation") {
    // sanity only; the exact path is the authority
    std::mt19937_64 rng(99);
    const double beta = (6.0 + std::sqrt(24.0)) / 2.0;
    int checked = 0;
    for (int i = 0; i < 10000; ++i) {
        const RingElem x = random_elem(rng, 100000);
        const double v =
            static_cast<double>(x.a.convert_to<long long>()) +
            static_cast<double>(x.b.convert_to<long long>()) * beta;
        if (std::abs(v) < 1e-3) continue; // skip near-ties the double cannot resolve
        ++checked;
        CHECK(sign(kP52, x) == (v > 0 ? 1 : -1));
    }
    CHECK(checked > 9000);
}
