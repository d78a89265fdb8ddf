#include "doctest.h"

#include <stdexcept>
#include <vector>

#include "chern/rational.hpp"
#include "chern/unipoly.hpp"

using namespace chern;

namespace {

UniPoly ints(std::vector<long> cs) {
    std::vector<Rational> out;
    out.reserve(cs.size());
    for (long c : cs) out.emplace_back(c);
    return UniPoly::from_coeffs(std::move(out));
}

}  // namespace

TEST_SUITE("unipoly") {
    TEST_CASE("zero normalization and degree") {
        CHECK(UniPoly().is_zero());
        CHECK(UniPoly().degree() == -1);
        CHECK(ints({0, 0, 0}).is_zero());
        CHECK(ints({3, 0, 0}).degree() == 0);
        CHECK(UniPoly::monomial(Rational(1), 4).degree() == 4);
        CHECK(UniPoly::monomial(Rational(0), 4).is_zero());
    }

    TEST_CASE("ring arithmetic") {
        const UniPoly p = ints({1, 2});      // 1 + 2t
        const UniPoly q = ints({3, 0, 1});   // 3 + t^2
        CHECK(p + q == ints({4, 2, 1}));
        CHECK(p - p == UniPoly());
        CHECK(p * q == ints({3, 6, 1, 2}));
        CHECK(p * q == q * p);
        CHECK((p + q) * p == p * p + q * p);
        CHECK(Rational(2) * p == ints({2, 4}));
        CHECK((-p) + p == UniPoly());
    }

    TEST_CASE("truncation and powers") {
        const UniPoly p = ints({1, 1});
        CHECK(p.pow(4) == ints({1, 4, 6, 4, 1}));
        CHECK(p.pow(0) == ints({1}));
        CHECK(p.pow_trunc(4, 2) == ints({1, 4, 6}));
        CHECK(p.pow(4).truncated(2) == p.pow_trunc(4, 2));
        CHECK(ints({5, 6, 7}).truncated(0) == ints({5}));
    }

    TEST_CASE("evaluation and derivatives") {
        const UniPoly p = ints({2, -3, 0, 1});  // 2 - 3t + t^3
        CHECK(p.eval(Rational(2)) == Rational(4));
        CHECK(p.eval(Rational(1, Integer(2))) == Rational(5, Integer(8)));
        CHECK(p.derivative() == ints({-3, 0, 3}));
        CHECK(p.derivative(2) == ints({0, 6}));
        CHECK(p.derivative(3) == ints({6}));
        CHECK(p.derivative(4).is_zero());
    }

    TEST_CASE("division with remainder") {
        const UniPoly a = ints({-1, 0, 0, 1});  // t^3 - 1
        const UniPoly b = ints({-1, 1});        // t - 1
        const auto [q, r] = UniPoly::divmod(a, b);
        CHECK(q == ints({1, 1, 1}));
        CHECK(r.is_zero());
        const auto [q2, r2] = UniPoly::divmod(ints({1, 0, 1}), ints({1, 1}));
        CHECK(q2 * ints({1, 1}) + r2 == ints({1, 0, 1}));
        CHECK(r2.degree() < 1);
        CHECK_THROWS_AS(UniPoly::divmod(a, UniPoly()), std::domain_error);
    }

    TEST_CASE("root multiplicity") {
        // (t - 1)^3 (t + 2)
        const UniPoly p = ints({-1, 1}).pow(3) * ints({2, 1});
        CHECK(p.root_multiplicity(Rational(1)) == 3);
        CHECK(p.root_multiplicity(Rational(-2)) == 1);
        CHECK(p.root_multiplicity(Rational(5)) == 0);
        CHECK_THROWS_AS(UniPoly().root_multiplicity(Rational(0)), std::domain_error);
    }

    TEST_CASE("Taylor shift") {
        const UniPoly p = ints({0, 0, 1});  // t^2
        CHECK(p.taylor_shift(Rational(1)) == ints({1, 2, 1}));  // (t+1)^2
        const UniPoly q = ints({5, -2, 0, 7});
        const UniPoly shifted = q.taylor_shift(Rational(-3));
        for (long x : {0L, 1L, -1L, 4L})
            CHECK(shifted.eval(Rational(x)) == q.eval(Rational(x) + Rational(-3)));
        CHECK(q.taylor_shift(Rational(0)) == q);
    }

    TEST_CASE("series inversion against the geometric series") {
        const UniPoly one_minus_t = ints({1, -1});
        const UniPoly inv = series_invert(one_minus_t, 6);
        CHECK(inv == ints({1, 1, 1, 1, 1, 1, 1}));
        CHECK((one_minus_t * inv).truncated(6) == ints({1}));
    }

    TEST_CASE("series inversion matches triangular back-substitution") {
        // Oracle: solve p * q = 1 coefficient by coefficient.
        const UniPoly p = ints({2, 3, 0, -1, 5});
        const int order = 9;
        std::vector<Rational> q(static_cast<std::size_t>(order) + 1);
        q[0] = Rational(1) / p.coeff(0);
        for (int k = 1; k <= order; ++k) {
            Rational acc(0);
            for (int j = 1; j <= k; ++j) acc = acc + p.coeff(j) * q[static_cast<std::size_t>(k - j)];
            q[static_cast<std::size_t>(k)] = -acc / p.coeff(0);
        }
        CHECK(series_invert(p, order) == UniPoly::from_coeffs(q));
        CHECK_THROWS_AS(series_invert(ints({0, 1}), 3), std::domain_error);
    }

    TEST_CASE("series logarithm") {
        // log(1 + t) = t - t^2/2 + t^3/3 - ...
        const UniPoly lg = series_log1(ints({1, 1}), 5);
        CHECK(lg.coeff(0) == Rational(0));
        CHECK(lg.coeff(1) == Rational(1));
        CHECK(lg.coeff(2) == Rational(-1, Integer(2)));
        CHECK(lg.coeff(3) == Rational(1, Integer(3)));
        CHECK(lg.coeff(4) == Rational(-1, Integer(4)));
        CHECK(lg.coeff(5) == Rational(1, Integer(5)));
        // log of a product is the sum of logs, modulo t^6.
        const UniPoly a = ints({1, 2, 1});
        const UniPoly b = ints({1, 0, 0, 3});
        CHECK(series_log1((a * b).truncated(5), 5) ==
              (series_log1(a, 5) + series_log1(b, 5)).truncated(5));
        CHECK_THROWS_AS(series_log1(ints({2, 1}), 3), std::domain_error);
    }

    TEST_CASE("string rendering") {
        CHECK(UniPoly().str() == "0");
        CHECK(ints({1, -2, 1}).str("t") == "1 - 2*t + t^2");
    }
}
