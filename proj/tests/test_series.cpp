#include "bpf/hyperseq.hpp"
#include "bpf/series.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace bpf;

namespace {

std::vector<Rational> ints(std::initializer_list<long> xs) { return {xs.begin(), xs.end()}; }

Polynomial poly(std::initializer_list<long> xs) { return Polynomial(ints(xs)); }

}  // namespace

TEST_CASE("polynomials are trimmed") {
    CHECK(poly({1, 2, 0, 0}).degree() == 1);
    CHECK(poly({0, 0}).is_zero());
    CHECK(poly({}).degree() == -1);
    CHECK(poly({1, 1}) * poly({1, -1}) == poly({1, 0, -1}));
    CHECK(poly({1, 2}) + poly({-1, -2}) == Polynomial());
}

TEST_CASE("series expansion examples") {
    CHECK(series_expand({poly({1}), poly({1, -1})}, 4).coefficients() == ints({1, 1, 1, 1, 1}));
    CHECK(series_expand({poly({0, 1}), poly({1, -1, -1})}, 6).coefficients() ==
          ints({0, 1, 1, 2, 3, 5, 8}));
    CHECK(series_expand({poly({1, 1}), poly({1})}, 3).coefficients() == ints({1, 1, 0, 0}));
    CHECK_THROWS_WITH_AS(series_expand({poly({1}), poly({0, 1})}, 3), "pole at origin", std::domain_error);
}

TEST_CASE("expansion respects products") {
    const RationalFunction r1{poly({1, 2}), poly({1, -3})};
    const RationalFunction r2{poly({0, 1, 5}), poly({2, 1, -1})};
    const auto lhs = series_expand(r1, 15) * series_expand(r2, 15);
    const auto rhs = series_expand(r1 * r2, 15);
    CHECK(lhs == rhs);
    const auto sum = series_expand(r1, 15) + series_expand(r1, 15);
    CHECK(sum == Rational(2) * series_expand(r1, 15));
    CHECK((sum - series_expand(r1, 15)) == series_expand(r1, 15));
}

TEST_CASE("power series basics") {
    const PowerSeries s(ints({0, 0, 3, 1}), 5);
    CHECK(s.valuation() == 2);
    CHECK(s.truncated(2).coefficients() == ints({0, 0, 3}));
    CHECK_THROWS_AS((void)s.truncated(7), std::invalid_argument);
    CHECK(PowerSeries::zero(4).valuation() == 5);
    CHECK(PowerSeries(ints({1, 2, 3}), 2) == PowerSeries(ints({1, 2, 3, 9}), 3));
}

TEST_CASE("odd-index series f") {
    const auto f11 = f_series(fibonacci_params(Rational(1), Rational(1)), 9);
    CHECK(f11[1] == Rational(1));
    CHECK(f11[3] == Rational(2));
    CHECK(f11[5] == Rational(5));
    CHECK(f11[7] == Rational(13));
    CHECK(f11[9] == Rational(34));

    for (const Params& params : bpf::test::grid()) {
        SequenceEngine e(params);
        const auto f = f_series(params, 21);
        CHECK(f[0] == Rational(0));
        for (std::size_t k = 0; 2 * k + 1 <= 21; ++k) {
            CHECK(f[2 * k] == Rational(0));
            CHECK(f[2 * k + 1] == e.value(static_cast<long>(2 * k + 1)));
        }
    }
}

TEST_CASE("correction terms") {
    const Params p = fibonacci_params(Rational(1), Rational(1));
    const auto f = f_series(p, 12);
    const auto r0 = correction_term(p, 0, 10);
    CHECK(r0.valuation() == 2);
    for (std::size_t i = 1; i <= 10; ++i) {
        CHECK(r0[i] == f[i - 1]);
    }
    const auto r1 = correction_term(p, 1, 10);
    CHECK(r1[1] == Rational(0));
    CHECK(r1[3] == f[3]);
    const auto r3 = correction_term(p, 3, 10);
    CHECK(r3.valuation() == 3);
    CHECK(r3[3] == Rational(5));

    for (const Params& params : bpf::test::grid()) {
        for (std::size_t s = 0; s < 8; ++s) {
            CHECK_NOTHROW((void)correction_term(params, s, 20));
        }
    }
}

TEST_CASE("generating functions reproduce the sequences") {
    for (const Params& params : bpf::test::grid()) {
        SequenceEngine e(params);
        const auto quat = genfunc_quat(params, 40);
        const auto oct = genfunc_oct(params, 40);
        REQUIRE(quat.size() == 41);
        for (long n = 0; n <= 40; ++n) {
            const auto k = static_cast<std::size_t>(n);
            CHECK(quat[k] == W(n, e));
            CHECK(oct[k] == OW(n, e));
            for (std::size_t l = 0; l < 4; ++l) {
                CHECK(quat[k][l] == oct[k][l]);
            }
        }
    }
    const Params p(Rational(1), Rational(2), Rational(2), Rational(1));
    SequenceEngine e(p);
    const auto g = genfunc_oct(p, 20);
    for (long n = 0; n <= 20; ++n) {
        CHECK(g[static_cast<std::size_t>(n)] == OW(n, e));
    }
    CHECK(genfunc_quat(p, 0).size() == 1);
    CHECK(genfunc_quat(p, 0)[0] == W(0, e));
}
