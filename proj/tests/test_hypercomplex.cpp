#include "bpf/hypercomplex.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace bpf;
using bpf::test::Ho;
using bpf::test::Hq;

namespace {

// Independent transcription of the octonion table: entry (i, j) is
// +-(k + 1) for e_i e_j = +-e_k.
constexpr int kTable[8][8] = {
    {1, 2, 3, 4, 5, 6, 7, 8},          {2, -1, 4, -3, 6, -5, -8, 7},
    {3, -4, -1, 2, 7, 8, -5, -6},      {4, 3, -2, -1, 8, -7, 6, -5},
    {5, -6, -7, -8, -1, 2, 3, 4},      {6, 5, -8, 7, -2, -1, -4, 3},
    {7, 8, 5, -6, -3, 4, -1, -2},      {8, -7, 6, 5, -4, -3, 2, -1},
};

template <std::size_t N>
Hypercomplex<Rational, N> e(std::size_t k, long coefficient = 1) {
    return Hypercomplex<Rational, N>::basis(k, Rational(coefficient));
}

}  // namespace

TEST_CASE("octonion table matches the transcription on all 64 basis pairs") {
    for (std::size_t i = 0; i < 8; ++i) {
        for (std::size_t j = 0; j < 8; ++j) {
            CAPTURE(i);
            CAPTURE(j);
            const int code = kTable[i][j];
            const long sign = code > 0 ? 1 : -1;
            const auto k = static_cast<std::size_t>(code > 0 ? code - 1 : -code - 1);
            CHECK(e<8>(i) * e<8>(j) == e<8>(k, sign));
            CHECK(octonion_table().index[i][j] == k);
            CHECK(octonion_table().sign[i][j] == sign);
        }
    }
}

TEST_CASE("quaternion basis products") {
    CHECK(e<4>(1) * e<4>(2) == e<4>(3));
    CHECK(e<4>(2) * e<4>(1) == e<4>(3, -1));
    CHECK(e<4>(2) * e<4>(3) == e<4>(1));
    CHECK(e<4>(3) * e<4>(1) == e<4>(2));
    for (std::size_t l = 1; l < 4; ++l) {
        CHECK(e<4>(l) * e<4>(l) == e<4>(0, -1));
    }
}

TEST_CASE("octonion examples") {
    CHECK(e<8>(1) * e<8>(4) == e<8>(5));
    CHECK((e<8>(1) * e<8>(2)) * e<8>(4) == e<8>(7));
    CHECK(e<8>(1) * (e<8>(2) * e<8>(4)) == e<8>(7, -1));
}

TEST_CASE("table antisymmetry and unit rows") {
    for (std::size_t i = 1; i < 8; ++i) {
        CHECK(e<8>(0) * e<8>(i) == e<8>(i));
        CHECK(e<8>(i) * e<8>(0) == e<8>(i));
        for (std::size_t j = 1; j < 8; ++j) {
            if (i != j) {
                CHECK(e<8>(i) * e<8>(j) == -(e<8>(j) * e<8>(i)));
            }
        }
    }
    for (std::size_t i = 1; i < 4; ++i) {
        for (std::size_t j = 1; j < 4; ++j) {
            if (i != j) {
                CHECK(e<4>(i) * e<4>(j) == -(e<4>(j) * e<4>(i)));
            }
        }
    }
}

TEST_CASE("table literals parse back to the loaded tables") {
    CHECK(parse_table<8>(octonion_table_literal()) == octonion_table());
    CHECK(parse_table<4>(quaternion_table_literal()) == quaternion_table());
}

TEST_CASE("table validation rejects broken tables") {
    auto t = octonion_table();
    t.sign[3][3] = 1;
    CHECK_THROWS_AS(validate_table<8>(t), std::logic_error);

    auto u = octonion_table();
    u.index[2][5] = u.index[2][6];
    CHECK_THROWS_AS(validate_table<8>(u), std::logic_error);

    auto v = quaternion_table();
    v.index[0][2] = 3;
    CHECK_THROWS_AS(validate_table<4>(v), std::logic_error);

    CHECK_THROWS_AS(parse_table<4>("1 e1 e2\n"), std::logic_error);
    CHECK_THROWS_AS(parse_table<4>("1 e1 e2 e9\ne1 -1 e3 -e2\ne2 -e3 -1 e1\ne3 e2 -e1 -1\n"),
                    std::logic_error);
}

TEST_CASE("add, scale and conjugate") {
    CHECK(hc_add(Hq({1, 0, 0, 0}), Hq({0, 1, 0, 0})) == Hq({1, 1, 0, 0}));
    CHECK(hc_scale(Rational(0), Hq({1, 2, 3, 4})) == Hq({0, 0, 0, 0}));
    CHECK(hc_scale(Rational(2), Hq({1, 2, 3, 4})) == Hq({2, 4, 6, 8}));
    CHECK(hc_conj(Hq({1, 2, 3, 4})) == Hq({1, -2, -3, -4}));
    CHECK(hc_conj(Hq({5, 0, 0, 0})) == Hq({5, 0, 0, 0}));
    CHECK(hc_conj(Ho({1, 2, 3, 4, 5, 6, 7, 8})) == Ho({1, -2, -3, -4, -5, -6, -7, -8}));
}

TEST_CASE("norm examples") {
    CHECK(hc_norm(Hq({0, 1, 1, 2})) == Rational(6));
    CHECK(hc_norm(Hq({0, 0, 0, 0})) == Rational(0));
    CHECK(hc_norm(Ho({0, 0, 0, 0, 0, 3, 0, 0})) == Rational(9));
}

TEST_CASE("quaternion multiplication is associative") {
    bpf::test::RandomRationals rng(101);
    for (int i = 0; i < 100; ++i) {
        const auto u = rng.hyper<4>();
        const auto v = rng.hyper<4>();
        const auto w = rng.hyper<4>();
        CHECK((u * v) * w == u * (v * w));
    }
}

TEST_CASE("octonion multiplication is alternative but not associative") {
    bpf::test::RandomRationals rng(202);
    bool witnessed_nonassociative = false;
    for (int i = 0; i < 100; ++i) {
        const auto u = rng.hyper<8>();
        const auto v = rng.hyper<8>();
        const auto w = rng.hyper<8>();
        CHECK(u * (u * v) == (u * u) * v);
        CHECK((v * u) * u == v * (u * u));
        CHECK((u * v) * u == u * (v * u));
        witnessed_nonassociative = witnessed_nonassociative || !((u * v) * w == u * (v * w));
    }
    CHECK(witnessed_nonassociative);
}

TEST_CASE("norm is multiplicative on random inputs") {
    bpf::test::RandomRationals rng(303);
    for (int i = 0; i < 100; ++i) {
        const auto u = rng.hyper<4>();
        const auto v = rng.hyper<4>();
        CHECK(hc_norm(u * v) == hc_norm(u) * hc_norm(v));
        const auto x = rng.hyper<8>();
        const auto y = rng.hyper<8>();
        CHECK(hc_norm(x * y) == hc_norm(x) * hc_norm(y));
    }
}

TEST_CASE("u times its conjugate is scalar") {
    bpf::test::RandomRationals rng(404);
    for (int i = 0; i < 50; ++i) {
        const auto u = rng.hyper<8>();
        const auto p = u * hc_conj(u);
        for (std::size_t l = 1; l < 8; ++l) {
            CHECK(p[l] == Rational(0));
        }
        Rational squares(0);
        for (std::size_t l = 0; l < 8; ++l) {
            squares += u[l] * u[l];
        }
        CHECK(p[0] == squares);
    }
}

TEST_CASE("quadratic coefficients") {
    const QuadraticContext ctx(Rational(5));
    const QuadraticElement alpha(Rational(1, 2), Rational(1, 2), ctx);
    const auto u = Hypercomplex<QuadraticElement, 4>::basis(1, alpha);
    const auto v = Hypercomplex<QuadraticElement, 4>::basis(2, alpha);
    const auto p = u * v;
    CHECK(p[3] == alpha * alpha);
    CHECK(p[0] == QuadraticElement(Rational(0), ctx));

    const auto lifted = lift<4>(Hq({1, 2, 3, 4}), ctx);
    CHECK(rational_part<4>(lifted) == Hq({1, 2, 3, 4}));
    CHECK_FALSE(rational_part<4>(u).has_value());
}
