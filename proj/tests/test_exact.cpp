#include <catch_amalgamated.hpp>

#include "oracles.hpp"
#include "support.hpp"

using namespace kuznum;
using support::cv;
using support::q;

TEST_CASE("rationals parse and print reduced") {
    CHECK(to_string(q("4/6")) == "2/3");
    CHECK(to_string(q("-3/1")) == "-3");
    CHECK(to_canonical_string(q("5")) == "5/1");
    CHECK(to_canonical_string(q(" -2/4 ")) == "-1/2");
    CHECK(denominator(q("-7/14")) == 2);
    CHECK_THROWS_AS(parse_rational("7/-14"), ParseError);
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("abc"), ParseError);
    CHECK_THROWS_AS(parse_rational(""), ParseError);
    CHECK_THROWS_AS(parse_rational("1.5"), ParseError);
}

TEST_CASE("integer helpers") {
    CHECK(floor(q("-7/2")) == -4);
    CHECK(ceil(q("-7/2")) == -3);
    CHECK(floor(q("7/2")) == 3);
    CHECK(isqrt(Integer(99)) == 9);
    CHECK(isqrt(Integer(100)) == 10);
    CHECK(rational_gcd(q("1/2"), q("1/3")) == q("1/6"));
    CHECK(rational_gcd(q("2"), q("0")) == 2);
    Rational r;
    CHECK(rational_sqrt(q("9/4"), r));
    CHECK(r == q("3/2"));
    CHECK_FALSE(rational_sqrt(q("2"), r));
}

TEST_CASE("kernel of the Q3 orthogonality system") {
    // rows e^{kH}, k = 0, 1, 2, times the displayed Euler matrix
    RatMatrix a(3, 4);
    a << 1, 0, 0, 0, 1, 1, q("1/2"), q("1/6"), 1, 2, 2, q("4/3");
    RatMatrix g(4, 4);
    g << q("1/2"), q("13/12"), q("3/2"), 1, q("-13/12"), q("-3/2"), -1, 0, q("3/2"), 1, 0, 0, -1, 0, 0, 0;
    const RatMatrix m = a * g;
    const auto k = kernel_basis(m);
    REQUIRE(k.size() == 1);
    CHECK((m * k[0]).isZero());
    const RatVector s = support::spinor();
    // proportional to (2, -1, 0, 1/12)
    const Rational scale = k[0](0) / s(0);
    CHECK(k[0] == RatVector(scale * s));
}

TEST_CASE("kernel of trivial maps") {
    CHECK(kernel_basis(RatMatrix::Identity(3, 3)).empty());
    const auto k = kernel_basis(RatMatrix::Zero(2, 3));
    REQUIRE(k.size() == 3);
    for (int i = 0; i < 3; ++i) CHECK(k[static_cast<std::size_t>(i)] == RatVector(RatMatrix::Identity(3, 3).col(i)));
    CHECK(kernel_basis(RatMatrix(0, 2)).size() == 2);
}

TEST_CASE("lattice_primitive") {
    const std::vector<Integer> denoms{1, 1, 2, 12};
    IntVector expected(4);
    expected << 2, -1, 0, 1;
    CHECK(lattice_primitive(support::spinor(), denoms) == expected);
    CHECK(lattice_primitive(cv({4, -2, 0, q("1/6")}), denoms) == expected);
    CHECK(lattice_primitive(cv({-4, 2, 0, q("-1/6")}), denoms) == expected);
    CHECK_THROWS_WITH(lattice_primitive(cv({0, 0, 0, 0}), denoms), "zero class");
    CHECK_THROWS_WITH(lattice_primitive(cv({1, 2, 3}), denoms), "not in lattice span");
}

TEST_CASE("lattice_primitive is scale invariant and idempotent") {
    std::mt19937_64 rng(11);
    const std::vector<Integer> denoms{1, 1, 2, 12};
    for (int trial = 0; trial < 200; ++trial) {
        RatVector v(4);
        for (auto& e : v) e = oracle::random_rational(rng, 9, 12);
        if (v.isZero()) continue;
        const IntVector p = lattice_primitive(v, denoms);
        Rational s = oracle::random_rational(rng, 20, 20);
        if (s <= 0) s = -s + 1;
        CHECK(lattice_primitive(RatVector(s * v), denoms) == p);
        RatVector back(4);
        for (int i = 0; i < 4; ++i) back(i) = Rational(p(i)) / Rational(denoms[static_cast<std::size_t>(i)]);
        CHECK(lattice_primitive(back, denoms) == p);
        Integer g = 0;
        for (const auto& e : p) g = gcd(g, e);
        CHECK(g == 1);
    }
}

TEST_CASE("kernel exactness and rank-nullity on random matrices") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> dims(1, 5);
    for (int trial = 0; trial < 300; ++trial) {
        const int r = dims(rng), c = dims(rng);
        RatMatrix m(r, c);
        for (int i = 0; i < r; ++i) {
            for (int j = 0; j < c; ++j) m(i, j) = oracle::random_rational(rng, 3, 4);
        }
        if (trial % 3 == 0 && r > 1) m.row(r - 1) = m.row(0) * Rational(2);  // force dependence
        const auto k = kernel_basis(m);
        for (const auto& v : k) CHECK((m * v).isZero());
        CHECK(static_cast<long>(k.size()) == c - oracle::rank(m));
        if (!k.empty()) {
            RatMatrix stacked(static_cast<Eigen::Index>(k.size()), c);
            for (std::size_t i = 0; i < k.size(); ++i) stacked.row(static_cast<Eigen::Index>(i)) = k[i].transpose();
            CHECK(oracle::rank(stacked) == static_cast<long>(k.size()));
        }
    }
}

TEST_CASE("hermite normal form and integer kernel") {
    IntMatrix m(2, 3);
    m << 2, 4, 6, 1, 1, 1;
    const IntMatrix h = hermite_normal_form(m);
    REQUIRE(h.rows() == 2);
    CHECK(h(0, 0) > 0);
    CHECK(h(1, 0) == 0);
    CHECK(h(1, 1) > 0);
    CHECK(h(0, 1) >= 0);
    CHECK(h(0, 1) < h(1, 1));
    const IntMatrix k = integer_kernel(m);
    REQUIRE(k.rows() == 1);
    CHECK((m * k.row(0).transpose()).isZero());
    // saturated: (1, -2, 1)
    CHECK(abs(k(0, 0)) == 1);
    CHECK(lattice_coordinates(h, IntVector(m.row(0).transpose())).has_value());
    IntVector off(3);
    off << 1, 0, 0;
    CHECK_FALSE(lattice_coordinates(h, off).has_value());
}

TEST_CASE("quad numbers normalize and compare") {
    CHECK(quad_compare(QuadNumber(-1), QuadNumber(0)) < 0);
    const QuadNumber half(0, 1, q("1/4"));
    CHECK(half.is_rational());
    CHECK(quad_compare(half, QuadNumber(q("1/2"))) == 0);
    const QuadNumber x(1, 1, 2);
    CHECK(quad_compare(x, QuadNumber(q("5/2"))) < 0);
    CHECK(quad_compare(QuadNumber(0, 1, 8), QuadNumber(0, 2, 2)) == 0);
    CHECK(QuadNumber(0, 1, 8) == QuadNumber(0, 2, 2));
    CHECK(QuadNumber(0, 1, q("1/2")).radicand() == 2);
    CHECK_THROWS_WITH(quad_compare(QuadNumber(0, 1, 2), QuadNumber(0, 1, 3)), "incomparable radicands");
    CHECK(compare_any(QuadNumber(0, 1, 2), QuadNumber(0, 1, 3)) < 0);
    CHECK(compare_any(QuadNumber(1, 1, 2), QuadNumber(0, 1, 5)) > 0);  // 2.414 > 2.236
    CHECK(QuadNumber(0, -1, 2).to_string() == "-sqrt(2)");
    CHECK(floor(QuadNumber(0, -1, 2)) == -2);
    CHECK(fixed_truncated(q("-1/3"), 6) == "-0.333333");
    CHECK(fixed_truncated(q("2"), 6) == "2.000000");
    CHECK(fixed_truncated_sqrt(q("2"), 6) == "1.414213");
}

TEST_CASE("quad_compare is a total order agreeing with high precision") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> rad(0, 3);
    const Rational radicands[] = {2, 3, 5, q("7/3")};
    for (int trial = 0; trial < 1000; ++trial) {
        const Rational F = radicands[rad(rng)];
        const QuadNumber x(oracle::random_rational(rng, 20, 7), oracle::random_rational(rng, 9, 5), F);
        const QuadNumber y(oracle::random_rational(rng, 20, 7), oracle::random_rational(rng, 9, 5), F);
        const QuadNumber z(oracle::random_rational(rng, 20, 7), oracle::random_rational(rng, 9, 5), F);
        const auto xy = quad_compare(x, y);
        const auto yx = quad_compare(y, x);
        CHECK((yx < 0) == (xy > 0));
        CHECK((yx == 0) == (xy == 0));
        const auto diff = oracle::to_real(x) - oracle::to_real(y);
        if (xy < 0) CHECK(diff < 0);
        if (xy > 0) CHECK(diff > 0);
        if (xy == 0) CHECK(abs(diff) < oracle::Real("1e-40"));
        if (xy <= 0 && quad_compare(y, z) <= 0) CHECK(quad_compare(x, z) <= 0);
        const auto [lo, hi] = enclose(x, 12);
        CHECK(oracle::to_real(lo) <= oracle::to_real(x));
        CHECK(oracle::to_real(x) <= oracle::to_real(hi));
        CHECK(hi - lo <= q("1/1000000000000"));
        if (xy < 0) {
            const Rational mid = rational_between(x, y);
            CHECK(quad_compare(x, QuadNumber(mid)) < 0);
            CHECK(quad_compare(QuadNumber(mid), y) < 0);
        }
    }
}

TEST_CASE("compare_any across radicands agrees with high precision") {
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<int> rad(2, 30);
    for (int trial = 0; trial < 500; ++trial) {
        const QuadNumber x(oracle::random_rational(rng, 20, 7), oracle::random_rational(rng, 9, 5), rad(rng));
        const QuadNumber y(oracle::random_rational(rng, 20, 7), oracle::random_rational(rng, 9, 5), rad(rng));
        const auto c = compare_any(x, y);
        const auto diff = oracle::to_real(x) - oracle::to_real(y);
        if (c < 0) CHECK(diff < 0);
        if (c > 0) CHECK(diff > 0);
        if (c == 0) CHECK(abs(diff) < oracle::Real("1e-40"));
    }
}
