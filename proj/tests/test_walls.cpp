#include <catch_amalgamated.hpp>

#include "kuznum/cli.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace kuznum;
using support::cv;
using support::preset;
using support::q;

namespace {

std::size_t count(const std::string& haystack, const std::string& needle) {
    std::size_t n = 0;
    for (auto pos = haystack.find(needle); pos != std::string::npos; pos = haystack.find(needle, pos + 1)) ++n;
    return n;
}

// every point of the wall has equal slopes, checked on a handful of rational points
void check_on_wall(const WallCircle& wall, const ChernVector& v, const ChernVector& w) {
    if (wall.kind == WallCircle::Kind::circle) {
        for (int k = 1; k < 8; ++k) {
            // beta ranges inside (center - r, center + r) as long as (beta - c)^2 < r^2
            const Rational t(k - 4, 8);
            const Rational beta = wall.center + t * wall.radius_sq / (1 + wall.radius_sq);
            const Rational alpha_sq = wall.radius_sq - (beta - wall.center) * (beta - wall.center);
            if (alpha_sq <= 0) continue;
            CHECK(oracle::slope_difference(v, w, alpha_sq, beta) == 0);
            CHECK(oracle::slope_difference(v, w, alpha_sq + 1, beta) != 0);
        }
    } else if (wall.kind == WallCircle::Kind::vertical_line) {
        for (int k = 1; k < 5; ++k) CHECK(oracle::slope_difference(v, w, Rational(k, 3), wall.line_beta) == 0);
    }
}

}  // namespace

TEST_CASE("beta_0 of truncated classes") {
    const auto& q3 = preset("q3");
    const BetaZero a = beta_zero(q3, cv({2, -1, 0}));
    CHECK(a.F == q("1/4"));
    CHECK(a.beta0 == QuadNumber(-1));
    CHECK(a.bound == QuadNumber(2));

    const BetaZero b = beta_zero(q3, cv({1, 0, -1}));
    CHECK(b.F == 2);
    CHECK(b.beta0 == QuadNumber(0, -1, 2));
    CHECK(b.bound == QuadNumber(0, 2, 2));

    // the full spinor class gives the same beta_0 as its truncation
    CHECK(beta_zero(q3, support::spinor()).beta0 == a.beta0);
    CHECK_THROWS_WITH(beta_zero(q3, cv({0, 1, 0})), "rank not positive");
    CHECK_THROWS_WITH(beta_zero(q3, cv({-1, 0, 0})), "rank not positive");
    CHECK_THROWS_WITH(beta_zero(q3, cv({1, 0, 0})), "no positive discriminant");
    CHECK_THROWS_WITH(beta_zero(q3, cv({1, 0})), "class needs at least (c0, c1, c2)");
}

TEST_CASE("no-wall certificates") {
    const auto& q3 = preset("q3");
    const NoWallCertificate s = nowall_certificate(q3, cv({2, -1, 0}));
    CHECK(s.certified);
    REQUIRE(s.lattice_step.has_value());
    CHECK(*s.lattice_step == 2);
    CHECK_FALSE(s.witness.has_value());

    const NoWallCertificate r = nowall_certificate(q3, cv({1, 0, -1}));
    CHECK_FALSE(r.certified);
    REQUIRE(r.witness.has_value());
    REQUIRE(r.witness_value.has_value());
    CHECK(*r.witness_value == QuadNumber(2));
    CHECK(beta_zero_value(q3, r.beta0, r.witness->first, r.witness->second) == *r.witness_value);
    CHECK(compare_any(QuadNumber(0), *r.witness_value) < 0);
    CHECK(compare_any(*r.witness_value, r.beta0.bound) < 0);

    // (1, 1, -3/2): F = 4, beta_0 = -1, bound = 4, step 2
    const NoWallCertificate w = nowall_certificate(q3, cv({1, 1, q("-3/2")}));
    CHECK(w.beta0.beta0 == QuadNumber(-1));
    CHECK_FALSE(w.certified);
    REQUIRE(w.lattice_step.has_value());
    CHECK(*w.lattice_step == 2);
    REQUIRE(w.witness_value.has_value());
    CHECK(compare_any(*w.witness_value, w.beta0.bound) < 0);
    CHECK(w.witness_value->sign() > 0);
}

TEST_CASE("wall circles") {
    const auto& q3 = preset("q3");
    const ChernVector o0 = line_bundle_class(q3, 0), o1 = line_bundle_class(q3, 1);
    const ChernVector v = cv({o0(0), o0(1), o0(2)}), w = cv({o1(0), o1(1), o1(2)});
    const WallCircle c = wall_circle(v, w);
    CHECK(c.kind == WallCircle::Kind::circle);
    CHECK(c.center == q("1/2"));
    CHECK(c.radius_sq == q("1/4"));
    check_on_wall(c, v, w);

    CHECK(wall_circle(cv({1, 0, -1}), cv({2, 0, -2})).kind == WallCircle::Kind::degenerate);
    CHECK(wall_circle(cv({1, 0, 0}), cv({0, 1, 0})).kind == WallCircle::Kind::empty);

    const WallCircle far = wall_circle(cv({1, 0, -1}), cv({0, 1, -2}));
    CHECK(far.kind == WallCircle::Kind::circle);
    CHECK(far.center == -2);
    CHECK(far.radius_sq == 2);

    // equal ranks: vertical line
    const WallCircle line = wall_circle(cv({1, 0, -1}), cv({1, 0, -2}));
    CHECK(line.kind == WallCircle::Kind::vertical_line);
    CHECK(line.line_beta == 0);
    check_on_wall(line, cv({1, 0, -1}), cv({1, 0, -2}));
    CHECK(to_string(WallCircle::Kind::vertical_line) == "vertical-line");
}

TEST_CASE("wall circles agree with the slope oracle on random pairs") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 200; ++trial) {
        ChernVector v(3), w(3);
        for (auto& e : v) e = oracle::random_rational(rng, 6, 2);
        for (auto& e : w) e = oracle::random_rational(rng, 6, 2);
        const WallCircle c = wall_circle(v, w);
        check_on_wall(c, v, w);
        if (c.kind == WallCircle::Kind::empty) {
            for (int k = -4; k <= 4; ++k) {
                CHECK(oracle::slope_difference(v, w, q("1/3"), Rational(k, 2)) != 0);
            }
        }
        if (c.kind == WallCircle::Kind::degenerate) {
            CHECK(oracle::slope_difference(v, w, q("1/3"), q("1/7")) == 0);
        }
        CHECK(same_wall(c, wall_circle(w, v)));
    }
}

TEST_CASE("wall scans") {
    const auto& q3 = preset("q3");
    CHECK(wall_scan(q3, cv({2, -1, 0}), {10, 10}).empty());
    CHECK(wall_scan(q3, support::spinor(), {3, 3}).empty());
    CHECK(wall_scan(q3, cv({1, 0, -1}), {0, 0}).empty());

    const auto walls = wall_scan(q3, cv({1, 0, -1}), {3, 3});
    REQUIRE(walls.size() == 1);
    CHECK(walls[0].kind == WallCircle::Kind::circle);
    CHECK(walls[0].center == q("-3/2"));
    CHECK(walls[0].radius_sq == q("1/4"));
    CHECK(walls[0].witnesses.size() == 4);
    for (const auto& w : walls[0].witnesses) check_on_wall(walls[0], cv({1, 0, -1}), w);

    const auto deeper = wall_scan(q3, cv({1, 0, -2}), {3, 3});
    REQUIRE_FALSE(deeper.empty());
    bool found = false;
    for (const auto& w : deeper) {
        if (w.kind == WallCircle::Kind::circle && w.center == q("-5/2") && w.radius_sq == q("9/4")) found = true;
    }
    CHECK(found);
}

TEST_CASE("svg rendering") {
    const cli::Viewport view;
    const std::string empty = cli::render_walls_svg({}, view);
    CHECK(empty.rfind("<?xml", 0) == 0);
    CHECK(count(empty, "<path") == 0);
    CHECK(count(empty, "class=\"axis\"") == 2);
    CHECK(empty.find("</svg>") != std::string::npos);

    const auto& q3 = preset("q3");
    const auto walls = wall_scan(q3, cv({1, 0, -1}), {3, 3});
    const std::string one = cli::render_walls_svg(walls, view);
    CHECK(count(one, "<path") == 1);
    CHECK(count(one, "<title>") == 1);
    CHECK(one == cli::render_walls_svg(walls, view));

    WallCircle line;
    line.kind = WallCircle::Kind::vertical_line;
    line.line_beta = -1;
    const std::string with_line = cli::render_walls_svg({line}, view);
    CHECK(count(with_line, "<line") == 3);
    CHECK_THROWS_WITH(cli::render_walls_svg({}, cli::Viewport{1, 1, 1}), "empty viewport");
}
