#include "thueq/dioph.hpp"
#include "thueq/errors.hpp"
#include "thueq/rouche.hpp"

#include <doctest.h>

#include <random>

using namespace thueq;
using namespace thueq::rouche;

TEST_CASE("low-order enclosures verify at 100") {
    auto certs = root_certificates(Rat(100));
    REQUIRE(certs.size() == 4);
    for (const auto& c : certs) {
        CHECK(c.verified);
        CHECK(c.margin > 0);
        for (const auto& [e, v] : c.majorant) {
            CHECK(e >= 0);
            CHECK(v >= 0);
        }
    }
}

TEST_CASE("high-order enclosures verify at 100") {
    for (auto w : {HighOrder::B, HighOrder::B3}) {
        auto c = certify_high_order(w, Rat(100));
        CHECK(c.verified);
        CHECK(c.margin > 0);
    }
}

TEST_CASE("radii divided by 1000 fail") {
    Rat s = make_rat(1, 1000);
    for (const auto& c : root_certificates(Rat(100), s)) CHECK_FALSE(c.verified);
    CHECK_FALSE(certify_high_order(HighOrder::B, Rat(100), s).verified);
    CHECK_FALSE(certify_high_order(HighOrder::B3, Rat(100), s).verified);
}

TEST_CASE("enclosures fail well below 100") {
    auto certs = root_certificates(Rat(20));
    bool any_fail = false;
    for (const auto& c : certs) any_fail = any_fail || !c.verified;
    CHECK(any_fail);
    CHECK_THROWS_AS(root_separation(Rat(20)), DependencyError);
}

TEST_CASE("separation constants") {
    RootSeparation s = root_separation(Rat(100));
    CHECK(s.min_pairwise >= parse_rat("0.96"));
    CHECK(s.min_to_alpha2 >= parse_rat("0.98"));
    CHECK(s.alpha0_abs >= parse_rat("0.94"));
    CHECK(8 / (parse_rat("0.96") * parse_rat("0.96") * parse_rat("0.98")) <= parse_rat("8.86"));
}

TEST_CASE("discs are disjoint at 100") {
    // centers -1/t, -1, t, 1 with radii 5.01/T^3, 2.16/T, 5.02/T, 2.16/T
    Rat T = 100;
    Rat r0 = radius_alpha0() / pow(T, 3), r1 = radius_alpha13() / T, r2 = radius_alpha2() / T;
    CHECK(1 - 1 / T > r0 + r1);           // alpha0 vs alpha1, alpha3
    CHECK(Rat(2) > 2 * r1);               // alpha1 vs alpha3
    CHECK(T - 1 / T > r0 + r2);           // alpha2 vs alpha0
    CHECK(T - 1 > r1 + r2);               // alpha2 vs alpha1, alpha3
}

TEST_CASE("isolated roots land in the certified discs") {
    std::mt19937_64 rng(29);
    int tested = 0;
    while (tested < 50) {
        long a = static_cast<long>(rng() % 20001) - 10000, b = static_cast<long>(rng() % 20001) - 10000;
        long n2 = a * a + b * b;
        if (n2 < 10000 || n2 > 100000000) continue;
        ++tested;
        GaussRat t(a, b);
        auto roots = dioph::root_balls(quadfield::QuadInt(1, a, b), 128);
        REQUIRE(roots);
        Rat T = sqrt_lower(t.norm(), 64);
        GaussRat s = GaussRat(1) / t;
        std::array<GaussRat, 4> centers = {-s, GaussRat(-1), t, GaussRat(1)};
        std::array<Rat, 4> radii = {radius_alpha0() / pow(T, 3), radius_alpha13() / T, radius_alpha2() / T,
                                    radius_alpha13() / T};
        for (int j = 0; j < 4; ++j) {
            ComplexBall d = (*roots)[j] - ComplexBall::exact(centers[j], 128);
            CHECK(d.abs_bounds().hi <= radii[j]);
        }
    }
}

TEST_CASE("laurent arithmetic") {
    Laurent a = Laurent::monomial(2, -1), b = Laurent::monomial(3, 2);
    Laurent p = a * b;
    CHECK(p.low == 1);
    Laurent s = a + b;
    CHECK(s.low == -1);
    CHECK(s.p.degree() == 3);
    CHECK(to_string(Laurent::monomial(-1, 1)) == "-1*t^-1");
}
