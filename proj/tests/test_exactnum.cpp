#include "thueq/ball.hpp"
#include "thueq/errors.hpp"
#include "thueq/interval.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <doctest.h>

#include <random>

using namespace thueq;
using big = boost::multiprecision::cpp_bin_float_50;

namespace {

big to_big(const Rat& x) { return big(x.get_num().get_str()) / big(x.get_den().get_str()); }

}  // namespace

TEST_CASE("parse_rat reads decimals exactly") {
    CHECK(parse_rat("8.86") == make_rat(886, 100));
    CHECK(parse_rat("886/100") == make_rat(443, 50));
    CHECK(parse_rat("-1e-4") == make_rat(-1, 10000));
    CHECK(parse_rat("3.74e12") == Rat(Int("3740000000000")));
    // leading zeros must stay decimal
    CHECK(parse_rat("0.14") == make_rat(14, 100));
    CHECK(parse_rat("0.96") == make_rat(96, 100));
    CHECK(parse_rat("010") == 10);
    CHECK_THROWS_AS(parse_rat("abc"), DomainError);
    CHECK_THROWS_AS(parse_rat(""), DomainError);
}

TEST_CASE("round_up_sig") {
    CHECK(round_up_sig(parse_rat("21.0281"), 4) == parse_rat("21.03"));
    CHECK(round_up_sig(parse_rat("429.74"), 4) == parse_rat("429.8"));
    CHECK(round_up_sig(parse_rat("4210"), 4) == 4210);
    CHECK(round_down_sig(parse_rat("2.1155e13"), 4) == parse_rat("2.115e13"));
    CHECK(round_up_sig(parse_rat("-1.2345"), 3) == parse_rat("-1.23"));
}

TEST_CASE("root bounds bracket the root") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 100; ++i) {
        Rat x = make_rat(static_cast<long>(rng() % 100000 + 1), static_cast<long>(rng() % 1000 + 1));
        for (unsigned n : {2u, 3u, 4u}) {
            Rat lo = root_lower(x, n, 8), hi = root_upper(x, n, 8);
            CHECK(pow(lo, n) <= x);
            CHECK(pow(hi, n) >= x);
            CHECK(lo <= hi);
        }
        Rat s = sqrt_upper(x, 64);
        CHECK(s * s >= x);
        CHECK(sqrt_lower(x, 64) <= s);
    }
}

TEST_CASE("pow_frac_upper") {
    Rat v = pow_frac_upper(Rat(443), 1, 1, 4);
    CHECK(v == 443);
    Rat w = pow_frac_upper(Rat(2), 1, 2, 4);
    CHECK(w == parse_rat("1.415"));
    CHECK(pow(w, 2) >= 2);
}

TEST_CASE("interval arithmetic contains sampled values") {
    std::mt19937_64 rng(11);
    auto r = [&] { return make_rat(static_cast<long>(rng() % 2001) - 1000, static_cast<long>(rng() % 97 + 1)); };
    for (int i = 0; i < 300; ++i) {
        Rat a = r(), b = r(), c = r(), d = r();
        RatInterval A(std::min(a, b), std::max(a, b)), B(std::min(c, d), std::max(c, d));
        Rat x = A.lo + (A.hi - A.lo) * make_rat(static_cast<long>(rng() % 11), 10);
        Rat y = B.lo + (B.hi - B.lo) * make_rat(static_cast<long>(rng() % 11), 10);
        CHECK((A + B).contains(x + y));
        CHECK((A - B).contains(x - y));
        CHECK((A * B).contains(x * y));
        if (!B.contains_zero()) CHECK((A / B).contains(x / y));
    }
}

TEST_CASE("ln_enclosure against a 50-digit oracle") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 60; ++i) {
        Rat x = make_rat(static_cast<long>(rng() % 1000000 + 1), static_cast<long>(rng() % 1000 + 1));
        RatInterval L = ln_enclosure(x, parse_rat("1e-15"));
        big v = boost::multiprecision::log(to_big(x));
        CHECK(to_big(L.lo) <= v);
        CHECK(v <= to_big(L.hi));
        CHECK(L.width() <= parse_rat("1e-15"));
    }
    CHECK_THROWS(ln_enclosure(Rat(0), parse_rat("1e-6")));
}

TEST_CASE("ln_enclosure is monotone") {
    for (long n = 2; n < 200; n += 7) {
        RatInterval a = ln_enclosure(Rat(n), parse_rat("1e-10")), b = ln_enclosure(Rat(n + 1), parse_rat("1e-10"));
        CHECK(a.hi < b.lo);
    }
}

TEST_CASE("kappa values") {
    Rat w = parse_rat("1e-9");
    CHECK(kappa(Rat(100), w).hi < parse_rat("2.83"));
    CHECK(kappa_hi(Rat(100), 2, w) == parse_rat("2.83"));
    CHECK(kappa(Rat(84), w).hi < 3);
    CHECK(kappa(Rat(80), w).lo > 3);
    // ln 80 ~ 4.382 gives about 3.048
    CHECK(kappa(Rat(80), w).contains(kappa(Rat(80), w).mid()));
    CHECK(kappa(Rat(80), w).lo > parse_rat("3.04"));
    CHECK(kappa(Rat(524), w).hi < 2);
    CHECK_THROWS_AS(kappa(Rat(13), w), UndefinedKappa);
}

TEST_CASE("kappa is strictly decreasing") {
    Rat w = parse_rat("1e-9");
    RatInterval prev = kappa(Rat(20), w);
    for (long t = 30; t <= 2000; t += 37) {
        RatInterval k = kappa(Rat(t), w);
        CHECK(k.hi < prev.lo);
        prev = k;
    }
}

TEST_CASE("pow_cmp agrees with a floating oracle") {
    std::mt19937_64 rng(5);
    int decided = 0;
    for (int i = 0; i < 1000; ++i) {
        Rat a = make_rat(static_cast<long>(rng() % 5000 + 1), static_cast<long>(rng() % 50 + 1));
        Rat b = make_rat(static_cast<long>(rng() % 5000 + 1), static_cast<long>(rng() % 50 + 1));
        unsigned long p = rng() % 9 + 1, q = rng() % 9 + 1;
        big la = boost::multiprecision::log(to_big(a)) / p, lb = boost::multiprecision::log(to_big(b)) / q;
        auto c = pow_cmp(a, p, b, q);
        if (boost::multiprecision::abs(la - lb) < big("1e-40")) continue;
        ++decided;
        CHECK((c < 0) == (la < lb));
    }
    CHECK(decided > 900);
    CHECK(pow_cmp(Rat(8), 3, Rat(4), 2) == std::strong_ordering::equal);
}

TEST_CASE("137.16^100 against X^17") {
    Int X("3740000000000");
    CHECK(Rat(pow(X, 17)) >= pow(parse_rat("137.16"), 100));
}

TEST_CASE("ball arithmetic contains exact results") {
    std::mt19937_64 rng(13);
    auto g = [&] {
        return GaussRat(make_rat(static_cast<long>(rng() % 200) - 100, static_cast<long>(rng() % 17 + 1)),
                        make_rat(static_cast<long>(rng() % 200) - 100, static_cast<long>(rng() % 17 + 1)));
    };
    for (int i = 0; i < 200; ++i) {
        GaussRat a = g(), b = g();
        ComplexBall A = ComplexBall::exact(a, 40), B = ComplexBall::exact(b, 40);
        CHECK((A + B).contains(a + b));
        CHECK((A * B).contains(a * b));
        if (!b.is_zero()) CHECK((A / B).contains(a / b));
        RatInterval m = A.abs_bounds();
        CHECK(m.lo * m.lo <= a.norm());
        CHECK(a.norm() <= m.hi * m.hi);
    }
}

TEST_CASE("isolate_root finds i") {
    BallPoly p = {ComplexBall::exact(1), ComplexBall::exact(0), ComplexBall::exact(1)};
    auto r = isolate_root(p, GaussRat(make_rat(1, 10), make_rat(9, 10)), 128);
    REQUIRE(r);
    CHECK(r->contains(GaussRat::i()));
    CHECK(r->rad < parse_rat("1e-30"));
}
