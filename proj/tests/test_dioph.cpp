#include "thueq/dioph.hpp"
#include "thueq/errors.hpp"

#include <doctest.h>

#include <random>
#include <set>
#include <tuple>

using namespace thueq;
using namespace thueq::dioph;
using quadfield::QuadInt;
using quadfield::QuadRat;

namespace {

using Key = std::tuple<long, Int, Int>;

Key key(const QuadInt& x) {
    QuadInt c = quadfield::canonical(x);
    return {c.d, c.a, c.b};
}

std::set<Key> keys(const std::vector<QuadInt>& xs) {
    std::set<Key> s;
    for (const auto& x : xs) s.insert(key(x));
    return s;
}

// x + y sqrt(-d) with half-integral coordinates in the d = 3 mod 4 case
QuadInt el(long d, Rat x, Rat y) {
    QuadRat q = QuadRat::from_sqrt(d, x, y);
    REQUIRE(quadfield::is_integral(q));
    return quadfield::to_int(q);
}

std::set<Key> pm(std::vector<QuadInt> xs) {
    std::set<Key> s;
    for (const auto& x : xs) {
        s.insert(key(x));
        s.insert(key(-x));
    }
    return s;
}

std::vector<QuadInt> all_elements(long d, long m2) {
    std::vector<QuadInt> out;
    for (long b = -20; b <= 20; ++b)
        for (long a = -20; a <= 20; ++a) {
            QuadInt x(d, a, b);
            if (!x.is_zero() && quadfield::abs_sq(x) <= m2) out.push_back(x);
        }
    return out;
}

}  // namespace

TEST_CASE("irreducibility exceptions") {
    auto ir = irreducibility_exceptions();
    Rat h = make_rat(1, 2);
    std::set<Key> want = pm({QuadInt(1, 0), QuadInt(1, 3), el(1, 1, 3), el(1, -1, 3), el(1, 0, 4), el(1, 0, 5),
                             el(2, 0, 3), el(3, 0, 2), el(3, 3 * h, 5 * h), el(3, -3 * h, 5 * h), el(7, 0, 1),
                             el(7, h, 3 * h), el(7, -h, 3 * h), el(15, 0, 1)});
    CHECK(keys(ir.exceptions) == want);
    CHECK(keys(ir.root_in_field) == pm({el(1, 0, 4)}));
}

TEST_CASE("reducible cases factor") {
    // f_t has a factor X^2 + aX - 1 with a c = -4 and t = -(a + c)
    for (const auto& t : irreducibility_exceptions().exceptions) {
        bool found = false;
        for (const auto& a : quadfield::enumerate_bounded(Rat(4), false)) {
            if (a.d != t.d && a.b != 0 && t.b != 0) continue;
            auto v = unify({t, a});
            auto c = quadfield::div_exact(QuadInt(v[1].d, -4), v[1]);
            if (!c) continue;
            if (-(v[1] + *c) == v[0]) found = true;
        }
        bool root = t == QuadInt(1, 0, 4) || t == QuadInt(1, 0, -4);
        CHECK((found || root));
    }
}

TEST_CASE("orbit invariance of the form") {
    std::mt19937_64 rng(31);
    const long ds[] = {1, 2, 3, 7, 11, 15};
    for (int i = 0; i < 1000; ++i) {
        long d = ds[rng() % 6];
        auto r = [&] { return QuadInt(d, Int(static_cast<long>(rng() % 21) - 10), Int(static_cast<long>(rng() % 21) - 10)); };
        QuadInt t = r(), x = r(), y = r();
        QuadInt v = eval_form(t, x, y);
        for (const auto& [a, b] : orbit(x, y)) CHECK(eval_form(t, a, b) == v);
        // f_t(x, -y) = f_-t(x, y)
        CHECK(eval_form(t, x, -y) == eval_form(-t, x, y));
    }
}

TEST_CASE("trivial solutions") {
    auto s = trivial_solutions(1, QuadInt(1, 1));
    CHECK(s.size() == 2);
    CHECK(trivial_solutions(2, QuadInt(2, 1)).size() == 1);
    CHECK(trivial_solutions(1, QuadInt(1, 0, 1)).empty());
    CHECK(trivial_solutions(1, QuadInt(1, -1)).empty());
    CHECK(trivial_solutions(3, QuadInt(3, 1)).size() == 1);
    CHECK_THROWS_AS(trivial_solutions(4, QuadInt(1, 1)), DomainError);
    CHECK_THROWS_AS(trivial_solutions(1, QuadInt(1, 2)), DomainError);
}

TEST_CASE("zero right-hand side") {
    CHECK(solve_zero(QuadInt(1, 0, 7)).only_trivial);
    CHECK_FALSE(solve_zero(QuadInt(1, 0, 4)).only_trivial);
    CHECK(solve_zero(QuadInt(1, 0, 100)).only_trivial);
}

TEST_CASE("no small solutions at 100") {
    CHECK(small_solution_search(Rat(100)).empty());
}

TEST_CASE("small solutions at 0") {
    auto sols = small_solution_search(Rat(0));
    for (const auto& s : sols) CHECK(eval_form(s.t, s.x, s.y) == s.mu);
    Rat h = make_rat(1, 2);
    std::set<Key> derived = pm({el(1, 0, 4), el(2, 0, 3), el(3, 0, 2), QuadInt(1, 1), QuadInt(1, 4),
                                el(3, h, 5 * h), el(3, -h, 5 * h), el(17, 0, 1)});
    CHECK(keys(t_values(sols)) == derived);
}

TEST_CASE("search is complete at small scale") {
    auto sols = small_solution_search(Rat(0));
    std::set<std::tuple<Key, Key, Key, Key>> have;
    for (const auto& s : sols) have.insert({key(s.t), key(s.x), key(s.y), key(s.mu)});
    for (long d : {1L, 2L, 3L}) {
        auto els = all_elements(d, 50);
        auto units = quadfield::roots_of_unity(d);
        for (const auto& x : els)
            for (const auto& y : els) {
                if (std::min(quadfield::abs_sq(x), quadfield::abs_sq(y)) >= 9) continue;
                QuadInt den = x * x * x * y - x * y * y * y;
                if (den.is_zero()) continue;
                for (const auto& mu : units) {
                    QuadInt num = x * x * x * x - QuadInt(d, 6) * x * x * y * y + y * y * y * y - mu;
                    QuadRat q = QuadRat(num) / QuadRat(den);
                    if (!quadfield::is_integral(q)) continue;
                    QuadInt t = quadfield::to_int(q);
                    bool found = false;
                    for (const auto& [a, b] : orbit(x, y)) found = found || have.count({key(t), key(a), key(b), key(mu)});
                    CHECK_MESSAGE(found, "missing t=" << t.str() << " x=" << x.str() << " y=" << y.str());
                }
            }
    }
}

TEST_CASE("type swap under (x, y) -> (-y, x) at t = 20i") {
    QuadInt t(1, 0, 20);
    Rat thr4 = parse_rat("20.14") * 40 / 20;
    auto els = all_elements(1, 25);
    int tested = 0;
    for (const auto& x : els)
        for (const auto& y : els) {
            Rat nx = quadfield::abs_sq(x), ny = quadfield::abs_sq(y);
            if (std::min(nx, ny) * std::min(nx, ny) < thr4) continue;
            if (quadfield::abs_sq(eval_form(t, x, y)) > 1600) continue;
            int j = classify_type(t, x, y);
            CHECK(classify_type(t, -y, x) == (j + 2) % 4);
            ++tested;
        }
    MESSAGE("type-swap pairs tested: " << tested);

    // the |F| <= 40 window above is empty; use m = |F(x, y)| per pair
    int wide = 0;
    auto big = all_elements(1, 400);
    for (const auto& x : big)
        for (const auto& y : big) {
            Rat nx = quadfield::abs_sq(x), ny = quadfield::abs_sq(y);
            Rat m2 = quadfield::abs_sq(eval_form(t, x, y));
            if (m2.get_num() == 0) continue;
            // min^4 >= 20.14 m / |t|, squared: min(nx, ny)^4 |t|^2 >= 20.14^2 m^2
            Rat mn = std::min(nx, ny);
            if (pow(mn, 4) * 400 < pow(parse_rat("20.14"), 2) * m2) continue;
            int j = classify_type(t, x, y);
            CHECK(classify_type(t, -y, x) == (j + 2) % 4);
            ++wide;
        }
    CHECK(wide > 0);
    MESSAGE("type-swap pairs with m = |F(x, y)|: " << wide);
}

TEST_CASE("classify_type") {
    QuadInt t(1, 0, 100);
    // x close to alpha0 y ~ -y/t: take y = t, x = -1
    CHECK(classify_type(t, QuadInt(1, -1), t) == 0);
    CHECK(classify_type(t, QuadInt(1, 5), QuadInt(1, 5)) == 3);
    CHECK(classify_type(t, QuadInt(1, -5), QuadInt(1, 5)) == 1);
    CHECK_THROWS_AS(classify_type(t, QuadInt(1, 0), QuadInt(1, 0)), DomainError);
}
