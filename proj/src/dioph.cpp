#include "thueq/dioph.hpp"

#include "thueq/errors.hpp"
#include "thueq/parallel.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <tuple>

namespace thueq::dioph {

using quadfield::QuadRat;
using quadfield::abs_sq;

std::vector<QuadInt> unify(std::vector<QuadInt> xs) {
    if (xs.empty()) return xs;
    long d = 0;
    for (const auto& x : xs) {
        if (x.is_rational()) continue;
        if (d != 0 && d != x.d) throw DomainError("elements of different fields");
        d = x.d;
    }
    if (d == 0) d = xs.front().d;
    for (auto& x : xs)
        if (x.d != d) x = quadfield::embed(x, d);
    return xs;
}

QuadInt eval_form(const QuadInt& t, const QuadInt& x, const QuadInt& y) {
    auto v = unify({t, x, y});
    const QuadInt &T = v[0], &X = v[1], &Y = v[2];
    QuadInt x2 = X * X, y2 = Y * Y;
    QuadInt six(X.d, 6);
    return x2 * x2 - T * x2 * X * Y - six * x2 * y2 + T * X * y2 * Y + y2 * y2;
}

std::array<std::pair<QuadInt, QuadInt>, 4> orbit(const QuadInt& x, const QuadInt& y) {
    return {{{x, y}, {-y, x}, {-x, -y}, {y, -x}}};
}

bool is_unit(const QuadInt& mu) { return mu.norm() == 1; }

std::vector<Solution> trivial_solutions(long d, const QuadInt& mu) {
    if (!quadfield::is_squarefree(d)) throw DomainError("d must be a positive square-free integer");
    QuadInt m = mu.d == d ? mu : quadfield::embed(mu, d);
    if (!is_unit(m)) throw DomainError("mu is not a root of unity");
    std::vector<Solution> out;
    std::set<std::tuple<Int, Int>> seen;
    for (const auto& xi : quadfield::roots_of_unity(d)) {
        QuadInt n = xi.normalized();
        if (!seen.insert({n.a, n.b}).second) continue;
        QuadInt zero(d, 0);
        if (eval_form(zero, n, zero) == m) out.push_back({d, zero, n, zero, m, std::nullopt});
    }
    return out;
}

IrreducibilityResult irreducibility_exceptions() {
    IrreducibilityResult res;
    auto less = [](const QuadInt& a, const QuadInt& b) { return quadfield::canonical_less(a, b); };
    std::set<QuadInt, decltype(less)> ts(less);
    for (const auto& a : quadfield::enumerate_bounded(4, true)) {
        Int n = a.norm();
        if (16 % n.get_si() != 0) continue;
        auto c = quadfield::div_exact(QuadInt(a.d, -4), a);
        if (!c) continue;
        QuadInt t = -(a + *c);
        ts.insert(quadfield::canonical(t));
        ts.insert(quadfield::canonical(-t));
    }
    for (int s : {4, -4}) {
        QuadInt t(1, 0, s);
        ts.insert(t);
        res.root_in_field.push_back(t);
    }
    res.exceptions.assign(ts.begin(), ts.end());
    return res;
}

ZeroSolutions solve_zero(const QuadInt& t) {
    // a root in the field is a unit, so only units need testing
    ZeroSolutions z;
    std::vector<QuadInt> cands = quadfield::roots_of_unity(t.is_rational() ? 1 : t.d);
    if (t.is_rational())
        for (const auto& u : quadfield::roots_of_unity(3)) cands.push_back(u);
    std::set<std::tuple<long, Int, Int>> seen;
    for (const auto& xi : cands) {
        QuadInt one(xi.d, 1);
        QuadInt c = quadfield::canonical(xi);
        if (eval_form(t, xi, one).is_zero() && seen.insert({c.d, c.a, c.b}).second) z.slopes.push_back(c);
    }
    z.only_trivial = z.slopes.empty();
    return z;
}

namespace {

// Elements of field d with 0 < |y|^2 <= m2 and |y|^2 >= lo2: rationals
// (as positive integers) and b > 0.
std::vector<QuadInt> field_elements(long d, const Rat& lo2, const Rat& m2) {
    std::vector<QuadInt> out;
    bool half = quadfield::half_omega(d);
    Int bmax = floor(sqrt_upper(m2 * (half ? 4 : 1) / d, 32)) + 1;
    for (Int b = 0; b <= bmax; ++b) {
        Rat shift = half ? Rat(b) / 2 : Rat(0);
        Rat span = sqrt_upper(m2, 32);
        Int alo = b == 0 ? Int(1) : ceil(-span - shift), ahi = floor(span - shift) + 1;
        for (Int a = alo; a <= ahi; ++a) {
            QuadInt y(d, a, b);
            Rat n = abs_sq(y);
            if (n == 0 || n > m2 || n < lo2) continue;
            out.push_back(y);
        }
    }
    return out;
}

std::vector<QuadInt> all_units() {
    std::vector<QuadInt> u = quadfield::roots_of_unity(1);
    for (const auto& z : quadfield::roots_of_unity(3))
        if (!z.is_rational()) u.push_back(z);
    return u;
}

void search_pair(const QuadInt& x0, const QuadInt& y0, std::vector<Solution>& out) {
    if (!x0.is_rational() && !y0.is_rational() && x0.d != y0.d) return;
    std::vector<QuadInt> mus;
    if (x0.is_rational() && y0.is_rational()) mus = all_units();
    else mus = quadfield::roots_of_unity(x0.is_rational() ? y0.d : x0.d);
    for (const auto& mu : mus) {
        auto v = unify({mu, x0, y0});
        const QuadInt &m = v[0], &x = v[1], &y = v[2];
        QuadInt x2 = x * x, y2 = y * y;
        QuadInt den = x2 * x * y - x * y2 * y;
        if (den.is_zero()) continue;
        QuadInt num = x2 * x2 - QuadInt(x.d, 6) * x2 * y2 + y2 * y2 - m;
        QuadRat q = QuadRat(num) / QuadRat(den);
        if (!quadfield::is_integral(q)) continue;
        QuadInt t = quadfield::to_int(q);
        for (int s : {1, -1}) {
            QuadInt ts = s == 1 ? t : -t;
            QuadInt ys = s == 1 ? y : -y;
            if (!(eval_form(ts, x, ys) == m)) throw ContractViolation("search produced a non-solution");
            long d = 1;
            for (const QuadInt* e : std::initializer_list<const QuadInt*>{&ts, &x, &ys, &m})
                if (!e->is_rational()) d = e->d;
            out.push_back({d, ts, x, ys, m, std::nullopt});
        }
    }
}

std::vector<Solution> full_search() {
    std::vector<QuadInt> xs;
    for (const auto& x : quadfield::enumerate_bounded(3, true))
        if (abs_sq(x) < 9) xs.push_back(x);
    auto parts = parallel_map<std::vector<Solution>>(xs.size(), [&](size_t i) {
        const QuadInt& x = xs[i];
        Rat n = abs_sq(x);
        // case mu = x^4 forces |x| = 1 and |y| < 6.86; otherwise |y| <= 1 + |x|^4
        Rat bound2 = (1 + n * n) * (1 + n * n);
        Rat case2 = parse_rat("6.86") * parse_rat("6.86");
        if (n == 1 && case2 > bound2) bound2 = case2;
        std::vector<QuadInt> ys;
        if (x.is_rational()) {
            Rat m = sqrt_upper(bound2, 32);
            for (const auto& y : quadfield::enumerate_bounded(m, true))
                if (abs_sq(y) >= n && abs_sq(y) <= bound2) ys.push_back(y);
        } else {
            ys = field_elements(x.d, n, bound2);
        }
        std::vector<Solution> out;
        for (const auto& y : ys) search_pair(x, y, out);
        return out;
    });
    std::vector<Solution> all;
    for (auto& p : parts) all.insert(all.end(), p.begin(), p.end());
    auto key = [](const Solution& s) {
        QuadInt t = quadfield::canonical(s.t);
        return std::make_tuple(s.d, t.norm(), t.a, t.b, s.x.d, s.x.a, s.x.b, s.y.d, s.y.a, s.y.b, s.mu.a, s.mu.b);
    };
    std::sort(all.begin(), all.end(), [&](const Solution& a, const Solution& b) { return key(a) < key(b); });
    all.erase(std::unique(all.begin(), all.end(), [&](const Solution& a, const Solution& b) { return key(a) == key(b); }),
              all.end());
    return all;
}

}  // namespace

std::vector<Solution> small_solution_search(const Rat& tmin_abs) {
    if (tmin_abs < 0) throw DomainError("tmin must be nonnegative");
    static std::once_flag once;
    static std::vector<Solution> cache;
    std::call_once(once, [] { cache = full_search(); });
    std::vector<Solution> out;
    Rat t2 = tmin_abs * tmin_abs;
    for (const auto& s : cache)
        if (abs_sq(s.t) >= t2) out.push_back(s);
    return out;
}

std::vector<QuadInt> t_values(const std::vector<Solution>& sols) {
    auto less = [](const QuadInt& a, const QuadInt& b) { return quadfield::canonical_less(a, b); };
    std::set<QuadInt, decltype(less)> ts(less);
    for (const auto& s : sols) ts.insert(quadfield::canonical(s.t));
    return {ts.begin(), ts.end()};
}

std::optional<std::array<ComplexBall, 4>> root_balls(const QuadInt& t, long bits) {
    if (t.is_zero()) throw DomainError("t must be nonzero");
    ComplexBall tb = quadfield::to_ball(t, bits + 16);
    ComplexBall one = ComplexBall::exact(1, bits);
    BallPoly f = {one, tb, ComplexBall::exact(-6, bits), -tb, one};
    auto a0 = isolate_root(f, GaussRat(-1) / tb.mid(), bits);
    if (!a0) return std::nullopt;
    const ComplexBall& a = *a0;
    try {
        return std::array<ComplexBall, 4>{a, (a - one) / (a + one), -(one / a), -((a + one) / (a - one))};
    } catch (const Indeterminate&) {
        return std::nullopt;
    }
}

int classify_type(const QuadInt& t, const QuadInt& x, const QuadInt& y) {
    if (x.is_zero() && y.is_zero()) throw DomainError("(x, y) must be nonzero");
    for (long bits : {64L, 128L, 256L}) {
        auto roots = root_balls(t, bits);
        if (!roots) continue;
        ComplexBall xb = quadfield::to_ball(x, bits + 16), yb = quadfield::to_ball(y, bits + 16);
        std::array<RatInterval, 4> beta;
        for (int i = 0; i < 4; ++i) beta[i] = (xb - (*roots)[i] * yb).abs_bounds();
        for (int j = 0; j < 4; ++j) {
            bool strict = true;
            for (int i = 0; i < 4; ++i)
                if (i != j && !(beta[j].hi < beta[i].lo)) strict = false;
            if (strict) return j;
        }
    }
    throw TieError("no strict minimum among |x - alpha^(i) y|");
}

}  // namespace thueq::dioph
