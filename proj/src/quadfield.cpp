#include "thueq/quadfield.hpp"

#include "thueq/errors.hpp"

#include <algorithm>
#include <tuple>

namespace thueq::quadfield {

bool is_squarefree(long d) {
    if (d < 1) return false;
    for (long p = 2; p * p <= d; ++p)
        if (d % (p * p) == 0) return false;
    return true;
}

bool half_omega(long d) { return d % 4 == 3; }

QuadInt::QuadInt(long d_, Int a_, Int b_) : d(d_), a(std::move(a_)), b(std::move(b_)) {
    if (!is_squarefree(d)) throw DomainError("d must be a positive square-free integer");
}

namespace {

void same_field(const QuadInt& x, const QuadInt& y) {
    if (x.d != y.d) throw DomainError("elements of different fields");
}

void same_field(const QuadRat& x, const QuadRat& y) {
    if (x.d != y.d) throw DomainError("elements of different fields");
}

}  // namespace

QuadInt QuadInt::conj() const {
    if (half_omega(d)) return {d, a + b, -b};
    return {d, a, -b};
}

Int QuadInt::norm() const {
    if (half_omega(d)) return a * a + a * b + Int((1 + d) / 4) * b * b;
    return a * a + Int(d) * b * b;
}

QuadInt QuadInt::normalized() const {
    if (b < 0 || (b == 0 && a < 0)) return -*this;
    return *this;
}

std::string QuadInt::str() const {
    // printed as x + y*sqrt(-d), or with i when d = 1
    Rat x = a, y = b;
    if (half_omega(d)) {
        x += Rat(b) / 2;
        y = Rat(b) / 2;
    }
    if (y == 0) return fraction_string(x);
    std::string unit = d == 1 ? "i" : "sqrt(-" + std::to_string(d) + ")";
    std::string ys;
    if (y == 1) ys = unit;
    else if (y == -1) ys = "-" + unit;
    else ys = fraction_string(y) + "*" + unit;
    if (x == 0) return ys;
    return fraction_string(x) + (y > 0 ? "+" : "") + ys;
}

QuadInt operator+(const QuadInt& x, const QuadInt& y) {
    same_field(x, y);
    return {x.d, x.a + y.a, x.b + y.b};
}

QuadInt operator-(const QuadInt& x, const QuadInt& y) {
    same_field(x, y);
    return {x.d, x.a - y.a, x.b - y.b};
}

QuadInt operator-(const QuadInt& x) { return {x.d, -x.a, -x.b}; }

QuadInt operator*(const QuadInt& x, const QuadInt& y) {
    same_field(x, y);
    Int bb = x.b * y.b;
    Int cross = x.a * y.b + x.b * y.a;
    if (half_omega(x.d)) return {x.d, x.a * y.a - Int((1 + x.d) / 4) * bb, cross + bb};
    return {x.d, x.a * y.a - Int(x.d) * bb, cross};
}

QuadInt pow(const QuadInt& x, unsigned e) {
    QuadInt r(x.d, 1, 0), base = x;
    while (e) {
        if (e & 1) r = r * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return r;
}

Rat abs_sq(const QuadInt& x) { return Rat(x.norm()); }

std::optional<QuadInt> div_exact(const QuadInt& x, const QuadInt& y) {
    same_field(x, y);
    if (y.is_zero()) throw DivisionError("division by zero");
    QuadInt p = x * y.conj();
    Int n = y.norm();
    if (!mpz_divisible_p(p.a.get_mpz_t(), n.get_mpz_t()) || !mpz_divisible_p(p.b.get_mpz_t(), n.get_mpz_t()))
        return std::nullopt;
    return QuadInt(x.d, p.a / n, p.b / n);
}

QuadInt embed(const QuadInt& x, long d) {
    if (!x.is_rational()) throw DomainError("only rational integers embed across fields");
    return {d, x.a, 0};
}

QuadInt canonical(const QuadInt& x) { return x.is_rational() ? QuadInt(1, x.a, 0) : x; }

bool canonical_less(const QuadInt& x, const QuadInt& y) {
    QuadInt cx = canonical(x), cy = canonical(y);
    if (cx.d != cy.d) return cx.d < cy.d;
    Int nx = cx.norm(), ny = cy.norm();
    if (nx != ny) return nx < ny;
    if (cx.a != cy.a) return cx.a < cy.a;
    return cx.b < cy.b;
}

std::vector<QuadInt> roots_of_unity(long d) {
    if (d == 1) return {{1, 1}, {1, -1}, {1, 0, 1}, {1, 0, -1}};
    // zeta6 = omega, zeta6^2 = omega - 1
    if (d == 3) return {{3, 1}, {3, -1}, {3, 0, 1}, {3, 0, -1}, {3, -1, 1}, {3, 1, -1}};
    return {{d, 1}, {d, -1}};
}

std::vector<QuadInt> enumerate_bounded(const Rat& m, bool normalize) {
    if (m < 0) throw DomainError("bound must be nonnegative");
    std::vector<QuadInt> out;
    Rat m2 = m * m;
    Int mi = floor(m);
    for (Int a = normalize ? Int(1) : -mi; a <= mi; ++a)
        if (a != 0) out.emplace_back(1, a, 0);
    // smallest modulus with b != 0 is sqrt(d) or sqrt(1+d)/2
    Int dmax = floor(4 * m2 - 1);
    for (long d = 1; Int(d) <= dmax; ++d) {
        if (!is_squarefree(d)) continue;
        bool half = half_omega(d);
        if (!half && Rat(d) > m2) continue;
        // |b| * sqrt(d) (/2) <= m
        Int bmax = floor((half ? 2 * m : m) / sqrt_lower(Rat(d), 32));
        for (Int b = normalize ? Int(1) : -bmax; b <= bmax; ++b) {
            if (b == 0) continue;
            Rat shift = half ? Rat(b) / 2 : Rat(0);
            Int alo = ceil(-m - shift), ahi = floor(m - shift);
            for (Int a = alo; a <= ahi; ++a) {
                QuadInt x(d, a, b);
                if (abs_sq(x) <= m2) out.push_back(x);
            }
        }
    }
    std::stable_sort(out.begin(), out.end(), [](const QuadInt& x, const QuadInt& y) {
        return std::tie(x.d, x.b, x.a) < std::tie(y.d, y.b, y.a);
    });
    return out;
}

QuadRat QuadRat::from_sqrt(long d, const Rat& x, const Rat& y) {
    if (half_omega(d)) return {d, x - y, 2 * y};
    return {d, x, y};
}

Rat QuadRat::norm() const {
    if (half_omega(d)) return a * a + a * b + make_rat(1 + d, 4) * b * b;
    return a * a + Rat(d) * b * b;
}

QuadRat operator+(const QuadRat& x, const QuadRat& y) {
    same_field(x, y);
    return {x.d, x.a + y.a, x.b + y.b};
}

QuadRat operator-(const QuadRat& x, const QuadRat& y) {
    same_field(x, y);
    return {x.d, x.a - y.a, x.b - y.b};
}

QuadRat operator*(const QuadRat& x, const QuadRat& y) {
    same_field(x, y);
    Rat bb = x.b * y.b;
    Rat cross = x.a * y.b + x.b * y.a;
    if (half_omega(x.d)) return {x.d, x.a * y.a - make_rat(1 + x.d, 4) * bb, cross + bb};
    return {x.d, x.a * y.a - Rat(x.d) * bb, cross};
}

QuadRat operator/(const QuadRat& x, const QuadRat& y) {
    same_field(x, y);
    Rat n = y.norm();
    if (n == 0) throw DivisionError("division by zero");
    QuadRat c = half_omega(y.d) ? QuadRat(y.d, y.a + y.b, -y.b) : QuadRat(y.d, y.a, -y.b);
    QuadRat p = x * c;
    return {x.d, p.a / n, p.b / n};
}

bool is_integral(const QuadRat& q) { return q.a.get_den() == 1 && q.b.get_den() == 1; }

QuadInt to_int(const QuadRat& q) {
    if (!is_integral(q)) throw DomainError("not an algebraic integer");
    return {q.d, q.a.get_num(), q.b.get_num()};
}

ComplexBall to_ball(const QuadInt& x, long bits) {
    Rat re = x.a, coef = x.b;
    if (half_omega(x.d)) {
        re += Rat(x.b) / 2;
        coef = Rat(x.b) / 2;
    }
    if (coef == 0 || x.d == 1) return ComplexBall::exact(GaussRat(re, coef), bits);
    Rat lo = sqrt_lower(Rat(x.d), bits + 8), hi = sqrt_upper(Rat(x.d), bits + 8);
    Rat mid = (lo + hi) / 2;
    Rat rad = abs(coef) * (hi - lo) / 2;
    return ComplexBall(GaussRat(re, coef * mid), rad, bits);
}

}  // namespace thueq::quadfield
