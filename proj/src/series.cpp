#include "thueq/series.hpp"

#include "thueq/errors.hpp"

#include <algorithm>

namespace thueq::series {

Series::Series(std::vector<GaussRat> coeffs, long order) : c_(std::move(coeffs)) {
    if (order < 0) throw DomainError("negative truncation order");
    c_.resize(static_cast<size_t>(order));
}

Series Series::constant(const GaussRat& c, long order) {
    std::vector<GaussRat> v(static_cast<size_t>(order));
    if (order > 0) v[0] = c;
    return Series(std::move(v), order);
}

Series Series::from_poly(const GPoly& p, long order) {
    std::vector<GaussRat> v(static_cast<size_t>(order));
    for (size_t k = 0; k < v.size(); ++k) v[k] = p.coeff(k);
    return Series(std::move(v), order);
}

GPoly Series::truncated(long n) const {
    std::vector<GaussRat> v(c_.begin(), c_.begin() + std::min<long>(n, order()));
    return GPoly(std::move(v));
}

bool Series::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const GaussRat& z) { return z.is_zero(); });
}

Series operator+(const Series& a, const Series& b) {
    long n = std::min(a.order(), b.order());
    std::vector<GaussRat> v(static_cast<size_t>(n));
    for (long k = 0; k < n; ++k) v[k] = a.c_[k] + b.c_[k];
    return Series(std::move(v), n);
}

Series operator-(const Series& a, const Series& b) {
    long n = std::min(a.order(), b.order());
    std::vector<GaussRat> v(static_cast<size_t>(n));
    for (long k = 0; k < n; ++k) v[k] = a.c_[k] - b.c_[k];
    return Series(std::move(v), n);
}

Series operator-(const Series& a) { return a.scaled(GaussRat(-1)); }

Series operator*(const Series& a, const Series& b) {
    long n = std::min(a.order(), b.order());
    std::vector<GaussRat> v(static_cast<size_t>(n));
    for (long i = 0; i < n; ++i) {
        if (a.c_[i].is_zero()) continue;
        for (long j = 0; i + j < n; ++j)
            if (!b.c_[j].is_zero()) v[i + j] += a.c_[i] * b.c_[j];
    }
    return Series(std::move(v), n);
}

Series Series::scaled(const GaussRat& k) const {
    std::vector<GaussRat> v = c_;
    for (auto& x : v) x *= k;
    return Series(std::move(v), order());
}

Series Series::inverse() const {
    if (c_.empty() || c_[0].is_zero()) throw DivisionError("series not invertible at s = 0");
    long n = order();
    std::vector<GaussRat> b(static_cast<size_t>(n));
    GaussRat inv0 = GaussRat(1) / c_[0];
    b[0] = inv0;
    for (long k = 1; k < n; ++k) {
        GaussRat acc;
        for (long j = 1; j <= k; ++j)
            if (!c_[j].is_zero()) acc += c_[j] * b[k - j];
        b[k] = -acc * inv0;
    }
    return Series(std::move(b), n);
}

Series operator/(const Series& a, const Series& b) {
    long v = 0;
    while (v < b.order() && b.c_[v].is_zero()) ++v;
    if (v == b.order()) throw DivisionError("division by the zero series");
    if (v == 0) return a * b.inverse();
    for (long k = 0; k < std::min(v, a.order()); ++k)
        if (!a.c_[k].is_zero()) throw DivisionError("quotient has negative valuation");
    std::vector<GaussRat> av(a.c_.begin() + std::min(v, a.order()), a.c_.end());
    std::vector<GaussRat> bv(b.c_.begin() + v, b.c_.end());
    long na = static_cast<long>(av.size()), nb = static_cast<long>(bv.size());
    return Series(std::move(av), na) * Series(std::move(bv), nb).inverse();
}

long newton_steps(long N) {
    long steps = 0;
    while ((1L << steps) < N) ++steps;
    return steps;
}

Series newton_alpha_series(long N) {
    if (N < 2) throw DomainError("truncation order must be at least 2");
    Series s = Series::from_poly(GPoly::var(), N);
    Series one = Series::constant(1, N);
    Series x = Series::constant(0, N);
    for (long step = 0; step < newton_steps(N); ++step) {
        Series x2 = x * x, x3 = x2 * x, x4 = x3 * x;
        Series g = s * x4 - x3 - s * x2.scaled(6) + x + s;
        Series dg = s * x3.scaled(4) - x2.scaled(3) - s * x.scaled(12) + one;
        x = x - g / dg;
    }
    return x;
}

Series alpha3_series(const Series& alpha) {
    Series one = Series::constant(1, alpha.order());
    if (alpha.order() == 0 || alpha[0] == GaussRat(1)) throw DivisionError("alpha - 1 not invertible at s = 0");
    return -((alpha + one) / (alpha - one));
}

std::vector<GaussRat> solve_linear(std::vector<std::vector<GaussRat>> A, std::vector<GaussRat> b) {
    size_t n = A.size();
    for (size_t i = 0; i < n; ++i) A[i].push_back(b[i]);
    GaussRat prev(1);
    for (size_t k = 0; k < n; ++k) {
        size_t p = k;
        while (p < n && A[p][k].is_zero()) ++p;
        if (p == n) return {};
        std::swap(A[p], A[k]);
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j <= n; ++j) A[i][j] = (A[k][k] * A[i][j] - A[i][k] * A[k][j]) / prev;
            A[i][k] = GaussRat();
        }
        prev = A[k][k];
    }
    std::vector<GaussRat> x(n);
    for (size_t i = n; i-- > 0;) {
        GaussRat acc = A[i][n];
        for (size_t j = i + 1; j < n; ++j) acc -= A[i][j] * x[j];
        x[i] = acc / A[i][i];
    }
    return x;
}

PadePair pade(const Series& B, long deg_num, long deg_den) {
    if (deg_num < 0 || deg_den < 0) throw DomainError("negative Pade degree");
    if (B.order() < deg_num + deg_den + 1) throw DomainError("series too short for the requested Pade degrees");
    auto coef = [&](long k) { return k < 0 ? GaussRat() : B[static_cast<size_t>(k)]; };
    std::vector<GaussRat> v(static_cast<size_t>(deg_den + 1));
    v[0] = GaussRat(1);
    if (deg_den > 0) {
        std::vector<std::vector<GaussRat>> A(static_cast<size_t>(deg_den), std::vector<GaussRat>(static_cast<size_t>(deg_den)));
        std::vector<GaussRat> rhs(static_cast<size_t>(deg_den));
        for (long r = 0; r < deg_den; ++r) {
            long i = deg_num + 1 + r;
            for (long j = 1; j <= deg_den; ++j) A[r][j - 1] = coef(i - j);
            rhs[r] = -coef(i);
        }
        std::vector<GaussRat> sol = solve_linear(std::move(A), std::move(rhs));
        if (sol.empty()) throw DegeneratePade("singular Pade system");
        for (long j = 1; j <= deg_den; ++j) v[j] = sol[j - 1];
    }
    std::vector<GaussRat> u(static_cast<size_t>(deg_num + 1));
    for (long i = 0; i <= deg_num; ++i)
        for (long j = 0; j <= std::min(i, deg_den); ++j) u[i] += coef(i - j) * v[j];
    PadePair out;
    out.U = GPoly(std::move(u));
    out.V = GPoly(std::move(v));
    out.deg_num = deg_num;
    out.deg_den = deg_den;
    long val = pade_residual(out, B).valuation();
    out.contact_order = val < 0 ? B.order() : val;
    if (out.contact_order < deg_num + deg_den + 1) throw DegeneratePade("Pade contact order too small");
    return out;
}

GPoly pade_residual(const PadePair& p, const Series& B) {
    return p.U - B.poly() * p.V;
}

PadePair clear_denominators(const PadePair& p) {
    Int l = 1;
    auto absorb = [&](const GPoly& q) {
        for (const auto& c : q.coeffs()) {
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.re.get_den_mpz_t());
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.im.get_den_mpz_t());
        }
    };
    absorb(p.U);
    absorb(p.V);
    PadePair out = p;
    out.U = p.U.scaled(GaussRat(Rat(l)));
    out.V = p.V.scaled(GaussRat(Rat(l)));
    return out;
}

Rat tail_bound(const GPoly& expr, long lead_exp, const Rat& tmin) {
    if (tmin < 1) throw DomainError("tmin must be at least 1");
    Rat c = 0;
    const auto& co = expr.coeffs();
    for (size_t j = 0; j < co.size(); ++j) {
        if (co[j].is_zero()) continue;
        long e = static_cast<long>(j);
        if (e < lead_exp) throw ContractViolation("term below the leading exponent");
        c += abs_upper(co[j]) * pow(tmin, lead_exp - e);
    }
    return c;
}

}  // namespace thueq::series

namespace thueq {

std::string to_string(const GPoly& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::string out;
    for (size_t k = p.size(); k-- > 0;) {
        const GaussRat& c = p.coeffs()[k];
        if (c.is_zero()) continue;
        std::string cs = c.str();
        bool compound = c.re != 0 && c.im != 0;
        if (compound) cs = "(" + cs + ")";
        if (!out.empty()) {
            out += cs[0] == '-' ? " - " : " + ";
            if (cs[0] == '-') cs.erase(0, 1);
        }
        if (k == 0) {
            out += cs;
            continue;
        }
        if (cs == "1") cs.clear();
        else if (cs == "-1") cs = "-";
        else cs += "*";
        out += cs + var + (k > 1 ? "^" + std::to_string(k) : "");
    }
    return out;
}

}  // namespace thueq
