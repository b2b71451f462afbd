#include "thueq/descent.hpp"

#include "thueq/errors.hpp"
#include "thueq/rouche.hpp"

namespace thueq::descent {

namespace {

const Rat& beta_stated() {
    static const Rat v = parse_rat("8.86");
    return v;
}

// |x| |y|^3 >= 81 once min(|x|, |y|) >= 3
const Rat kMinProduct = 81;

void check_tmin(const Rat& tmin) {
    if (tmin <= 0) throw DomainError("tmin must be positive");
}

}  // namespace

BetaBound beta_bound(const Rat& tmin) {
    check_tmin(tmin);
    auto sep = rouche::root_separation(tmin);
    BetaBound b;
    b.tmin = tmin;
    b.exact = 8 / (sep.min_pairwise * sep.min_pairwise * sep.min_to_alpha2);
    b.stated = beta_stated();
    b.ok = b.exact <= b.stated;
    return b;
}

Step1Result step1(int type_index, const Rat& tmin) {
    check_tmin(tmin);
    if (type_index != 0 && type_index != 3) throw DomainError("type must be 0 or 3");
    for (const auto& c : rouche::root_certificates(tmin))
        if (!c.verified) throw DependencyError("root enclosure " + c.label + " not verified");
    const Rat T = tmin;
    Step1Result r;
    r.type_index = type_index;
    r.tmin = T;
    Rat beta = beta_stated() / kMinProduct;
    if (type_index == 0) {
        // 1 <= |x - alpha y| ... with |alpha| <= (1 + 5.01/T^2)/|t|
        r.exact = 3 / (1 + rouche::radius_alpha0() / (T * T) + beta);
        r.stated = parse_rat("2.67");
        r.ok = r.exact >= r.stated;
        r.side_margin = 0;
    } else {
        // 1 <= |x - y| <= (2.16/|t|)|y| + 8.86/(|t| |y|^3)
        r.exact = rouche::radius_alpha13() + beta;
        r.stated = parse_rat("2.27");
        r.ok = r.exact <= r.stated;
        // x = y gives -4 x^4 = mu
        r.side_margin = 4 - 1;
    }
    return r;
}

Step2Result step2_type0(const Rat& tmin) {
    check_tmin(tmin);
    Step1Result s1 = step1(0, tmin);
    if (!s1.ok) throw DependencyError("type-0 step 1 failed");
    const Rat T = tmin;
    Step2Result r;
    r.tmin = T;
    r.exact = rouche::radius_alpha0() + beta_stated() / (pow(s1.stated, 4) * T * T);
    r.stated = parse_rat("5.02");
    r.ok = r.exact <= r.stated;
    // tx + y = 0: x^4 (1 - 5 t^2) = mu
    r.side_margin = 5 * T * T - 1 - 1;
    return r;
}

const series::Series& source_series(int type_index) {
    static const series::Series B = series::newton_alpha_series(31);
    static const series::Series B3 = series::Series::from_poly(series::alpha3_series(B).truncated(30), 30);
    if (type_index == 0) return B;
    if (type_index == 3) return B3;
    throw DomainError("type must be 0 or 3");
}

namespace {

GPoly reversed(const GPoly& p, long deg) {
    std::vector<GaussRat> r(static_cast<size_t>(deg + 1));
    for (size_t j = 0; j < p.size(); ++j) r[static_cast<size_t>(deg) - j] = p.coeffs()[j];
    return GPoly(std::move(r));
}

}  // namespace

StepRecord run_step(int type_index, int k, const Rat& c0, const Rat& tmin, bool round) {
    check_tmin(tmin);
    if (k < 2) throw DomainError("k must be at least 2");
    if (c0 <= 0) throw DomainError("c0 must be positive");
    const series::Series& B = source_series(type_index);
    if (B.order() < 2 * k - 1) throw DomainError("k too large for the series precision");
    const Rat T = tmin;

    StepRecord s;
    s.type_index = type_index;
    s.k = k;
    s.c0_in = c0;

    series::PadePair pp;
    bool found = false;
    for (long dn = k - 1; dn >= 0 && !found; --dn) {
        try {
            pp = series::pade(B, dn, k - 1);
            found = true;
        } catch (const DegeneratePade&) {
        }
    }
    if (!found) throw DegeneratePade("no Pade pair of degree <= k-1");
    // integral coefficients make t^(k-1)(U x - V y) an algebraic integer
    pp = series::clear_denominators(pp);
    s.pade = pp;

    s.c1 = series::tail_bound(series::pade_residual(pp, B), 2 * k - 1, T);
    s.c3 = series::tail_bound(pp.V, 0, T);
    s.c2 = beta_stated() * pow(c0, 4);
    Rat E = type_index == 0 ? parse_rat("2.71e16") : parse_rat("9.84e15");
    long eoff = type_index == 0 ? 32 : 31;
    s.c_exact = s.c1 + s.c2 * s.c3 * pow(T, -(2 * k - 2)) + E * s.c3 * pow(T, -(eoff - 2 * k));
    s.c_out = round ? round_up_sig(s.c_exact, 4) : s.c_exact;
    s.y_lower = pow(T, k) / s.c_out;

    // P(t) = F_t(t^(k-1) U(1/t), t^(k-1) V(1/t))
    GPoly Ut = reversed(pp.U, k - 1), Vt = reversed(pp.V, k - 1);
    GPoly t = GPoly::var();
    GPoly U2 = Ut * Ut, V2 = Vt * Vt;
    GPoly P = U2 * U2 - t * U2 * Ut * Vt - U2 * V2 * GPoly(GaussRat(6)) + t * Ut * V2 * Vt + V2 * V2;
    s.P_degree = P.degree();
    s.Vt_degree = Vt.degree();
    if (s.P_degree != 2 * k - 2 || s.Vt_degree != k - 1) {
        s.nonvanish_ok = false;
        s.nonvanish_margin = -1;
        return s;
    }
    long D = s.P_degree;
    Rat L = abs_lower(P.lead());
    for (long j = 0; j < D; ++j) {
        const GaussRat& c = P.coeffs()[static_cast<size_t>(j)];
        if (!c.is_zero()) L -= abs_upper(c) * pow(T, j - D);
    }
    s.nonvanish_margin = L * pow(T, D) / pow(s.c3 * c0, 4) - 1;
    s.nonvanish_ok = L > 0 && s.nonvanish_margin > 0;
    return s;
}

DescentChain run_descent(int type_index, int kmax, const Rat& tmin, bool round) {
    if (type_index != 0 && type_index != 3) throw DomainError("type must be 0 or 3");
    DescentChain ch;
    ch.type_index = type_index;
    ch.tmin = tmin;
    ch.rounded = round;
    ch.s1 = step1(type_index, tmin);
    if (!ch.s1.ok) {
        ch.diagnostic = "step 1 constant not reached";
        return ch;
    }
    Rat c0;
    int k0;
    if (type_index == 0) {
        ch.s2 = step2_type0(tmin);
        if (!ch.s2->ok) {
            ch.diagnostic = "step 2 constant not reached";
            return ch;
        }
        c0 = ch.s2->stated;
        k0 = 3;
        ch.y_lower = tmin * tmin / c0;
    } else {
        c0 = ch.s1.stated;
        k0 = 2;
        ch.y_lower = tmin / c0;
    }
    if (kmax > 11) throw DomainError("kmax above 11 needs more series precision");
    for (int k = k0; k <= kmax; ++k) {
        StepRecord s = run_step(type_index, k, c0, tmin, round);
        ch.steps.push_back(s);
        if (!s.nonvanish_ok) {
            ch.diagnostic = "non-vanishing check failed at k = " + std::to_string(k);
            return ch;
        }
        c0 = s.c_out;
        ch.y_lower = s.y_lower;
    }
    ch.ok = true;
    return ch;
}

StarBounds star_bounds(const Rat& Q, const Rat& t_abs) {
    if (Q <= 0) throw DomainError("Q must be positive");
    if (t_abs <= 0) throw DomainError("|t| must be positive");
    StarBounds s;
    s.Q = Q;
    s.t_abs = t_abs;
    s.beta_coeff = beta_stated() * Q;
    s.type_threshold_pow4 = parse_rat("20.14") * Q / t_abs;
    s.lb_linear = rouche::radius_alpha13() / t_abs;
    s.lb_cubic = beta_stated() * Q / t_abs;
    s.threshold_consistent = beta_stated() / parse_rat("0.44") <= parse_rat("20.14");
    return s;
}

bool star_lb_holds(const StarBounds& s, const Rat& y_abs) {
    if (y_abs <= 0) throw DomainError("|y| must be positive");
    return 1 < s.lb_linear * y_abs + s.lb_cubic / pow(y_abs, 3);
}

}  // namespace thueq::descent
