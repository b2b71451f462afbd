#include "thueq/measure.hpp"

#include "thueq/dioph.hpp"
#include "thueq/errors.hpp"
#include "thueq/hyperchi.hpp"
#include "thueq/interval.hpp"
#include "thueq/rouche.hpp"
#include "thueq/thue.hpp"

#include <future>
#include <map>
#include <mutex>
#include <numeric>

namespace thueq::measure {

namespace {

Rat R(const char* s) { return parse_rat(s); }

bool lettl_ok(int rmax) {
    static std::mutex mu;
    static std::map<int, bool> cache;
    {
        std::lock_guard lk(mu);
        auto it = cache.find(rmax);
        if (it != cache.end()) return it->second;
    }
    bool ok;
    try {
        ok = hyperchi::verify_lettl(rmax).ok;
    } catch (const VerificationFailure&) {
        ok = false;
    }
    std::lock_guard lk(mu);
    cache[rmax] = ok;
    return ok;
}

bool root_identity_ok(int type_index) {
    static const bool t0 = series::quotient_root_check(series::RootExpr::type0);
    static const bool t3 = series::quotient_root_check(series::RootExpr::type3);
    return type_index == 0 ? t0 : t3;
}

struct Lines {
    std::vector<ChainLine> v;
    void le(std::string name, Rat lhs, Rat rhs) { add(std::move(name), std::move(lhs), std::move(rhs), false); }
    void lt(std::string name, Rat lhs, Rat rhs) { add(std::move(name), std::move(lhs), std::move(rhs), true); }
    void add(std::string name, Rat lhs, Rat rhs, bool strict) {
        ChainLine l{std::move(name), std::move(lhs), std::move(rhs), strict, false};
        l.ok = strict ? l.lhs < l.rhs : l.lhs <= l.rhs;
        v.push_back(std::move(l));
    }
};

Int gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

unsigned long to_ulong(const Int& x) {
    if (!x.fits_ulong_p()) throw DomainError("exponent too large");
    return x.get_ui();
}

}  // namespace

MeasureConstants measure_constants(int type_index, const Rat& tmin, int rmax) {
    if (type_index != 0 && type_index != 3) throw DomainError("type must be 0 or 3");
    if (tmin <= 12) throw DomainError("tmin must exceed 12");
    if (!lettl_ok(rmax)) throw DependencyError("Lettl bounds not verified up to rmax");
    if (!root_identity_ok(type_index)) throw DependencyError("closed-form root identity failed");
    for (const auto& c : rouche::root_certificates(tmin))
        if (!c.verified) throw DependencyError("root enclosure " + c.label + " not verified");

    const Rat T = tmin;
    MeasureConstants m;
    m.type_index = type_index;
    m.tmin = T;
    m.rmax = rmax;
    Lines L;

    const Rat sqrt2 = sqrt_upper(Rat(2), 96);
    const Rat r0 = rouche::radius_alpha0(), r13 = rouche::radius_alpha13();

    // |w|, |w^-1| <= 1 + 8/(|t| - 4);  |u|, |z| <= (1 + 4/|t|) |t|
    L.le("w bound", 1 + 8 / (T - 4), R("1.09"));
    L.lt("|w - 1| < 1", 8 / (T - 4), Rat(1));
    L.le("(t+4)/t", (T + 4) / T, R("1.04"));
    L.le("Q chain", R("1.35") * R("1.04") * R("2.09"), R("2.94"));
    L.le("(t-4)/t", R("0.96"), (T - 4) / T);
    L.le("(t-12)/t", R("0.88"), (T - 12) / T);
    L.le("E ratio", R("1.04") / (R("0.96") * R("0.88")), R("1.24"));
    Rat rootfac_stated = root_upper(1 / (R("0.96") * pow(R("0.88"), 3)), 4);
    L.le("root factor", R("1.02") * rootfac_stated, R("1.14"));
    L.le("E chain", R("10.7") * R("1.24"), R("13.27"));
    L.le("ln Q", ln_enclosure(R("2.94"), R("1e-9")).hi, R("1.08"));
    L.le("ln E", ln_enclosure(R("13.27"), R("1e-9")).hi, R("2.59"));

    Rat rootfac_exact = root_upper(1 / ((1 - 4 / T) * pow(1 - 12 / T, 3)), 4);
    m.Q_exact = R("1.35") * (1 + 4 / T) * (2 + 8 / (T - 4));
    m.E_exact = R("10.7") * (1 + 4 / T) / ((1 - 4 / T) * (1 - 12 / T));
    m.Q_coeff = R("2.94");
    m.E_div = R("13.27");

    if (type_index == 0) {
        L.le("|alpha|", 1 / T + r0 / pow(T, 3), R("0.02"));
        L.le("l0 chain", R("1.6") * R("1.14"), R("1.83"));
        m.k0 = R("3.32");
        m.k0_exact = R("3.32");
        m.l0_coeff = R("1.83");
        m.l0_exact = R("1.6") * (1 + 1 / T + r0 / pow(T, 3)) * rootfac_exact;
        m.qmin_coeff = R("0.28");
        m.c_coeff = R("5.47");
        L.le("2 k0 Q", 2 * m.k0 * m.Q_coeff, R("19.53"));
        L.le("base", 2 * m.l0_coeff / m.E_div, R("0.28"));
        L.le("c chain", R("19.53") * R("0.28"), m.c_coeff);
    } else {
        L.le("|alpha3 - i|", sqrt2 + r13 / T, R("1.44"));
        L.le("k0 sqrt2", 2 * R("3.32") * R("3.32"), R("4.7") * R("4.7"));
        L.le("l0 chain", R("1.83") * sqrt2 * R("1.44") / R("1.02"), R("3.66"));
        m.k0 = R("4.7");
        m.k0_exact = R("3.32") * sqrt2;
        m.l0_coeff = R("3.66");
        m.l0_exact = R("1.6") * sqrt2 * (sqrt2 + r13 / T) * rootfac_exact;
        m.qmin_coeff = R("0.14");
        m.c_coeff = R("15.48");
        L.le("2 k0 Q", 2 * m.k0 * m.Q_coeff, R("27.64"));
        L.le("base", 2 * m.l0_coeff / m.E_div, R("0.56"));
        L.le("c chain", R("27.64") * R("0.56"), m.c_coeff);
    }
    L.lt("base < 1", 2 * m.l0_coeff / m.E_div, Rat(1));
    L.le("qmin", 1 / (2 * m.l0_coeff), m.qmin_coeff);
    L.lt("Q > 1", Rat(1), m.Q_coeff * T);
    L.lt("E > 1", Rat(1), T / m.E_div);

    m.base_exact = 2 * m.l0_exact / m.E_exact;
    m.qmin_exact = 1 / (2 * m.l0_exact);
    m.c_exact = 2 * m.k0_exact * m.Q_exact * m.base_exact;
    L.le("Q exact", m.Q_exact, m.Q_coeff);
    L.le("l0 exact", m.l0_exact, m.l0_coeff);
    L.le("E exact", m.E_exact, m.E_div);
    L.le("c exact", m.c_exact, m.c_coeff);

    m.lines = std::move(L.v);
    m.ok = true;
    for (const auto& l : m.lines)
        if (!l.ok) {
            m.ok = false;
            if (m.failing_line.empty()) m.failing_line = l.name;
        }
    return m;
}

Rat irrationality_lower(const Rat& t_abs, const Rat& q_abs, int type_index) {
    if (type_index != 0 && type_index != 3) throw DomainError("type must be 0 or 3");
    if (t_abs < 100) throw PreconditionError("|t| must be at least 100");
    Rat c = type_index == 0 ? R("5.47") : R("15.48");
    Rat gate = type_index == 0 ? R("0.28") : R("0.14");
    if (q_abs < gate * t_abs) throw PreconditionError("|q| below the proposition's gate");
    Rat kh = kappa_hi(t_abs, 2, R("1e-6"));
    Rat e = kh + 1;
    Rat qp = pow_frac_upper(q_abs, to_ulong(e.get_num()), to_ulong(e.get_den()), 12);
    return 1 / (c * t_abs * qp);
}

Int contradiction_bound(const Rat& kappa) {
    Rat e = 3 - kappa;
    if (e <= 0) throw DomainError("kappa must be below 3");
    unsigned long p = to_ulong(e.get_num()), q = to_ulong(e.get_den());
    Rat target = pow(R("137.16"), static_cast<long>(q));
    auto ok = [&](const Int& x) { return Rat(pow(x, p)) >= target; };
    Int lo = 0, hi = 1;
    while (!ok(hi)) {
        lo = hi;
        hi *= 2;
    }
    while (hi - lo > 1) {
        Int mid = (lo + hi) / 2;
        if (ok(mid)) hi = mid;
        else lo = mid;
    }
    return hi;
}

ProofReport theorem_assembly(const Rat& tmin, const AssemblyOptions& opt) {
    if (tmin <= 12) throw DomainError("tmin must exceed 12");
    const Rat T = tmin;
    ProofReport rep;
    rep.tmin = T;

    auto gate = [&](std::string name, auto fn) {
        Gate g;
        g.name = std::move(name);
        try {
            g.ok = fn(g.detail);
        } catch (const std::exception& e) {
            g.ok = false;
            g.detail = e.what();
        }
        rep.gates.push_back(std::move(g));
    };

    auto small = std::async(std::launch::async, [&] { return dioph::small_solution_search(T); });
    auto ch0 = std::async(std::launch::async, [&] { return descent::run_descent(0, opt.kmax, T, true); });
    auto ch3 = std::async(std::launch::async, [&] { return descent::run_descent(3, opt.kmax, T, true); });
    auto lettl = std::async(std::launch::async, [&] { return lettl_ok(opt.rmax); });

    gate("irreducibility", [&](std::string& d) {
        auto ir = dioph::irreducibility_exceptions();
        for (const auto& t : ir.exceptions)
            if (quadfield::abs_sq(t) >= T * T) {
                d = "reducible case " + t.str() + " not below tmin";
                return false;
            }
        return true;
    });
    gate("small_solutions", [&](std::string& d) {
        auto s = small.get();
        if (!s.empty()) d = std::to_string(s.size()) + " solutions with |t| >= tmin";
        return s.empty();
    });
    gate("root_enclosures", [&](std::string& d) {
        for (const auto& c : rouche::root_certificates(T))
            if (!c.verified) {
                d = c.label + ": " + c.diagnostic;
                return false;
            }
        for (auto w : {rouche::HighOrder::B, rouche::HighOrder::B3}) {
            auto c = rouche::certify_high_order(w, T);
            if (!c.verified) {
                d = c.label + ": " + c.diagnostic;
                return false;
            }
        }
        return true;
    });
    gate("type_reduction", [&](std::string& d) {
        auto sep = rouche::root_separation(T);
        auto b = descent::beta_bound(T);
        bool ok = sep.min_pairwise >= R("0.96") && sep.min_to_alpha2 >= R("0.98") && sep.alpha0_abs >= R("0.94") &&
                  8 / (R("0.96") * R("0.96") * R("0.98")) <= R("8.86") && b.ok &&
                  R("8.86") / R("0.94") <= R("9.43") && R("9.43") / 81 < R("0.48") && 2 * R("0.48") <= R("0.96");
        if (!ok) d = "separation constants not reached";
        return ok;
    });
    gate("lettl", [&](std::string& d) {
        bool ok = lettl.get();
        if (!ok) d = "Lettl bounds fail";
        return ok;
    });
    gate("root_identity", [&](std::string& d) {
        bool ok = root_identity_ok(0) && root_identity_ok(3);
        if (!ok) d = "closed-form root identity fails";
        return ok;
    });
    gate("descent_type0", [&](std::string& d) {
        rep.chain0 = ch0.get();
        rep.descent_lower_0 = rep.chain0->y_lower;
        d = rep.chain0->diagnostic;
        return rep.chain0->ok;
    });
    gate("descent_type3", [&](std::string& d) {
        rep.chain3 = ch3.get();
        rep.descent_lower_3 = rep.chain3->y_lower;
        d = rep.chain3->diagnostic;
        return rep.chain3->ok;
    });
    gate("measure_type0", [&](std::string& d) {
        rep.m0 = measure_constants(0, T, opt.rmax);
        d = rep.m0->failing_line;
        return rep.m0->ok;
    });
    gate("measure_type3", [&](std::string& d) {
        rep.m3 = measure_constants(3, T, opt.rmax);
        d = rep.m3->failing_line;
        return rep.m3->ok;
    });
    gate("relative_gate", [&](std::string& d) {
        // |y| > |t|/2.27 and |y| > 2.67|t| both clear 0.28|t|
        bool ok = 1 / R("2.27") >= R("0.28") && R("2.67") >= R("0.28");
        if (!ok) d = "step 1 bounds below the measure gate";
        return ok;
    });
    gate("exponent_product", [&](std::string& d) {
        bool ok = R("8.86") * R("15.48") <= R("137.16");
        if (!ok) d = "8.86 * 15.48 exceeds 137.16";
        return ok;
    });
    gate("kappa", [&](std::string& d) {
        rep.kappa_hi = kappa_hi(T, 2, R("1e-6"));
        bool ok = *rep.kappa_hi < 3;
        if (!ok) d = "kappa_hi = " + decimal_hint(*rep.kappa_hi) + " is not below 3";
        return ok;
    });

    bool all = true;
    for (const auto& g : rep.gates) all = all && g.ok;
    if (rep.kappa_hi && *rep.kappa_hi < 3) rep.contradiction_upper = Rat(contradiction_bound(*rep.kappa_hi));
    if (!all) {
        std::string names;
        for (const auto& g : rep.gates)
            if (!g.ok) names += (names.empty() ? "" : ", ") + g.name;
        rep.diagnostic = "failed gates: " + names;
        return rep;
    }
    Rat lower = std::min(rep.descent_lower_0, rep.descent_lower_3);
    if (!(*rep.contradiction_upper < lower)) {
        rep.diagnostic = "descent lower bound insufficient: " + decimal_hint(lower) + " < required " +
                         decimal_hint(*rep.contradiction_upper);
        return rep;
    }
    rep.proven = true;
    return rep;
}

CorollaryLin corollary_lin(const Rat& C, std::optional<Rat> t0) {
    if (C <= 0) throw DomainError("C must be positive");
    const Rat w = R("1e-9");
    CorollaryLin r;
    r.C = C;
    r.consistency_ok = 443 > R("8.86") * R("15.48") / R("0.31");
    if (!r.consistency_ok) throw VerificationFailure("443 does not exceed 137.1528/0.31");
    auto below2 = [&](const Rat& t) { return kappa(t, w).hi < 2; };
    if (t0) {
        if (*t0 < 524) throw PreconditionError("t0 must be at least 524");
        if (!below2(*t0)) throw PreconditionError("kappa(t0) not certified below 2");
        r.t0 = *t0;
    } else {
        Int lo = 523, hi = 524;
        while (!below2(Rat(hi))) {
            lo = hi;
            hi *= 2;
        }
        while (hi - lo > 1) {
            Int mid = (lo + hi) / 2;
            if (below2(Rat(mid))) hi = mid;
            else lo = mid;
        }
        r.t0 = Rat(hi);
    }
    r.kappa_hi_t0 = kappa_hi(r.t0, 5, w);
    if (r.kappa_hi_t0 >= 2) r.kappa_hi_t0 = kappa(r.t0, w).hi;
    r.term_threshold = root_upper(R("20.14") * C, 4, 6);
    r.term_small = 3 * root_upper(C, 3, 6);
    // 1 / (2 - a/b) = b / (2b - a)
    Int a = r.kappa_hi_t0.get_num(), b = r.kappa_hi_t0.get_den();
    Int p = b, q = 2 * b - a, g = gcd(p, q);
    r.term_measure = pow_frac_upper(443 * C, to_ulong(p / g), to_ulong(q / g), 4);
    r.C0 = std::max({r.term_threshold, r.term_small, r.term_measure});
    r.family_coeff = C / 4;
    return r;
}

namespace {

struct EpsParts {
    unsigned long p, q;
};

EpsParts eps_parts(const Rat& eps) {
    if (eps <= 0 || eps >= 1) throw DomainError("eps must lie in (0, 1)");
    return {to_ulong(eps.get_num()), to_ulong(eps.get_den())};
}

}  // namespace

EpsGates eps_gates(const Rat& eps, const Rat& t_abs) {
    auto [p, q] = eps_parts(eps);
    const Rat w = R("1e-12");
    EpsGates g;
    g.t = t_abs;
    // (i) 4 * 20.14^(1 - eps) <= |t| follows from |t| >= 4 * 20.14
    g.g1 = t_abs >= 4 * R("20.14");
    // (ii) |t|^(2 + eps) >= (8.86/0.33)^4 * 4^3
    Rat k = pow(R("8.86") / R("0.33"), 4) * 64;
    g.g2 = pow(t_abs, static_cast<long>(2 * q + p)) >= pow(k, static_cast<long>(q));
    // (iii)
    RatInterval kap = kappa(t_abs, w);
    g.kappa_hi = kap.hi;
    Rat den = 1 + eps - kap.hi;
    if (den > 0) {
        RatInterval l137 = ln_enclosure(R("137.16"), w), l031 = ln_enclosure(R("0.31"), w);
        RatInterval l4 = ln_enclosure(Rat(4), w), lt = ln_enclosure(t_abs, w);
        Rat lhs = (l137.hi - (2 - eps) * l031.lo) / den;
        Rat rhs = ((2 - eps) * lt.lo - l4.hi) / 4;
        g.g3 = lhs < rhs;
    }
    return g;
}

bool eps_gate2_literal(const Rat& eps, const Rat& t_abs) {
    auto [p, q] = eps_parts(eps);
    // 8.86 / |t|^((2q + p)/(4q)) <= 0.33  <=>  (8.86/0.33)^(4q) <= |t|^(2q + p)
    return pow(R("8.86") / R("0.33"), static_cast<long>(4 * q)) <= pow(t_abs, static_cast<long>(2 * q + p));
}

CorollaryEps corollary_eps(const Rat& eps, const Rat& cap) {
    eps_parts(eps);
    CorollaryEps r;
    r.eps = eps;
    Int lo = 99, hi = 100;
    while (!eps_gates(eps, Rat(hi)).all()) {
        lo = hi;
        hi *= 2;
        if (Rat(hi) > cap) throw SearchCapError("no t0 below the search cap");
    }
    while (hi - lo > 1) {
        Int mid = (lo + hi) / 2;
        if (eps_gates(eps, Rat(mid)).all()) hi = mid;
        else lo = mid;
    }
    r.t0 = Rat(hi);
    r.at_t0 = eps_gates(eps, r.t0);
    r.at_2t0 = eps_gates(eps, 2 * r.t0);
    if (!r.at_t0.all() || !r.at_2t0.all()) throw VerificationFailure("gates fail to re-verify");
    return r;
}

}  // namespace thueq::measure
