#include "thueq/rouche.hpp"

#include "thueq/errors.hpp"
#include "thueq/series.hpp"

#include <algorithm>
#include <map>

namespace thueq::rouche {

Laurent operator+(const Laurent& a, const Laurent& b) {
    if (a.p.is_zero()) return b;
    if (b.p.is_zero()) return a;
    long low = std::min(a.low, b.low);
    GPoly pa = GPoly::monomial(GaussRat(1), static_cast<size_t>(a.low - low)) * a.p;
    GPoly pb = GPoly::monomial(GaussRat(1), static_cast<size_t>(b.low - low)) * b.p;
    return {low, pa + pb};
}

Laurent operator*(const Laurent& a, const Laurent& b) { return {a.low + b.low, a.p * b.p}; }

Laurent scaled(const Laurent& a, const GaussRat& k) { return {a.low, a.p.scaled(k)}; }

std::string to_string(const Laurent& a) {
    if (a.p.is_zero()) return "0";
    std::string out;
    const auto& co = a.p.coeffs();
    for (size_t j = 0; j < co.size(); ++j) {
        if (co[j].is_zero()) continue;
        long e = a.low + static_cast<long>(j);
        std::string cs = co[j].str();
        if (!out.empty()) {
            out += cs[0] == '-' ? " - " : " + ";
            if (cs[0] == '-') cs.erase(0, 1);
        }
        out += cs;
        if (e != 0) out += "*t^" + std::to_string(-e);
    }
    return out;
}

namespace {

// Taylor coefficients of f(center + z) in z; f has coefficients in Z[t].
std::vector<Laurent> shifted_form(const Laurent& c) {
    Laurent one = Laurent::monomial(1, 0);
    Laurent t = Laurent::monomial(1, -1);
    std::vector<Laurent> f = {one, t, Laurent::monomial(-6, 0), scaled(t, -1), one};
    std::vector<Laurent> cp = {one};
    for (int j = 1; j <= 4; ++j) cp.push_back(cp.back() * c);
    std::vector<Laurent> h(5);
    long binom[5][5] = {{1}, {1, 1}, {1, 2, 1}, {1, 3, 3, 1}, {1, 4, 6, 4, 1}};
    for (int m = 0; m <= 4; ++m)
        for (int j = m; j <= 4; ++j) h[m] = h[m] + scaled(f[j] * cp[j - m], GaussRat(binom[j][m]));
    return h;
}

}  // namespace

EnclosureCert certify_enclosure(const Laurent& center, const Rat& radius_c, long radius_exp, const Rat& tmin) {
    if (tmin <= 0) throw DomainError("tmin must be positive");
    if (radius_c <= 0) throw DomainError("radius must be positive");
    EnclosureCert cert;
    cert.center = center;
    cert.radius_c = radius_c;
    cert.radius_exp = radius_exp;
    cert.tmin = tmin;

    std::vector<Laurent> h = shifted_form(center);
    long v = h[1].p.valuation();
    if (v < 0) {
        cert.diagnostic = "linear coefficient vanishes";
        return cert;
    }
    const long ed = h[1].low + v;
    const GaussRat d = h[1].p.coeffs()[static_cast<size_t>(v)];
    cert.dominant_exp = ed;

    std::map<long, Rat> maj;
    bool negative = false;
    for (int m = 0; m <= 4; ++m) {
        const auto& co = h[m].p.coeffs();
        Rat rm = pow(radius_c, m);
        for (size_t j = 0; j < co.size(); ++j) {
            if (co[j].is_zero()) continue;
            if (m == 1 && static_cast<long>(j) == v) continue;
            long e = h[m].low + static_cast<long>(j);
            long ex = e + (m - 1) * radius_exp - ed;
            if (ex < 0) negative = true;
            maj[ex] += abs_upper(co[j]) * rm;
        }
    }
    Rat rho = 1 / tmin;
    cert.lhs = 0;
    for (const auto& [ex, c] : maj) {
        cert.majorant.emplace_back(ex, c);
        cert.lhs += c * pow(rho, ex);
    }
    cert.rhs = abs_lower(d) * radius_c;
    cert.margin = cert.rhs - cert.lhs;
    if (negative) {
        cert.diagnostic = "majorant has a term growing with |t|";
        return cert;
    }
    cert.verified = cert.margin > 0;
    if (!cert.verified) cert.diagnostic = "dominant term does not exceed the rest";
    return cert;
}

Rat radius_alpha0() { return parse_rat("5.01"); }
Rat radius_alpha2() { return parse_rat("5.02"); }
Rat radius_alpha13() { return parse_rat("2.16"); }

std::vector<EnclosureCert> root_certificates(const Rat& tmin, const Rat& scale) {
    std::vector<EnclosureCert> out;
    out.push_back(certify_enclosure(Laurent::monomial(-1, 1), radius_alpha0() * scale, 3, tmin));
    out.back().label = "alpha0";
    out.push_back(certify_enclosure(Laurent::monomial(-1, 0), radius_alpha13() * scale, 1, tmin));
    out.back().label = "alpha1";
    out.push_back(certify_enclosure(Laurent::monomial(1, -1), radius_alpha2() * scale, 1, tmin));
    out.back().label = "alpha2";
    out.push_back(certify_enclosure(Laurent::monomial(1, 0), radius_alpha13() * scale, 1, tmin));
    out.back().label = "alpha3";
    return out;
}

Laurent high_order_center(HighOrder which) {
    series::Series a = series::newton_alpha_series(31);
    if (which == HighOrder::B) return {0, a.truncated(31)};
    return {0, series::alpha3_series(a).truncated(30)};
}

EnclosureCert certify_high_order(HighOrder which, const Rat& tmin, const Rat& scale) {
    Laurent c = high_order_center(which);
    EnclosureCert cert = which == HighOrder::B
        ? certify_enclosure(c, parse_rat("2.71e16") * scale, 31, tmin)
        : certify_enclosure(c, parse_rat("9.84e15") * scale, 30, tmin);
    cert.label = which == HighOrder::B ? "B" : "B3";
    return cert;
}

RootSeparation root_separation(const Rat& tmin) {
    for (const auto& c : root_certificates(tmin))
        if (!c.verified) throw DependencyError("root enclosure " + c.label + " not verified at this tmin");
    const Rat T = tmin;
    const Rat r0 = radius_alpha0(), r2 = radius_alpha2(), r13 = radius_alpha13();
    RootSeparation s;
    s.tmin = T;
    Rat d01 = 1 - 1 / T - r0 / pow(T, 3) - r13 / T;
    Rat d13 = 2 - 2 * r13 / T;
    s.min_pairwise = std::min(d01, d13);
    Rat d20 = 1 - 1 / (T * T) - r2 / (T * T) - r0 / pow(T, 4);
    Rat d21 = 1 - 1 / T - (r2 + r13) / (T * T);
    s.min_to_alpha2 = std::min(d20, d21);
    s.alpha0_abs = 1 - r0 / (T * T);
    return s;
}

}  // namespace thueq::rouche
