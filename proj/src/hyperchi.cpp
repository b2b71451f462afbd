#include "thueq/hyperchi.hpp"

#include "thueq/errors.hpp"

#include <string>

namespace thueq::hyperchi {

ChiPoly chi(int r) {
    if (r < 0) throw DomainError("r must be nonnegative");
    ChiPoly c;
    c.r = r;
    Rat term = 1;
    c.coeffs.push_back(term);
    Rat a = -r, b = Rat(-r) - make_rat(1, 4), g = make_rat(3, 4);
    for (int k = 0; k < r; ++k) {
        term = term * (a + k) * (b + k) / ((g + k) * (k + 1));
        c.coeffs.push_back(term);
    }
    return c;
}

std::vector<Rat> chi_shifted(const ChiPoly& c) {
    size_t n = c.coeffs.size();
    std::vector<Rat> out(n);
    // (1 - 8X)^k expanded by the binomial theorem
    for (size_t k = 0; k < n; ++k) {
        Int binom = 1;
        Rat p8 = 1;
        for (size_t j = 0; j <= k; ++j) {
            out[j] += c.coeffs[k] * Rat(binom) * p8;
            binom = binom * static_cast<unsigned long>(k - j) / static_cast<unsigned long>(j + 1);
            p8 *= -8;
        }
    }
    return out;
}

DenomData denom_data(int r) {
    if (r < 1) throw DomainError("r must be at least 1");
    ChiPoly c = chi(r);
    DenomData d;
    d.r = r;
    d.Delta = 1;
    for (const auto& q : c.coeffs) mpz_lcm(d.Delta.get_mpz_t(), d.Delta.get_mpz_t(), q.get_den_mpz_t());
    std::vector<Rat> sh = chi_shifted(c);
    d.N = 0;
    for (const auto& q : sh) mpz_gcd(d.N.get_mpz_t(), d.N.get_mpz_t(), q.get_num_mpz_t());
    Rat scale = make_rat(d.Delta, d.N);
    for (const auto& q : sh) {
        Rat v = scale * q;
        if (v.get_den() != 1) throw IntegralityViolation("(Delta/N) chi(1 - 8X) is not integral");
        d.cleared.push_back(v.get_num());
    }
    return d;
}

Rat gamma_ratio_g1(int r) {
    if (r < 0) throw DomainError("r must be nonnegative");
    // Gamma(3/4) r! / Gamma(r + 3/4)
    Rat v = 1;
    for (int k = 0; k < r; ++k) v = v * (k + 1) / (Rat(k) + make_rat(3, 4));
    return v;
}

Rat gamma_ratio_g2(int r) {
    if (r < 0) throw DomainError("r must be nonnegative");
    // Gamma(r + 5/4) / (Gamma(1/4) r!)
    Rat v = make_rat(1, 4);
    for (int k = 1; k <= r; ++k) v = v * (Rat(k) + make_rat(1, 4)) / k;
    return v;
}

LettlReport verify_lettl(int rmax) {
    LettlReport rep;
    Rat k1 = parse_rat("3.32"), b1 = parse_rat("1.35");
    Rat k2 = parse_rat("1.6"), b2 = parse_rat("10.7");
    for (int r = 1; r <= rmax; ++r) {
        DenomData d = denom_data(r);
        Rat dn = make_rat(d.Delta, d.N);
        LettlRow row;
        row.r = r;
        row.lhs1 = pow(Rat(2), r + 2) * dn * gamma_ratio_g1(r);
        row.rhs1 = k1 * pow(b1, r);
        row.lhs2 = pow(Rat(2), 4 * r + 3) * dn * gamma_ratio_g2(r);
        row.rhs2 = k2 * pow(b2, r);
        rep.ok = rep.ok && row.ok();
        rep.rows.push_back(std::move(row));
    }
    if (!rep.ok) {
        std::string bad;
        for (const auto& row : rep.rows)
            if (!row.ok()) bad += " " + std::to_string(row.r);
        throw VerificationFailure("Lettl bound violated at r =" + bad);
    }
    return rep;
}

}  // namespace thueq::hyperchi
