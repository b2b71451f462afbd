#pragma once

#include "thueq/rat.hpp"

#include <vector>

namespace thueq::hyperchi {

// chi_{4,r}(X) = 2F1(-r, -r - 1/4; 3/4; X)
struct ChiPoly {
    int r = 0;
    std::vector<Rat> coeffs;
};

struct DenomData {
    int r = 0;
    Int Delta;
    Int N;
    std::vector<Int> cleared;  // (Delta/N) chi(1 - 8X)
};

struct LettlRow {
    int r = 0;
    Rat lhs1, rhs1;  // 2^(r+2) (Delta/N) g1  <  3.32 * 1.35^r
    Rat lhs2, rhs2;  // 2^(4r+3) (Delta/N) g2 <  1.6 * 10.7^r
    bool ok() const { return lhs1 < rhs1 && lhs2 < rhs2; }
};

struct LettlReport {
    bool ok = true;
    std::vector<LettlRow> rows;
};

ChiPoly chi(int r);
// chi evaluated at 1 - 8X, expanded in X.
std::vector<Rat> chi_shifted(const ChiPoly& c);
DenomData denom_data(int r);
Rat gamma_ratio_g1(int r);
Rat gamma_ratio_g2(int r);
LettlReport verify_lettl(int rmax);

// Y^r chi(X/Y) for any commutative ring element type.
template <class P>
P chi_star(const ChiPoly& c, const P& x, const P& y) {
    P acc{};
    P xp = P(1);
    std::vector<P> ypow(c.coeffs.size(), P(1));
    for (size_t k = 1; k < ypow.size(); ++k) ypow[k] = ypow[k - 1] * y;
    for (size_t k = 0; k < c.coeffs.size(); ++k) {
        acc = acc + xp * ypow[c.coeffs.size() - 1 - k] * P(c.coeffs[k]);
        xp = xp * x;
    }
    return acc;
}

}  // namespace thueq::hyperchi
