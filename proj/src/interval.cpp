#include "thueq/interval.hpp"

#include "thueq/errors.hpp"

#include <algorithm>

namespace thueq {

RatInterval::RatInterval(Rat l, Rat h) : lo(std::move(l)), hi(std::move(h)) {
    if (lo > hi) throw DomainError("interval with lo > hi");
}

RatInterval operator+(const RatInterval& a, const RatInterval& b) {
    return {a.lo + b.lo, a.hi + b.hi};
}

RatInterval operator-(const RatInterval& a, const RatInterval& b) {
    return {a.lo - b.hi, a.hi - b.lo};
}

RatInterval operator-(const RatInterval& a) { return {-a.hi, -a.lo}; }

RatInterval operator*(const RatInterval& a, const RatInterval& b) {
    Rat p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
    return {*std::min_element(p, p + 4), *std::max_element(p, p + 4)};
}

RatInterval operator/(const RatInterval& a, const RatInterval& b) {
    if (b.contains_zero()) throw Indeterminate("interval division by an interval containing 0");
    return a * RatInterval(1 / b.hi, 1 / b.lo);
}

namespace {

long bits_for_width(const Rat& w) {
    // smallest b with 2^-b <= w
    long b = static_cast<long>(mpz_sizeinbase(w.get_den_mpz_t(), 2)) -
             static_cast<long>(mpz_sizeinbase(w.get_num_mpz_t(), 2)) + 1;
    return std::max<long>(b, 1);
}

// 2*atanh(z) for 0 <= |z| <= 1/3, width <= w.
RatInterval two_atanh(const Rat& z, const Rat& w) {
    if (z == 0) return Rat(0);
    Rat z2 = z * z;
    Rat term = z;  // z^(2j+1)
    Rat sum = 0;
    for (long j = 0;; ++j) {
        sum += term / (2 * j + 1);
        term *= z2;
        // |tail| <= |z|^(2j+3) / ((2j+3)(1 - z^2))
        Rat tail = abs(term) / ((2 * j + 3) * (1 - z2));
        if (4 * tail <= w) {
            long bits = bits_for_width(w) + 3;
            Rat lo = round_down_dyadic(2 * (sum - tail), bits);
            Rat hi = round_up_dyadic(2 * (sum + tail), bits);
            return {lo, hi};
        }
    }
}

}  // namespace

RatInterval ln_enclosure(const Rat& x, const Rat& target_width) {
    if (x <= 0) throw DomainError("ln of non-positive value");
    if (target_width <= 0) throw DomainError("target width must be positive");
    if (x == 1) return Rat(0);
    // x = 2^k y with y in [3/4, 3/2)
    long k = static_cast<long>(mpz_sizeinbase(x.get_num_mpz_t(), 2)) -
             static_cast<long>(mpz_sizeinbase(x.get_den_mpz_t(), 2));
    Rat y = k >= 0 ? Rat(x / (Int(1) << static_cast<mp_bitcnt_t>(k)))
                   : Rat(x * (Int(1) << static_cast<mp_bitcnt_t>(-k)));
    while (y >= make_rat(3, 2)) { y /= 2; ++k; }
    while (y < make_rat(3, 4)) { y *= 2; --k; }
    Rat wy = target_width / 2;
    RatInterval ly = two_atanh((y - 1) / (y + 1), wy);
    if (k == 0) return ly;
    Rat w2 = target_width / (2 * (std::abs(k) + 1));
    RatInterval ln2 = two_atanh(make_rat(1, 3), w2);
    return RatInterval(Rat(k)) * ln2 + ly;
}

namespace {

RatInterval kappa_of_ln(const RatInterval& L) {
    Rat a = make_rat(108, 100), b = make_rat(259, 100);
    if (L.lo - b <= 0) throw UndefinedKappa("ln|t| - 2.59 is not certified positive");
    // decreasing in L
    return {(L.hi + a) / (L.hi - b), (L.lo + a) / (L.lo - b)};
}

template <class LnFn>
RatInterval kappa_refined(LnFn ln_of_width, const Rat& target_width) {
    Rat w = target_width / 16;
    for (int it = 0; it < 60; ++it) {
        RatInterval L = ln_of_width(w);
        if (L.hi <= make_rat(259, 100)) throw UndefinedKappa("ln|t| <= 2.59");
        if (L.lo > make_rat(259, 100)) {
            RatInterval k = kappa_of_ln(L);
            if (k.width() <= target_width) return k;
        }
        w /= 16;
    }
    throw UndefinedKappa("kappa enclosure did not reach the target width");
}

}  // namespace

RatInterval kappa(const Rat& t_abs, const Rat& target_width) {
    if (t_abs <= 0) throw UndefinedKappa("|t| must be positive");
    return kappa_refined([&](const Rat& w) { return ln_enclosure(t_abs, w); }, target_width);
}

RatInterval kappa_from_abs_sq(const Rat& t_abs_sq, const Rat& target_width) {
    if (t_abs_sq <= 0) throw UndefinedKappa("|t| must be positive");
    return kappa_refined(
        [&](const Rat& w) {
            RatInterval l2 = ln_enclosure(t_abs_sq, 2 * w);
            return RatInterval(l2.lo / 2, l2.hi / 2);
        },
        target_width);
}

Rat kappa_hi(const Rat& t_abs, int grid_digits, const Rat& target_width) {
    RatInterval k = kappa(t_abs, target_width);
    Int scale = pow(Int(10), static_cast<unsigned long>(grid_digits));
    return make_rat(ceil(k.hi * scale), scale);
}

std::strong_ordering pow_cmp(const Rat& a, unsigned long p, const Rat& b, unsigned long q) {
    if (a <= 0 || b <= 0 || p == 0 || q == 0) throw DomainError("pow_cmp requires positive inputs");
    Rat lhs = pow(a, static_cast<long>(q));
    Rat rhs = pow(b, static_cast<long>(p));
    int c = cmp(lhs, rhs);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

}  // namespace thueq
