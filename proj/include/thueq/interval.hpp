#pragma once

#include "thueq/rat.hpp"

#include <compare>

namespace thueq {

struct RatInterval {
    Rat lo;
    Rat hi;

    RatInterval() = default;
    RatInterval(Rat v) : lo(v), hi(v) {}
    RatInterval(Rat l, Rat h);

    Rat width() const { return hi - lo; }
    Rat mid() const { return (lo + hi) / 2; }
    bool contains(const Rat& x) const { return lo <= x && x <= hi; }
    bool contains_zero() const { return lo <= 0 && hi >= 0; }
    bool positive() const { return lo > 0; }
};

RatInterval operator+(const RatInterval& a, const RatInterval& b);
RatInterval operator-(const RatInterval& a, const RatInterval& b);
RatInterval operator-(const RatInterval& a);
RatInterval operator*(const RatInterval& a, const RatInterval& b);
RatInterval operator/(const RatInterval& a, const RatInterval& b);

// Natural log of a positive rational, certified width <= target_width.
RatInterval ln_enclosure(const Rat& x, const Rat& target_width);

// (ln t + 1.08) / (ln t - 2.59).
RatInterval kappa(const Rat& t_abs, const Rat& target_width);
// Same, for |t| given through |t|^2.
RatInterval kappa_from_abs_sq(const Rat& t_abs_sq, const Rat& target_width);

// Upper end of kappa rounded up onto the decimal grid 10^-grid_digits.
Rat kappa_hi(const Rat& t_abs, int grid_digits, const Rat& target_width);

// Ordering of a^(1/p) against b^(1/q), decided as a^q against b^p.
std::strong_ordering pow_cmp(const Rat& a, unsigned long p, const Rat& b, unsigned long q);

}  // namespace thueq
