#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace thueq {

using Int = mpz_class;
using Rat = mpq_class;

Rat make_rat(const Int& num, const Int& den);

// Accepts "886/100", "8.86", "-1e-4", "3.74e12".
Rat parse_rat(std::string_view text);

Int floor(const Rat& x);
Int ceil(const Rat& x);
Rat abs(const Rat& x);
Rat pow(const Rat& x, long e);
Int pow(const Int& x, unsigned long e);
int sign(const Rat& x);

// Decimal exponent e with 10^e <= |x| < 10^(e+1); x != 0.
long decimal_exponent(const Rat& x);

// Round toward +inf / -inf to `digits` significant decimal digits.
Rat round_up_sig(const Rat& x, int digits);
Rat round_down_sig(const Rat& x, int digits);

// Dyadic outward rounding with `bits` fractional bits.
Rat round_up_dyadic(const Rat& x, long bits);
Rat round_down_dyadic(const Rat& x, long bits);

// Square root bounds with relative accuracy about 2^-bits.
Rat sqrt_lower(const Rat& x, long bits = 96);
Rat sqrt_upper(const Rat& x, long bits = 96);

// n-th root bounds of x >= 0 to `digits` significant digits, certified by
// integer powers.
Rat root_upper(const Rat& x, unsigned long n, int digits = 12);
Rat root_lower(const Rat& x, unsigned long n, int digits = 12);

// Smallest value m*10^e with `digits`-digit mantissa m such that
// value^q >= x^p, i.e. an upper bound for x^(p/q).
Rat pow_frac_upper(const Rat& x, unsigned long p, unsigned long q, int digits = 4);

std::string fraction_string(const Rat& x);
std::string decimal_hint(const Rat& x, int digits = 4);
double to_double(const Rat& x);

}  // namespace thueq
