#include "thueq/rat.hpp"

#include "thueq/errors.hpp"

#include <algorithm>
#include <cctype>

namespace thueq {

Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw DivisionError("zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

namespace {

Int parse_digits(std::string_view s) {
    if (s.empty()) throw DomainError("empty number");
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) throw DomainError("bad digit in number");
    return Int(std::string(s), 10);
}

Int ten_pow(unsigned long e) {
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
    return r;
}

Rat ten_pow_signed(long e) {
    if (e >= 0) return Rat(ten_pow(static_cast<unsigned long>(e)));
    return make_rat(1, ten_pow(static_cast<unsigned long>(-e)));
}

}  // namespace

Rat parse_rat(std::string_view text) {
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    if (s.empty()) throw DomainError("empty number");
    bool neg = false;
    if (s.front() == '-' || s.front() == '+') {
        neg = s.front() == '-';
        s.remove_prefix(1);
    }
    Rat out;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        out = make_rat(parse_digits(s.substr(0, slash)), parse_digits(s.substr(slash + 1)));
    } else {
        long exp10 = 0;
        if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
            std::string_view es = s.substr(e + 1);
            bool eneg = false;
            if (!es.empty() && (es.front() == '-' || es.front() == '+')) {
                eneg = es.front() == '-';
                es.remove_prefix(1);
            }
            Int ev = parse_digits(es);
            if (!ev.fits_slong_p() || ev > 100000) throw DomainError("exponent out of range");
            exp10 = eneg ? -ev.get_si() : ev.get_si();
            s = s.substr(0, e);
        }
        std::string digits;
        long frac = 0;
        if (auto dot = s.find('.'); dot != std::string_view::npos) {
            std::string_view ip = s.substr(0, dot), fp = s.substr(dot + 1);
            if (ip.empty() && fp.empty()) throw DomainError("bad number");
            digits = std::string(ip) + std::string(fp);
            frac = static_cast<long>(fp.size());
        } else {
            digits = std::string(s);
        }
        out = Rat(parse_digits(digits)) * ten_pow_signed(exp10 - frac);
        out.canonicalize();
    }
    return neg ? Rat(-out) : out;
}

Int floor(const Rat& x) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return q;
}

Int ceil(const Rat& x) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return q;
}

Rat abs(const Rat& x) { return x < 0 ? Rat(-x) : x; }

int sign(const Rat& x) { return sgn(x); }

Int pow(const Int& x, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), x.get_mpz_t(), e);
    return r;
}

Rat pow(const Rat& x, long e) {
    if (e < 0) {
        if (x == 0) throw DivisionError("zero to a negative power");
        Rat inv = 1 / x;
        return pow(inv, -e);
    }
    unsigned long ue = static_cast<unsigned long>(e);
    return make_rat(pow(x.get_num(), ue), pow(x.get_den(), ue));
}

long decimal_exponent(const Rat& x) {
    if (x == 0) throw DomainError("decimal exponent of zero");
    Rat a = abs(x);
    long e = static_cast<long>(mpz_sizeinbase(a.get_num_mpz_t(), 10)) -
             static_cast<long>(mpz_sizeinbase(a.get_den_mpz_t(), 10));
    while (ten_pow_signed(e) > a) --e;
    while (ten_pow_signed(e + 1) <= a) ++e;
    return e;
}

Rat round_up_sig(const Rat& x, int digits) {
    if (x == 0) return x;
    if (x < 0) return -round_down_sig(-x, digits);
    Rat scale = ten_pow_signed(digits - 1 - decimal_exponent(x));
    Rat scaled = x * scale;
    return Rat(ceil(scaled)) / scale;
}

Rat round_down_sig(const Rat& x, int digits) {
    if (x == 0) return x;
    if (x < 0) return -round_up_sig(-x, digits);
    Rat scale = ten_pow_signed(digits - 1 - decimal_exponent(x));
    Rat scaled = x * scale;
    return Rat(floor(scaled)) / scale;
}

Rat round_up_dyadic(const Rat& x, long bits) {
    Int den = Int(1) << static_cast<mp_bitcnt_t>(bits);
    Rat scaled = x * den;
    return make_rat(ceil(scaled), den);
}

Rat round_down_dyadic(const Rat& x, long bits) {
    Int den = Int(1) << static_cast<mp_bitcnt_t>(bits);
    Rat scaled = x * den;
    return make_rat(floor(scaled), den);
}

namespace {

bool exact_sqrt(const Rat& x, Rat& out) {
    if (mpz_perfect_square_p(x.get_num_mpz_t()) && mpz_perfect_square_p(x.get_den_mpz_t())) {
        Int n, d;
        mpz_sqrt(n.get_mpz_t(), x.get_num_mpz_t());
        mpz_sqrt(d.get_mpz_t(), x.get_den_mpz_t());
        out = make_rat(n, d);
        return true;
    }
    return false;
}

// floor(sqrt(x) * 2^s) with s chosen for `bits` significant bits.
std::pair<Int, long> scaled_isqrt(const Rat& x, long bits) {
    long lg = static_cast<long>(mpz_sizeinbase(x.get_num_mpz_t(), 2)) -
              static_cast<long>(mpz_sizeinbase(x.get_den_mpz_t(), 2));
    long s = std::max<long>(0, bits - lg / 2 + 2);
    Int k = x.get_num() << static_cast<mp_bitcnt_t>(2 * s);
    mpz_fdiv_q(k.get_mpz_t(), k.get_mpz_t(), x.get_den_mpz_t());
    Int r;
    mpz_sqrt(r.get_mpz_t(), k.get_mpz_t());
    return {r, s};
}

}  // namespace

Rat sqrt_lower(const Rat& x, long bits) {
    if (x < 0) throw DomainError("sqrt of negative");
    if (x == 0) return 0;
    Rat ex;
    if (exact_sqrt(x, ex)) return ex;
    auto [r, s] = scaled_isqrt(x, bits);
    return make_rat(r, Int(1) << static_cast<mp_bitcnt_t>(s));
}

Rat sqrt_upper(const Rat& x, long bits) {
    if (x < 0) throw DomainError("sqrt of negative");
    if (x == 0) return 0;
    Rat ex;
    if (exact_sqrt(x, ex)) return ex;
    auto [r, s] = scaled_isqrt(x, bits);
    return make_rat(r + 1, Int(1) << static_cast<mp_bitcnt_t>(s));
}

namespace {

// Returns the mantissa m in [10^(digits-1), 10^digits] and unit so that
// m*unit is the smallest (up) or largest (down) grid point on the
// correct side of x^(1/n).
Rat grid_root(const Rat& x, unsigned long n, int digits, bool up) {
    if (x < 0) throw DomainError("root of negative");
    if (n == 0) throw DomainError("zeroth root");
    if (x == 0) return 0;
    long de = decimal_exponent(x);
    long nn = static_cast<long>(n);
    long E = de >= 0 ? de / nn : -((-de + nn - 1) / nn);
    Rat unit = ten_pow_signed(E - digits + 1);
    Int lo = ten_pow(static_cast<unsigned long>(digits - 1));
    Int hi = ten_pow(static_cast<unsigned long>(digits));
    auto ge = [&](const Int& m) { return pow(Rat(m * unit), nn) >= x; };
    // smallest m in [lo, hi] with (m unit)^n >= x; hi always qualifies
    Int a = lo, b = hi;
    while (a < b) {
        Int mid = (a + b) / 2;
        if (ge(mid)) b = mid; else a = mid + 1;
    }
    Rat cand = Rat(a * unit);
    if (up) return cand;
    if (pow(cand, nn) == x) return cand;
    return Rat((a - 1) * unit);
}

}  // namespace

Rat root_upper(const Rat& x, unsigned long n, int digits) { return grid_root(x, n, digits, true); }
Rat root_lower(const Rat& x, unsigned long n, int digits) { return grid_root(x, n, digits, false); }

Rat pow_frac_upper(const Rat& x, unsigned long p, unsigned long q, int digits) {
    return grid_root(pow(x, static_cast<long>(p)), q, digits, true);
}

std::string fraction_string(const Rat& x) {
    if (x.get_den() == 1) return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

std::string decimal_hint(const Rat& x, int digits) {
    if (x == 0) return "0";
    Rat a = abs(x);
    long e = decimal_exponent(a);
    Rat scaled = a * ten_pow_signed(digits - 1 - e);
    Int m = floor(scaled + make_rat(1, 2));
    if (m == ten_pow(static_cast<unsigned long>(digits))) {
        m /= 10;
        ++e;
    }
    std::string ms = m.get_str();
    std::string out = x < 0 ? "-" : "";
    if (e >= -3 && e < digits + 2) {
        if (e >= digits - 1) {
            out += ms + std::string(static_cast<size_t>(e - digits + 1), '0');
        } else if (e >= 0) {
            out += ms.substr(0, static_cast<size_t>(e + 1)) + "." + ms.substr(static_cast<size_t>(e + 1));
        } else {
            out += "0." + std::string(static_cast<size_t>(-e - 1), '0') + ms;
        }
        return out;
    }
    out += ms.substr(0, 1);
    if (ms.size() > 1) out += "." + ms.substr(1);
    out += "e" + std::to_string(e);
    return out;
}

double to_double(const Rat& x) { return x.get_d(); }

}  // namespace thueq
