#include "thueq/ball.hpp"

#include "thueq/errors.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

namespace thueq {

namespace {

// Nearest point of the grid 2^(e - bits), e the binary exponent of v.
Rat round_rel(const Rat& v, long bits, Rat& err) {
    if (v == 0) return v;
    long e = static_cast<long>(mpz_sizeinbase(v.get_num_mpz_t(), 2)) -
             static_cast<long>(mpz_sizeinbase(v.get_den_mpz_t(), 2));
    long g = e - bits;
    Rat unit = g >= 0 ? Rat(Int(1) << static_cast<mp_bitcnt_t>(g))
                      : make_rat(1, Int(1) << static_cast<mp_bitcnt_t>(-g));
    Rat q = v / unit;
    if (q.get_den() == 1) return v;
    Rat out = Rat(floor(q + make_rat(1, 2))) * unit;
    err += abs(v - out);
    return out;
}

Rat round_rel_up(const Rat& v, long bits) {
    if (v == 0) return v;
    long e = static_cast<long>(mpz_sizeinbase(v.get_num_mpz_t(), 2)) -
             static_cast<long>(mpz_sizeinbase(v.get_den_mpz_t(), 2));
    long g = e - bits;
    Rat unit = g >= 0 ? Rat(Int(1) << static_cast<mp_bitcnt_t>(g))
                      : make_rat(1, Int(1) << static_cast<mp_bitcnt_t>(-g));
    Rat q = v / unit;
    return Rat(ceil(q)) * unit;
}

ComplexBall normalized(Rat re, Rat im, Rat rad, long bits) {
    ComplexBall b;
    b.bits = bits;
    Rat err = rad;
    b.re = round_rel(re, bits, err);
    b.im = round_rel(im, bits, err);
    b.rad = round_rel_up(err, 64);
    return b;
}

GaussRat round_mid(const GaussRat& z, long bits) {
    Rat err = 0;
    return {round_rel(z.re, bits, err), round_rel(z.im, bits, err)};
}

// Rigorous lower bound for pi.
const Rat& pi_lower() {
    static const Rat v = parse_rat("3.14159265358979");
    return v;
}

}  // namespace

ComplexBall::ComplexBall(const GaussRat& mid, Rat radius, long prec) {
    if (radius < 0) throw DomainError("negative ball radius");
    *this = normalized(mid.re, mid.im, std::move(radius), prec);
}

RatInterval ComplexBall::abs_bounds() const {
    GaussRat m = mid();
    Rat lo = abs_lower(m, bits) - rad;
    if (lo < 0) lo = 0;
    return {lo, abs_upper(m, bits) + rad};
}

bool ComplexBall::contains_zero() const { return re * re + im * im <= rad * rad; }

bool ComplexBall::contains(const GaussRat& z) const {
    Rat dr = z.re - re, di = z.im - im;
    return dr * dr + di * di <= rad * rad;
}

ComplexBall ComplexBall::conj() const {
    ComplexBall b = *this;
    b.im = -b.im;
    return b;
}

ComplexBall operator+(const ComplexBall& a, const ComplexBall& b) {
    return normalized(a.re + b.re, a.im + b.im, a.rad + b.rad, std::max(a.bits, b.bits));
}

ComplexBall operator-(const ComplexBall& a, const ComplexBall& b) {
    return normalized(a.re - b.re, a.im - b.im, a.rad + b.rad, std::max(a.bits, b.bits));
}

ComplexBall operator-(const ComplexBall& a) {
    ComplexBall b = a;
    b.re = -b.re;
    b.im = -b.im;
    return b;
}

ComplexBall operator*(const ComplexBall& a, const ComplexBall& b) {
    long bits = std::max(a.bits, b.bits);
    GaussRat m = a.mid() * b.mid();
    Rat rad = 0;
    if (a.rad != 0 || b.rad != 0)
        rad = abs_upper(a.mid(), 64) * b.rad + abs_upper(b.mid(), 64) * a.rad + a.rad * b.rad;
    return normalized(m.re, m.im, rad, bits);
}

ComplexBall operator/(const ComplexBall& a, const ComplexBall& b) {
    long bits = std::max(a.bits, b.bits);
    Rat mlo = abs_lower(b.mid(), bits + 8);
    if (mlo <= b.rad) throw Indeterminate("divisor ball contains zero");
    GaussRat inv = GaussRat(1) / b.mid();
    Rat rad = b.rad == 0 ? Rat(0) : Rat(b.rad / (mlo * (mlo - b.rad)));
    ComplexBall recip = normalized(inv.re, inv.im, rad, bits);
    return a * recip;
}

ComplexBall nth_root(const ComplexBall& w, unsigned n) {
    if (n == 0) throw DomainError("zeroth root");
    if (n == 1) return w;
    if (w.contains_zero()) throw Indeterminate("root of a ball containing zero");
    std::complex<double> g = std::pow(std::complex<double>(to_double(w.re), to_double(w.im)), 1.0 / n);
    if (!std::isfinite(g.real()) || !std::isfinite(g.imag())) throw Indeterminate("root guess out of double range");
    long bits = w.bits;
    GaussRat r = round_mid({Rat(g.real()), Rat(g.imag())}, bits);
    GaussRat m = w.mid();
    for (int it = 0; it < 200; ++it) {
        GaussRat step = (pow(r, n) - m) / (GaussRat(Rat(n)) * pow(r, n - 1));
        r = round_mid(r - step, bits);
        Rat lim = make_rat(1, Int(1) << static_cast<mp_bitcnt_t>(2 * bits));
        if (step.norm() <= lim * (r.norm() + 1)) break;
    }
    // exactly one root of (r+z)^n - w' in |z| <= rho for all w' in the ball
    Rat h0 = abs_upper(pow(r, n) - m, bits) + w.rad;
    Rat rlo = abs_lower(r, bits), rhi = abs_upper(r, bits);
    Rat lin = Rat(n) * pow(rlo, static_cast<long>(n - 1));
    Rat rho = 2 * h0 / lin;
    if (rho == 0) rho = make_rat(1, Int(1) << static_cast<mp_bitcnt_t>(bits));
    rho = round_rel_up(rho, 32);
    bool ok = false;
    for (int tries = 0; tries < 40 && !ok; ++tries, rho *= 2) {
        Rat rest = h0;
        Int binom = n;
        for (unsigned k = 2; k <= n; ++k) {
            binom = binom * (n - k + 1) / k;
            rest += Rat(binom) * pow(rhi, static_cast<long>(n - k)) * pow(rho, static_cast<long>(k));
        }
        if (rest < lin * rho) {
            ok = true;
            break;
        }
    }
    if (!ok) throw Indeterminate("nth_root certificate failed");
    // principal branch: disc strictly inside |arg| < pi/n
    bool inside;
    if (n == 2) {
        inside = r.re > rho;
    } else {
        Rat x = pi_lower() / n;
        Rat s = x - x * x * x / 6;
        Rat c = 1 - x * x / 2 + x * x * x * x / 24;
        inside = r.re > 0 && r.re * s - abs(r.im) * c > rho;
    }
    if (!inside) throw Indeterminate("principal branch not separated at this precision");
    ComplexBall out;
    out.re = r.re;
    out.im = r.im;
    out.rad = rho;
    out.bits = bits;
    return out;
}

ComplexBall eval(const BallPoly& p, const ComplexBall& z) {
    if (p.empty()) return ComplexBall::exact(0, z.bits);
    ComplexBall acc = p.back();
    for (size_t i = p.size() - 1; i-- > 0;) acc = acc * z + p[i];
    return acc;
}

BallPoly taylor_shift(const BallPoly& p, const ComplexBall& center) {
    BallPoly q = p;
    size_t n = q.size();
    for (size_t k = 0; k + 1 < n; ++k)
        for (size_t j = n - 1; j > k; --j) q[j - 1] = q[j - 1] + q[j] * center;
    return q;
}

std::optional<ComplexBall> isolate_root(const BallPoly& p, const GaussRat& guess, long bits) {
    if (p.size() < 2) return std::nullopt;
    std::vector<GaussRat> mid, dmid;
    for (const auto& c : p) mid.push_back(c.mid());
    for (size_t j = 1; j < mid.size(); ++j) dmid.push_back(mid[j] * GaussRat(Rat(static_cast<long>(j))));
    auto horner = [](const std::vector<GaussRat>& c, const GaussRat& z) {
        GaussRat acc = c.back();
        for (size_t i = c.size() - 1; i-- > 0;) acc = acc * z + c[i];
        return acc;
    };
    GaussRat r = round_mid(guess, bits);
    Rat lim = make_rat(1, Int(1) << static_cast<mp_bitcnt_t>(2 * bits));
    for (int it = 0; it < 400; ++it) {
        GaussRat d = horner(dmid, r);
        if (d.is_zero()) return std::nullopt;
        GaussRat step = horner(mid, r) / d;
        r = round_mid(r - step, bits);
        if (step.norm() <= lim * (r.norm() + 1)) break;
    }
    BallPoly h = taylor_shift(p, ComplexBall::exact(r, bits));
    Rat h0 = h[0].abs_bounds().hi;
    Rat h1 = h[1].abs_bounds().lo;
    if (h1 <= 0) return std::nullopt;
    std::vector<Rat> hk;
    for (size_t k = 2; k < h.size(); ++k) hk.push_back(h[k].abs_bounds().hi);
    Rat rho = 2 * h0 / h1;
    Rat floor_rho = make_rat(1, Int(1) << static_cast<mp_bitcnt_t>(bits));
    if (rho < floor_rho) rho = floor_rho;
    rho = round_rel_up(rho, 32);
    for (int tries = 0; tries < 60; ++tries, rho *= 2) {
        Rat rest = h0;
        Rat rp = rho * rho;
        for (const auto& c : hk) {
            rest += c * rp;
            rp *= rho;
        }
        if (rest < h1 * rho) {
            ComplexBall out;
            out.re = r.re;
            out.im = r.im;
            out.rad = rho;
            out.bits = bits;
            return out;
        }
    }
    return std::nullopt;
}

}  // namespace thueq
