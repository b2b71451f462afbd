#pragma once

#include "thueq/ball.hpp"
#include "thueq/rat.hpp"

#include <optional>
#include <string>
#include <vector>

namespace thueq::quadfield {

bool is_squarefree(long d);
// True when -d = 1 mod 4, i.e. omega = (1 + sqrt(-d))/2.
bool half_omega(long d);

// a + b*omega in the ring of integers of Q(sqrt(-d)).
struct QuadInt {
    long d = 1;
    Int a;
    Int b;

    QuadInt() = default;
    QuadInt(long d_, Int a_, Int b_ = 0);
    static QuadInt omega(long d) { return {d, 0, 1}; }

    bool is_zero() const { return a == 0 && b == 0; }
    bool is_rational() const { return b == 0; }
    QuadInt conj() const;
    Int norm() const;
    QuadInt normalized() const;  // Im > 0, or positive rational integer
    std::string str() const;

    friend bool operator==(const QuadInt& x, const QuadInt& y) {
        return x.d == y.d && x.a == y.a && x.b == y.b;
    }
};

QuadInt operator+(const QuadInt& x, const QuadInt& y);
QuadInt operator-(const QuadInt& x, const QuadInt& y);
QuadInt operator-(const QuadInt& x);
QuadInt operator*(const QuadInt& x, const QuadInt& y);
QuadInt pow(const QuadInt& x, unsigned e);

Rat abs_sq(const QuadInt& x);
std::optional<QuadInt> div_exact(const QuadInt& x, const QuadInt& y);
// Rational integer moved into field d.
QuadInt embed(const QuadInt& x, long d);
// Same element with rational integers mapped to d = 1, so that equal
// complex numbers compare equal.
QuadInt canonical(const QuadInt& x);
// Order: d, then abs_sq, then (a, b).
bool canonical_less(const QuadInt& x, const QuadInt& y);

std::vector<QuadInt> roots_of_unity(long d);
std::vector<QuadInt> enumerate_bounded(const Rat& m, bool normalize);

// a + b*omega with rational coordinates.
struct QuadRat {
    long d = 1;
    Rat a;
    Rat b;

    QuadRat() = default;
    QuadRat(long d_, Rat a_, Rat b_ = 0) : d(d_), a(std::move(a_)), b(std::move(b_)) {}
    QuadRat(const QuadInt& x) : d(x.d), a(x.a), b(x.b) {}
    // x + y*sqrt(-d)
    static QuadRat from_sqrt(long d, const Rat& x, const Rat& y);
    bool is_zero() const { return a == 0 && b == 0; }
    Rat norm() const;
};

QuadRat operator+(const QuadRat& x, const QuadRat& y);
QuadRat operator-(const QuadRat& x, const QuadRat& y);
QuadRat operator*(const QuadRat& x, const QuadRat& y);
QuadRat operator/(const QuadRat& x, const QuadRat& y);
bool is_integral(const QuadRat& q);
QuadInt to_int(const QuadRat& q);

ComplexBall to_ball(const QuadInt& x, long bits);

}  // namespace thueq::quadfield
