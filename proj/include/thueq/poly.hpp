#pragma once

#include "thueq/gaussrat.hpp"

#include <string>
#include <vector>

namespace thueq {

inline bool is_zero(const Rat& x) { return x == 0; }
inline bool is_zero(const GaussRat& x) { return x.is_zero(); }

template <class T>
class Poly;
template <class T>
bool is_zero(const Poly<T>& p);

// Dense univariate polynomial, coefficients low to high, no trailing zeros.
template <class T>
class Poly {
public:
    Poly() = default;
    Poly(T c) {
        if (!thueq::is_zero(c)) c_.push_back(std::move(c));
    }
    explicit Poly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly monomial(T c, size_t k) {
        std::vector<T> v(k + 1);
        v[k] = std::move(c);
        return Poly(std::move(v));
    }
    static Poly var() { return monomial(T(1), 1); }

    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    size_t size() const { return c_.size(); }
    const std::vector<T>& coeffs() const { return c_; }
    T coeff(size_t k) const { return k < c_.size() ? c_[k] : T(); }
    const T& lead() const { return c_.back(); }

    void set(size_t k, T v) {
        if (k >= c_.size()) c_.resize(k + 1);
        c_[k] = std::move(v);
        trim();
    }

    Poly& operator+=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator-(const Poly& a) { return Poly() - a; }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<T> r(a.c_.size() + b.c_.size() - 1);
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        return Poly(std::move(r));
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    Poly scaled(const T& k) const {
        std::vector<T> r = c_;
        for (auto& x : r) x *= k;
        return Poly(std::move(r));
    }

    Poly derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<T> r(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * T(static_cast<long>(i));
        return Poly(std::move(r));
    }

    template <class V>
    V eval(const V& x) const {
        V acc{};
        for (size_t i = c_.size(); i-- > 0;) acc = acc * x + V(c_[i]);
        return acc;
    }

    // Keep only terms of degree < n.
    Poly truncated(size_t n) const {
        std::vector<T> r(c_.begin(), c_.begin() + static_cast<long>(std::min(n, c_.size())));
        return Poly(std::move(r));
    }

    // Lowest index with nonzero coefficient; -1 for the zero polynomial.
    long valuation() const {
        for (size_t i = 0; i < c_.size(); ++i)
            if (!thueq::is_zero(c_[i])) return static_cast<long>(i);
        return -1;
    }

private:
    void trim() {
        while (!c_.empty() && thueq::is_zero(c_.back())) c_.pop_back();
    }
    std::vector<T> c_;
};

template <class T>
bool is_zero(const Poly<T>& p) {
    return p.is_zero();
}

template <class T>
Poly<T> pow(const Poly<T>& p, unsigned e) {
    Poly<T> r(T(1)), b = p;
    while (e) {
        if (e & 1) r *= b;
        e >>= 1;
        if (e) b *= b;
    }
    return r;
}

using QPoly = Poly<Rat>;
using GPoly = Poly<GaussRat>;
// Polynomials in X whose coefficients are polynomials in t.
using BiPoly = Poly<GPoly>;

std::string to_string(const GPoly& p, const std::string& var);

}  // namespace thueq
