#pragma once
#include <gmpxx.h>
#include <string>
#include "quadcoh/errors.hpp"

namespace quadcoh {

/* Gaussian rational a + b*i with arbitrary-precision components.  Purely real
 * values (b = 0) are the common case, so the ring operations short-circuit on
 * zero imaginary parts.  mpq_class keeps fractions reduced with positive
 * denominator, which makes equality and printing canonical for free. */
struct Scalar {
    mpq_class re, im;

    Scalar() : re(0), im(0) {}
    Scalar(long v) : re(v), im(0) {}
    Scalar(const mpq_class& r) : re(r), im(0) {}
    Scalar(mpq_class r, mpq_class i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
    bool is_real() const { return sgn(im) == 0; }

    Scalar conj() const { return {re, -im}; }
    mpq_class norm() const { return re * re + im * im; }

    Scalar operator-() const { return {-re, -im}; }
    Scalar operator+(const Scalar& o) const { return {re + o.re, im + o.im}; }
    Scalar operator-(const Scalar& o) const { return {re - o.re, im - o.im}; }

    Scalar operator*(const Scalar& o) const {
        if (sgn(im) == 0) {
            if (sgn(o.im) == 0) return {re * o.re, mpq_class(0)};
            return {re * o.re, re * o.im};
        }
        if (sgn(o.im) == 0) return {re * o.re, im * o.re};
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }

    Scalar inv() const {
        if (is_zero()) throw ZeroDivisor();
        if (sgn(im) == 0) return {1 / re, mpq_class(0)};
        mpq_class n = norm();
        return {re / n, -im / n};
    }

    Scalar operator/(const Scalar& o) const {
        if (o.is_zero()) throw ZeroDivisor();
        if (sgn(o.im) == 0) {
            if (sgn(im) == 0) return {re / o.re, mpq_class(0)};
            return {re / o.re, im / o.re};
        }
        return *this * o.inv();
    }

    Scalar& operator+=(const Scalar& o) { re += o.re; im += o.im; return *this; }
    Scalar& operator-=(const Scalar& o) { re -= o.re; im -= o.im; return *this; }
    Scalar& operator*=(const Scalar& o) { *this = *this * o; return *this; }

    bool operator==(const Scalar& o) const { return re == o.re && im == o.im; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }
    // deterministic total order so Scalar can key ordered containers
    bool operator<(const Scalar& o) const {
        int c = cmp(re, o.re);
        if (c != 0) return c < 0;
        return cmp(im, o.im) < 0;
    }
};

inline Scalar rat(long num, long den) {
    if (den == 0) throw ZeroDivisor();
    mpq_class q(num, den);
    q.canonicalize();
    return Scalar(q);
}

inline Scalar imag_unit() { return Scalar(mpq_class(0), mpq_class(1)); }

std::string to_string(const Scalar& s);
// accepts "p/q" or "p/q+r/s i" (the only '+' is the component separator)
Scalar parse_scalar(const std::string& text);

} // namespace quadcoh
