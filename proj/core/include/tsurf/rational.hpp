#ifndef TSURF_RATIONAL_HPP
#define TSURF_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

#include "tsurf/errors.hpp"

namespace tsurf {

// Arbitrary-precision rational; all arithmetic in the library is exact.
using Rational = mpq_class;
using Integer = mpz_class;

inline int sgn(const Rational& q) { return ::sgn(q); }
inline int sgn(const Integer& z) { return ::sgn(z); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

// Canonical "p/q" (or "p" when the denominator is 1).
std::string rational_to_string(const Rational& q);

// Parses "p" or "p/q", optionally signed. Throws Error(Parse) otherwise.
Rational rational_from_string(const std::string& s);

// Closed rational interval; the basic tool for exact sign determination.
struct RationalInterval {
    Rational lo;
    Rational hi;

    RationalInterval() = default;
    RationalInterval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {}

    Rational width() const { return hi - lo; }
    Rational mid() const { return (lo + hi) / 2; }
    bool contains_zero() const { return sgn(lo) <= 0 && sgn(hi) >= 0; }
    // Sign if determined, 0 if the interval straddles zero.
    int definite_sign() const {
        if (sgn(lo) > 0) return 1;
        if (sgn(hi) < 0) return -1;
        return 0;
    }

    RationalInterval operator-() const { return {-hi, -lo}; }
    RationalInterval operator+(const RationalInterval& o) const { return {lo + o.lo, hi + o.hi}; }
    RationalInterval operator-(const RationalInterval& o) const { return {lo - o.hi, hi - o.lo}; }
    RationalInterval operator*(const RationalInterval& o) const {
        Rational a = lo * o.lo, b = lo * o.hi, c = hi * o.lo, d = hi * o.hi;
        Rational mn = a, mx = a;
        for (const Rational* t : {&b, &c, &d}) {
            if (*t < mn) mn = *t;
            if (*t > mx) mx = *t;
        }
        return {mn, mx};
    }
    RationalInterval operator*(const Rational& q) const {
        if (sgn(q) >= 0) return {lo * q, hi * q};
        return {hi * q, lo * q};
    }
    RationalInterval operator+(const Rational& q) const { return {lo + q, hi + q}; }
};

} // namespace tsurf

#endif
