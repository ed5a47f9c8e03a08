#ifndef TSURF_QPOLY_HPP
#define TSURF_QPOLY_HPP

#include <string>
#include <vector>

#include "tsurf/rational.hpp"

namespace tsurf {

// Dense univariate polynomial over Q, coefficient of x^i at index i.
// The zero polynomial has an empty coefficient vector and degree -1.
class QPoly {
public:
    QPoly() = default;
    explicit QPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
    static QPoly constant(const Rational& q);
    static QPoly x();
    static QPoly monomial(int deg, const Rational& q);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    const Rational& operator[](size_t i) const { return c_[i]; }
    const std::vector<Rational>& coeffs() const { return c_; }
    const Rational& leading() const { return c_.back(); }

    QPoly operator+(const QPoly& o) const;
    QPoly operator-(const QPoly& o) const;
    QPoly operator-() const;
    QPoly operator*(const QPoly& o) const;
    QPoly operator*(const Rational& q) const;
    bool operator==(const QPoly& o) const { return c_ == o.c_; }

    // Division with remainder: *this = q * d + r, deg r < deg d.
    std::pair<QPoly, QPoly> divmod(const QPoly& d) const;
    QPoly mod(const QPoly& d) const { return divmod(d).second; }

    QPoly derivative() const;
    QPoly monic() const;

    Rational eval(const Rational& x) const;
    RationalInterval eval(const RationalInterval& x) const;
    double eval_double(double x) const;

    // Substitute another polynomial for x, optionally reducing mod `modulus`.
    QPoly compose(const QPoly& inner) const;
    QPoly compose_mod(const QPoly& inner, const QPoly& modulus) const;

    // Smallest positive integer D with D * (*this) integral.
    Integer common_denominator() const;
    bool is_integral() const;

    std::string to_string(const std::string& var = "x") const;

private:
    void trim();
    std::vector<Rational> c_;
};

QPoly gcd(const QPoly& a, const QPoly& b);                 // monic gcd
QPoly resultant_free_gcd(const QPoly& a, const QPoly& b);  // same, alias used in tests

// Extended Euclid: returns g (monic) with u*a + v*b = g.
struct ExtGcd {
    QPoly g, u, v;
};
ExtGcd ext_gcd(const QPoly& a, const QPoly& b);

Rational resultant(const QPoly& a, const QPoly& b);
Rational discriminant(const QPoly& a);

bool is_squarefree(const QPoly& a);

// n-th cyclotomic polynomial (integer coefficients).
QPoly cyclotomic(unsigned n);

// Minimal polynomial of 2*cos(pi/N) over Q: the degree-phi(2N)/2 fold of
// the palindromic Phi_{2N} via z^d * psi(z + 1/z) = Phi_{2N}(z).
QPoly min_poly_two_cos_pi_over(unsigned N);

// 2*cos(k*t) = E_k(2*cos t); E_0 = 2, E_1 = x, E_{k+1} = x*E_k - E_{k-1}.
QPoly cos_multiple_poly(unsigned k);

// sin(k*t)/sin(t) = S_k(2*cos t); S_0 = 0, S_1 = 1, S_{k+1} = x*S_k - S_{k-1}.
QPoly sin_ratio_poly(unsigned k);

unsigned euler_phi(unsigned n);

} // namespace tsurf

#endif
