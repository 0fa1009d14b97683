#include "sector/gaussian_int.hpp"

namespace sector {

namespace {

// floor division for int64, denominator > 0
std::int64_t floor_div(std::int64_t num, std::int64_t den) {
    std::int64_t q = num / den;
    if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
    return q;
}

// nearest integer to num/den (den > 0), ties toward -infinity:
// round(x) = ceil(x - 1/2) = floor((2*num + den - 1) / (2*den))
std::int64_t round_half_down(std::int64_t num, std::int64_t den) {
    return floor_div(checked_sub(checked_add(checked_mul(2, num), den), 1),
                     checked_mul(2, den));
}

// nearest-integer quotient of a/b in Z[i], b != 0
GaussInt nearest_quotient(const GaussInt& a, const GaussInt& b) {
    GaussInt num = a * b.conj();
    std::int64_t den = b.norm();
    return {round_half_down(num.re, den), round_half_down(num.im, den)};
}

}  // namespace

GaussInt ggcd(GaussInt a, GaussInt b) {
    if (a.is_zero() && b.is_zero())
        throw std::domain_error("ggcd: gcd(0, 0) is undefined");
    while (!b.is_zero()) {
        GaussInt q = nearest_quotient(a, b);
        GaussInt r = a - q * b;
        a = b;
        b = r;
    }
    return a.first_quadrant();
}

bool try_complete_row(const GaussInt& c, const GaussInt& d, GMatrix& out) {
    if (c.is_zero() && d.is_zero()) return false;
    // extended Euclid on (c, d): g = x*c + y*d
    GaussInt r0 = c, r1 = d;
    GaussInt x0(1), x1(0), y0(0), y1(1);
    while (!r1.is_zero()) {
        GaussInt q = nearest_quotient(r0, r1);
        GaussInt r2 = r0 - q * r1;
        GaussInt x2 = x0 - q * x1;
        GaussInt y2 = y0 - q * y1;
        r0 = r1; r1 = r2;
        x0 = x1; x1 = x2;
        y0 = y1; y1 = y2;
    }
    if (!r0.is_unit()) return false;
    GaussInt g_inv = r0.conj();  // inverse of a unit
    // top row (y*g^{-1}, -x*g^{-1}) gives det = g^{-1}(y d + x c) = 1
    out = GMatrix(y0 * g_inv, -(x0 * g_inv), c, d);
    return true;
}

GMatrix complete_row(const GaussInt& c, const GaussInt& d) {
    GMatrix m;
    if (!try_complete_row(c, d, m))
        throw std::invalid_argument("complete_row: row (" + c.str() + ", " + d.str() +
                                    ") not unimodular");
    return m;
}

bool is_in_H(const GMatrix& g) {
    bool all_real = g.a.im == 0 && g.b.im == 0 && g.c.im == 0 && g.d.im == 0;
    bool all_imag = g.a.re == 0 && g.b.re == 0 && g.c.re == 0 && g.d.re == 0;
    return all_real || all_imag;
}

bool same_coset(const GMatrix& g1, const GMatrix& g2) {
    return is_in_H(g1 * g2.inverse());
}

}  // namespace sector
