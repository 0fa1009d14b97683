#pragma once
// Exact arithmetic over the Gaussian integers Z[i] and over 2x2 determinant-1
// matrices with Z[i] entries taken modulo +-I.  These matrices are the group
// elements of PSL2(Z[i]) acting on upper half-space.
//
// Entries are 64-bit integers with overflow checks: enumeration bounds at the
// scales this project runs keep every intermediate far below 2^63, and if an
// input ever violates that, the arithmetic aborts with a diagnostic rather
// than wrapping silently.

#include <cstdint>
#include <cstdlib>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>

namespace sector {

[[noreturn]] inline void overflow_abort(const char* what) {
    throw std::overflow_error(std::string("gaussian_int: 64-bit overflow in ") + what);
}

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) overflow_abort("add");
    return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) overflow_abort("sub");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) overflow_abort("mul");
    return r;
}

struct GaussInt {
    std::int64_t re = 0;
    std::int64_t im = 0;

    constexpr GaussInt() = default;
    constexpr GaussInt(std::int64_t r, std::int64_t i = 0) : re(r), im(i) {}

    bool is_zero() const { return re == 0 && im == 0; }
    // units of Z[i]: 1, -1, i, -i
    bool is_unit() const { return norm() == 1; }

    std::int64_t norm() const {
        return checked_add(checked_mul(re, re), checked_mul(im, im));
    }

    GaussInt conj() const { return {re, -im}; }
    GaussInt operator-() const { return {-re, -im}; }

    GaussInt operator+(const GaussInt& o) const {
        return {checked_add(re, o.re), checked_add(im, o.im)};
    }
    GaussInt operator-(const GaussInt& o) const {
        return {checked_sub(re, o.re), checked_sub(im, o.im)};
    }
    GaussInt operator*(const GaussInt& o) const {
        return {checked_sub(checked_mul(re, o.re), checked_mul(im, o.im)),
                checked_add(checked_mul(re, o.im), checked_mul(im, o.re))};
    }

    GaussInt times_i() const { return {-im, re}; }

    bool operator==(const GaussInt& o) const { return re == o.re && im == o.im; }
    bool operator!=(const GaussInt& o) const { return !(*this == o); }

    // associate u*z with u a unit such that the result lands in the first
    // quadrant (re > 0, im >= 0); requires z != 0
    GaussInt first_quadrant() const {
        GaussInt z = *this;
        for (int k = 0; k < 4; ++k) {
            if (z.re > 0 && z.im >= 0) return z;
            z = z.times_i();
        }
        throw std::domain_error("first_quadrant: zero has no unit normalization");
    }

    std::string str() const {
        return "(" + std::to_string(re) + (im >= 0 ? "+" : "") + std::to_string(im) + "i)";
    }
};

inline std::ostream& operator<<(std::ostream& os, const GaussInt& z) { return os << z.str(); }

// gcd by Euclidean division with nearest-integer quotients (ties round toward
// -infinity componentwise); result normalized to the first-quadrant associate.
// Throws std::domain_error if both inputs are zero.
GaussInt ggcd(GaussInt a, GaussInt b);

// Determinant-1 matrix over Z[i], stored as the canonical representative of
// {M, -M}: the lexicographically smaller of the two on
// (re a, im a, re b, im b, re c, im c, re d, im d).
struct GMatrix {
    GaussInt a, b, c, d;

    GMatrix() : GMatrix(GaussInt(1), GaussInt(0), GaussInt(0), GaussInt(1)) {}

    GMatrix(GaussInt a_, GaussInt b_, GaussInt c_, GaussInt d_) : a(a_), b(b_), c(c_), d(d_) {
        GaussInt det = a * d - b * c;
        if (!(det.re == 1 && det.im == 0))
            throw std::invalid_argument("GMatrix: determinant is not 1");
        canonicalize();
    }

    static GMatrix identity() { return GMatrix(); }

    GMatrix operator*(const GMatrix& o) const {
        return GMatrix(a * o.a + b * o.c, a * o.b + b * o.d,
                       c * o.a + d * o.c, c * o.b + d * o.d);
    }

    GMatrix inverse() const { return GMatrix(d, -b, -c, a); }

    bool operator==(const GMatrix& o) const {
        return a == o.a && b == o.b && c == o.c && d == o.d;
    }
    bool operator!=(const GMatrix& o) const { return !(*this == o); }

    std::size_t hash() const {
        std::size_t h = 0xcbf29ce484222325ull;
        auto mix = [&h](std::int64_t v) {
            h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        };
        mix(a.re); mix(a.im); mix(b.re); mix(b.im);
        mix(c.re); mix(c.im); mix(d.re); mix(d.im);
        return h;
    }

    std::string str() const {
        return "[" + a.str() + " " + b.str() + "; " + c.str() + " " + d.str() + "]";
    }

  private:
    void canonicalize() {
        const std::int64_t mine[8]  = {a.re, a.im, b.re, b.im, c.re, c.im, d.re, d.im};
        for (int k = 0; k < 8; ++k) {
            if (mine[k] < -mine[k]) return;       // M is smaller
            if (mine[k] > -mine[k]) break;        // -M is smaller
        }
        a = -a; b = -b; c = -c; d = -d;
    }
};

inline std::ostream& operator<<(std::ostream& os, const GMatrix& m) { return os << m.str(); }

struct GMatrixHash {
    std::size_t operator()(const GMatrix& m) const { return m.hash(); }
};

// Completes a coprime row (c, d) to a determinant-1 matrix with that bottom
// row, via the Bezout certificate of the extended Euclidean algorithm.
// Deterministic for fixed input; throws if the row is not unimodular.
GMatrix complete_row(const GaussInt& c, const GaussInt& d);
// Same computation, nullopt-style: returns false (and leaves `out` untouched)
// when gcd(c, d) is not a unit.
bool try_complete_row(const GaussInt& c, const GaussInt& d, GMatrix& out);

// Membership in H = stab(plane) /\ Gamma: all entries real, or all entries
// purely imaginary (the iota-twisted real matrices).
bool is_in_H(const GMatrix& g);

// Left cosets H\Gamma: true iff g1 * g2^{-1} lies in H.
bool same_coset(const GMatrix& g1, const GMatrix& g2);

}  // namespace sector
