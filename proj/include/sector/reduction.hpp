#pragma once
// Reduction into the fundamental domain of H acting on the plane P.
//
// H restricted to P acts as the extended modular group: the real-entry
// matrices give PSL2(Z) on the upper half-plane coordinates (x, t) of P, and
// the element iota = (i 0; 0 -i) acts as the reflection x -> -x.  A
// fundamental domain is the standard modular domain folded by that
// reflection:
//
//   S = { 0 <= x <= 1/2,  x^2 + t^2 >= 1 },   hyperbolic area pi/6.
//
// reduce_plane sends any point of P into S by translations and inversions
// followed by at most one reflection, returning the exact H element that does
// it.  coset_key reduces the projection of g*p and quantizes the reduced
// coordinates into a hashable canonical form for dedup of H\Gamma cosets.

#include <cstdint>

#include "sector/gaussian_int.hpp"
#include "sector/geometry.hpp"

namespace sector {

struct PlanePoint {
    double x = 0.0;
    double t = 1.0;  // t = e^u > 0
};

struct ReduceResult {
    PlanePoint reduced;
    GMatrix word;  // element of H with word * q = reduced (plane action)
};

// Reduce q into S.  Throws after 1e5 steps (never expected) and on t <= 0.
ReduceResult reduce_plane(const PlanePoint& q);

// Plane action of an H element on (x, t); asserts the matrix is in H.
PlanePoint plane_act(const GMatrix& h, const PlanePoint& q);

// key granularity for hashing reduced coordinates
inline constexpr double kKeyQuantum = 1e-7;

struct CosetKey {
    double x_r = 0.0;
    double u_r = 0.0;
    double v_abs = 0.0;
    std::int64_t qx = 0, qu = 0, qv = 0;  // quantized at kKeyQuantum

    bool operator==(const CosetKey& o) const {
        return qx == o.qx && qu == o.qu && qv == o.qv;
    }
    bool operator!=(const CosetKey& o) const { return !(*this == o); }
};

struct CosetKeyHash {
    std::size_t operator()(const CosetKey& k) const {
        std::size_t h = 0x9e3779b97f4a7c15ull;
        auto mix = [&h](std::int64_t v) {
            h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        };
        mix(k.qx); mix(k.qu); mix(k.qv);
        return h;
    }
};

// Key plus the exact reduced coset representative it was computed from.  The
// key coordinates are recomputed from reduced_rep * p, so representatives of
// the same coset at a generic base point produce bit-identical keys.
struct KeyedCoset {
    CosetKey key;
    GMatrix reduced_rep;
};

KeyedCoset coset_key_with_rep(const GMatrix& g, const Point& p);
CosetKey coset_key(const GMatrix& g, const Point& p);

struct AreaResult {
    double value = 0.0;
    double error_estimate = 0.0;
};

// Hyperbolic area of S (dt dx / t^2 over the reduced domain), composite
// quadrature with quadrature_n panels; converges to pi/6.
AreaResult area_S(int quadrature_n);

// Area of the unfolded modular domain |x| <= 1/2, x^2 + t^2 >= 1 (-> pi/3).
AreaResult area_modular_domain(int quadrature_n);

}  // namespace sector
