#pragma once
// shared helpers for the unit tests
#include <random>

#include "sector/gaussian_int.hpp"
#include "sector/geometry.hpp"

namespace sector::testutil {

inline const GMatrix& gen_T() {
    static GMatrix m(GaussInt(1), GaussInt(1), GaussInt(0), GaussInt(1));
    return m;
}
inline const GMatrix& gen_Ti() {
    static GMatrix m(GaussInt(1), GaussInt(0, 1), GaussInt(0), GaussInt(1));
    return m;
}
inline const GMatrix& gen_S() {
    static GMatrix m(GaussInt(0), GaussInt(-1), GaussInt(1), GaussInt(0));
    return m;
}
inline const GMatrix& gen_iota() {
    static GMatrix m(GaussInt(0, 1), GaussInt(0), GaussInt(0), GaussInt(0, -1));
    return m;
}

// random word in the group generators (T, T_i, S, iota and inverses)
inline GMatrix random_gamma(std::mt19937_64& rng, int len) {
    GMatrix g = GMatrix::identity();
    for (int k = 0; k < len; ++k) {
        switch (rng() % 6) {
            case 0: g = g * gen_T(); break;
            case 1: g = g * gen_T().inverse(); break;
            case 2: g = g * gen_Ti(); break;
            case 3: g = g * gen_Ti().inverse(); break;
            case 4: g = g * gen_S(); break;
            default: g = g * gen_iota(); break;
        }
    }
    return g;
}

// random element of H: word in the real generators, with an optional iota
inline GMatrix random_h(std::mt19937_64& rng, int len) {
    GMatrix h = GMatrix::identity();
    for (int k = 0; k < len; ++k) {
        switch (rng() % 3) {
            case 0: h = h * gen_T(); break;
            case 1: h = h * gen_T().inverse(); break;
            default: h = h * gen_S(); break;
        }
    }
    if (rng() % 2) h = h * gen_iota();
    return h;
}

inline Point random_point(std::mt19937_64& rng, double x_span = 0.45, double y_lo = 0.8,
                          double y_hi = 1.25) {
    std::uniform_real_distribution<double> ux(-x_span, x_span);
    std::uniform_real_distribution<double> uy(y_lo, y_hi);
    return {ux(rng), ux(rng), uy(rng)};
}

inline std::int64_t max_entry_norm(const GMatrix& g) {
    return std::max({g.a.norm(), g.b.norm(), g.c.norm(), g.d.norm()});
}

}  // namespace sector::testutil
