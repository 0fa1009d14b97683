#include "sector/reduction.hpp"

#include <cmath>
#include <stdexcept>

namespace sector {

namespace {

const GMatrix kInversion(GaussInt(0), GaussInt(-1), GaussInt(1), GaussInt(0));
const GMatrix kReflection(GaussInt(0, 1), GaussInt(0), GaussInt(0), GaussInt(0, -1));

GMatrix translation(std::int64_t n) {
    return GMatrix(GaussInt(1), GaussInt(n), GaussInt(0), GaussInt(1));
}

}  // namespace

PlanePoint plane_act(const GMatrix& h, const PlanePoint& q) {
    if (!is_in_H(h)) throw std::invalid_argument("plane_act: matrix not in H");
    Point img = moebius_act(h, Point{q.x, 0.0, q.t});
    // H preserves P, so the image must sit on the plane
    if (std::abs(img.x2) > 1e-9 * (1.0 + std::abs(img.y)))
        throw std::logic_error("plane_act: image left the plane");
    return {img.x1, img.y};
}

ReduceResult reduce_plane(const PlanePoint& q0) {
    if (!(q0.t > 0.0)) throw std::domain_error("reduce_plane: t <= 0");
    double x = q0.x, t = q0.t;
    GMatrix word = GMatrix::identity();

    const int kMaxSteps = 100000;
    int step = 0;
    for (;; ++step) {
        if (step >= kMaxSteps)
            throw std::runtime_error("reduce_plane: reduction did not terminate");
        if (std::abs(x) > 0.5) {
            auto n = static_cast<std::int64_t>(std::llround(x));
            x -= static_cast<double>(n);
            word = translation(-n) * word;
            continue;
        }
        double r2 = x * x + t * t;
        if (r2 < 1.0 - 1e-14) {
            // z -> -1/z on the upper half-plane
            x = -x / r2;
            t = t / r2;
            word = kInversion * word;
            continue;
        }
        break;
    }
    if (x < 0.0) {  // fold by the reflection; also fixes the x = -1/2 boundary
        x = -x;
        word = kReflection * word;
    }
    return {{x, t}, word};
}

KeyedCoset coset_key_with_rep(const GMatrix& g, const Point& p) {
    Point q = moebius_act(g, p);
    PlanePoint proj{q.x1, std::sqrt(q.x2 * q.x2 + q.y * q.y)};
    ReduceResult red = reduce_plane(proj);

    // The key is recomputed from the exact reduced representative so that all
    // representatives of a coset map to the same floating-point values.
    GMatrix rep = red.word * g;
    SectorCoords s = to_sector(moebius_act(rep, p));

    CosetKey key;
    key.x_r = s.x;
    key.u_r = s.u;
    key.v_abs = std::abs(s.v);
    key.qx = std::llround(key.x_r / kKeyQuantum);
    key.qu = std::llround(key.u_r / kKeyQuantum);
    key.qv = std::llround(key.v_abs / kKeyQuantum);
    return {key, rep};
}

CosetKey coset_key(const GMatrix& g, const Point& p) {
    return coset_key_with_rep(g, p).key;
}

namespace {

// area = int dx over the x-range of 1/t_min(x), t_min(x) = sqrt(1 - x^2);
// the inner dt/t^2 integral is elementary.  Composite trapezoid keeps the
// error estimate shrinking cleanly as n doubles.
double trapezoid_area(double x_lo, double x_hi, int n) {
    auto f = [](double x) { return 1.0 / std::sqrt(1.0 - x * x); };
    double h = (x_hi - x_lo) / n;
    double sum = 0.5 * (f(x_lo) + f(x_hi));
    for (int k = 1; k < n; ++k) sum += f(x_lo + k * h);
    return sum * h;
}

AreaResult area_between(double x_lo, double x_hi, int n) {
    if (n < 100) throw std::invalid_argument("area: quadrature_n must be >= 100");
    double coarse = trapezoid_area(x_lo, x_hi, n / 2);
    double fine = trapezoid_area(x_lo, x_hi, n);
    // trapezoid halving: error ~ (fine - coarse) / 3
    return {fine, std::abs(fine - coarse) / 3.0};
}

}  // namespace

AreaResult area_S(int quadrature_n) { return area_between(0.0, 0.5, quadrature_n); }

AreaResult area_modular_domain(int quadrature_n) {
    return area_between(-0.5, 0.5, quadrature_n);
}

}  // namespace sector
