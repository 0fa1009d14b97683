#include "sector/geometry.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

namespace sector {

namespace {
constexpr double kHalfPi = std::numbers::pi / 2.0;
}

SectorCoords to_sector(const Point& p) {
    if (!(p.y > 0.0)) throw std::domain_error("to_sector: point has y <= 0");
    SectorCoords s;
    s.x = p.x1;
    s.u = 0.5 * std::log(p.x2 * p.x2 + p.y * p.y);
    s.v = std::atan2(p.x2, p.y);  // in (-pi/2, pi/2) since y > 0
    return s;
}

Point from_sector(const SectorCoords& s) {
    if (!(std::abs(s.v) < kHalfPi)) throw std::domain_error("from_sector: |v| >= pi/2");
    double eu = std::exp(s.u);
    return {s.x, eu * std::sin(s.v), eu * std::cos(s.v)};
}

Point moebius_act(const GMatrix& g, const Point& p) {
    using C = std::complex<double>;
    C a(static_cast<double>(g.a.re), static_cast<double>(g.a.im));
    C b(static_cast<double>(g.b.re), static_cast<double>(g.b.im));
    C c(static_cast<double>(g.c.re), static_cast<double>(g.c.im));
    C d(static_cast<double>(g.d.re), static_cast<double>(g.d.im));
    C z(p.x1, p.x2);
    double y = p.y;

    C czd = c * z + d;
    double denom = std::norm(czd) + std::norm(c) * y * y;  // ||cp + d||^2 > 0
    C znum = (a * z + b) * std::conj(czd) + a * std::conj(c) * y * y;
    C zp = znum / denom;
    return {zp.real(), zp.imag(), y / denom};
}

double pp_invariant(const Point& p, const Point& q) {
    double dx1 = p.x1 - q.x1;
    double dx2 = p.x2 - q.x2;
    return (dx1 * dx1 + dx2 * dx2 + p.y * p.y + q.y * q.y) / (2.0 * p.y * q.y);
}

double sec_v(const Point& p) {
    return std::sqrt(p.x2 * p.x2 + p.y * p.y) / p.y;
}

Point project_to_plane(const Point& p) {
    return {p.x1, 0.0, std::sqrt(p.x2 * p.x2 + p.y * p.y)};
}

double check_metric_tensor(const SectorCoords& s, double step) {
    if (kHalfPi - std::abs(s.v) < 1e-3) throw std::domain_error("chart degenerate");

    // J[k][i] = d(cartesian_k)/d(chart_i) by central differences
    double J[3][3];
    for (int i = 0; i < 3; ++i) {
        SectorCoords sp = s, sm = s;
        (i == 0 ? sp.x : i == 1 ? sp.u : sp.v) += step;
        (i == 0 ? sm.x : i == 1 ? sm.u : sm.v) -= step;
        Point pp = from_sector(sp), pm = from_sector(sm);
        J[0][i] = (pp.x1 - pm.x1) / (2.0 * step);
        J[1][i] = (pp.x2 - pm.x2) / (2.0 * step);
        J[2][i] = (pp.y - pm.y) / (2.0 * step);
    }

    Point p = from_sector(s);
    double y2 = p.y * p.y;
    double cs = std::cos(s.v);
    double cos2 = cs * cs;

    double max_dev = 0.0;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            double gij = (J[0][i] * J[0][j] + J[1][i] * J[1][j] + J[2][i] * J[2][j]) / y2;
            double closed = 0.0;
            if (i == j) closed = (i == 0 ? std::exp(-2.0 * s.u) : 1.0) / cos2;
            max_dev = std::max(max_dev, std::abs(gij - closed));
        }
    }
    return max_dev;
}

namespace {

double chart_laplacian(const SectorCoords& s, const ScalarField& f, double h) {
    auto g = [&](double dx, double du, double dv) {
        return f(from_sector({s.x + dx, s.u + du, s.v + dv}));
    };
    double g0 = g(0, 0, 0);
    double gxx = (g(h, 0, 0) - 2.0 * g0 + g(-h, 0, 0)) / (h * h);
    double guu = (g(0, h, 0) - 2.0 * g0 + g(0, -h, 0)) / (h * h);
    double gvv = (g(0, 0, h) - 2.0 * g0 + g(0, 0, -h)) / (h * h);
    double gu = (g(0, h, 0) - g(0, -h, 0)) / (2.0 * h);
    double gv = (g(0, 0, h) - g(0, 0, -h)) / (2.0 * h);

    double cs = std::cos(s.v), sn = std::sin(s.v);
    double cos2 = cs * cs;
    return std::exp(2.0 * s.u) * cos2 * gxx + cos2 * (guu + gvv) - cos2 * gu + sn * cs * gv;
}

double cartesian_laplacian(const Point& p, const ScalarField& f, double h) {
    auto g = [&](double d1, double d2, double dy) {
        return f({p.x1 + d1, p.x2 + d2, p.y + dy});
    };
    double g0 = g(0, 0, 0);
    double f11 = (g(h, 0, 0) - 2.0 * g0 + g(-h, 0, 0)) / (h * h);
    double f22 = (g(0, h, 0) - 2.0 * g0 + g(0, -h, 0)) / (h * h);
    double fyy = (g(0, 0, h) - 2.0 * g0 + g(0, 0, -h)) / (h * h);
    double fy = (g(0, 0, h) - g(0, 0, -h)) / (2.0 * h);
    return p.y * p.y * (f11 + f22 + fyy) - p.y * fy;
}

}  // namespace

double check_laplacian(const SectorCoords& s, const ScalarField& f, double step,
                       bool richardson) {
    if (kHalfPi - std::abs(s.v) < 1e-3) throw std::domain_error("chart degenerate");
    Point p = from_sector(s);

    auto both = [&](double h) {
        return std::pair<double, double>(chart_laplacian(s, f, h),
                                         cartesian_laplacian(p, f, h));
    };
    auto [lc, lx] = both(step);
    if (richardson) {
        auto [lc2, lx2] = both(step / 2.0);
        lc = (4.0 * lc2 - lc) / 3.0;
        lx = (4.0 * lx2 - lx) / 3.0;
    }
    return std::abs(lc - lx);
}

}  // namespace sector
