#include "sector/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sector {

namespace {

constexpr double kPi = std::numbers::pi;

// sinh(z)/z, stable through z = 0
Complex sinhc(Complex z) {
    if (std::abs(z) < 1e-4) {
        Complex z2 = z * z;
        return 1.0 + z2 / 6.0 + z2 * z2 / 120.0;
    }
    return std::sinh(z) / z;
}

}  // namespace

SpectralParam SpectralParam::from_s(Complex s) {
    SpectralParam p;
    p.s = s;
    Complex lam = s * (2.0 - s);
    if (std::abs(lam.imag()) > 1e-9 * (1.0 + std::abs(lam)))
        throw std::domain_error("SpectralParam: s(2-s) is not real");
    p.lambda = lam.real();
    p.t = (s - 1.0) / Complex(0.0, 1.0);
    return p;
}

SpectralParam SpectralParam::from_lambda(double lambda) {
    // s = 1 + sqrt(1 - lambda), on [1, 2] for lambda <= 1, else 1 + i sqrt(lambda - 1)
    Complex s = (lambda <= 1.0) ? Complex(1.0 + std::sqrt(1.0 - lambda), 0.0)
                                : Complex(1.0, std::sqrt(lambda - 1.0));
    return from_s(s);
}

SpectralParam SpectralParam::tempered(double t_real) {
    return from_s(Complex(1.0, t_real));
}

// ---------------------------------------------------------------------------
// radial profiles
// ---------------------------------------------------------------------------

RadialProfile RadialProfile::indicator(double half_width) {
    if (!(half_width > 0.0)) throw std::domain_error("indicator: half_width <= 0");
    RadialProfile f;
    f.pieces_.push_back({0.0, half_width, 1.0, 0.0, 0.0, 0.0});
    f.support_ = half_width;
    return f;
}

RadialProfile RadialProfile::smoothing(double U, double width, int sign) {
    if (!(U > 0.0)) throw std::domain_error("smoothing: U <= 0");
    if (!(width > 0.0 && width < 1.0)) throw std::domain_error("smoothing: width not in (0,1)");
    if (sign != 1 && sign != -1) throw std::domain_error("smoothing: sign must be +-1");
    double asu = std::asinh(U);
    double d = width;
    if (asu < 4.0 * d)
        throw std::domain_error("smoothing: width too large for cutoff (needs arcsinh U >= 4 width)");

    // plateau exactly 1, then the two quadratic transition pieces of the
    // double box convolution; knots anchored at arcsinh U so the plus profile
    // is exactly 1 up to there and the minus profile's support ends there
    double k1 = sign > 0 ? asu : asu - 4.0 * d;
    double k2 = k1 + 2.0 * d;
    double k3 = sign > 0 ? asu + 4.0 * d : asu;
    RadialProfile f;
    double inv8d2 = 1.0 / (8.0 * d * d);
    f.pieces_.push_back({0.0, k1, 1.0, 0.0, 0.0, 0.0});
    f.pieces_.push_back({k1, k2, 1.0, 0.0, -inv8d2, 0.0});
    f.pieces_.push_back({k2, k3, 0.5, -1.0 / (2.0 * d), inv8d2, 0.0});
    f.support_ = k3;
    f.degree_ = 2;
    return f;
}

double RadialProfile::operator()(double w) const {
    w = std::abs(w);
    if (w > support_) return 0.0;  // support is closed: indicators are 1 at the edge
    for (const Piece& pc : pieces_) {
        if (w <= pc.hi) {
            double s = w - pc.lo;
            return ((pc.c3 * s + pc.c2) * s + pc.c1) * s + pc.c0;
        }
    }
    return 0.0;
}

double RadialProfile::value_at_sec(double secv) const {
    if (secv < 1.0) {
        if (secv < 1.0 - 1e-12) throw std::domain_error("value_at_sec: argument < 1");
        secv = 1.0;
    }
    return (*this)(std::acosh(secv));
}

std::vector<double> RadialProfile::knots() const {
    std::vector<double> k;
    for (const Piece& pc : pieces_) k.push_back(pc.lo);
    k.push_back(support_);
    return k;
}

RadialProfile RadialProfile::scaled(double alpha) const {
    RadialProfile f = *this;
    for (Piece& pc : f.pieces_) {
        pc.c0 *= alpha; pc.c1 *= alpha; pc.c2 *= alpha; pc.c3 *= alpha;
    }
    return f;
}

double RadialProfile::antiderivative(double w) const {
    double sign = (w < 0.0) ? -1.0 : 1.0;  // odd extension of an even integrand
    w = std::abs(w);
    double acc = 0.0;
    for (const Piece& pc : pieces_) {
        double upper = std::min(w, pc.hi);
        if (upper <= pc.lo) break;
        double s = upper - pc.lo;
        acc += (((pc.c3 / 4.0 * s + pc.c2 / 3.0) * s + pc.c1 / 2.0) * s + pc.c0) * s;
        if (w <= pc.hi) break;
    }
    return sign * acc;
}

RadialProfile RadialProfile::convolved_with_box(double delta) const {
    if (!(delta > 0.0)) throw std::domain_error("convolved_with_box: delta <= 0");
    if (degree_ >= 3)
        throw std::invalid_argument("convolved_with_box: degree > 3 result unsupported");

    // g(w) = (F(w + delta) - F(w - delta)) / (2 delta); polynomial between
    // the shifted knots, recovered exactly by cubic interpolation
    auto g = [this, delta](double w) {
        return (antiderivative(w + delta) - antiderivative(w - delta)) / (2.0 * delta);
    };

    std::vector<double> ks;
    ks.push_back(0.0);
    for (double k : knots()) {
        for (double cand : {k + delta, k - delta, -k + delta})
            if (cand > 0.0) ks.push_back(cand);
    }
    double new_support = support_ + delta;
    ks.push_back(new_support);
    std::sort(ks.begin(), ks.end());
    ks.erase(std::unique(ks.begin(), ks.end(),
                         [](double a, double b) { return std::abs(a - b) < 1e-13; }),
             ks.end());

    RadialProfile out;
    out.support_ = new_support;
    out.degree_ = degree_ + 1;
    const int n = out.degree_ + 1;  // interpolation nodes for the exact degree
    for (std::size_t i = 0; i + 1 < ks.size(); ++i) {
        double lo = ks[i], hi = ks[i + 1];
        if (hi > new_support + 1e-13) break;
        double len = hi - lo;
        // Newton divided differences at equispaced nodes in local coords
        double xs[4] = {0, 0, 0, 0}, dd[4] = {0, 0, 0, 0};
        for (int j = 0; j < n; ++j) {
            xs[j] = len * j / (n - 1);
            dd[j] = g(lo + xs[j]);
        }
        for (int lev = 1; lev < n; ++lev)
            for (int j = n - 1; j >= lev; --j)
                dd[j] = (dd[j] - dd[j - 1]) / (xs[j] - xs[j - lev]);
        // expand the Newton form to monomial coefficients in s
        double c[4] = {0.0, 0.0, 0.0, 0.0};
        c[0] = dd[n - 1];
        for (int lev = n - 2; lev >= 0; --lev) {
            for (int j = 3; j >= 1; --j) c[j] = c[j - 1] - xs[lev] * c[j];
            c[0] = dd[lev] - xs[lev] * c[0];
        }
        out.pieces_.push_back({lo, hi, c[0], c[1], c[2], c[3]});
    }
    return out;
}

// ---------------------------------------------------------------------------
// angular eigenfunction
// ---------------------------------------------------------------------------

double xi(const SpectralParam& param, double v) {
    if (!(std::abs(v) < kPi / 2.0)) throw std::domain_error("xi: |v| >= pi/2");
    double w = std::asinh(std::tan(v));
    Complex val = std::cosh((param.s - 1.0) * w);
    return val.real() * std::cos(v);
}

XiBoundsReport xi_bounds_check(const SpectralParam& param, int grid_n) {
    if (param.lambda < 0.0) throw std::domain_error("xi_bounds_check: lambda < 0");
    if (grid_n < 2) throw std::invalid_argument("xi_bounds_check: grid_n < 2");
    double vmax = kPi / 2.0 - 1e-3;
    XiBoundsReport rep;
    for (int k = 0; k < grid_n; ++k) {
        double v = vmax * k / (grid_n - 1);
        double val = xi(param, v);
        double tanv = std::tan(v);
        double lower = 1.0 - 0.5 * (2.0 + param.lambda) * tanv * tanv;
        rep.max_upper_violation = std::max(rep.max_upper_violation, std::abs(val) - 1.0);
        rep.max_lower_violation = std::max(rep.max_lower_violation, lower - val);
    }
    rep.max_upper_violation = std::max(rep.max_upper_violation, 0.0);
    rep.max_lower_violation = std::max(rep.max_lower_violation, 0.0);
    return rep;
}

// ---------------------------------------------------------------------------
// d and c transforms
// ---------------------------------------------------------------------------

Complex d_transform(const RadialProfile& f, Complex s, double quad_tol) {
    double W = f.support();
    if (W <= 0.0) return 0.0;
    auto integrand = [&f, s](double w) { return f(w) * std::cosh(s * w); };
    return 2.0 * integrate_adaptive(integrand, 0.0, W, quad_tol / 2.0, f.knots());
}

Complex d_plus_closed(double U, double width, Complex s) {
    if (!(U > 0.0) || !(width > 0.0 && width < 1.0))
        throw std::domain_error("d_plus_closed: bad U or width");
    double A = std::asinh(U) + 2.0 * width;
    return 2.0 * A * sinhc(s * A) * sinhc(s * width) * sinhc(s * width);
}

Complex c_transform(const RadialProfile& f, const SpectralParam& param, double quad_tol,
                    CTransformRoute route) {
    Complex s = param.s;
    if (route == CTransformRoute::d_sum)
        return (d_transform(f, s, quad_tol) + d_transform(f, 2.0 - s, quad_tol)) / 4.0;
    double W = f.support();
    if (W <= 0.0) return 0.0;
    // int_0^oo f(1+r^2) cosh((s-1) arcsinh r) dr with r = sinh u
    auto integrand = [&f, s](double u) {
        return f(u) * std::cosh((s - 1.0) * u) * std::cosh(u);
    };
    return integrate_adaptive(integrand, 0.0, W, quad_tol, f.knots());
}

OscillatoryReport oscillatory_coeff_check(double U, double width,
                                          const std::vector<double>& t_grid,
                                          double quad_tol) {
    OscillatoryReport rep;
    double X1 = std::sqrt(U * U + 1.0);
    for (double t : t_grid) {
        if (!(std::abs(t) >= 1.0))
            throw std::invalid_argument("oscillatory_coeff_check: needs |t| >= 1");
        // pick X2 so that t*log(X2/X1) = pi/2: the X^{+-it} system is then
        // maximally conditioned
        double X2 = X1 * std::exp(kPi / (2.0 * std::abs(t)));
        double sin_arg = std::sin(t * std::log(X2 / X1));
        if (std::abs(sin_arg) < 1e-3)
            throw std::runtime_error("oscillatory_coeff_check: ill-conditioned X pair");
        double U2 = std::sqrt(X2 * X2 - 1.0);

        SpectralParam par = SpectralParam::tempered(t);
        Complex c1 = c_transform(RadialProfile::smoothing(U, width, +1), par, quad_tol);
        Complex c2 = c_transform(RadialProfile::smoothing(U2, width, +1), par, quad_tol);

        auto xpow = [](double X, double tt) {
            return X * std::exp(Complex(0.0, tt * std::log(X)));
        };
        Complex m11 = xpow(X1, t), m12 = xpow(X1, -t);
        Complex m21 = xpow(X2, t), m22 = xpow(X2, -t);
        Complex det = m11 * m22 - m12 * m21;
        Complex a = (c1 * m22 - c2 * m12) / det;
        Complex b = (m11 * c2 - m21 * c1) / det;

        double at = std::abs(t);
        double bound = std::min(1.0 / at, 1.0 / (at * at * at * width * width));
        OscillatoryEntry e{t, std::abs(a), std::abs(b), bound, at * width < 1.0};
        rep.entries.push_back(e);
        rep.fitted_C = std::max(rep.fitted_C, std::max(e.abs_a, e.abs_b) / bound);
    }
    return rep;
}

// ---------------------------------------------------------------------------
// inverse Selberg transform of the Gaussian-times-cosine test function
// ---------------------------------------------------------------------------

double selberg_inverse_gaussian(double T, double r, double x) {
    if (!(T > 0.0) || r < 0.0 || x < 0.0)
        throw std::domain_error("selberg_inverse_gaussian: bad arguments");
    double c = T * T * T / (2.0 * std::pow(kPi, 1.5));
    if (x < 1e-8) {
        double q = r * T;
        double u = 2.0 * std::exp(-q * q) * (1.0 - 2.0 * q * q);
        return c * u;
    }
    auto psi = [T](double xi_) { return xi_ * std::exp(-T * T * xi_ * xi_); };
    return c * (psi(x + r) + psi(x - r)) / std::sinh(x);
}

namespace {

double selberg_panel(double r, double x) {
    return std::min(0.1, kPi / (4.0 * (x + r + 1.0)));
}

}  // namespace

double selberg_inverse_numeric(double T, double r, double x) {
    if (!(x > 0.0)) throw std::domain_error("selberg_inverse_numeric: x must be > 0");
    double inv4T2 = 1.0 / (4.0 * T * T);
    auto integrand = [=](double t) {
        return t * std::cos(r * t) * std::sin(t * x) * std::exp(-t * t * inv4T2);
    };
    double I = integrate_gl_panels(integrand, 0.0, 12.0 * T, selberg_panel(r, x));
    return I / (2.0 * kPi * kPi * std::sinh(x));
}

double selberg_inverse_numeric_central(double T, double r, double x, double h_rel) {
    if (!(x > 0.0)) throw std::domain_error("selberg_inverse_numeric_central: x must be > 0");
    double chi = std::cosh(x);
    double inv4T2 = 1.0 / (4.0 * T * T);
    auto F = [=](double arg) {
        auto integrand = [=](double t) {
            return std::cos(t * std::acosh(arg)) * std::cos(r * t) *
                   std::exp(-t * t * inv4T2);
        };
        return integrate_gl_panels(integrand, 0.0, 12.0 * T, selberg_panel(r, x)) / kPi;
    };
    double h = h_rel * std::max(1.0, chi);
    h = std::min(h, 0.5 * (chi - 1.0));  // keep chi - h inside the domain
    return -(F(chi + h) - F(chi - h)) / (2.0 * h) / (2.0 * kPi);
}

}  // namespace sector
