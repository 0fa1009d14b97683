#pragma once
// Quadrature helpers: adaptive Simpson with recursive bisection for smooth or
// piecewise-smooth integrands (complex-valued), and fixed Gauss-Legendre
// panels for oscillatory integrands whose resolution scale is known up front.

#include <complex>
#include <functional>
#include <stdexcept>
#include <vector>

namespace sector {

struct QuadratureError : std::runtime_error {
    double achieved;
    QuadratureError(const std::string& msg, double achieved_)
        : std::runtime_error(msg), achieved(achieved_) {}
};

using ComplexFn = std::function<std::complex<double>(double)>;
using RealFn = std::function<double(double)>;

// Adaptive Simpson to absolute tolerance `tol` over [a, b], with optional
// interior split points (integrand knots).  Panel budget 1e6; exceeding it
// throws QuadratureError carrying the achieved error estimate.
std::complex<double> integrate_adaptive(const ComplexFn& f, double a, double b,
                                        double tol = 1e-10,
                                        const std::vector<double>& splits = {});

double integrate_adaptive_real(const RealFn& f, double a, double b, double tol = 1e-10,
                               const std::vector<double>& splits = {});

// Composite 16-point Gauss-Legendre with uniform panels of width <= panel.
double integrate_gl_panels(const RealFn& f, double a, double b, double panel);

}  // namespace sector
