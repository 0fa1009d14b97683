#pragma once
// Special functions and integral transforms for the spectral side of the
// sector count.
//
// Spectral parameters come as s with eigenvalue lambda = s(2-s): s in [1, 2]
// for small eigenvalues, s = 1 + it on the tempered line.  The angular
// eigenfunction is
//
//   xi_lambda(v) = cosh((s-1) arcsinh tan v) / sec v,
//
// the unique solution of  cos^2 v xi'' + sin v cos v xi' + lambda xi = 0 with
// xi(0) = 1, xi'(0) = 0.  Test functions f live on [1, oo) through the
// substitution argument = cosh^2 w; we represent them as even piecewise
// polynomials in w ("radial profiles").  The workhorse transform is
//
//   d(f, s) = int_R f(cosh^2 u) cosh(su) du,
//
// which turns convolution in u into a product, with
// c(f, t) = (d(f, s) + d(f, 2-s)) / 4 for s = 1 + it.  Smoothing profiles
// f^+/f^- are double box-convolutions of sharp cutoffs and bracket the sharp
// indicator pointwise.  The module also evaluates the inverse Selberg
// transform of h(1+t^2) = exp(-t^2/(2T)^2) cos(rt) in closed form together
// with an independent numeric inversion used to cross-check it.

#include <complex>
#include <vector>

#include "sector/quadrature.hpp"

namespace sector {

using Complex = std::complex<double>;

struct SpectralParam {
    Complex s;      // spectral parameter
    double lambda;  // s(2-s); real in both supported regimes
    Complex t;      // s = 1 + i t

    static SpectralParam from_s(Complex s);
    static SpectralParam from_lambda(double lambda);
    static SpectralParam tempered(double t_real);  // s = 1 + i t, lambda = 1 + t^2
};

// Even compactly supported function of w, piecewise polynomial (degree <= 3)
// on [0, support]; zero beyond.  Evaluation uses |w|.
class RadialProfile {
  public:
    struct Piece {
        double lo, hi;
        double c0, c1, c2, c3;  // value = c0 + c1*s + c2*s^2 + c3*s^3, s = w - lo
    };

    RadialProfile() = default;

    // sharp cutoff: 1 for |w| <= half_width
    static RadialProfile indicator(double half_width);

    // smoothing profile: indicator at arcsinh(U) +- 2*width convolved twice
    // with the unit-mass box (2*width)^{-1} 1_{[-width, width]}; sign = +1
    // dominates the sharp cutoff at arcsinh(U), sign = -1 is dominated by it.
    // Closed-form quadratic spline; the plateau value is exactly 1.
    static RadialProfile smoothing(double U, double width, int sign);

    double operator()(double w) const;
    // f evaluated at argument sec^2(v), i.e. at w = arccosh(sec_v)
    double value_at_sec(double secv) const;

    double support() const { return support_; }
    std::vector<double> knots() const;
    const std::vector<Piece>& pieces() const { return pieces_; }

    RadialProfile scaled(double alpha) const;
    // convolution with the unit-mass box kernel of half-width delta
    RadialProfile convolved_with_box(double delta) const;

    // antiderivative F(w) = int_0^w f, extended oddly to w < 0
    double antiderivative(double w) const;

  private:
    std::vector<Piece> pieces_;  // ascending, contiguous from 0
    double support_ = 0.0;
    int degree_ = 0;
};

// xi_lambda(v) for |v| < pi/2 (throws otherwise); real in both regimes
double xi(const SpectralParam& param, double v);

struct XiBoundsReport {
    double max_upper_violation = 0.0;  // of |xi| <= 1
    double max_lower_violation = 0.0;  // of xi >= 1 - (2+lambda)/2 tan^2 v
    bool pass(double tol = 1e-12) const {
        return max_upper_violation <= tol && max_lower_violation <= tol;
    }
};

// checks |xi| <= 1 and xi >= 1 - ((2+lambda)/2) tan^2 v on a grid over
// [0, pi/2 - 1e-3]; requires lambda >= 0
XiBoundsReport xi_bounds_check(const SpectralParam& param, int grid_n);

// d(f, s) by adaptive quadrature over the support, split at the knots
Complex d_transform(const RadialProfile& f, Complex s, double quad_tol = 1e-10);

// closed form of d(f^+, s) for the plus smoothing profile:
// 2 (arcsinh U + 2 width) sinhc(s A) sinhc(s width)^2 with A = arcsinh U + 2 width;
// continuous through s = 0 where the value is 2 (arcsinh U + 2 width)
Complex d_plus_closed(double U, double width, Complex s);

enum class CTransformRoute { d_sum, direct };

// c(f, t) with s = 1 + i t: either (d(f,s) + d(f,2-s))/4 or the direct
// r-integral int_0^oo f(1+r^2) cosh((s-1) arcsinh r) dr
Complex c_transform(const RadialProfile& f, const SpectralParam& param,
                    double quad_tol = 1e-10, CTransformRoute route = CTransformRoute::d_sum);

struct OscillatoryEntry {
    double t;
    double abs_a, abs_b;
    double bound;  // min(|t|^{-1}, |t|^{-3} width^{-2})
    bool small_branch;  // |t| * width < 1
};

struct OscillatoryReport {
    std::vector<OscillatoryEntry> entries;
    double fitted_C = 0.0;  // max over entries of max(|a|,|b|) / bound
};

// Extracts the coefficients a, b of c(f^+, t) = a X^{1+it} + b X^{1-it} by
// evaluating at two cutoffs X1 = sqrt(U^2+1) and X2 chosen so the 2x2 system
// in X^{+-it} is well-conditioned; throws if it is not.
OscillatoryReport oscillatory_coeff_check(double U, double width,
                                          const std::vector<double>& t_grid,
                                          double quad_tol = 1e-10);

// Inverse Selberg transform of h(1+t^2) = exp(-t^2/(2T)^2) cos(rt):
//   k(cosh x) = T^3 / (2 pi^{3/2}) * (psi(x+r) + psi(x-r)) / sinh x,
//   psi(xi) = xi exp(-T^2 xi^2),
// with the x -> 0 limit k(1) = T^3 u(rT) / (2 pi^{3/2}), u(q) = 2e^{-q^2}(1-2q^2).
double selberg_inverse_gaussian(double T, double r, double x);

// Independent numeric route: the inversion integral
//   k(cosh x) = (2 pi^2 sinh x)^{-1} int_0^oo t cos(rt) sin(tx) e^{-t^2/(4T^2)} dt
// (the x-derivative taken under the integral sign), integrated over
// t <= 12 T with oscillation-resolving Gauss-Legendre panels.
double selberg_inverse_numeric(double T, double r, double x);

// Same inversion evaluated with a numeric central difference of the
// undifferentiated integral; cheap sanity route, accurate only when the
// kernel is not many orders below the integrand scale.
double selberg_inverse_numeric_central(double T, double r, double x, double h_rel = 1e-5);

}  // namespace sector
