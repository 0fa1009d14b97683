#include "sector/quadrature.hpp"

#include <algorithm>
#include <cmath>

namespace sector {

namespace {

constexpr long kPanelBudget = 1000000;

struct SimpsonState {
    const ComplexFn& f;
    double tol;
    long panels = 0;
    double worst_estimate = 0.0;
};

std::complex<double> simpson(const std::complex<double>& fa, const std::complex<double>& fm,
                             const std::complex<double>& fb, double h) {
    return (h / 6.0) * (fa + 4.0 * fm + fb);
}

std::complex<double> adapt(SimpsonState& st, double a, double b,
                           std::complex<double> fa, std::complex<double> fm,
                           std::complex<double> fb, std::complex<double> whole,
                           double tol, int depth) {
    double m = 0.5 * (a + b);
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    std::complex<double> flm = st.f(lm), frm = st.f(rm);
    std::complex<double> left = simpson(fa, flm, fm, m - a);
    std::complex<double> right = simpson(fm, frm, fb, b - m);
    std::complex<double> delta = left + right - whole;
    if (++st.panels > kPanelBudget)
        throw QuadratureError("integrate_adaptive: panel budget exhausted",
                              std::max(st.worst_estimate, std::abs(delta) / 15.0));
    if (std::abs(delta) <= 15.0 * tol || depth > 52) {
        st.worst_estimate = std::max(st.worst_estimate, std::abs(delta) / 15.0);
        return left + right + delta / 15.0;
    }
    return adapt(st, a, m, fa, flm, fm, left, tol / 2.0, depth + 1) +
           adapt(st, m, b, fm, frm, fb, right, tol / 2.0, depth + 1);
}

std::complex<double> adaptive_segment(SimpsonState& st, double a, double b, double tol) {
    if (a == b) return 0.0;
    double m = 0.5 * (a + b);
    std::complex<double> fa = st.f(a), fm = st.f(m), fb = st.f(b);
    std::complex<double> whole = simpson(fa, fm, fb, b - a);
    return adapt(st, a, b, fa, fm, fb, whole, tol, 0);
}

// 16-point Gauss-Legendre nodes/weights on [-1, 1]
constexpr double kGLx[8] = {
    0.0950125098376374, 0.2816035507792589, 0.4580167776572274, 0.6178762444026438,
    0.7554044083550030, 0.8656312023878318, 0.9445750230732326, 0.9894009349916499};
constexpr double kGLw[8] = {
    0.1894506104550685, 0.1826034150449236, 0.1691565193950025, 0.1495959888165767,
    0.1246289712555339, 0.0951585116824928, 0.0622535239386479, 0.0271524594117541};

}  // namespace

std::complex<double> integrate_adaptive(const ComplexFn& f, double a, double b, double tol,
                                        const std::vector<double>& splits) {
    std::vector<double> pts;
    pts.push_back(a);
    for (double s : splits)
        if (s > a && s < b) pts.push_back(s);
    pts.push_back(b);
    std::sort(pts.begin(), pts.end());

    SimpsonState st{f, tol, 0, 0.0};
    std::size_t nseg = pts.size() - 1;
    std::complex<double> total = 0.0;
    for (std::size_t i = 0; i < nseg; ++i)
        total += adaptive_segment(st, pts[i], pts[i + 1], tol / static_cast<double>(nseg));
    return total;
}

double integrate_adaptive_real(const RealFn& f, double a, double b, double tol,
                               const std::vector<double>& splits) {
    auto cf = [&f](double x) { return std::complex<double>(f(x), 0.0); };
    return integrate_adaptive(cf, a, b, tol, splits).real();
}

double integrate_gl_panels(const RealFn& f, double a, double b, double panel) {
    if (!(panel > 0.0)) throw std::invalid_argument("integrate_gl_panels: panel <= 0");
    auto n = static_cast<long>(std::ceil((b - a) / panel));
    n = std::max(n, 1L);
    double h = (b - a) / static_cast<double>(n);
    double total = 0.0;
    for (long k = 0; k < n; ++k) {
        double lo = a + k * h;
        double mid = lo + 0.5 * h;
        double half = 0.5 * h;
        double acc = 0.0;
        for (int j = 0; j < 8; ++j)
            acc += kGLw[j] * (f(mid + half * kGLx[j]) + f(mid - half * kGLx[j]));
        total += acc * half;
    }
    return total;
}

}  // namespace sector
