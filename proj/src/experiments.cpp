#include "sector/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <string>

namespace sector {

namespace {

// group elements with entry coordinates |re|, |im| <= bound, cached per bound
const std::vector<GMatrix>& group_elements_box(int bound) {
    static std::map<int, std::vector<GMatrix>> cache;
    auto it = cache.find(bound);
    if (it != cache.end()) return it->second;

    std::vector<GMatrix> out;
    auto in_box = [bound](const GaussInt& z) {
        return std::llabs(z.re) <= bound && std::llabs(z.im) <= bound;
    };
    std::vector<GaussInt> box;
    for (std::int64_t re = -bound; re <= bound; ++re)
        for (std::int64_t im = -bound; im <= bound; ++im) box.emplace_back(re, im);

    for (const GaussInt& a : box) {
        if (a.is_zero()) continue;
        for (const GaussInt& b : box) {
            for (const GaussInt& c : box) {
                GaussInt num = GaussInt(1) + b * c;
                std::int64_t n = a.norm();
                GaussInt t = num * a.conj();
                if (t.re % n != 0 || t.im % n != 0) continue;
                GaussInt d(t.re / n, t.im / n);
                if (!in_box(d)) continue;
                out.push_back(GMatrix(a, b, c, d));
            }
        }
    }
    const GaussInt units[4] = {GaussInt(1), GaussInt(-1), GaussInt(0, 1), GaussInt(0, -1)};
    for (const GaussInt& b : units) {
        GaussInt c = -b.conj();
        for (const GaussInt& d : box) out.push_back(GMatrix(GaussInt(0), b, c, d));
    }
    std::sort(out.begin(), out.end(), [](const GMatrix& x, const GMatrix& y) {
        return x.hash() < y.hash();
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return cache.emplace(bound, std::move(out)).first->second;
}

}  // namespace

double induced_distance(const Point& p, const Point& q, int search_box) {
    if (search_box < 2) throw std::invalid_argument("induced_distance: search_box < 2");
    double best = pp_invariant(p, q);
    for (const GMatrix& g : group_elements_box(search_box))
        best = std::min(best, pp_invariant(p, moebius_act(g, q)));
    return std::acosh(std::max(1.0, best));
}

MeanSquareResult radial_mean_square(const Point& p, double X, const SpacingSpec& spec,
                                    const GroupConfig& cfg, const CountOptions& opt) {
    if (!(X >= 2.0)) throw std::domain_error("radial_mean_square: X < 2");
    if (spec.R < 1) throw std::domain_error("radial_mean_square: R < 1");
    double gap = X / spec.R;
    if (!(spec.eps > 0.0 && spec.eps < gap))
        throw std::domain_error("radial_mean_square: spacing violated: need 0 < eps < X/R = " +
                                std::to_string(gap));
    double re = spec.R * spec.eps;
    if (!(re >= X / 4.0 && re <= 4.0 * X))
        throw std::domain_error("radial_mean_square: spacing violated: need R*eps within "
                                "a factor 4 of X, got R*eps = " + std::to_string(re));
    if (!(static_cast<double>(spec.R) > std::pow(X, 2.0 / 3.0)))
        throw std::domain_error("radial_mean_square: spacing violated: need R > X^(2/3)");

    MeanSquareResult out;
    double acc = 0.0;
    for (int k = 1; k <= spec.R; ++k) {
        double Xk = X + (k - 0.5) * X / spec.R;
        CountResult cr = count_sector(p, Xk, cfg, opt);
        ExperimentRecord rec{ExperimentRecord::Kind::radial, X, k, Xk, cr.err,
                             cr.err * cr.err};
        acc += rec.err_sq;
        out.records.push_back(rec);
    }
    out.mean_square = acc / spec.R;
    return out;
}

MeanSquareResult spatial_mean_square(double X, const SpacingSpec& spec, const Box& region,
                                     const GroupConfig& cfg, std::uint64_t seed,
                                     const CountOptions& opt, int search_box) {
    if (!(X >= 2.0)) throw std::domain_error("spatial_mean_square: X < 2");
    if (!(static_cast<double>(spec.R) > X))
        throw std::domain_error("spatial_mean_square: spacing violated: need R > X");
    if (!(spec.eps > 0.0))
        throw std::domain_error("spatial_mean_square: eps <= 0");
    double re3 = spec.R * spec.eps * spec.eps * spec.eps;
    if (!(re3 >= kSpatialPackingFloor))
        throw std::domain_error("spatial_mean_square: spacing violated: need R*eps^3 >= " +
                                std::to_string(kSpatialPackingFloor) + ", got " +
                                std::to_string(re3));

    // rejection-sample R points with pairwise induced distance > eps
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> ux1(region.x1_lo, region.x1_hi);
    std::uniform_real_distribution<double> ux2(region.x2_lo, region.x2_hi);
    std::uniform_real_distribution<double> uy(region.y_lo, region.y_hi);

    std::vector<Point> pts;
    int rejections = 0;
    const int kMaxRejections = 100000;
    while (static_cast<int>(pts.size()) < spec.R) {
        Point cand{ux1(rng), ux2(rng), uy(rng)};
        bool ok = true;
        for (const Point& prev : pts) {
            if (induced_distance(cand, prev, search_box) <= spec.eps) {
                ok = false;
                break;
            }
        }
        if (!ok) {
            if (++rejections > kMaxRejections)
                throw std::runtime_error("spatial_mean_square: packing infeasible");
            continue;
        }
        pts.push_back(cand);
    }

    MeanSquareResult out;
    double acc = 0.0;
    for (int k = 0; k < spec.R; ++k) {
        CountResult cr = count_sector(pts[k], X, cfg, opt);
        ExperimentRecord rec{ExperimentRecord::Kind::spatial, X, k + 1, pts[k].y, cr.err,
                             cr.err * cr.err};
        acc += rec.err_sq;
        out.records.push_back(rec);
    }
    out.mean_square = acc / spec.R;
    return out;
}

FitResult fit_exponent(const std::vector<std::pair<double, double>>& data) {
    std::vector<std::pair<double, double>> logs;
    int dropped = 0;
    for (const auto& [x, v] : data) {
        if (!(x > 0.0)) throw std::domain_error("fit_exponent: X <= 0");
        if (v > 0.0)
            logs.emplace_back(std::log(x), std::log(v));
        else
            ++dropped;
    }
    // distinct abscissas
    std::vector<double> xs;
    for (const auto& [lx, lv] : logs) xs.push_back(lx);
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    if (xs.size() < 3)
        throw std::domain_error("fit_exponent: fewer than 3 usable distinct X values");

    auto n = static_cast<double>(logs.size());
    double mx = 0.0, my = 0.0;
    for (const auto& [lx, ly] : logs) { mx += lx; my += ly; }
    mx /= n;
    my /= n;
    double sxx = 0.0, sxy = 0.0;
    for (const auto& [lx, ly] : logs) {
        sxx += (lx - mx) * (lx - mx);
        sxy += (lx - mx) * (ly - my);
    }
    double slope = sxy / sxx;
    double inter = my - slope * mx;
    double ssr = 0.0;
    for (const auto& [lx, ly] : logs) {
        double r = ly - (inter + slope * lx);
        ssr += r * r;
    }
    double sigma2 = logs.size() > 2 ? ssr / (n - 2.0) : 0.0;
    return {slope, std::sqrt(sigma2 / sxx), static_cast<int>(logs.size()), dropped};
}

}  // namespace sector
