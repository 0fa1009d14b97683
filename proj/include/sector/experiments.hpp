#pragma once
// Averaged error-term experiments: the mean square of e(p, X) over many radii
// X_k in [X, 2X] (radial) or over many well-separated base points (spatial),
// with the spacing hypotheses enforced before any counting happens, plus the
// log-log slope fitting used to turn growth bounds into checkable numbers.
//
// Radial spacing:  X_k = X + (k - 1/2) X/R, pairwise gaps X/R > eps, with
//   R*eps within a factor 4 of X and R > X^{2/3}.
// Spatial spacing: pairwise induced distance > eps on the quotient, with
//   R*eps^3 >= 0.05 and R > X.

#include <cstdint>
#include <random>
#include <vector>

#include "sector/counting.hpp"

namespace sector {

struct ExperimentRecord {
    enum class Kind { radial, spatial };
    Kind kind;
    double X;
    int sample_id;
    double sample_value;  // X_k for radial; y(p_k) for spatial (replay is by seed)
    double err;
    double err_sq;
};

struct SpacingSpec {
    int R = 1;
    double eps = 0.0;
};

struct MeanSquareResult {
    double mean_square = 0.0;
    std::vector<ExperimentRecord> records;
};

struct Box {
    double x1_lo = 0.0, x1_hi = 0.5;
    double x2_lo = 0.0, x2_hi = 0.5;
    double y_lo = 0.9, y_hi = 1.4;
};

// minimal R*eps^3 accepted for spatial sampling
inline constexpr double kSpatialPackingFloor = 0.05;

// (1/R) sum |e(p, X_k)|^2 with the radial spacing checks; X >= 2 required.
MeanSquareResult radial_mean_square(const Point& p, double X, const SpacingSpec& spec,
                                    const GroupConfig& cfg, const CountOptions& opt = {});

// (1/R) sum |e(X, p_k)|^2 over seeded rejection samples in `region` with
// pairwise induced distance > eps; throws "packing infeasible" after 1e5
// rejections.
MeanSquareResult spatial_mean_square(double X, const SpacingSpec& spec, const Box& region,
                                     const GroupConfig& cfg, std::uint64_t seed,
                                     const CountOptions& opt = {},
                                     int search_box = 2);

// Induced distance on the quotient: min over group elements with entry
// coordinates bounded by search_box of the hyperbolic distance d(p, gamma q).
// Nonincreasing in search_box; stabilizes quickly on compact regions.
double induced_distance(const Point& p, const Point& q, int search_box);

struct FitResult {
    double slope = 0.0;
    double stderr_slope = 0.0;
    int used = 0;
    int dropped = 0;  // non-positive values removed before taking logs
};

// least-squares slope of log(value) against log(X); needs >= 3 usable points
FitResult fit_exponent(const std::vector<std::pair<double, double>>& data);

}  // namespace sector
