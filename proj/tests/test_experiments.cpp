#include <doctest.h>

#include <cmath>
#include <random>

#include "sector/experiments.hpp"
#include "test_util.hpp"

using namespace sector;
using namespace sector::testutil;

namespace {
const GroupConfig kCfg = GroupConfig::picard();
}

TEST_CASE("fit_exponent on exact power laws") {
    std::vector<std::pair<double, double>> sq, three_half;
    for (double X : {10.0, 20.0, 40.0, 80.0}) {
        sq.emplace_back(X, X * X);
        three_half.emplace_back(X, 3.7 * std::pow(X, 1.5));
    }
    FitResult f = fit_exponent(sq);
    CHECK(f.slope == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(f.stderr_slope == doctest::Approx(0.0));
    CHECK(fit_exponent(three_half).slope == doctest::Approx(1.5).epsilon(1e-12));
}

TEST_CASE("fit_exponent drops zeros and wants 3 usable points") {
    std::vector<std::pair<double, double>> data{{10, 100}, {20, 0.0}, {40, 1600}, {80, 6400}};
    FitResult f = fit_exponent(data);
    CHECK(f.dropped == 1);
    CHECK(f.used == 3);
    CHECK(f.slope == doctest::Approx(2.0).epsilon(1e-12));
    CHECK_THROWS_AS(fit_exponent({{10, 1}, {20, 2}}), std::domain_error);
    CHECK_THROWS_AS(fit_exponent({{10, 0.0}, {20, 2}, {40, 3}}), std::domain_error);
}

TEST_CASE("radial spacing constraints are enforced before counting") {
    Point p{0.1, 0.2, 1.1};
    // R = 1 can never satisfy R > X^{2/3} for X >= 2
    CHECK_THROWS_AS(radial_mean_square(p, 2.0, {1, 0.5}, kCfg), std::domain_error);
    // eps >= gap
    CHECK_THROWS_AS(radial_mean_square(p, 4.0, {4, 1.0}, kCfg), std::domain_error);
    // R*eps far from X
    CHECK_THROWS_AS(radial_mean_square(p, 4.0, {4, 0.2}, kCfg), std::domain_error);
    // R below X^{2/3}
    CHECK_THROWS_AS(radial_mean_square(p, 27.0, {8, 1.5}, kCfg), std::domain_error);
    CHECK_THROWS_AS(radial_mean_square(p, 1.5, {2, 0.4}, kCfg), std::domain_error);
}

TEST_CASE("radial mean square matches per-sample counts") {
    Point p{0.1, 0.2, 1.1};
    SpacingSpec spec{2, 0.5};  // X = 2: gaps 1, R*eps = 1 in [X/4, 4X], R > 2^(2/3)
    MeanSquareResult res = radial_mean_square(p, 2.0, spec, kCfg);
    REQUIRE(res.records.size() == 2);
    CHECK(res.records[0].sample_value == doctest::Approx(2.5));
    CHECK(res.records[1].sample_value == doctest::Approx(3.5));
    double want = 0.0;
    for (double Xk : {2.5, 3.5}) {
        double e = count_sector(p, Xk, kCfg).err;
        want += e * e;
    }
    CHECK(res.mean_square == doctest::Approx(want / 2.0));
    CHECK(res.mean_square >= 0.0);
    for (const auto& r : res.records) CHECK(r.err_sq == r.err * r.err);
}

TEST_CASE("radial means at two legal R values agree within sampling error") {
    Point p{0.1, 0.2, 1.1};
    auto run = [&](int R) { return radial_mean_square(p, 6.0, {R, 6.0 / (2.0 * R)}, kCfg); };
    MeanSquareResult a = run(5), b = run(9);
    auto stderr_of = [](const MeanSquareResult& m) {
        double mu = m.mean_square, ss = 0.0;
        for (const auto& r : m.records) ss += (r.err_sq - mu) * (r.err_sq - mu);
        auto n = static_cast<double>(m.records.size());
        return std::sqrt(ss / (n - 1.0) / n);
    };
    double gap = std::abs(a.mean_square - b.mean_square);
    CHECK(gap <= 3.0 * (stderr_of(a) + stderr_of(b)) + 1e-9);
}

TEST_CASE("induced distance") {
    Point p{0.2, 0.3, 1.1};
    CHECK(induced_distance(p, p, 2) == doctest::Approx(0.0));

    std::mt19937_64 rng(79);
    for (int i = 0; i < 5; ++i) {
        GMatrix g = random_gamma(rng, 2);
        CHECK(induced_distance(p, moebius_act(g, p), 3) == doctest::Approx(0.0).epsilon(1e-9));
    }

    // nearby interior points: the identity realizes the infimum
    Point q{0.23, 0.33, 1.12};
    CHECK(induced_distance(p, q, 2) ==
          doctest::Approx(std::acosh(pp_invariant(p, q))).epsilon(1e-12));

    // monotone nonincreasing in the search bound
    Point far{0.45, 0.49, 0.91};
    CHECK(induced_distance(p, far, 3) <= induced_distance(p, far, 2) + 1e-15);
    CHECK_THROWS_AS(induced_distance(p, q, 1), std::invalid_argument);
}

TEST_CASE("spatial spacing constraints and sampling") {
    Box region;
    CHECK_THROWS_AS(spatial_mean_square(10.0, {10, 0.2}, region, kCfg, 1), std::domain_error);
    CHECK_THROWS_AS(spatial_mean_square(10.0, {11, 1e-3}, region, kCfg, 1), std::domain_error);
    // infeasible packing: R points with huge separation in a small box
    CHECK_THROWS_AS(spatial_mean_square(4.0, {40, 0.8}, region, kCfg, 1),
                    std::runtime_error);

    SpacingSpec spec{5, std::cbrt(kSpatialPackingFloor / 5.0) * 1.01};
    MeanSquareResult res = spatial_mean_square(4.0, spec, region, kCfg, 12345);
    REQUIRE(res.records.size() == 5);
    double mean = 0.0;
    for (const auto& r : res.records) {
        CHECK(r.err_sq == r.err * r.err);
        mean += r.err_sq;
    }
    CHECK(res.mean_square == doctest::Approx(mean / 5.0));  // order-free aggregate

    // reproducible bit-for-bit for a fixed seed
    MeanSquareResult res2 = spatial_mean_square(4.0, spec, region, kCfg, 12345);
    REQUIRE(res2.records.size() == res.records.size());
    for (std::size_t i = 0; i < res.records.size(); ++i) {
        CHECK(res2.records[i].err == res.records[i].err);
        CHECK(res2.records[i].sample_value == res.records[i].sample_value);
    }
    // different seed draws different points
    MeanSquareResult res3 = spatial_mean_square(4.0, spec, region, kCfg, 999);
    bool any_diff = false;
    for (std::size_t i = 0; i < res.records.size(); ++i)
        any_diff = any_diff || res3.records[i].sample_value != res.records[i].sample_value;
    CHECK(any_diff);
}
