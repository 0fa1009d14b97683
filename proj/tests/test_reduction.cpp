#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "sector/reduction.hpp"
#include "test_util.hpp"

using namespace sector;
using namespace sector::testutil;

namespace {

bool in_reduced_domain(const PlanePoint& q) {
    return q.x >= -1e-12 && q.x <= 0.5 + 1e-12 && q.x * q.x + q.t * q.t >= 1.0 - 1e-12;
}

// exhaustive word-search oracle: apply every word of length <= 6 in the plane
// generators until one lands in the reduced domain
PlanePoint word_search_reduce(const PlanePoint& q0) {
    std::vector<GMatrix> words{GMatrix::identity()};
    const GMatrix gens[4] = {gen_T(), gen_T().inverse(), gen_S(), gen_iota()};
    for (int len = 0; len <= 6; ++len) {
        std::vector<GMatrix> next;
        for (const GMatrix& w : words) {
            PlanePoint img = plane_act(w, q0);
            if (in_reduced_domain(img)) return img;
            for (const GMatrix& g : gens) next.push_back(g * w);
        }
        words = std::move(next);
    }
    FAIL("word search found no reduced representative");
    return q0;
}

}  // namespace

TEST_CASE("reduce_plane examples") {
    ReduceResult r = reduce_plane({0.0, 2.0});
    CHECK(r.reduced.x == doctest::Approx(0.0));
    CHECK(r.reduced.t == doctest::Approx(2.0));
    CHECK(r.word == GMatrix::identity());

    r = reduce_plane({1.0, 1.0});
    CHECK(in_reduced_domain(r.reduced));
    PlanePoint oracle = word_search_reduce({1.0, 1.0});
    CHECK(r.reduced.x == doctest::Approx(oracle.x).epsilon(1e-9));
    CHECK(r.reduced.t == doctest::Approx(oracle.t).epsilon(1e-9));

    r = reduce_plane({-0.3, 3.0});
    CHECK(r.reduced.x == doctest::Approx(0.3));
    CHECK(r.reduced.t == doctest::Approx(3.0));
    CHECK(r.word == gen_iota());

    CHECK_THROWS_AS(reduce_plane({0.0, -1.0}), std::domain_error);
}

TEST_CASE("boundary ties prefer x >= 0") {
    ReduceResult r = reduce_plane({-0.5, 2.0});
    CHECK(r.reduced.x == doctest::Approx(0.5));
    CHECK(r.reduced.t == doctest::Approx(2.0));
    // already-reduced boundary point is left alone
    r = reduce_plane({0.5, 2.0});
    CHECK(r.word == GMatrix::identity());
}

TEST_CASE("reduce_plane is idempotent and its word acts correctly") {
    std::mt19937_64 rng(43);
    std::uniform_real_distribution<double> ux(-8.0, 8.0), ut(0.02, 6.0);
    for (int i = 0; i < 300; ++i) {
        PlanePoint q{ux(rng), ut(rng)};
        ReduceResult r = reduce_plane(q);
        CHECK(in_reduced_domain(r.reduced));
        CHECK(is_in_H(r.word));
        PlanePoint img = plane_act(r.word, q);
        CHECK(img.x == doctest::Approx(r.reduced.x).epsilon(1e-9));
        CHECK(img.t == doctest::Approx(r.reduced.t).epsilon(1e-9));

        ReduceResult again = reduce_plane(r.reduced);
        CHECK(again.reduced.x == doctest::Approx(r.reduced.x).epsilon(1e-12));
        CHECK(again.reduced.t == doctest::Approx(r.reduced.t).epsilon(1e-12));
        CHECK(again.word == GMatrix::identity());
    }
}

TEST_CASE("coset_key is constant on H-orbits") {
    std::mt19937_64 rng(47);
    int checked = 0;
    while (checked < 1000) {
        Point p = random_point(rng);
        GMatrix g = random_gamma(rng, 1 + static_cast<int>(rng() % 6));
        GMatrix h = random_h(rng, 1 + static_cast<int>(rng() % 5));
        CHECK(coset_key(h * g, p) == coset_key(g, p));
        ++checked;
    }
}

TEST_CASE("coset_key separates cosets and reports |v|") {
    std::mt19937_64 rng(53);
    for (int i = 0; i < 200; ++i) {
        Point p = random_point(rng);
        GMatrix g1 = random_gamma(rng, 1 + static_cast<int>(rng() % 6));
        GMatrix g2 = random_gamma(rng, 1 + static_cast<int>(rng() % 6));
        bool same = same_coset(g1, g2);
        bool keys_equal = coset_key(g1, p) == coset_key(g2, p);
        CHECK(keys_equal == same);  // generic base points separate cosets

        CosetKey k = coset_key(g1, p);
        CHECK(k.v_abs ==
              doctest::Approx(std::abs(to_sector(moebius_act(g1, p)).v)).epsilon(1e-9));
    }
}

TEST_CASE("area of the reduced domain") {
    AreaResult a = area_S(10000);
    CHECK(std::abs(a.value - std::numbers::pi / 6.0) < 1e-4);
    CHECK(a.error_estimate < 1e-4);

    AreaResult full = area_modular_domain(10000);
    CHECK(std::abs(full.value - std::numbers::pi / 3.0) < 1e-4);

    // doubling the panel count shrinks the error estimate
    AreaResult coarse = area_S(1000);
    AreaResult fine = area_S(2000);
    CHECK(fine.error_estimate < coarse.error_estimate);
    CHECK_THROWS_AS(area_S(10), std::invalid_argument);
}
