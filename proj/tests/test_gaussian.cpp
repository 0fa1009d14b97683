#include <doctest.h>

#include <random>
#include <vector>

#include "sector/gaussian_int.hpp"
#include "test_util.hpp"

using namespace sector;
using namespace sector::testutil;

namespace {

// brute-force gcd: largest-norm common divisor among all candidates of norm
// up to min(norm a, norm b)
GaussInt brute_gcd(const GaussInt& a, const GaussInt& b) {
    auto divides = [](const GaussInt& d, const GaussInt& z) {
        std::int64_t n = d.norm();
        GaussInt t = z * d.conj();
        return t.re % n == 0 && t.im % n == 0;
    };
    std::int64_t cap = std::min(a.norm(), b.norm());
    GaussInt best(1);
    auto lim = static_cast<std::int64_t>(std::sqrt(static_cast<double>(cap))) + 1;
    for (std::int64_t re = -lim; re <= lim; ++re) {
        for (std::int64_t im = -lim; im <= lim; ++im) {
            GaussInt d(re, im);
            if (d.is_zero() || d.norm() > cap) continue;
            if (divides(d, a) && divides(d, b) && d.norm() > best.norm()) best = d;
        }
    }
    return best.first_quadrant();
}

}  // namespace

TEST_CASE("ggcd matches a brute-force divisor search") {
    CHECK(ggcd(GaussInt(2), GaussInt(1, 1)) == GaussInt(1, 1));
    CHECK(ggcd(GaussInt(2), GaussInt(1, 1)) == brute_gcd(GaussInt(2), GaussInt(1, 1)));

    std::mt19937_64 rng(11);
    std::uniform_int_distribution<std::int64_t> u(-9, 9);
    for (int i = 0; i < 200; ++i) {
        GaussInt a(u(rng), u(rng)), b(u(rng), u(rng));
        if (a.is_zero() && b.is_zero()) continue;
        if (a.is_zero() || b.is_zero()) continue;  // handled separately below
        CHECK(ggcd(a, b) == brute_gcd(a, b));
    }
}

TEST_CASE("ggcd edge cases") {
    // gcd with zero is the unit-normalized other argument
    CHECK(ggcd(GaussInt(0, -3), GaussInt(0)) == GaussInt(3));
    CHECK(ggcd(GaussInt(0), GaussInt(-5)) == GaussInt(5));
    // idempotence lands on the first-quadrant associate
    CHECK(ggcd(GaussInt(3, 4), GaussInt(3, 4)) == GaussInt(3, 4));
    CHECK(ggcd(GaussInt(-3, 4), GaussInt(-3, 4)) == GaussInt(4, 3));
    CHECK_THROWS_AS(ggcd(GaussInt(0), GaussInt(0)), std::domain_error);
}

TEST_CASE("complete_row canonical cases") {
    CHECK(complete_row(GaussInt(0), GaussInt(1)) == GMatrix::identity());
    GMatrix s(GaussInt(0), GaussInt(-1), GaussInt(1), GaussInt(0));
    CHECK(complete_row(GaussInt(1), GaussInt(0)) == s);

    GMatrix m = complete_row(GaussInt(1, 1), GaussInt(1));
    CHECK((m.c == GaussInt(1, 1) || m.c == GaussInt(-1, -1)));  // stored mod +-I

    CHECK_THROWS_AS(complete_row(GaussInt(2), GaussInt(1, 1)), std::invalid_argument);
    CHECK_THROWS_AS(complete_row(GaussInt(0), GaussInt(0)), std::invalid_argument);
}

TEST_CASE("complete_row returns det 1 and the exact bottom row") {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<std::int64_t> u(-100, 100);
    int done = 0;
    while (done < 300) {
        GaussInt c(u(rng), u(rng)), d(u(rng), u(rng));
        if (c.is_zero() && d.is_zero()) continue;
        GaussInt g = ggcd(c, d);
        if (!g.is_unit()) continue;  // keep only coprime rows (norms <= 2e4)
        GMatrix m = complete_row(c, d);
        bool row_match = (m.c == c && m.d == d) || (m.c == -c && m.d == -d);
        CHECK(row_match);
        CHECK(complete_row(c, d) == m);  // deterministic
        ++done;
    }
}

TEST_CASE("is_in_H recognizes the two components of the stabilizer") {
    CHECK(is_in_H(GMatrix(GaussInt(1), GaussInt(1), GaussInt(0), GaussInt(1))));
    CHECK_FALSE(is_in_H(GMatrix(GaussInt(1), GaussInt(0, 1), GaussInt(0), GaussInt(1))));
    CHECK(is_in_H(gen_iota()));
    CHECK(is_in_H(GMatrix::identity()));
}

TEST_CASE("is_in_H is closed under inverse and product") {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 200; ++i) {
        GMatrix h1 = random_h(rng, 1 + static_cast<int>(rng() % 6));
        GMatrix h2 = random_h(rng, 1 + static_cast<int>(rng() % 6));
        REQUIRE(is_in_H(h1));
        CHECK(is_in_H(h1.inverse()));
        CHECK(is_in_H(h1 * h2));
    }
}

TEST_CASE("same_coset basics") {
    std::mt19937_64 rng(29);
    GMatrix ti = gen_Ti();
    CHECK_FALSE(same_coset(ti, GMatrix::identity()));
    for (int i = 0; i < 100; ++i) {
        GMatrix g = random_gamma(rng, 1 + static_cast<int>(rng() % 7));
        GMatrix h = random_h(rng, 1 + static_cast<int>(rng() % 5));
        CHECK(same_coset(g, g));
        CHECK(same_coset(h * g, g));
    }
}

TEST_CASE("same_coset is an equivalence relation on random matrices") {
    std::mt19937_64 rng(31);
    std::vector<GMatrix> ms;
    for (int i = 0; i < 12; ++i) ms.push_back(random_gamma(rng, 1 + static_cast<int>(rng() % 6)));
    for (const GMatrix& g1 : ms) {
        CHECK(same_coset(g1, g1));
        for (const GMatrix& g2 : ms) {
            CHECK(same_coset(g1, g2) == same_coset(g2, g1));
            for (const GMatrix& g3 : ms)
                if (same_coset(g1, g2) && same_coset(g2, g3)) CHECK(same_coset(g1, g3));
        }
    }
}

TEST_CASE("matrix invariants") {
    // determinant is validated on construction
    CHECK_THROWS_AS(GMatrix(GaussInt(1), GaussInt(0), GaussInt(0), GaussInt(2)),
                    std::invalid_argument);
    // canonical representative: M == -M as stored objects
    GMatrix m(GaussInt(0), GaussInt(-1), GaussInt(1), GaussInt(0));
    GMatrix n(GaussInt(0), GaussInt(1), GaussInt(-1), GaussInt(0));
    CHECK(m == n);
    CHECK(m.hash() == n.hash());

    std::mt19937_64 rng(37);
    for (int i = 0; i < 50; ++i) {
        GMatrix g = random_gamma(rng, 4);
        CHECK(g * g.inverse() == GMatrix::identity());
    }
}

TEST_CASE("norm is multiplicative and overflow is detected") {
    std::mt19937_64 rng(41);
    std::uniform_int_distribution<std::int64_t> u(-50, 50);
    for (int i = 0; i < 100; ++i) {
        GaussInt a(u(rng), u(rng)), b(u(rng), u(rng));
        CHECK((a * b).norm() == a.norm() * b.norm());
    }
    GaussInt big(std::int64_t(1) << 62, 0);
    CHECK_THROWS_AS(big * big, std::overflow_error);
    CHECK_THROWS_AS(big.norm(), std::overflow_error);
}
