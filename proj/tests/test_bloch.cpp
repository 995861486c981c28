#include <doctest.h>

#include <numbers>
#include <random>

#include "ist/bloch.hpp"
#include "ist/error.hpp"
#include "oracles.hpp"

using ist::ContinuousDirection;
using ist::DiscreteState;
using ist::GridDirection;
using ist::Rational;

TEST_CASE("born_probability examples") {
    CHECK(ist::born_probability(DiscreteState(8, 4), 0) == Rational(1, 2));
    CHECK(ist::born_probability(DiscreteState(8, 0), 0) == Rational(0));
    CHECK(ist::born_probability(DiscreteState(8, 8), 0) == Rational(1));
    CHECK_THROWS_AS(ist::born_probability(DiscreteState(8, 8), 2), ist::PreconditionError);
}

TEST_CASE("born probabilities sum to one for every state") {
    for (std::int64_t p = 1; p <= 60; ++p) {
        for (std::int64_t n = 0; n <= p; ++n) {
            const DiscreteState s(p, n, n % p);
            CHECK(ist::born_probability(s, 0) + ist::born_probability(s, 1) == Rational(1));
        }
    }
}

TEST_CASE("discrete state and grid invariants are enforced") {
    CHECK_THROWS_AS(DiscreteState(8, 9), ist::PreconditionError);
    CHECK_THROWS_AS(DiscreteState(8, 4, 8), ist::PreconditionError);
    CHECK_THROWS_AS(GridDirection(1, 0, 0), ist::PreconditionError);
    CHECK_THROWS_AS(GridDirection(4, 5, 0), ist::PreconditionError);
    CHECK_THROWS_AS(GridDirection(4, 2, 4), ist::PreconditionError);
    CHECK(GridDirection(4, 0, 3).k() == 0);
    CHECK(GridDirection(4, 4, 2).k() == 0);
}

TEST_CASE("grid latitudes have rational cosines 1 - 2j/N") {
    for (std::int64_t n = 2; n <= 30; ++n) {
        for (std::int64_t j = 0; j <= n; ++j) {
            const GridDirection g(n, j, 0);
            CHECK(g.cos_theta() == Rational(n - 2 * j, n));
            CHECK(std::abs(std::cos(g.theta()) - g.cos_theta().to_double()) < 1e-12);
        }
    }
}

TEST_CASE("state_between examples") {
    const GridDirection a(6, 2, 1);
    const auto same = ist::state_between(a, a, 12);
    REQUIRE(same.has_value());
    CHECK(same->n() == 12);

    const auto antipodal = ist::state_between(GridDirection(4, 0, 0), GridDirection(4, 4, 0), 12);
    REQUIRE(antipodal.has_value());
    CHECK(antipodal->n() == 0);

    const auto equator = ist::state_between(GridDirection(4, 2, 0), GridDirection(4, 2, 1), 8);
    REQUIRE(equator.has_value());
    CHECK(equator->n() == 4);
    CHECK(equator->m() == 6);  // relative azimuth -1/4 turn = 3/4 turn
    CHECK(ist::exact_relative_cosine(GridDirection(4, 2, 0), GridDirection(4, 2, 1)) == Rational(0));

    // Same directions, but p = 3 cannot express n/p = 1/2.
    CHECK_FALSE(ist::state_between(GridDirection(4, 2, 0), GridDirection(4, 2, 1), 3).has_value());
    CHECK_THROWS_AS(ist::state_between(GridDirection(4, 2, 0), GridDirection(6, 2, 1), 8), ist::PreconditionError);
}

TEST_CASE("exact relative cosine agrees with a 50-digit spherical law of cosines") {
    using ist::oracle::big;
    int rational = 0;
    int irrational = 0;
    for (std::int64_t n = 2; n <= 8; ++n) {
        for (std::int64_t j1 = 0; j1 <= n; ++j1) {
            for (std::int64_t k1 = 0; k1 < n; ++k1) {
                for (std::int64_t j2 = 0; j2 <= n; ++j2) {
                    for (std::int64_t k2 = 0; k2 < n; ++k2) {
                        const GridDirection a(n, j1, k1);
                        const GridDirection b(n, j2, k2);
                        const big c1 = big(n - 2 * j1) / n;
                        const big c2 = big(n - 2 * j2) / n;
                        const big s1 = boost::multiprecision::sqrt(1 - c1 * c1);
                        const big s2 = boost::multiprecision::sqrt(1 - c2 * c2);
                        const big cos_gamma = c1 * c2 + s1 * s2 * ist::oracle::cos_turns(a.k() - b.k(), n);
                        const auto exact = ist::exact_relative_cosine(a, b);
                        const auto approx = ist::oracle::small_rational(cos_gamma, 1000000, big("1e-35"));
                        REQUIRE(exact.has_value() == approx.has_value());
                        if (exact) {
                            CHECK(exact->num() == approx->first);
                            CHECK(exact->den() == approx->second);
                            ++rational;
                        } else {
                            ++irrational;
                        }
                    }
                }
            }
        }
    }
    CHECK(rational > 0);
    CHECK(irrational > 0);
}

TEST_CASE("snap_to_grid examples") {
    const double half_pi = std::numbers::pi / 2;
    CHECK(ist::snap_to_grid(ContinuousDirection(half_pi, 0.0), 4) == GridDirection(4, 2, 0));
    CHECK(ist::snap_to_grid(ContinuousDirection(half_pi + 0.01, 0.01), 4) == GridDirection(4, 2, 0));
    const auto brute = ist::oracle::exhaustive_snap(half_pi + 0.01, 0.01, 4);
    CHECK(brute.j == 2);
    CHECK(brute.k == 0);
}

TEST_CASE("snap_delta examples") {
    const double half_pi = std::numbers::pi / 2;
    CHECK(ist::snap_delta(ContinuousDirection::from_grid(GridDirection(4, 1, 3)), 4) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(ist::snap_delta(ContinuousDirection(half_pi + 0.01, 0.0), 4) == doctest::Approx(0.01).epsilon(1e-9));
}

TEST_CASE("snapping is idempotent on every grid point for N <= 50") {
    for (std::int64_t n = 2; n <= 50; ++n) {
        for (std::int64_t j = 0; j <= n; ++j) {
            for (std::int64_t k = 0; k < n; ++k) {
                const GridDirection g(n, j, k);
                if (g.k() != k) continue;  // pole duplicates
                REQUIRE(ist::snap_to_grid(ContinuousDirection::from_grid(g), n) == g);
            }
        }
    }
}

TEST_CASE("snapping matches exhaustive minimisation on fuzzed directions") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> z(-1.0, 1.0);
    std::uniform_real_distribution<double> phi(0.0, 2 * std::numbers::pi);
    std::uniform_int_distribution<std::int64_t> res(2, 12);
    for (int i = 0; i < 1000; ++i) {
        const ContinuousDirection d(std::acos(z(rng)), phi(rng));
        const auto n = res(rng);
        const auto fast = ist::snap_to_grid(d, n);
        const auto brute = ist::oracle::exhaustive_snap(d.theta, d.phi, n);
        CHECK(fast.j() == brute.j);
        CHECK(fast.k() == brute.k);
    }
}

TEST_CASE("snap delta never exceeds the largest grid cell diameter") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> z(-1.0, 1.0);
    std::uniform_real_distribution<double> phi(0.0, 2 * std::numbers::pi);
    for (std::int64_t n : {4, 16, 64, 256}) {
        // Cell (j, k) has corners (j|j+1, k|k+1); its diameter is the largest corner-to-corner angle.
        double mesh = 0.0;
        for (std::int64_t j = 0; j < n; ++j) {
            for (std::int64_t k = 0; k < n; ++k) {
                std::vector<ist::oracle::UnitVec> corners;
                for (auto jj : {j, j + 1}) {
                    for (auto kk : {k, (k + 1) % n}) {
                        const double t = std::acos(1.0 - 2.0 * static_cast<double>(jj) / static_cast<double>(n));
                        corners.push_back(ist::oracle::unit(t, 2 * std::numbers::pi * static_cast<double>(kk) / static_cast<double>(n)));
                    }
                }
                for (const auto& a : corners)
                    for (const auto& b : corners) mesh = std::max(mesh, ist::oracle::angle_between(a, b));
            }
        }
        for (int i = 0; i < 500; ++i) {
            const ContinuousDirection d(std::acos(z(rng)), phi(rng));
            CHECK(ist::snap_delta(d, n) <= mesh);
        }
    }
}

TEST_CASE("snap_delta_counterexample yields unequal displacements") {
    for (std::int64_t n : {2, 3, 4, 10, 20, 50}) {
        const auto [a, b] = ist::snap_delta_counterexample(n);
        CHECK(std::abs(ist::snap_delta(a, n) - ist::snap_delta(b, n)) > 1e-6);
    }
    CHECK_THROWS_AS(ist::snap_delta_counterexample(1), ist::PreconditionError);
}

TEST_CASE("continuous directions validate and normalise") {
    CHECK_THROWS_AS(ContinuousDirection(-0.1, 0.0), ist::PreconditionError);
    CHECK_THROWS_AS(ContinuousDirection(4.0, 0.0), ist::PreconditionError);
    CHECK(ContinuousDirection(1.0, -std::numbers::pi / 2).phi == doctest::Approx(3 * std::numbers::pi / 2));
}
