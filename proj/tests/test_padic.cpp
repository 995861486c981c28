#include <doctest.h>

#include <random>

#include "ist/error.hpp"
#include "ist/padic.hpp"
#include "oracles.hpp"

using ist::TrajectoryLabel;

TEST_CASE("padic_valuation examples") {
    CHECK(ist::padic_valuation(9, 3) == 2U);
    CHECK(ist::padic_valuation(10, 5) == 1U);
    CHECK_FALSE(ist::padic_valuation(0, 7).has_value());
    CHECK(ist::padic_valuation(-48, 2) == 4U);
    CHECK(ist::padic_valuation(7, 2) == 0U);
    CHECK_THROWS_AS(ist::padic_valuation(4, 1), ist::PreconditionError);
}

TEST_CASE("trajectory_distance examples") {
    const TrajectoryLabel a(2, {1, 0, 1});
    CHECK(ist::trajectory_distance(a, TrajectoryLabel(2, {1, 0, 1})) == 0);
    CHECK(ist::trajectory_distance(a, TrajectoryLabel(2, {0, 0, 1})) == 4);
    CHECK(ist::trajectory_distance(TrajectoryLabel(10, {3, 1, 4, 1, 5, 9}), TrajectoryLabel(10, {3, 1, 4, 1, 5, 2})) ==
          1);
}

TEST_CASE("labels validate their digits and comparability") {
    CHECK_THROWS_AS(TrajectoryLabel(5, {0, 5}), ist::PreconditionError);
    CHECK_THROWS_AS(TrajectoryLabel(1, {0}), ist::PreconditionError);
    CHECK_THROWS_AS(TrajectoryLabel(5, {}), ist::PreconditionError);
    CHECK_THROWS_AS(ist::trajectory_distance(TrajectoryLabel(5, {0, 1}), TrajectoryLabel(7, {0, 1})),
                    ist::PreconditionError);
    CHECK_THROWS_AS(ist::trajectory_distance(TrajectoryLabel(5, {0, 1}), TrajectoryLabel(5, {0, 1, 2})),
                    ist::PreconditionError);
}

TEST_CASE("onset_membership convention") {
    CHECK(ist::onset_membership(TrajectoryLabel(5, {0, 3, 1})));
    CHECK_FALSE(ist::onset_membership(TrajectoryLabel(5, {2, 3, 1})));
    CHECK(ist::onset_membership(TrajectoryLabel(9, {0})));
}

TEST_CASE("distance matches the brute-force oracle on every pair of small labels") {
    for (std::uint32_t p : {2U, 3U}) {
        const std::size_t k = 4;
        std::vector<std::vector<std::uint32_t>> all;
        std::size_t total = 1;
        for (std::size_t i = 0; i < k; ++i) total *= p;
        for (std::size_t code = 0; code < total; ++code) {
            std::vector<std::uint32_t> digits(k);
            std::size_t c = code;
            for (std::size_t i = k; i-- > 0;) {
                digits[i] = static_cast<std::uint32_t>(c % p);
                c /= p;
            }
            all.push_back(digits);
        }
        for (const auto& a : all) {
            for (const auto& b : all) {
                CHECK(ist::trajectory_distance(TrajectoryLabel(p, a), TrajectoryLabel(p, b)) ==
                      ist::oracle::brute_distance(p, a, b));
            }
        }
    }
}

namespace {

TrajectoryLabel random_label(std::mt19937_64& rng, std::uint32_t p, std::size_t k) {
    // Few distinct digits so that long common prefixes actually occur.
    std::uniform_int_distribution<std::uint32_t> digit(0, std::min<std::uint32_t>(p - 1, 2));
    std::vector<std::uint32_t> d(k);
    for (auto& x : d) x = digit(rng);
    return {p, d};
}

}  // namespace

TEST_CASE("ultrametric, symmetry and identity of indiscernibles on fuzzed triples") {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<std::uint32_t> base(2, 50);
    std::uniform_int_distribution<std::size_t> len(1, 6);
    for (int i = 0; i < 10000; ++i) {
        const auto p = base(rng);
        const auto k = len(rng);
        const auto x = random_label(rng, p, k);
        const auto y = random_label(rng, p, k);
        const auto z = random_label(rng, p, k);
        const auto dxy = ist::trajectory_distance(x, y);
        const auto dyz = ist::trajectory_distance(y, z);
        const auto dxz = ist::trajectory_distance(x, z);
        CHECK(dxz <= std::max(dxy, dyz));
        CHECK(dxy == ist::trajectory_distance(y, x));
        CHECK((dxy == 0) == (x == y));
    }
}

TEST_CASE("on-set to off-set distance is the full gap p^(k-1)") {
    for (std::uint32_t p = 2; p <= 12; ++p) {
        for (std::size_t k = 2; k <= 5; ++k) {
            std::mt19937_64 rng(p * 31 + k);
            for (int i = 0; i < 50; ++i) {
                auto on = random_label(rng, p, k).with_digit(0, 0);
                auto off = random_label(rng, p, k).with_digit(0, 1 + static_cast<std::uint32_t>(i) % (p - 1));
                REQUIRE(ist::onset_membership(on));
                REQUIRE_FALSE(ist::onset_membership(off));
                const auto d = ist::trajectory_distance(on, off);
                CHECK(d == ist::checked_pow(p, static_cast<unsigned>(k - 1)));
                CHECK(d >= p);
            }
        }
    }
}
