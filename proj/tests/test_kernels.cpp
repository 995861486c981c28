#include <doctest.h>

#include <numbers>
#include <random>

#include "ist/error.hpp"
#include "ist/kernels.hpp"

using namespace ist;

TEST_CASE("parallel kernels reproduce the serial reference") {
    const std::vector<std::int64_t> ps{2, 3, 12, 101, 360, 1009};
    CHECK(kernels::parallel::mz_exclusion_sweep(ps) == kernels::serial::mz_exclusion_sweep(ps));
    CHECK(kernels::parallel::tsirelson_sweep(ps) == kernels::serial::tsirelson_sweep(ps));
    CHECK(kernels::parallel::niven_tally(200) == kernels::serial::niven_tally(200));
    CHECK(kernels::parallel::chsh_exactness_violations(12, 500) == kernels::serial::chsh_exactness_violations(12, 500));

    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> z(-1.0, 1.0);
    std::uniform_real_distribution<double> phi(0.0, 2 * std::numbers::pi);
    std::vector<ContinuousDirection> dirs;
    for (int i = 0; i < 2000; ++i) dirs.emplace_back(std::acos(z(rng)), phi(rng));
    CHECK(kernels::parallel::snap_batch(dirs, 17) == kernels::serial::snap_batch(dirs, 17));
}

TEST_CASE("niven tally counts the eight Niven angles") {
    const auto t = kernels::serial::niven_tally(360);
    CHECK(t.rational == 8);
    CHECK(t.angles == 39454);
}

TEST_CASE("kernels validate parameters before running") {
    CHECK_THROWS_AS(kernels::parallel::mz_exclusion(1), PreconditionError);
    const std::vector<std::int64_t> bad{100, 1};
    CHECK_THROWS_AS(kernels::parallel::tsirelson_sweep(bad), PreconditionError);
    CHECK_THROWS_AS(kernels::parallel::snap_batch({}, 1), PreconditionError);
    CHECK(kernels::parallel::mz_exclusion_sweep({}).empty());
    CHECK(kernels::thread_count() >= 1);
}
