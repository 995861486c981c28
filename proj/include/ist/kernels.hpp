#pragma once

/**
 * @file kernels.hpp
 * @brief Exhaustive sweeps behind the CLI `sweep` command, the property
 * tests and the benchmarks.
 *
 * Every kernel exists twice: `serial::` is the straightforward reference
 * loop, `parallel::` the OpenMP version. Both return identical results in
 * identical order; tests pin that equivalence.
 */

#include <cstdint>
#include <span>
#include <vector>

#include "ist/bloch.hpp"
#include "ist/experiments.hpp"

namespace ist::kernels {

/// Counterfactually admissible MZ phases among cos(phi) = n/p, n in [-p, p].
struct MzExclusion {
    std::int64_t p = 0;
    std::int64_t admissible = 0;
    std::int64_t total = 0;  ///< 2p + 1
    friend bool operator==(const MzExclusion&, const MzExclusion&) = default;
};

/// One Tsirelson-approach row.
struct TsirelsonRow {
    std::int64_t p = 0;
    Rational cosine;
    Rational s_value;
    double abs_error = 0.0;  ///< |S - 2 sqrt 2|
    friend bool operator==(const TsirelsonRow&, const TsirelsonRow&) = default;
};

/// Number of reduced m/q, 1 <= q <= max_den, 0 <= m < q, whose cosine is rational.
struct NivenTally {
    std::int64_t angles = 0;
    std::int64_t rational = 0;
    friend bool operator==(const NivenTally&, const NivenTally&) = default;
};

namespace serial {
MzExclusion mz_exclusion(std::int64_t p);
std::vector<MzExclusion> mz_exclusion_sweep(std::span<const std::int64_t> ps);
std::vector<TsirelsonRow> tsirelson_sweep(std::span<const std::int64_t> ps);
NivenTally niven_tally(std::int64_t max_den);
std::vector<GridDirection> snap_batch(std::span<const ContinuousDirection> dirs, std::int64_t resolution);
/// Number of (cosine a/b with b <= max_den, size <= max_size) where the
/// integrality precondition holds but chsh_correlation != -cosine.
std::int64_t chsh_exactness_violations(std::int64_t max_den, std::int64_t max_size);
}  // namespace serial

namespace parallel {
MzExclusion mz_exclusion(std::int64_t p);
std::vector<MzExclusion> mz_exclusion_sweep(std::span<const std::int64_t> ps);
std::vector<TsirelsonRow> tsirelson_sweep(std::span<const std::int64_t> ps);
NivenTally niven_tally(std::int64_t max_den);
std::vector<GridDirection> snap_batch(std::span<const ContinuousDirection> dirs, std::int64_t resolution);
std::int64_t chsh_exactness_violations(std::int64_t max_den, std::int64_t max_size);
}  // namespace parallel

/// Worker threads the parallel kernels will use (1 without OpenMP).
int thread_count();

}  // namespace ist::kernels
