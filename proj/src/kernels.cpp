#include "ist/kernels.hpp"

#include <cmath>
#include <numeric>
#include <optional>

#include "ist/error.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ist::kernels {
namespace {

bool mz_jointly_admissible(std::int64_t n, std::int64_t p) {
    const MZConfig cfg{AngleValue::cosine(Rational(n, p)), 1};
    return is_on_set(mach_zehnder_analysis(cfg).counterfactual_verdict);
}

void require_p(std::int64_t p) {
    if (p < 2) throw PreconditionError("discretisation parameter p must be >= 2, got " + std::to_string(p));
}

TsirelsonRow tsirelson_row(std::int64_t p) {
    const CHSHConfig cfg = tsirelson_config(p);
    std::array<Rational, 4> cosines;
    std::array<std::int64_t, 4> sizes{};
    for (std::size_t i = 0; i < kChshPairs.size(); ++i) {
        cosines[i] = cfg.relative_cosines.at(kChshPairs[i]);
        sizes[i] = cfg.ensemble_sizes.at(kChshPairs[i]);
    }
    const Rational s = chsh_s_value(cosines, sizes);
    return {p, cosines[1], s, std::abs(s.to_double() - 2.0 * std::sqrt(2.0))};
}

std::int64_t niven_row(std::int64_t q) {
    std::int64_t rational = 0;
    for (std::int64_t m = 0; m < q; ++m) {
        if (std::gcd(m, q) == 1 && classify_rational_angle(RationalAngle::from_fraction(m, q)).is_rational())
            ++rational;
    }
    return rational;
}

std::int64_t reduced_count(std::int64_t q) {
    std::int64_t count = 0;
    for (std::int64_t m = 0; m < q; ++m) count += std::gcd(m, q) == 1;
    return count;
}

// Every size is tried; the integrality filter picks the valid ones.
std::int64_t chsh_row_violations(std::int64_t b, std::int64_t max_size) {
    std::int64_t bad = 0;
    for (std::int64_t a = -b; a <= b; ++a) {
        if (std::gcd(a, b) != 1) continue;
        const Rational c(a, b);
        for (std::int64_t s = 1; s <= max_size; ++s) {
            const Rational same = Rational(s) * (Rational(1) - c) / Rational(4);
            const Rational opp = Rational(s) * (Rational(1) + c) / Rational(4);
            if (!same.is_integer() || !opp.is_integer()) continue;
            if (chsh_correlation(c, s) != -c) ++bad;
        }
    }
    return bad;
}

}  // namespace

int thread_count() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

namespace serial {

MzExclusion mz_exclusion(std::int64_t p) {
    require_p(p);
    std::int64_t admissible = 0;
    for (std::int64_t n = -p; n <= p; ++n) admissible += mz_jointly_admissible(n, p);
    return {p, admissible, 2 * p + 1};
}

std::vector<MzExclusion> mz_exclusion_sweep(std::span<const std::int64_t> ps) {
    std::vector<MzExclusion> out;
    out.reserve(ps.size());
    for (auto p : ps) out.push_back(mz_exclusion(p));
    return out;
}

std::vector<TsirelsonRow> tsirelson_sweep(std::span<const std::int64_t> ps) {
    std::vector<TsirelsonRow> out;
    out.reserve(ps.size());
    for (auto p : ps) {
        require_p(p);
        out.push_back(tsirelson_row(p));
    }
    return out;
}

NivenTally niven_tally(std::int64_t max_den) {
    NivenTally t;
    for (std::int64_t q = 1; q <= max_den; ++q) {
        t.angles += reduced_count(q);
        t.rational += niven_row(q);
    }
    return t;
}

std::vector<GridDirection> snap_batch(std::span<const ContinuousDirection> dirs, std::int64_t resolution) {
    std::vector<GridDirection> out;
    out.reserve(dirs.size());
    for (const auto& d : dirs) out.push_back(snap_to_grid(d, resolution));
    return out;
}

std::int64_t chsh_exactness_violations(std::int64_t max_den, std::int64_t max_size) {
    std::int64_t bad = 0;
    for (std::int64_t b = 1; b <= max_den; ++b) bad += chsh_row_violations(b, max_size);
    return bad;
}

}  // namespace serial

namespace parallel {

// Preconditions are validated before entering a parallel region; nothing
// inside the loops below throws for validated input.

MzExclusion mz_exclusion(std::int64_t p) {
    require_p(p);
    std::int64_t admissible = 0;
#pragma omp parallel for reduction(+ : admissible) schedule(static)
    for (std::int64_t n = -p; n <= p; ++n) admissible += mz_jointly_admissible(n, p);
    return {p, admissible, 2 * p + 1};
}

std::vector<MzExclusion> mz_exclusion_sweep(std::span<const std::int64_t> ps) {
    std::vector<MzExclusion> out;
    out.reserve(ps.size());
    for (auto p : ps) out.push_back(mz_exclusion(p));
    return out;
}

std::vector<TsirelsonRow> tsirelson_sweep(std::span<const std::int64_t> ps) {
    for (auto p : ps) require_p(p);
    std::vector<TsirelsonRow> out(ps.size());
    const auto count = static_cast<std::int64_t>(ps.size());
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < count; ++i) out[static_cast<std::size_t>(i)] = tsirelson_row(ps[static_cast<std::size_t>(i)]);
    return out;
}

NivenTally niven_tally(std::int64_t max_den) {
    std::int64_t angles = 0;
    std::int64_t rational = 0;
#pragma omp parallel for reduction(+ : angles, rational) schedule(dynamic, 8)
    for (std::int64_t q = 1; q <= max_den; ++q) {
        angles += reduced_count(q);
        rational += niven_row(q);
    }
    return {angles, rational};
}

std::vector<GridDirection> snap_batch(std::span<const ContinuousDirection> dirs, std::int64_t resolution) {
    if (resolution < 2) throw PreconditionError("grid resolution N must be >= 2");
    std::vector<std::optional<GridDirection>> slots(dirs.size());
    const auto count = static_cast<std::int64_t>(dirs.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < count; ++i) {
        const auto idx = static_cast<std::size_t>(i);
        slots[idx] = snap_to_grid(dirs[idx], resolution);
    }
    std::vector<GridDirection> out;
    out.reserve(dirs.size());
    for (auto& s : slots) out.push_back(*s);
    return out;
}

std::int64_t chsh_exactness_violations(std::int64_t max_den, std::int64_t max_size) {
    std::int64_t bad = 0;
#pragma omp parallel for reduction(+ : bad) schedule(dynamic)
    for (std::int64_t b = 1; b <= max_den; ++b) bad += chsh_row_violations(b, max_size);
    return bad;
}

}  // namespace parallel
}  // namespace ist::kernels
