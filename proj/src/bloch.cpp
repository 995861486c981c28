#include "ist/bloch.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "ist/error.hpp"

namespace ist {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_resolution(std::int64_t resolution) {
    if (resolution < 2) throw PreconditionError("grid resolution N must be >= 2, got " + std::to_string(resolution));
}

std::vector<ContinuousDirection> fibonacci_sphere(int count) {
    const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
    std::vector<ContinuousDirection> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        const double z = 1.0 - (2.0 * i + 1.0) / count;
        out.emplace_back(std::acos(z), std::fmod(golden * i, kTwoPi));
    }
    return out;
}

}  // namespace

DiscreteState::DiscreteState(std::int64_t p, std::int64_t n, std::int64_t m) : p_(p), n_(n), m_(m) {
    if (p_ < 1) throw PreconditionError("DiscreteState: p must be positive");
    if (n_ < 0 || n_ > p_) throw PreconditionError("DiscreteState: n must lie in [0, p]");
    if (m_ < 0 || m_ >= p_) throw PreconditionError("DiscreteState: m must lie in [0, p)");
}

std::string DiscreteState::str() const {
    return "(p=" + std::to_string(p_) + ", n=" + std::to_string(n_) + ", m=" + std::to_string(m_) + ")";
}

Rational born_probability(const DiscreteState& s, int outcome) {
    if (outcome == 0) return {s.n(), s.p()};
    if (outcome == 1) return {s.p() - s.n(), s.p()};
    throw PreconditionError("born_probability: outcome must be 0 or 1");
}

GridDirection::GridDirection(std::int64_t resolution, std::int64_t j, std::int64_t k)
    : n_(resolution), j_(j), k_(k) {
    require_resolution(resolution);
    if (j_ < 0 || j_ > n_) throw PreconditionError("GridDirection: j out of [0, N]");
    if (k_ < 0 || k_ >= n_) throw PreconditionError("GridDirection: k out of [0, N)");
    if (is_pole()) k_ = 0;
}

double GridDirection::theta() const { return std::acos(cos_theta().to_double()); }

double GridDirection::phi() const { return kTwoPi * static_cast<double>(k_) / static_cast<double>(n_); }

std::string GridDirection::str() const {
    return "(N=" + std::to_string(n_) + ", j=" + std::to_string(j_) + ", k=" + std::to_string(k_) + ")";
}

ContinuousDirection::ContinuousDirection(double theta_rad, double phi_rad) : theta(theta_rad), phi(phi_rad) {
    if (!(theta >= 0.0 && theta <= std::numbers::pi))
        throw PreconditionError("ContinuousDirection: theta must lie in [0, pi]");
    if (!std::isfinite(phi)) throw PreconditionError("ContinuousDirection: phi must be finite");
    phi = std::fmod(phi, kTwoPi);
    if (phi < 0.0) phi += kTwoPi;
    if (phi >= kTwoPi) phi = 0.0;
}

std::array<double, 3> ContinuousDirection::unit_vector() const {
    const double s = std::sin(theta);
    return {s * std::cos(phi), s * std::sin(phi), std::cos(theta)};
}

double great_circle_angle(const ContinuousDirection& a, const ContinuousDirection& b) {
    const auto u = a.unit_vector();
    const auto v = b.unit_vector();
    const double cx = u[1] * v[2] - u[2] * v[1];
    const double cy = u[2] * v[0] - u[0] * v[2];
    const double cz = u[0] * v[1] - u[1] * v[0];
    const double dot = u[0] * v[0] + u[1] * v[1] + u[2] * v[2];
    return std::atan2(std::sqrt(cx * cx + cy * cy + cz * cz), dot);
}

std::optional<Rational> exact_relative_cosine(const GridDirection& dev, const GridDirection& prep) {
    if (dev.resolution() != prep.resolution())
        throw PreconditionError("state_between: grid resolutions differ");
    // cos g = c1 c2 + s1 s2 cos(dphi), with s_i = sqrt(1 - c_i^2) >= 0.
    const Rational c1 = dev.cos_theta();
    const Rational c2 = prep.cos_theta();
    const Rational sin_sq_product = (Rational(1) - c1 * c1) * (Rational(1) - c2 * c2);
    const RationalAngle dphi = dev.longitude() - prep.longitude();
    const int sign = cosine_sign(dphi);
    if (sin_sq_product.is_zero() || sign == 0) return c1 * c2;

    // The cross term squared is s1^2 s2^2 cos^2(dphi); cos^2 = (1 + cos 2dphi)/2
    // is rational only when 2*dphi is a Niven angle.
    const NivenClass doubled = classify_rational_angle(dphi + dphi);
    if (!doubled.is_rational()) return std::nullopt;
    const Rational cos_sq = (Rational(1) + doubled.value()) / Rational(2);
    const auto cross = exact_sqrt(sin_sq_product * cos_sq);
    if (!cross) return std::nullopt;
    return c1 * c2 + (sign > 0 ? *cross : -*cross);
}

std::optional<DiscreteState> state_between(const GridDirection& dev, const GridDirection& prep, std::int64_t p) {
    if (p < 1) throw PreconditionError("state_between: p must be positive");
    const auto cos_gamma = exact_relative_cosine(dev, prep);
    if (!cos_gamma) return std::nullopt;
    const Rational prob = (Rational(1) + *cos_gamma) / Rational(2);
    const Rational azimuth = (dev.longitude() - prep.longitude()).turns();
    if (p % prob.den() != 0 || p % azimuth.den() != 0) return std::nullopt;
    return DiscreteState(p, prob.num() * (p / prob.den()), azimuth.num() * (p / azimuth.den()));
}

GridDirection snap_to_grid(const ContinuousDirection& d, std::int64_t resolution) {
    require_resolution(resolution);
    // On a fixed latitude the angle grows with |dphi|, so only the two
    // bracketing longitudes can be nearest.
    const double cell = d.phi * static_cast<double>(resolution) / kTwoPi;
    auto k_lo = static_cast<std::int64_t>(std::floor(cell)) % resolution;
    if (k_lo < 0) k_lo += resolution;
    const std::int64_t k_hi = (k_lo + 1) % resolution;
    const std::int64_t k_first = std::min(k_lo, k_hi);
    const std::int64_t k_second = std::max(k_lo, k_hi);

    GridDirection best(resolution, 0, 0);
    double best_angle = great_circle_angle(d, ContinuousDirection::from_grid(best));
    for (std::int64_t j = 1; j <= resolution; ++j) {
        for (const std::int64_t k : {k_first, k_second}) {
            const GridDirection g(resolution, j, k);
            if (g.is_pole() && k != k_first) continue;
            const double angle = great_circle_angle(d, ContinuousDirection::from_grid(g));
            if (angle < best_angle) {
                best = g;
                best_angle = angle;
            }
        }
    }
    return best;
}

double snap_delta(const ContinuousDirection& d, std::int64_t resolution) {
    return great_circle_angle(d, ContinuousDirection::from_grid(snap_to_grid(d, resolution)));
}

std::pair<ContinuousDirection, ContinuousDirection> snap_delta_counterexample(std::int64_t resolution) {
    require_resolution(resolution);
    constexpr double kMinGap = 1e-6;
    const auto candidates = fibonacci_sphere(100);
    std::vector<double> deltas;
    deltas.reserve(candidates.size());
    for (const auto& c : candidates) deltas.push_back(snap_delta(c, resolution));
    for (std::size_t a = 0; a < candidates.size(); ++a) {
        for (std::size_t b = a + 1; b < candidates.size(); ++b) {
            if (std::abs(deltas[a] - deltas[b]) > kMinGap) return {candidates[a], candidates[b]};
        }
    }
    // Every candidate snapped with the same offset; the north pole is exact.
    for (std::size_t a = 0; a < candidates.size(); ++a) {
        if (deltas[a] > kMinGap) return {ContinuousDirection(0.0, 0.0), candidates[a]};
    }
    throw std::logic_error("snap_delta_counterexample: no witness found");
}

}  // namespace ist
