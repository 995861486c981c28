#pragma once

/**
 * @file bloch.hpp
 * @brief The discretised Bloch sphere.
 *
 * DiscreteState (p, n, m): |amplitude of outcome 0|^2 = n/p, relative phase
 * 2*pi*m/p. GridDirection (N, j, k): latitudes uniform in cos(theta),
 * cos(theta) = 1 - 2j/N, longitudes phi = 2*pi*k/N; poles carry k = 0.
 */

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "ist/niven.hpp"
#include "ist/rational.hpp"

namespace ist {

class DiscreteState {
public:
    DiscreteState(std::int64_t p, std::int64_t n, std::int64_t m = 0);

    [[nodiscard]] std::int64_t p() const noexcept { return p_; }
    [[nodiscard]] std::int64_t n() const noexcept { return n_; }
    [[nodiscard]] std::int64_t m() const noexcept { return m_; }
    [[nodiscard]] RationalAngle phase() const { return RationalAngle::from_fraction(m_, p_); }
    [[nodiscard]] std::string str() const;

    friend bool operator==(const DiscreteState&, const DiscreteState&) = default;

private:
    std::int64_t p_;
    std::int64_t n_;
    std::int64_t m_;
};

/// n/p for outcome 0, (p - n)/p for outcome 1.
Rational born_probability(const DiscreteState& s, int outcome);

class GridDirection {
public:
    GridDirection(std::int64_t resolution, std::int64_t j, std::int64_t k);

    [[nodiscard]] std::int64_t resolution() const noexcept { return n_; }
    [[nodiscard]] std::int64_t j() const noexcept { return j_; }
    [[nodiscard]] std::int64_t k() const noexcept { return k_; }
    [[nodiscard]] bool is_pole() const noexcept { return j_ == 0 || j_ == n_; }

    [[nodiscard]] Rational cos_theta() const { return {n_ - 2 * j_, n_}; }
    [[nodiscard]] RationalAngle longitude() const { return RationalAngle::from_fraction(k_, n_); }
    [[nodiscard]] double theta() const;
    [[nodiscard]] double phi() const;
    [[nodiscard]] std::string str() const;

    friend bool operator==(const GridDirection&, const GridDirection&) = default;

private:
    std::int64_t n_;
    std::int64_t j_;
    std::int64_t k_;
};

struct ContinuousDirection {
    double theta = 0.0;  ///< colatitude, [0, pi]
    double phi = 0.0;    ///< longitude, [0, 2*pi)

    ContinuousDirection() = default;
    /// Normalises phi into [0, 2*pi); throws PreconditionError for theta outside [0, pi].
    ContinuousDirection(double theta_rad, double phi_rad);

    static ContinuousDirection from_grid(const GridDirection& g) { return {g.theta(), g.phi()}; }
    [[nodiscard]] std::array<double, 3> unit_vector() const;
};

/// Angle between two points on the sphere, in [0, pi].
double great_circle_angle(const ContinuousDirection& a, const ContinuousDirection& b);

/// cos of the angle between two grid directions when it is rational
/// (spherical law of cosines, decided exactly), otherwise std::nullopt.
std::optional<Rational> exact_relative_cosine(const GridDirection& dev, const GridDirection& prep);

/// The state of a qubit prepared along `prep` relative to a device along
/// `dev`: n/p = (1 + cos gamma)/2, phase = relative longitude. Present only
/// when both are exact multiples of 1/p.
std::optional<DiscreteState> state_between(const GridDirection& dev, const GridDirection& prep, std::int64_t p);

/// Nearest grid point by great-circle angle; ties go to smaller j, then k.
GridDirection snap_to_grid(const ContinuousDirection& d, std::int64_t resolution);

/// Great-circle angle between d and its snapped grid point.
double snap_delta(const ContinuousDirection& d, std::int64_t resolution);

/// Two directions whose snap displacements differ by more than 1e-6 rad.
std::pair<ContinuousDirection, ContinuousDirection> snap_delta_counterexample(std::int64_t resolution);

}  // namespace ist
