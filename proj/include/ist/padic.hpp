#pragma once

/**
 * @file padic.hpp
 * @brief p-adic valuation and the ultrametric on trajectory labels.
 *
 * A TrajectoryLabel is a fixed-length base-p digit string, most significant
 * digit first. Two labels first differing at index i are p^(k-1-i) apart, so
 * a difference in the leading (top fractal branch) digit gives the maximal
 * distance p^(k-1). Labels whose leading digit is 0 are taken to lie on the
 * invariant set.
 */

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ist {

/// v_p(x); std::nullopt stands for +infinity (x == 0).
std::optional<unsigned> padic_valuation(std::int64_t x, std::int64_t p);

/// p^e with overflow check.
std::uint64_t checked_pow(std::uint64_t p, unsigned e);

class TrajectoryLabel {
public:
    TrajectoryLabel(std::uint32_t base, std::vector<std::uint32_t> digits);

    [[nodiscard]] std::uint32_t base() const noexcept { return base_; }
    [[nodiscard]] std::size_t size() const noexcept { return digits_.size(); }
    [[nodiscard]] std::span<const std::uint32_t> digits() const noexcept { return digits_; }
    [[nodiscard]] std::uint32_t operator[](std::size_t i) const { return digits_.at(i); }

    /// Copy with digit i replaced.
    [[nodiscard]] TrajectoryLabel with_digit(std::size_t i, std::uint32_t value) const;

    /// e.g. "(0,3,1)_5"
    [[nodiscard]] std::string str() const;

    friend bool operator==(const TrajectoryLabel&, const TrajectoryLabel&) = default;

private:
    std::uint32_t base_;
    std::vector<std::uint32_t> digits_;
};

/// 0 when equal, else p^(k-1-i) for the first differing index i.
std::uint64_t trajectory_distance(const TrajectoryLabel& a, const TrajectoryLabel& b);

/// On-set convention: leading digit equals 0.
bool onset_membership(const TrajectoryLabel& label) noexcept;

}  // namespace ist
