#pragma once

/**
 * @file rational.hpp
 * @brief Exact rational numbers over 64-bit integers.
 *
 * Values are always stored reduced: gcd(|num|, den) == 1, den > 0 and zero
 * is 0/1, so structural equality is value equality. Every arithmetic
 * operation is overflow-checked and throws std::overflow_error instead of
 * wrapping.
 */

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace ist {

class Rational {
public:
    using int_type = std::int64_t;

    constexpr Rational() noexcept = default;
    Rational(int_type value) noexcept : num_(value), den_(1) {}  // NOLINT: implicit by design of the number tower
    Rational(int_type num, int_type den);

    [[nodiscard]] int_type num() const noexcept { return num_; }
    [[nodiscard]] int_type den() const noexcept { return den_; }

    [[nodiscard]] bool is_zero() const noexcept { return num_ == 0; }
    [[nodiscard]] bool is_integer() const noexcept { return den_ == 1; }
    [[nodiscard]] int sign() const noexcept { return (num_ > 0) - (num_ < 0); }

    [[nodiscard]] Rational abs() const noexcept;
    /// Largest integer <= *this.
    [[nodiscard]] int_type floor() const noexcept;
    /// Fractional part in [0, 1).
    [[nodiscard]] Rational frac() const;

    [[nodiscard]] double to_double() const noexcept {
        return static_cast<double>(num_) / static_cast<double>(den_);
    }

    /// "num/den", or just "num" when den == 1.
    [[nodiscard]] std::string str() const;
    /// Always "num/den", used by the serializers so exact values never
    /// change shape between integers and fractions.
    [[nodiscard]] std::string fraction_str() const;

    /// Accepts "a", "a/b", "-a/b" with optional surrounding whitespace.
    static Rational parse(std::string_view text);

    Rational operator-() const;
    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational&, const Rational&) noexcept = default;
    friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs);

private:
    int_type num_ = 0;
    int_type den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Exact non-negative square root when r is the square of a rational.
std::optional<Rational> exact_sqrt(const Rational& r);

}  // namespace ist
