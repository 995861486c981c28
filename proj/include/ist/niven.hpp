#pragma once

/**
 * @file niven.hpp
 * @brief Rational angles and Niven's theorem.
 *
 * Angles are stored in turns (fractions of a full rotation) so rationality is
 * exact. Niven: if t is rational, cos(2*pi*t) is rational only when it is one
 * of 0, +-1/2, +-1, i.e. t mod 1 lies in {0, 1/6, 1/4, 1/3, 1/2, 2/3, 3/4, 5/6}.
 */

#include <array>
#include <optional>
#include <string>

#include "ist/rational.hpp"

namespace ist {

class RationalAngle {
public:
    RationalAngle() = default;
    /// Any rational number of turns; reduced into [0, 1).
    explicit RationalAngle(const Rational& turns) : turns_(turns.frac()) {}

    static RationalAngle from_fraction(Rational::int_type m, Rational::int_type p) {
        return RationalAngle(Rational(m, p));
    }

    [[nodiscard]] const Rational& turns() const noexcept { return turns_; }
    [[nodiscard]] double radians() const noexcept;

    friend RationalAngle operator+(const RationalAngle& a, const RationalAngle& b) {
        return RationalAngle(a.turns_ + b.turns_);
    }
    friend RationalAngle operator-(const RationalAngle& a, const RationalAngle& b) {
        return RationalAngle(a.turns_ - b.turns_);
    }
    friend bool operator==(const RationalAngle&, const RationalAngle&) = default;

private:
    Rational turns_;
};

/// The five rational values a rational angle's cosine can take.
inline const std::array<Rational, 5>& niven_cosines() {
    static const std::array<Rational, 5> values{Rational(0), Rational(1, 2), Rational(-1, 2), Rational(1),
                                                Rational(-1)};
    return values;
}

bool is_niven_cosine(const Rational& c);

/// Classification of cos(2*pi*t) for a rational angle t.
class NivenClass {
public:
    static NivenClass rational_cos(const Rational& value);
    static NivenClass irrational_cos() { return NivenClass(); }

    [[nodiscard]] bool is_rational() const noexcept { return value_.has_value(); }
    /// Only meaningful when is_rational().
    [[nodiscard]] const Rational& value() const { return value_.value(); }
    [[nodiscard]] std::string str() const;

    friend bool operator==(const NivenClass&, const NivenClass&) = default;

private:
    NivenClass() = default;
    std::optional<Rational> value_;
};

NivenClass classify_rational_angle(const RationalAngle& angle);

/// Inverse direction: the angle in [0, 1/2] turns with cosine c, present
/// only for the five Niven cosines. Throws PreconditionError when |c| > 1.
std::optional<RationalAngle> rational_angle_from_cosine(const Rational& c);

/// Sign of cos(2*pi*t) computed exactly from the quadrant of t.
int cosine_sign(const RationalAngle& angle);

}  // namespace ist
