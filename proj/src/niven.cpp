#include "ist/niven.hpp"

#include <algorithm>
#include <numbers>

#include "ist/error.hpp"

namespace ist {

double RationalAngle::radians() const noexcept { return 2.0 * std::numbers::pi * turns_.to_double(); }

bool is_niven_cosine(const Rational& c) {
    const auto& list = niven_cosines();
    return std::find(list.begin(), list.end(), c) != list.end();
}

NivenClass NivenClass::rational_cos(const Rational& value) {
    if (!is_niven_cosine(value))
        throw PreconditionError("NivenClass: " + value.str() + " is not a rational cosine of a rational angle");
    NivenClass c;
    c.value_ = value;
    return c;
}

std::string NivenClass::str() const { return value_ ? "RationalCos(" + value_->str() + ")" : "IrrationalCos"; }

NivenClass classify_rational_angle(const RationalAngle& angle) {
    // cos(2*pi*m/q) is rational exactly for reduced denominators q in {1, 2, 3, 4, 6}.
    const Rational& t = angle.turns();
    switch (t.den()) {
        case 1:
            return NivenClass::rational_cos(1);
        case 2:
            return NivenClass::rational_cos(-1);
        case 3:
            return NivenClass::rational_cos(Rational(-1, 2));
        case 4:
            return NivenClass::rational_cos(0);
        case 6:
            return NivenClass::rational_cos(Rational(1, 2));
        default:
            return NivenClass::irrational_cos();
    }
}

std::optional<RationalAngle> rational_angle_from_cosine(const Rational& c) {
    if (c.abs() > Rational(1)) throw PreconditionError("cosine " + c.str() + " outside [-1, 1]");
    if (c == Rational(1)) return RationalAngle(Rational(0));
    if (c == Rational(1, 2)) return RationalAngle(Rational(1, 6));
    if (c == Rational(0)) return RationalAngle(Rational(1, 4));
    if (c == Rational(-1, 2)) return RationalAngle(Rational(1, 3));
    if (c == Rational(-1)) return RationalAngle(Rational(1, 2));
    return std::nullopt;
}

int cosine_sign(const RationalAngle& angle) {
    const Rational& t = angle.turns();
    const Rational quarter(1, 4);
    const Rational three_quarters(3, 4);
    if (t == quarter || t == three_quarters) return 0;
    return (t < quarter || t > three_quarters) ? 1 : -1;
}

}  // namespace ist
