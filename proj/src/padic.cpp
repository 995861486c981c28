#include "ist/padic.hpp"

#include <sstream>

#include "ist/error.hpp"

namespace ist {

std::optional<unsigned> padic_valuation(std::int64_t x, std::int64_t p) {
    if (p < 2) throw PreconditionError("padic_valuation: base must be >= 2, got " + std::to_string(p));
    if (x == 0) return std::nullopt;
    unsigned e = 0;
    while (x % p == 0) {
        x /= p;
        ++e;
    }
    return e;
}

std::uint64_t checked_pow(std::uint64_t p, unsigned e) {
    std::uint64_t out = 1;
    for (unsigned i = 0; i < e; ++i) {
        if (__builtin_mul_overflow(out, p, &out)) throw std::overflow_error("checked_pow: overflow");
    }
    return out;
}

TrajectoryLabel::TrajectoryLabel(std::uint32_t base, std::vector<std::uint32_t> digits)
    : base_(base), digits_(std::move(digits)) {
    if (base_ < 2) throw PreconditionError("TrajectoryLabel: base must be >= 2");
    if (digits_.empty()) throw PreconditionError("TrajectoryLabel: at least one digit required");
    for (auto d : digits_) {
        if (d >= base_)
            throw PreconditionError("TrajectoryLabel: digit " + std::to_string(d) + " out of range for base " +
                                    std::to_string(base_));
    }
}

TrajectoryLabel TrajectoryLabel::with_digit(std::size_t i, std::uint32_t value) const {
    auto digits = digits_;
    digits.at(i) = value;
    return {base_, std::move(digits)};
}

std::string TrajectoryLabel::str() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < digits_.size(); ++i) os << (i ? "," : "") << digits_[i];
    os << ")_" << base_;
    return os.str();
}

std::uint64_t trajectory_distance(const TrajectoryLabel& a, const TrajectoryLabel& b) {
    if (a.base() != b.base() || a.size() != b.size())
        throw PreconditionError("trajectory_distance: labels " + a.str() + " and " + b.str() +
                                " differ in base or length");
    const std::size_t k = a.size();
    for (std::size_t i = 0; i < k; ++i) {
        if (a[i] != b[i]) return checked_pow(a.base(), static_cast<unsigned>(k - 1 - i));
    }
    return 0;
}

bool onset_membership(const TrajectoryLabel& label) noexcept { return label.digits().front() == 0; }

}  // namespace ist
