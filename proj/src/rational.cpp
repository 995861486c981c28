#include "ist/rational.hpp"

#include <charconv>
#include <cmath>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "ist/error.hpp"

namespace ist {
namespace {

using i64 = Rational::int_type;
__extension__ using i128 = __int128;

i64 checked_mul(i64 a, i64 b) {
    i64 out = 0;
    if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("Rational: multiplication overflow");
    return out;
}

i64 checked_add(i64 a, i64 b) {
    i64 out = 0;
    if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("Rational: addition overflow");
    return out;
}

i64 checked_neg(i64 a) {
    if (a == INT64_MIN) throw std::overflow_error("Rational: negation overflow");
    return -a;
}

i64 isqrt(i64 v) {
    auto r = static_cast<i64>(std::sqrt(static_cast<long double>(v)));
    while (r > 0 && r * r > v) --r;
    while ((r + 1) * (r + 1) <= v) ++r;
    return r;
}

}  // namespace

Rational::Rational(i64 num, i64 den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    if (den < 0) {
        num = checked_neg(num);
        den = checked_neg(den);
    }
    const i64 g = std::gcd(num, den);
    num_ = num / g;
    den_ = den / g;
}

Rational Rational::abs() const noexcept {
    Rational r = *this;
    if (r.num_ < 0) r.num_ = -r.num_;
    return r;
}

i64 Rational::floor() const noexcept {
    i64 q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return q;
}

Rational Rational::frac() const { return *this - Rational(floor()); }

std::string Rational::str() const {
    if (den_ == 1) return std::to_string(num_);
    return fraction_str();
}

std::string Rational::fraction_str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

Rational Rational::parse(std::string_view text) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
        return s;
    };
    auto parse_int = [&](std::string_view s) {
        s = trim(s);
        if (!s.empty() && s.front() == '+') s.remove_prefix(1);
        i64 v = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
            throw ParseError("not a rational: '" + std::string(text) + "'");
        return v;
    };
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    const i64 den = parse_int(text.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
    return {parse_int(text.substr(0, slash)), den};
}

Rational Rational::operator-() const {
    Rational r = *this;
    r.num_ = checked_neg(num_);
    return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
    // a/b + c/d with g = gcd(b, d) keeps intermediates small.
    const i64 g = std::gcd(den_, rhs.den_);
    const i64 lhs_scale = rhs.den_ / g;
    const i64 rhs_scale = den_ / g;
    const i64 num = checked_add(checked_mul(num_, lhs_scale), checked_mul(rhs.num_, rhs_scale));
    *this = Rational(num, checked_mul(den_, lhs_scale));
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) { return *this += -rhs; }

Rational& Rational::operator*=(const Rational& rhs) {
    const i64 g1 = std::gcd(num_, rhs.den_);
    const i64 g2 = std::gcd(rhs.num_, den_);
    const i64 n1 = g1 ? num_ / g1 : num_;
    const i64 d2 = g1 ? rhs.den_ / g1 : rhs.den_;
    const i64 n2 = g2 ? rhs.num_ / g2 : rhs.num_;
    const i64 d1 = g2 ? den_ / g2 : den_;
    *this = Rational(checked_mul(n1, n2), checked_mul(d1, d2));
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.num_ == 0) throw std::domain_error("Rational: division by zero");
    return *this *= Rational(rhs.den_, rhs.num_);
}

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
    const i128 a = static_cast<i128>(lhs.num_) * rhs.den_;
    const i128 b = static_cast<i128>(rhs.num_) * lhs.den_;
    if (a < b) return std::strong_ordering::less;
    if (a > b) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

std::optional<Rational> exact_sqrt(const Rational& r) {
    if (r.sign() < 0) return std::nullopt;
    const i64 n = isqrt(r.num());
    const i64 d = isqrt(r.den());
    if (n * n != r.num() || d * d != r.den()) return std::nullopt;
    return Rational(n, d);
}

}  // namespace ist
