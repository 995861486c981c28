#pragma once

/**
 * @file admissibility.hpp
 * @brief Rationality constraints on angles and the on/off-invariant-set decision.
 *
 * A measurement context demands either that an angle have a rational cosine
 * (squared amplitudes (1 +- cos)/2 are n/p) or that the angle itself be a
 * rational fraction of a turn (phases are m/p). A variable carrying both
 * demands is admissible only on Niven's five-value list.
 */

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "ist/niven.hpp"
#include "ist/rational.hpp"

namespace ist {

class AngleValue {
public:
    struct Cosine {
        Rational value;
        friend bool operator==(const Cosine&, const Cosine&) = default;
    };
    struct Unvalued {
        friend bool operator==(const Unvalued&, const Unvalued&) = default;
    };

    static AngleValue angle(const RationalAngle& a) { return AngleValue(a); }
    static AngleValue angle(const Rational& turns) { return AngleValue(RationalAngle(turns)); }
    /// Throws PreconditionError unless -1 <= c <= 1.
    static AngleValue cosine(const Rational& c);
    static AngleValue unvalued() { return AngleValue(Unvalued{}); }

    [[nodiscard]] bool is_angle() const noexcept { return std::holds_alternative<RationalAngle>(value_); }
    [[nodiscard]] bool is_cosine() const noexcept { return std::holds_alternative<Cosine>(value_); }
    [[nodiscard]] bool is_unvalued() const noexcept { return std::holds_alternative<Unvalued>(value_); }
    [[nodiscard]] const RationalAngle& as_angle() const { return std::get<RationalAngle>(value_); }
    [[nodiscard]] const Rational& as_cosine() const { return std::get<Cosine>(value_).value; }

    /// "angle 1/6 turn", "cos 3/5", "unvalued"
    [[nodiscard]] std::string str() const;

    friend bool operator==(const AngleValue&, const AngleValue&) = default;

private:
    using Storage = std::variant<RationalAngle, Cosine, Unvalued>;
    explicit AngleValue(Storage v) : value_(std::move(v)) {}
    Storage value_;
};

enum class ConstraintKind { CosineRational, AngleRational };

std::string to_string(ConstraintKind kind);

struct Constraint {
    ConstraintKind kind;
    std::string target;
    friend bool operator==(const Constraint&, const Constraint&) = default;
};

class ConstraintSet {
public:
    using Variable = std::pair<std::string, AngleValue>;

    /// Declares (or re-values) a variable; declaration order is preserved.
    ConstraintSet& declare(const std::string& name, const AngleValue& value);
    /// Adds a constraint; a repeated (kind, target) pair is a no-op.
    /// Throws PreconditionError for an undeclared target.
    ConstraintSet& require(ConstraintKind kind, const std::string& target);

    /// Union of two sets over the same variables (compound counterfactuals).
    [[nodiscard]] ConstraintSet merged_with(const ConstraintSet& other) const;

    [[nodiscard]] const std::vector<Variable>& variables() const noexcept { return variables_; }
    [[nodiscard]] const std::vector<Constraint>& constraints() const noexcept { return constraints_; }
    [[nodiscard]] bool declares(const std::string& name) const;
    [[nodiscard]] bool has(ConstraintKind kind, const std::string& target) const;

private:
    std::vector<Variable> variables_;
    std::vector<Constraint> constraints_;
};

struct OnSet {
    friend bool operator==(const OnSet&, const OnSet&) = default;
};

struct OffSet {
    std::string variable;
    AngleValue value;
    ConstraintKind violated;
    std::string explanation;
    friend bool operator==(const OffSet&, const OffSet&) = default;
};

struct NivenConditional {
    std::string variable;
    friend bool operator==(const NivenConditional&, const NivenConditional&) = default;
};

using Verdict = std::variant<OnSet, OffSet, NivenConditional>;

[[nodiscard]] inline bool is_on_set(const Verdict& v) noexcept { return std::holds_alternative<OnSet>(v); }
[[nodiscard]] inline bool is_off_set(const Verdict& v) noexcept { return std::holds_alternative<OffSet>(v); }

/// "OnSet" | "OffSet" | "NivenConditional"
std::string verdict_name(const Verdict& v);

Verdict check(const ConstraintSet& cs);

/// Deterministic human-readable rendering of a verdict.
std::vector<std::string> explain(const Verdict& v);

}  // namespace ist
