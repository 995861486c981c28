#include "ist/admissibility.hpp"

#include <algorithm>
#include <optional>

#include "ist/error.hpp"

namespace ist {
namespace {

std::string niven_list_text() {
    std::string out = "{";
    bool first = true;
    for (const auto& c : niven_cosines()) {
        out += (first ? "" : ", ") + c.str();
        first = false;
    }
    return out + "}";
}

}  // namespace

AngleValue AngleValue::cosine(const Rational& c) {
    if (c.abs() > Rational(1)) throw PreconditionError("cosine " + c.str() + " outside [-1, 1]");
    return AngleValue(Cosine{c});
}

std::string AngleValue::str() const {
    if (is_angle()) return "angle " + as_angle().turns().str() + " turn";
    if (is_cosine()) return "cos " + as_cosine().str();
    return "unvalued";
}

std::string to_string(ConstraintKind kind) {
    return kind == ConstraintKind::CosineRational ? "CosineRational" : "AngleRational";
}

ConstraintSet& ConstraintSet::declare(const std::string& name, const AngleValue& value) {
    auto it = std::find_if(variables_.begin(), variables_.end(), [&](const auto& v) { return v.first == name; });
    if (it != variables_.end())
        it->second = value;
    else
        variables_.emplace_back(name, value);
    return *this;
}

ConstraintSet& ConstraintSet::require(ConstraintKind kind, const std::string& target) {
    if (!declares(target)) throw PreconditionError("constraint targets undeclared variable '" + target + "'");
    if (!has(kind, target)) constraints_.push_back({kind, target});
    return *this;
}

ConstraintSet ConstraintSet::merged_with(const ConstraintSet& other) const {
    ConstraintSet out = *this;
    for (const auto& [name, value] : other.variables_) {
        if (out.declares(name)) {
            const auto& mine = std::find_if(out.variables_.begin(), out.variables_.end(),
                                            [&](const auto& v) { return v.first == name; })
                                   ->second;
            if (!(mine == value))
                throw PreconditionError("cannot merge constraint sets: variable '" + name + "' valued differently");
        } else {
            out.declare(name, value);
        }
    }
    for (const auto& c : other.constraints_) out.require(c.kind, c.target);
    return out;
}

bool ConstraintSet::declares(const std::string& name) const {
    return std::any_of(variables_.begin(), variables_.end(), [&](const auto& v) { return v.first == name; });
}

bool ConstraintSet::has(ConstraintKind kind, const std::string& target) const {
    return std::find(constraints_.begin(), constraints_.end(), Constraint{kind, target}) != constraints_.end();
}

std::string verdict_name(const Verdict& v) {
    static const char* names[] = {"OnSet", "OffSet", "NivenConditional"};
    return names[v.index()];
}

Verdict check(const ConstraintSet& cs) {
    for (const auto& c : cs.constraints()) {
        if (!cs.declares(c.target)) throw PreconditionError("constraint targets undeclared variable '" + c.target + "'");
    }
    std::optional<NivenConditional> conditional;
    for (const auto& [name, value] : cs.variables()) {
        const bool wants_cos = cs.has(ConstraintKind::CosineRational, name);
        const bool wants_angle = cs.has(ConstraintKind::AngleRational, name);
        if (value.is_cosine() && wants_angle) {
            if (!rational_angle_from_cosine(value.as_cosine()))
                return OffSet{name, value, ConstraintKind::AngleRational,
                              "cos(" + name + ") = " + value.as_cosine().str() +
                                  " is rational, so " + name + " is not a rational angle (rational angles have cosine in " +
                                  niven_list_text() + ")"};
        } else if (value.is_angle() && wants_cos) {
            if (!classify_rational_angle(value.as_angle()).is_rational())
                return OffSet{name, value, ConstraintKind::CosineRational,
                              name + " = " + value.as_angle().turns().str() +
                                  " turn is a rational angle, so cos(" + name + ") is irrational (rational angles have cosine in " +
                                  niven_list_text() + ")"};
        } else if (value.is_unvalued() && wants_cos && wants_angle && !conditional) {
            conditional = NivenConditional{name};
        }
    }
    if (conditional) return *conditional;
    return OnSet{};
}

std::vector<std::string> explain(const Verdict& v) {
    if (std::holds_alternative<OnSet>(v)) return {"on invariant set"};
    if (const auto* off = std::get_if<OffSet>(&v)) {
        return {"off invariant set",
                "violated: " + to_string(off->violated) + "(" + off->variable + ") with " + off->value.str(),
                off->explanation};
    }
    const auto& cond = std::get<NivenConditional>(v);
    return {"niven-conditional",
            cond.variable + " must be both a rational angle and have a rational cosine",
            "satisfiable only on the finite Niven list: cos(" + cond.variable + ") in " + niven_list_text()};
}

}  // namespace ist
