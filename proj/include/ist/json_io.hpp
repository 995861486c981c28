#pragma once

// JSON mapping for the library's value and report types. Exact quantities
// are always "num/den" strings; nothing exact passes through a double.

#include <json.hpp>

#include "ist/admissibility.hpp"
#include "ist/experiments.hpp"
#include "ist/kernels.hpp"
#include "ist/padic.hpp"
#include "ist/rational.hpp"

namespace ist {

using json = nlohmann::ordered_json;

/// Fixed 12-significant-digit rendering for derived real values.
std::string decimal12(double value);

}  // namespace ist

namespace nlohmann {

template <>
struct adl_serializer<ist::Rational> {
    static void to_json(ist::json& j, const ist::Rational& r);
    static ist::Rational from_json(const ist::json& j);
};

template <>
struct adl_serializer<ist::AngleValue> {
    static void to_json(ist::json& j, const ist::AngleValue& v);
    static ist::AngleValue from_json(const ist::json& j);
};

template <>
struct adl_serializer<ist::Verdict> {
    static void to_json(ist::json& j, const ist::Verdict& v);
    static ist::Verdict from_json(const ist::json& j);
};

template <>
struct adl_serializer<ist::SettingPair> {
    static void to_json(ist::json& j, const ist::SettingPair& p);
    static ist::SettingPair from_json(const ist::json& j);
};

template <>
struct adl_serializer<ist::ChshSummary> {
    static void to_json(ist::json& j, const ist::ChshSummary& s);
    static ist::ChshSummary from_json(const ist::json& j);
};

template <>
struct adl_serializer<ist::ExperimentReport> {
    static void to_json(ist::json& j, const ist::ExperimentReport& r);
    static ist::ExperimentReport from_json(const ist::json& j);
};

template <>
struct adl_serializer<ist::TrajectoryLabel> {
    static void to_json(ist::json& j, const ist::TrajectoryLabel& l);
    static ist::TrajectoryLabel from_json(const ist::json& j);
};

template <>
struct adl_serializer<ist::RandomiserReport> {
    static void to_json(ist::json& j, const ist::RandomiserReport& r);
    static ist::RandomiserReport from_json(const ist::json& j);
};

template <>
struct adl_serializer<ist::kernels::MzExclusion> {
    static void to_json(ist::json& j, const ist::kernels::MzExclusion& r);
    static ist::kernels::MzExclusion from_json(const ist::json& j);
};

template <>
struct adl_serializer<ist::kernels::TsirelsonRow> {
    static void to_json(ist::json& j, const ist::kernels::TsirelsonRow& r);
    static ist::kernels::TsirelsonRow from_json(const ist::json& j);
};

}  // namespace nlohmann
