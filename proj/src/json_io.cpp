#include "ist/json_io.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

#include "ist/error.hpp"

namespace ist {

std::string decimal12(double value) {
    std::ostringstream os;
    os << std::setprecision(12) << value;
    return os.str();
}

namespace {

ConstraintKind kind_from_string(const std::string& s) {
    if (s == "CosineRational") return ConstraintKind::CosineRational;
    if (s == "AngleRational") return ConstraintKind::AngleRational;
    throw ParseError("unknown constraint kind '" + s + "'");
}

}  // namespace
}  // namespace ist

namespace nlohmann {

using ojson = ist::json;

void adl_serializer<ist::Rational>::to_json(ojson& j, const ist::Rational& r) { j = r.fraction_str(); }

ist::Rational adl_serializer<ist::Rational>::from_json(const ojson& j) {
    return ist::Rational::parse(j.get<std::string>());
}

void adl_serializer<ist::AngleValue>::to_json(ojson& j, const ist::AngleValue& v) {
    if (v.is_angle())
        j = ojson{{"kind", "angle"}, {"turns", v.as_angle().turns()}};
    else if (v.is_cosine())
        j = ojson{{"kind", "cosine"}, {"value", v.as_cosine()}};
    else
        j = ojson{{"kind", "unvalued"}};
}

ist::AngleValue adl_serializer<ist::AngleValue>::from_json(const ojson& j) {
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "angle") return ist::AngleValue::angle(j.at("turns").get<ist::Rational>());
    if (kind == "cosine") return ist::AngleValue::cosine(j.at("value").get<ist::Rational>());
    if (kind == "unvalued") return ist::AngleValue::unvalued();
    throw ist::ParseError("unknown angle value kind '" + kind + "'");
}

void adl_serializer<ist::Verdict>::to_json(ojson& j, const ist::Verdict& v) {
    j = ojson{{"status", ist::verdict_name(v)}};
    if (const auto* off = std::get_if<ist::OffSet>(&v)) {
        j["variable"] = off->variable;
        j["value"] = off->value;
        j["violated"] = ist::to_string(off->violated);
        j["explanation"] = off->explanation;
    } else if (const auto* cond = std::get_if<ist::NivenConditional>(&v)) {
        j["variable"] = cond->variable;
    }
}

ist::Verdict adl_serializer<ist::Verdict>::from_json(const ojson& j) {
    const auto status = j.at("status").get<std::string>();
    if (status == "OnSet") return ist::OnSet{};
    if (status == "OffSet")
        return ist::OffSet{j.at("variable").get<std::string>(), j.at("value").get<ist::AngleValue>(),
                           ist::kind_from_string(j.at("violated").get<std::string>()),
                           j.at("explanation").get<std::string>()};
    if (status == "NivenConditional") return ist::NivenConditional{j.at("variable").get<std::string>()};
    throw ist::ParseError("unknown verdict status '" + status + "'");
}

void adl_serializer<ist::SettingPair>::to_json(ojson& j, const ist::SettingPair& p) { j = ojson::array({p.x, p.y}); }

ist::SettingPair adl_serializer<ist::SettingPair>::from_json(const ojson& j) {
    return {j.at(0).get<int>(), j.at(1).get<int>()};
}

void adl_serializer<ist::ChshSummary>::to_json(ojson& j, const ist::ChshSummary& s) {
    ojson correlations = ojson::array();
    for (const auto& [pair, e] : s.correlations) correlations.push_back(ojson{{"pair", pair}, {"E", e}});
    j = ojson{{"correlations", correlations}, {"disjoint", s.disjoint}};
    j["S"] = s.s_value ? ojson(*s.s_value) : ojson(nullptr);
    if (s.s_value) j["S_decimal"] = ist::decimal12(s.s_value->to_double());
}

ist::ChshSummary adl_serializer<ist::ChshSummary>::from_json(const ojson& j) {
    ist::ChshSummary s;
    for (const auto& c : j.at("correlations")) s.correlations.emplace(c.at("pair").get<ist::SettingPair>(), c.at("E").get<ist::Rational>());
    s.disjoint = j.at("disjoint").get<bool>();
    if (!j.at("S").is_null()) s.s_value = j.at("S").get<ist::Rational>();
    return s;
}

void adl_serializer<ist::ExperimentReport>::to_json(ojson& j, const ist::ExperimentReport& r) {
    j = ojson{{"experiment", r.experiment},
             {"real_verdict", r.real_verdict},
             {"counterfactual_verdict", r.counterfactual_verdict},
             {"details", r.details}};
    j["chsh"] = r.chsh ? ojson(*r.chsh) : ojson(nullptr);
}

ist::ExperimentReport adl_serializer<ist::ExperimentReport>::from_json(const ojson& j) {
    ist::ExperimentReport r{j.at("experiment").get<std::string>(), j.at("real_verdict").get<ist::Verdict>(),
                            j.at("counterfactual_verdict").get<ist::Verdict>(),
                            j.at("details").get<std::vector<std::string>>(), std::nullopt};
    if (!j.at("chsh").is_null()) r.chsh = j.at("chsh").get<ist::ChshSummary>();
    return r;
}

void adl_serializer<ist::TrajectoryLabel>::to_json(ojson& j, const ist::TrajectoryLabel& l) {
    j = ojson{{"base", l.base()}, {"digits", std::vector<std::uint32_t>(l.digits().begin(), l.digits().end())}};
}

ist::TrajectoryLabel adl_serializer<ist::TrajectoryLabel>::from_json(const ojson& j) {
    return {j.at("base").get<std::uint32_t>(), j.at("digits").get<std::vector<std::uint32_t>>()};
}

void adl_serializer<ist::RandomiserReport>::to_json(ojson& j, const ist::RandomiserReport& r) {
    j = ojson{{"original", r.original},         {"flipped", r.flipped},         {"digit_index", r.digit_index},
             {"onset_before", r.onset_before}, {"onset_after", r.onset_after}, {"distance", r.distance}};
}

ist::RandomiserReport adl_serializer<ist::RandomiserReport>::from_json(const ojson& j) {
    return {j.at("original").get<ist::TrajectoryLabel>(), j.at("flipped").get<ist::TrajectoryLabel>(),
            j.at("digit_index").get<std::size_t>(),        j.at("onset_before").get<bool>(),
            j.at("onset_after").get<bool>(),                j.at("distance").get<std::uint64_t>()};
}

void adl_serializer<ist::kernels::MzExclusion>::to_json(ojson& j, const ist::kernels::MzExclusion& r) {
    j = ojson{{"p", r.p}, {"admissible", r.admissible}, {"total", r.total}};
}

ist::kernels::MzExclusion adl_serializer<ist::kernels::MzExclusion>::from_json(const ojson& j) {
    return {j.at("p").get<std::int64_t>(), j.at("admissible").get<std::int64_t>(), j.at("total").get<std::int64_t>()};
}

void adl_serializer<ist::kernels::TsirelsonRow>::to_json(ojson& j, const ist::kernels::TsirelsonRow& r) {
    j = ojson{{"p", r.p}, {"cosine", r.cosine}, {"S", r.s_value}, {"abs_error", ist::decimal12(r.abs_error)}};
}

ist::kernels::TsirelsonRow adl_serializer<ist::kernels::TsirelsonRow>::from_json(const ojson& j) {
    // abs_error is display-rounded; rebuild it from the exact S.
    const auto s = j.at("S").get<ist::Rational>();
    return {j.at("p").get<std::int64_t>(), j.at("cosine").get<ist::Rational>(), s,
            std::abs(s.to_double() - 2.0 * std::sqrt(2.0))};
}

}  // namespace nlohmann
