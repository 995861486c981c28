#include "ist/experiments.hpp"

#include <cmath>

#include "ist/error.hpp"

namespace ist {
namespace {

const std::string kPhi = "phi";
const std::string kAngle23 = "angle23";

std::string pair_variable(const SettingPair& pair) {
    return "theta" + std::to_string(pair.x) + std::to_string(pair.y);
}

void require_setting(int s, const char* what) {
    if (s != 0 && s != 1) throw PreconditionError(std::string(what) + " must be 0 or 1");
}

void require_valued(const AngleValue& v, const char* what) {
    if (v.is_unvalued()) throw PreconditionError(std::string(what) + " must be valued for a concrete analysis");
}

void append(std::vector<std::string>& out, const std::string& prefix, const Verdict& v) {
    for (const auto& line : explain(v)) out.push_back(prefix + line);
}

}  // namespace

ConstraintSet mach_zehnder_constraints(const AngleValue& phi, int setting) {
    require_setting(setting, "MZ setting X");
    ConstraintSet cs;
    cs.declare(kPhi, phi);
    // X=1: amplitudes cos(phi/2), sin(phi/2) need (1 +- cos phi)/2 = n/p.
    // X=0: phase i e^{i phi}; the extra quarter turn is rational, so phi must be.
    cs.require(setting == 1 ? ConstraintKind::CosineRational : ConstraintKind::AngleRational, kPhi);
    return cs;
}

ExperimentReport mach_zehnder_analysis(const MZConfig& cfg) {
    require_valued(cfg.phi, "MZ phase phi");
    const ConstraintSet real = mach_zehnder_constraints(cfg.phi, cfg.performed);
    const ConstraintSet counterfactual = real.merged_with(mach_zehnder_constraints(cfg.phi, 1 - cfg.performed));

    ExperimentReport report{"mz", check(real), check(counterfactual), {}, std::nullopt};
    report.details.push_back("phi: " + cfg.phi.str());
    report.details.push_back("performed X=" + std::to_string(cfg.performed) + ", counterfactual X=" +
                             std::to_string(1 - cfg.performed) + " on the same hidden variable");
    append(report.details, "real: ", report.real_verdict);
    append(report.details, "counterfactual: ", report.counterfactual_verdict);
    return report;
}

ExperimentReport sequential_sg_analysis(const SGConfig& cfg) {
    require_valued(cfg.angle23, "SG relative angle");
    ConstraintSet real;
    real.declare(kAngle23, cfg.angle23);
    // The eigenstate leaving the first device must have rational squared
    // amplitude along the second, whichever order is performed.
    real.require(ConstraintKind::CosineRational, kAngle23);
    // Swapping the exact orientations on the same particle also needs the
    // relative angle to be a rational fraction of a turn.
    ConstraintSet swapped = real;
    swapped.require(ConstraintKind::AngleRational, kAngle23);

    const bool two_three = cfg.order == SgOrder::TwoThree;
    ExperimentReport report{"sg", check(real), check(swapped), {}, std::nullopt};
    report.details.push_back("angle23: " + cfg.angle23.str());
    report.details.push_back(std::string("performed order ") + (two_three ? "(2,3)" : "(3,2)") +
                             ", counterfactual order " + (two_three ? "(3,2)" : "(2,3)") +
                             " on the same hidden variable");
    append(report.details, "real: ", report.real_verdict);
    append(report.details, "counterfactual: ", report.counterfactual_verdict);
    return report;
}

SingletCounts singlet_counts(const Rational& cosine, std::int64_t size) {
    if (size <= 0) throw PreconditionError("CHSH ensemble size must be positive");
    if (cosine.abs() > Rational(1)) throw PreconditionError("cosine " + cosine.str() + " outside [-1, 1]");
    const Rational same = Rational(size) * (Rational(1) - cosine) / Rational(4);
    const Rational opposite = Rational(size) * (Rational(1) + cosine) / Rational(4);
    if (!same.is_integer() || !opposite.is_integer())
        throw PreconditionError("CHSH integrality violated: size " + std::to_string(size) + " with cosine " +
                                cosine.str() + " gives non-integral outcome counts " + same.str() + ", " +
                                opposite.str());
    return {same.num(), opposite.num()};
}

Rational chsh_correlation(const Rational& cosine, std::int64_t size) {
    const auto counts = singlet_counts(cosine, size);
    return {2 * counts.same - 2 * counts.opposite, size};
}

Rational chsh_s_value(const std::array<Rational, 4>& cosines, const std::array<std::int64_t, 4>& sizes) {
    return chsh_correlation(cosines[0], sizes[0]) - chsh_correlation(cosines[1], sizes[1]) +
           chsh_correlation(cosines[2], sizes[2]) + chsh_correlation(cosines[3], sizes[3]);
}

std::map<SettingPair, std::set<ChshLambda>> admissible_lambda_sets(const CHSHConfig& cfg) {
    std::map<SettingPair, std::set<ChshLambda>> out;
    for (const auto& [pair, size] : cfg.ensemble_sizes) {
        const auto it = cfg.relative_cosines.find(pair);
        if (it == cfg.relative_cosines.end())
            throw PreconditionError("CHSH pair " + pair.str() + " has an ensemble size but no cosine");
        if (size <= 0) throw PreconditionError("CHSH ensemble size must be positive");
        auto& labels = out[pair];
        for (std::int64_t i = 0; i < size; ++i) labels.insert(ChshLambda{pair, it->second, size, i});
    }
    return out;
}

// Ensemble layout: [++ | +- | -+ | --], so Alice reads + on the first half.
int alice_outcome(const ChshLambda& lambda, int x) {
    if (x != lambda.pair.x) throw PreconditionError("label belongs to Alice setting " + std::to_string(lambda.pair.x));
    return 2 * lambda.position < lambda.size ? 1 : -1;
}

int bob_outcome(const ChshLambda& lambda, int y) {
    if (y != lambda.pair.y) throw PreconditionError("label belongs to Bob setting " + std::to_string(lambda.pair.y));
    const auto counts = singlet_counts(lambda.cosine, lambda.size);
    const std::int64_t i = lambda.position;
    if (i < counts.same) return 1;
    if (i < counts.same + counts.opposite) return -1;
    if (i < counts.same + 2 * counts.opposite) return 1;
    return -1;
}

ExperimentReport chsh_analysis(const CHSHConfig& cfg) {
    require_setting(cfg.performed.x, "CHSH setting X");
    require_setting(cfg.performed.y, "CHSH setting Y");
    const SettingPair real_pair = cfg.performed;
    const SettingPair bob_flipped{real_pair.x, 1 - real_pair.y};
    const SettingPair alice_flipped{1 - real_pair.x, real_pair.y};
    const auto cos_it = cfg.relative_cosines.find(real_pair);
    if (cos_it == cfg.relative_cosines.end())
        throw PreconditionError("CHSH: no relative cosine for the performed pair " + real_pair.str());

    const std::string var = pair_variable(real_pair);
    ConstraintSet real;
    real.declare(var, AngleValue::cosine(cos_it->second));
    real.require(ConstraintKind::CosineRational, var);
    // Holding lambda fixed while Bob's exact orientation changes: the real
    // relative angle must also be a rational angle.
    ConstraintSet counterfactual = real;
    counterfactual.require(ConstraintKind::AngleRational, var);

    ExperimentReport report{"chsh", check(real), check(counterfactual), {}, ChshSummary{}};
    auto& summary = *report.chsh;

    const auto sets = admissible_lambda_sets(cfg);
    auto disjoint = [&](const SettingPair& a, const SettingPair& b) {
        const auto ia = sets.find(a);
        const auto ib = sets.find(b);
        if (ia == sets.end() || ib == sets.end()) return true;
        for (const auto& l : ia->second) {
            if (ib->second.count(l)) return false;
        }
        return true;
    };
    for (const auto& p : kChshPairs) {
        summary.disjoint = summary.disjoint && disjoint(p, {p.x, 1 - p.y}) && disjoint(p, {1 - p.x, p.y});
    }

    bool all_four = true;
    for (const auto& p : kChshPairs) {
        const auto c = cfg.relative_cosines.find(p);
        const auto s = cfg.ensemble_sizes.find(p);
        if (c == cfg.relative_cosines.end() || s == cfg.ensemble_sizes.end()) {
            all_four = false;
            continue;
        }
        summary.correlations.emplace(p, chsh_correlation(c->second, s->second));
    }
    if (all_four) {
        summary.s_value = summary.correlations.at(kChshPairs[0]) - summary.correlations.at(kChshPairs[1]) +
                          summary.correlations.at(kChshPairs[2]) + summary.correlations.at(kChshPairs[3]);
    }

    report.details.push_back("performed " + real_pair.str() + ", counterfactual " + bob_flipped.str() +
                             " on the same hidden variable");
    report.details.push_back(std::string("lambda sets ") + (summary.disjoint ? "disjoint" : "OVERLAP") + " for " +
                             real_pair.str() + " vs " + bob_flipped.str() + " and " + alice_flipped.str());
    append(report.details, "real: ", report.real_verdict);
    append(report.details, "counterfactual: ", report.counterfactual_verdict);
    return report;
}

Rational nearest_fraction(double x, std::int64_t p) {
    if (p < 1) throw PreconditionError("nearest_fraction: p must be positive");
    return {static_cast<std::int64_t>(std::llround(x * static_cast<double>(p))), p};
}

CHSHConfig tsirelson_config(std::int64_t p) {
    const Rational c = nearest_fraction(std::sqrt(2.0) / 2.0, p);
    CHSHConfig cfg;
    const std::array<Rational, 4> cosines{-c, c, -c, -c};
    for (std::size_t i = 0; i < kChshPairs.size(); ++i) {
        cfg.relative_cosines[kChshPairs[i]] = cosines[i];
        cfg.ensemble_sizes[kChshPairs[i]] = 4 * p;
    }
    return cfg;
}

RandomiserReport randomiser_digit_demo(const TrajectoryLabel& label, std::size_t digit_index, bool leave_set,
                                       int step) {
    if (digit_index >= label.size())
        throw PreconditionError("randomiser_digit_demo: digit index " + std::to_string(digit_index) +
                                " out of range for " + std::to_string(label.size()) + " digits");
    const auto p = static_cast<std::int64_t>(label.base());
    const std::int64_t shifted = ((static_cast<std::int64_t>(label[digit_index]) + step) % p + p) % p;
    TrajectoryLabel flipped = label.with_digit(digit_index, static_cast<std::uint32_t>(shifted));
    if (leave_set && digit_index != 0) flipped = flipped.with_digit(0, flipped[0] == 0 ? 1U : 0U);
    return {label,
            flipped,
            digit_index,
            onset_membership(label),
            onset_membership(flipped),
            trajectory_distance(label, flipped)};
}

}  // namespace ist
