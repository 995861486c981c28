#pragma once

/**
 * @file experiments.hpp
 * @brief Real vs counterfactual analyses of the three experiment families.
 *
 * Each analysis compiles the performed configuration into a ConstraintSet,
 * then forms the counterfactual by changing the setting while holding the
 * hidden variable (and hence the exact angle) fixed, i.e. by taking the union
 * of both settings' constraints on the same variable.
 */

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ist/admissibility.hpp"
#include "ist/padic.hpp"
#include "ist/rational.hpp"

namespace ist {

struct SettingPair {
    int x = 0;  ///< Alice
    int y = 0;  ///< Bob
    friend auto operator<=>(const SettingPair&, const SettingPair&) = default;
    [[nodiscard]] std::string str() const { return "(" + std::to_string(x) + "," + std::to_string(y) + ")"; }
};

/// CHSH ordering: (a,b), (a,b'), (a',b), (a',b').
inline constexpr std::array<SettingPair, 4> kChshPairs{{{0, 0}, {0, 1}, {1, 0}, {1, 1}}};

struct MZConfig {
    AngleValue phi;
    int performed = 1;  ///< X = 1 interferometric, X = 0 which-way
};

enum class SgOrder { TwoThree, ThreeTwo };

struct SGConfig {
    AngleValue angle23;  ///< relative angle between exact SG2 and SG3 orientations
    SgOrder order = SgOrder::TwoThree;
};

struct CHSHConfig {
    SettingPair performed;
    std::map<SettingPair, Rational> relative_cosines;
    std::map<SettingPair, std::int64_t> ensemble_sizes;
};

/// Hidden-variable label inside a CHSH ensemble. Labels carry their
/// setting pair, so ensembles for different pairs never share a label.
struct ChshLambda {
    SettingPair pair;
    Rational cosine;
    std::int64_t size = 0;
    std::int64_t position = 0;
    friend auto operator<=>(const ChshLambda& a, const ChshLambda& b) {
        if (auto c = a.pair <=> b.pair; c != 0) return c;
        if (auto c = a.cosine <=> b.cosine; c != 0) return c;
        if (auto c = a.size <=> b.size; c != 0) return c;
        return a.position <=> b.position;
    }
    friend bool operator==(const ChshLambda&, const ChshLambda&) = default;
};

struct ChshSummary {
    std::map<SettingPair, Rational> correlations;
    std::optional<Rational> s_value;  ///< present when all four pairs are configured
    bool disjoint = true;
    friend bool operator==(const ChshSummary&, const ChshSummary&) = default;
};

struct ExperimentReport {
    std::string experiment;  ///< "mz" | "sg" | "chsh"
    Verdict real_verdict;
    Verdict counterfactual_verdict;
    std::vector<std::string> details;
    std::optional<ChshSummary> chsh;
    friend bool operator==(const ExperimentReport&, const ExperimentReport&) = default;
};

ConstraintSet mach_zehnder_constraints(const AngleValue& phi, int setting);
ExperimentReport mach_zehnder_analysis(const MZConfig& cfg);

ExperimentReport sequential_sg_analysis(const SGConfig& cfg);

std::map<SettingPair, std::set<ChshLambda>> admissible_lambda_sets(const CHSHConfig& cfg);

/// Measured spin (+1 / -1) on Alice's side for a label. Depends on (lambda, X)
/// only; throws PreconditionError when X disagrees with the label's pair.
int alice_outcome(const ChshLambda& lambda, int x);
/// Bob's spin for a label given his setting Y.
int bob_outcome(const ChshLambda& lambda, int y);

/// Exact singlet counts n(++) = n(--) = size(1-c)/4, n(+-) = n(-+) = size(1+c)/4.
struct SingletCounts {
    std::int64_t same = 0;      ///< each of ++ and --
    std::int64_t opposite = 0;  ///< each of +- and -+
};
SingletCounts singlet_counts(const Rational& cosine, std::int64_t size);

/// E = (n++ + n-- - n+- - n-+)/size = -cosine.
Rational chsh_correlation(const Rational& cosine, std::int64_t size);

/// S = E(a,b) - E(a,b') + E(a',b) + E(a',b').
Rational chsh_s_value(const std::array<Rational, 4>& cosines, const std::array<std::int64_t, 4>& sizes);

ExperimentReport chsh_analysis(const CHSHConfig& cfg);

/// The n/p closest to x (ties away from zero).
Rational nearest_fraction(double x, std::int64_t p);

/// Tsirelson-approaching configuration at resolution p: cosines
/// (-c, c, -c, -c) with c the nearest n/p to sqrt(2)/2, sizes 4p.
CHSHConfig tsirelson_config(std::int64_t p);

struct RandomiserReport {
    TrajectoryLabel original;
    TrajectoryLabel flipped;
    std::size_t digit_index = 0;
    bool onset_before = false;
    bool onset_after = false;
    std::uint64_t distance = 0;
};

/// Changes digit `digit_index` by `step` (mod p). With `leave_set`, the
/// flip is modelled as leaving the invariant set: the membership (leading)
/// digit is toggled as well (0 <-> 1, nonzero -> 0).
RandomiserReport randomiser_digit_demo(const TrajectoryLabel& label, std::size_t digit_index, bool leave_set = true,
                                       int step = 1);

}  // namespace ist
