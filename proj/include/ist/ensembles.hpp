#pragma once

/**
 * @file ensembles.hpp
 * @brief Hilbert states as finite ensembles of ontic states.
 *
 * A BitString of length p lists the detector outcome ('a' or 'b') reached by
 * each of p trajectories; the hidden variable is a position on the string.
 * Outcome frequencies reproduce Born probabilities exactly.
 */

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "ist/bloch.hpp"
#include "ist/rational.hpp"

namespace ist {

class BitString {
public:
    static constexpr char kA = 'a';
    static constexpr char kB = 'b';

    /// Throws PreconditionError for an empty string or symbols outside {a, b}.
    explicit BitString(std::string symbols);

    [[nodiscard]] std::size_t size() const noexcept { return symbols_.size(); }
    [[nodiscard]] const std::string& symbols() const noexcept { return symbols_; }
    [[nodiscard]] std::size_t count(char symbol) const;

    friend bool operator==(const BitString&, const BitString&) = default;

private:
    std::string symbols_;
};

struct OnticLabel {
    std::size_t position;
    char outcome;
    friend bool operator==(const OnticLabel&, const OnticLabel&) = default;
};

/// Labels of every position of a string.
std::vector<OnticLabel> ontic_labels(const BitString& bs);

/// Canonical ensemble: n 'a' symbols followed by p - n 'b' symbols.
BitString ensemble_for_state(const DiscreteState& s);

/// Canonical ensembles for n = 0..p.
std::vector<BitString> canonical_family(std::size_t p);

Rational outcome_frequency(const BitString& bs, char symbol);

/// Strings in `family` whose symbol at the label's position is the label's outcome.
std::vector<BitString> epistemic_overlap(const OnticLabel& label, const std::vector<BitString>& family);

char read_outcome(const BitString& bs, std::size_t position);

}  // namespace ist
