#include "ist/ensembles.hpp"

#include <algorithm>

#include "ist/error.hpp"

namespace ist {
namespace {

void require_symbol(char symbol) {
    if (symbol != BitString::kA && symbol != BitString::kB)
        throw PreconditionError(std::string("unknown outcome symbol '") + symbol + "'");
}

}  // namespace

BitString::BitString(std::string symbols) : symbols_(std::move(symbols)) {
    if (symbols_.empty()) throw PreconditionError("BitString: empty");
    for (char c : symbols_) require_symbol(c);
}

std::size_t BitString::count(char symbol) const {
    require_symbol(symbol);
    return static_cast<std::size_t>(std::count(symbols_.begin(), symbols_.end(), symbol));
}

std::vector<OnticLabel> ontic_labels(const BitString& bs) {
    std::vector<OnticLabel> out;
    out.reserve(bs.size());
    for (std::size_t i = 0; i < bs.size(); ++i) out.push_back({i, bs.symbols()[i]});
    return out;
}

BitString ensemble_for_state(const DiscreteState& s) {
    const auto p = static_cast<std::size_t>(s.p());
    const auto n = static_cast<std::size_t>(s.n());
    return BitString(std::string(n, BitString::kA) + std::string(p - n, BitString::kB));
}

std::vector<BitString> canonical_family(std::size_t p) {
    std::vector<BitString> out;
    out.reserve(p + 1);
    for (std::size_t n = 0; n <= p; ++n) {
        out.push_back(ensemble_for_state(DiscreteState(static_cast<std::int64_t>(p), static_cast<std::int64_t>(n))));
    }
    return out;
}

Rational outcome_frequency(const BitString& bs, char symbol) {
    return {static_cast<Rational::int_type>(bs.count(symbol)), static_cast<Rational::int_type>(bs.size())};
}

std::vector<BitString> epistemic_overlap(const OnticLabel& label, const std::vector<BitString>& family) {
    require_symbol(label.outcome);
    std::vector<BitString> out;
    for (const auto& bs : family) {
        if (bs.size() != family.front().size())
            throw PreconditionError("epistemic_overlap: family members differ in length");
        if (label.position >= bs.size())
            throw PreconditionError("epistemic_overlap: position " + std::to_string(label.position) +
                                    " out of range for string of length " + std::to_string(bs.size()));
        if (bs.symbols()[label.position] == label.outcome) out.push_back(bs);
    }
    return out;
}

char read_outcome(const BitString& bs, std::size_t position) {
    if (position >= bs.size())
        throw PreconditionError("read_outcome: position " + std::to_string(position) + " out of range");
    return bs.symbols()[position];
}

}  // namespace ist
