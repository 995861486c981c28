#include <doctest.h>

#include "ist/ensembles.hpp"
#include "ist/error.hpp"

using namespace ist;

TEST_CASE("ensemble_for_state examples") {
    CHECK(ensemble_for_state(DiscreteState(8, 4)).symbols() == "aaaabbbb");
    CHECK(ensemble_for_state(DiscreteState(8, 0)).symbols() == "bbbbbbbb");
    const auto abb = ensemble_for_state(DiscreteState(3, 1));
    CHECK(abb.symbols() == "abb");
    CHECK(abb.count('a') == 1);
    CHECK(abb.count('b') == 2);
}

TEST_CASE("phase does not enter the ensemble") {
    CHECK(ensemble_for_state(DiscreteState(8, 4, 3)) == ensemble_for_state(DiscreteState(8, 4, 0)));
}

TEST_CASE("outcome_frequency examples") {
    CHECK(outcome_frequency(BitString("aaaabbbb"), 'a') == Rational(1, 2));
    CHECK(outcome_frequency(BitString("bbbbbbbb"), 'a') == Rational(0));
    CHECK(outcome_frequency(BitString("abb"), 'b') == Rational(2, 3));
    CHECK(outcome_frequency(BitString("babb"), 'a') == Rational(1, 4));
    CHECK_THROWS_AS(outcome_frequency(BitString("abb"), 'c'), PreconditionError);
    CHECK_THROWS_AS(BitString("abc"), PreconditionError);
    CHECK_THROWS_AS(BitString(""), PreconditionError);
}

TEST_CASE("frequency equals the Born probability for every p <= 200") {
    for (std::int64_t p = 1; p <= 200; ++p) {
        for (std::int64_t n = 0; n <= p; ++n) {
            const DiscreteState s(p, n);
            REQUIRE(outcome_frequency(ensemble_for_state(s), 'a') == born_probability(s, 0));
        }
    }
}

namespace {

std::vector<std::size_t> amplitudes(const std::vector<BitString>& family) {
    std::vector<std::size_t> out;
    for (const auto& bs : family) out.push_back(bs.count('a'));
    return out;
}

}  // namespace

TEST_CASE("epistemic_overlap examples") {
    const auto family = canonical_family(8);
    CHECK(amplitudes(epistemic_overlap({0, 'a'}, family)) == std::vector<std::size_t>{1, 2, 3, 4, 5, 6, 7, 8});
    CHECK(amplitudes(epistemic_overlap({7, 'b'}, family)) == std::vector<std::size_t>{0, 1, 2, 3, 4, 5, 6, 7});
    CHECK(amplitudes(epistemic_overlap({0, 'a'}, canonical_family(1))) == std::vector<std::size_t>{1});
    CHECK_THROWS_AS(epistemic_overlap({8, 'a'}, family), PreconditionError);
    CHECK_THROWS_AS(epistemic_overlap({0, 'a'}, {BitString("ab"), BitString("abb")}), PreconditionError);
}

TEST_CASE("overlap sizes over the canonical family follow p - i for 'a' and i + 1 for 'b'") {
    for (std::size_t p : {2U, 5U, 8U, 13U}) {
        const auto family = canonical_family(p);
        for (std::size_t i = 0; i < p; ++i) {
            CHECK(epistemic_overlap({i, 'a'}, family).size() == p - i);
            CHECK(epistemic_overlap({i, 'b'}, family).size() == i + 1);
        }
    }
}

TEST_CASE("every label of a non-eigenstate ensemble is shared with another state") {
    for (std::size_t p : {2U, 8U, 64U}) {
        const auto family = canonical_family(p);
        for (std::size_t n = 1; n < p; ++n) {
            for (const auto& label : ontic_labels(family[n])) CHECK(epistemic_overlap(label, family).size() > 1);
        }
    }
}

TEST_CASE("read_outcome examples and determinism") {
    const BitString bs("aaaabbbb");
    CHECK(read_outcome(bs, 0) == 'a');
    CHECK(read_outcome(bs, 7) == 'b');
    CHECK(read_outcome(BitString("abb"), 1) == 'b');
    CHECK_THROWS_AS(read_outcome(bs, 8), PreconditionError);
    for (std::size_t i = 0; i < bs.size(); ++i) CHECK(read_outcome(bs, i) == read_outcome(bs, i));
}
