#include <doctest.h>

#include "desir/derivation.hpp"
#include "desir/error.hpp"
#include "desir/oracle.hpp"
#include "helpers.hpp"

using namespace desir;
using testing::g1;
using testing::g2;
using testing::set2;

namespace {
PosiChecker fm_checker() {
    return [](std::span<const Gamble> gens, const Gamble& f) { return fm_posi_contains(gens, f); };
}
} // namespace

TEST_CASE("single set, doubled gamble") {
    const std::vector<GambleSet> list{set2({g1})};
    const auto trace = addpair_derive(list, [](std::span<const Gamble> s) { return scale(2, s[0]); });
    CHECK(trace.pair_steps() == 1);
    CHECK(trace.steps.size() == 2);
    CHECK(trace.steps.back().left == trace.steps.back().right);
    CHECK(trace.steps[trace.conclusion].result.is_subset_of(set2({Gamble{2, -2}})));
    CHECK(verify_trace(trace, list, fm_checker()));
    CHECK(verify_trace(trace, list, simplex_posi_checker()));
}

TEST_CASE("two singletons") {
    const std::vector<GambleSet> list{set2({Gamble{1, 0}}), set2({Gamble{0, 1}})};
    const auto trace = addpair_derive(list, [](std::span<const Gamble> s) { return add(s[0], s[1]); });
    CHECK(trace.pair_steps() == 2);
    CHECK(trace.steps.size() == 4);
    CHECK(trace.steps[trace.conclusion].result == set2({Gamble{1, 1}}));
    CHECK(verify_trace(trace, list, fm_checker()));
}

TEST_CASE("two sets with sums") {
    const std::vector<GambleSet> list{set2({g1, Gamble{0, 1}}), set2({g2})};
    const auto trace = addpair_derive(list, [](std::span<const Gamble> s) { return add(s[0], s[1]); });
    CHECK(trace.steps.size() == 4);
    CHECK(trace.target == set2({Gamble{0, 1}, Gamble{-1, 3}}));
    CHECK(trace.steps[trace.conclusion].result.is_subset_of(trace.target));
    CHECK(verify_trace(trace, list, fm_checker()));
}

TEST_CASE("invalid combinations are rejected") {
    const std::vector<GambleSet> list{set2({g1})};
    CHECK_THROWS_AS(addpair_derive(list, [](std::span<const Gamble>) { return Gamble{0, 1}; }), InputError);
    SequenceMap missing;
    CHECK_THROWS_AS(addpair_derive(list, missing), InputError);
}

TEST_CASE("tampered traces fail verification") {
    const std::vector<GambleSet> list{set2({g1, Gamble{0, 1}}), set2({g2})};
    auto trace = addpair_derive(list, [](std::span<const Gamble> s) { return add(s[0], s[1]); });
    REQUIRE(verify_trace(trace, list, fm_checker()));
    auto broken = trace;
    for (auto& step : broken.steps) {
        if (!step.pairs.empty()) {
            step.pairs.front().produced = Gamble{-5, -5};
            break;
        }
    }
    CHECK_FALSE(verify_trace(broken, list, fm_checker()));
    auto wrong_target = trace;
    wrong_target.target = set2({Gamble{9, 9}});
    CHECK_FALSE(verify_trace(wrong_target, list, fm_checker()));
}

TEST_CASE("random derivations verify") {
    SeededRng rng(17);
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<GambleSet> list;
        const std::size_t n = 1 + rng.index(3);
        for (std::size_t k = 0; k < n; ++k) {
            list.push_back(random_set(rng, 2, 1 + rng.index(3), 2));
        }
        SeededRng weights(static_cast<std::uint64_t>(trial));
        const auto trace = addpair_derive(list, [&](std::span<const Gamble> seq) {
            std::vector<Rational> w;
            for (std::size_t i = 0; i < seq.size(); ++i) {
                w.emplace_back(weights.uniform(0, 2));
            }
            w[weights.index(w.size())] += Rational(1);
            return combine(w, seq, 2);
        });
        CAPTURE(trial);
        CHECK(verify_trace(trace, list, fm_checker()));
    }
}

TEST_CASE("dominators from addition") {
    const auto identity = dom_from_add_check(set2({g1}), {{g1, g1}});
    CHECK(identity.singletons.empty());
    CHECK(verify_dom_trace(identity, fm_checker()));

    const auto one = dom_from_add_check(set2({g1}), {{g1, Gamble{1, 0}}});
    CHECK(one.singletons == std::vector<Gamble>{Gamble{0, 1}});
    CHECK(verify_dom_trace(one, fm_checker()));

    const auto two = dom_from_add_check(set2({g1, g2}), {{g1, Gamble{2, -1}}, {g2, Gamble{-1, 3}}});
    CHECK(two.singletons.size() == 2);
    CHECK(two.target == set2({Gamble{2, -1}, Gamble{-1, 3}}));
    CHECK(verify_dom_trace(two, fm_checker()));

    CHECK_THROWS_AS(dom_from_add_check(set2({g1}), {{g1, Gamble{0, 0}}}), InputError);
    CHECK_THROWS_AS(dom_from_add_check(set2({g1, g2}), {{g1, g1}}), InputError);
}
