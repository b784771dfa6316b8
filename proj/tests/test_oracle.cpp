#include <doctest.h>

#include "desir/error.hpp"
#include "desir/io.hpp"
#include "desir/oracle.hpp"
#include "helpers.hpp"

using namespace desir;
using testing::assess2;
using testing::g1;
using testing::g2;
using testing::set2;
using testing::zero2;

TEST_CASE("FM cone tests") {
    const std::vector<Gamble> pair{g1, g2};
    CHECK(fm_posi_contains(pair, Gamble{0, 1}));
    CHECK_FALSE(fm_posi_contains(std::vector<Gamble>{Gamble{1, 0}}, Gamble{0, 1}));
    CHECK_FALSE(fm_posi_contains(std::vector<Gamble>{}, Gamble{0, 0}));
    CHECK(fm_desext_contains(std::vector<Gamble>{}, Gamble{1, 0}));
    CHECK_FALSE(fm_desext_contains(std::vector<Gamble>{}, Gamble{0, 0}));
    CHECK_FALSE(fm_zero_in_desext(pair));
    CHECK(fm_zero_in_desext(std::vector<Gamble>{Gamble{-1, -1}}));
    CHECK(fm_strict_contains(std::vector<Gamble>{g1}, Gamble{1, 0}));
    CHECK(fm_strict_contains(std::vector<Gamble>{g1}, Gamble{2, -1}));
    CHECK_FALSE(fm_strict_contains(std::vector<Gamble>{g1}, Gamble{0, 1}));
}

TEST_CASE("brute-force search") {
    CHECK(brute_ext_contains(assess2({set2({g1, zero2}), set2({g2, zero2})}), set2({Gamble{0, 1}}), 3));
    CHECK_FALSE(brute_ext_contains(assess2({set2({g1})}), set2({Gamble{-1, 1}}), 3));
    CHECK(brute_ext_contains(Assessment(2), set2({Gamble{1, 0}}), 3));
    CHECK_FALSE(brute_ext_contains(Assessment(2), set2({g1}), 3));
    CHECK_THROWS_AS(brute_ext_contains(assess2({set2({g1, zero2}), set2({g2, zero2})}), set2({g1}), 4, 3),
                    CapExceeded);
}

TEST_CASE("brute force matches the full-list engine") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const auto [a, b] = gen_instance({seed + 300, 2 + seed % 2, 1 + seed % 3, 1 + (seed / 3) % 3, 2});
        CAPTURE(seed);
        CHECK(brute_ext_contains(a, b, a.size() + 1) == ext_contains(a, b).member);
    }
}

TEST_CASE("generator is deterministic and respects bounds") {
    const InstanceGenConfig cfg{42, 3, 2, 3, 2};
    const auto first = gen_instance(cfg);
    const auto second = gen_instance(cfg);
    CHECK(instance_to_json(first.first, first.second).dump() == instance_to_json(second.first, second.second).dump());
    for (const auto& s : first.first.sets()) {
        CHECK(s.size() <= 3);
        for (const auto& g : s) {
            CHECK(g.size() == 3);
            for (const auto& v : g.values()) {
                CHECK(abs(v) <= Rational(2));
                CHECK(v.is_integer());
            }
        }
    }
    const auto singles = gen_instance({7, 2, 3, 1, 5});
    for (const auto& s : singles.first.sets()) {
        CHECK(s.size() == 1);
    }
    CHECK_THROWS_AS(gen_instance({1, 0, 1, 1, 1}), InputError);
    CHECK_THROWS_AS(gen_instance({1, 1, 1, 1, 0}), InputError);
}
