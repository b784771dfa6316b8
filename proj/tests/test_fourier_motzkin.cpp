#include <doctest.h>

#include "desir/error.hpp"
#include "desir/fourier_motzkin.hpp"

using namespace desir;

namespace {
FmRow row(std::initializer_list<int> c, FmRelation rel, int b) {
    RationalVector v;
    for (int x : c) {
        v.emplace_back(x);
    }
    return {v, rel, Rational(b)};
}
} // namespace

TEST_CASE("contradictory bounds") {
    const std::vector<FmRow> rows{row({1}, FmRelation::LessEqual, 1), row({-1}, FmRelation::LessEqual, -2)};
    CHECK_FALSE(fm_feasible(rows));
}

TEST_CASE("simplex of two variables") {
    std::vector<FmRow> rows{row({1, 1}, FmRelation::Equal, 1)};
    fm_add_nonnegativity(rows, 2);
    CHECK(fm_feasible(rows));
}

TEST_CASE("zero-in-cone system for (1,-1), (-1,2)") {
    std::vector<FmRow> rows{row({1, -1}, FmRelation::LessEqual, 0), row({-1, 2}, FmRelation::LessEqual, 0),
                            row({1, 1}, FmRelation::Equal, 1)};
    fm_add_nonnegativity(rows, 2);
    CHECK_FALSE(fm_feasible(rows));
}

TEST_CASE("strict rows") {
    // x < 1, x >= 1
    CHECK_FALSE(fm_feasible(std::vector<FmRow>{row({1}, FmRelation::Less, 1), row({-1}, FmRelation::LessEqual, -1)}));
    // x <= 1, x >= 1
    CHECK(fm_feasible(std::vector<FmRow>{row({1}, FmRelation::LessEqual, 1), row({-1}, FmRelation::LessEqual, -1)}));
    // 0 < 0 on its own
    CHECK_FALSE(fm_feasible(std::vector<FmRow>{row({0, 0}, FmRelation::Less, 0)}));
    // x + y < 2, x > 0, y > 0 (through elimination)
    CHECK(fm_feasible(std::vector<FmRow>{row({1, 1}, FmRelation::Less, 2), row({-1, 0}, FmRelation::Less, 0),
                                         row({0, -1}, FmRelation::Less, 0)}));
    // x - y < 0, y - x < 0
    CHECK_FALSE(fm_feasible(std::vector<FmRow>{row({1, -1}, FmRelation::Less, 0), row({-1, 1}, FmRelation::Less, 0)}));
}

TEST_CASE("equalities and empty systems") {
    CHECK(fm_feasible(std::vector<FmRow>{}));
    CHECK_FALSE(fm_feasible(std::vector<FmRow>{row({0}, FmRelation::Equal, 1)}));
    CHECK(fm_feasible(std::vector<FmRow>{row({2, 0}, FmRelation::Equal, 1), row({1, 1}, FmRelation::Equal, 3),
                                         row({0, 1}, FmRelation::LessEqual, 5)}));
}

TEST_CASE("ragged rows are rejected") {
    CHECK_THROWS_AS(fm_feasible(std::vector<FmRow>{row({1, 1}, FmRelation::LessEqual, 0), row({1}, FmRelation::LessEqual, 0)}),
                    InputError);
}
