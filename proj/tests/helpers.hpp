#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "desir/extension.hpp"

namespace testing {

using desir::Gamble;
using desir::GambleSet;
using desir::Rational;

inline Rational q(const char* text) { return Rational::parse(text); }

inline GambleSet set2(std::initializer_list<Gamble> members) { return GambleSet(2, std::vector<Gamble>(members)); }

inline desir::Assessment assess2(std::initializer_list<GambleSet> sets) {
    return desir::Assessment(2, std::vector<GambleSet>(sets));
}

inline const Gamble g1{1, -1};
inline const Gamble g2{-1, 2};
inline const Gamble zero2{0, 0};

inline std::string data_path(const std::string& name) { return std::string(DESIR_TEST_DATA) + "/" + name; }

} // namespace testing
