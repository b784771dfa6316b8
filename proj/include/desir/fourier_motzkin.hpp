#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "desir/lp.hpp"

namespace desir {

enum class FmRelation { LessEqual, Less, Equal };

/// coeffs·x (relation) bound, over free (unsigned) variables.
struct FmRow {
    RationalVector coeffs;
    FmRelation relation = FmRelation::LessEqual;
    Rational bound;
};

/// Exact feasibility by Fourier–Motzkin elimination. Shares no code with the
/// simplex. Variables are free; nonnegativity must be stated as rows.
/// Throws InputError on ragged rows.
bool fm_feasible(std::span<const FmRow> rows);

/// Same, over the LP constraint type (relations <= and = only).
bool fm_feasible(std::span<const Constraint> constraints);

/// Appends -x_i <= 0 for every variable.
void fm_add_nonnegativity(std::vector<FmRow>& rows, std::size_t num_vars);

} // namespace desir
