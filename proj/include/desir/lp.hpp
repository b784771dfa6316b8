#pragma once

#include <cstddef>
#include <span>
#include <variant>
#include <vector>

#include "desir/rational.hpp"

namespace desir {

using RationalVector = std::vector<Rational>;

enum class Relation { LessEqual, Equal };

struct Constraint {
    RationalVector coeffs;
    Relation relation = Relation::LessEqual;
    Rational bound;
};

/// maximize objective·x  subject to constraints, x >= 0.
struct LinearProgram {
    std::size_t num_vars = 0;
    RationalVector objective;
    std::vector<Constraint> constraints;

    void add(RationalVector coeffs, Relation relation, Rational bound) {
        constraints.push_back({std::move(coeffs), relation, std::move(bound)});
    }
};

struct LPOptimal {
    Rational value;
    RationalVector assignment;
};

struct LPUnbounded {
    RationalVector feasible_point;
    RationalVector improving_ray;
};

struct LPInfeasible {};

using LPOutcome = std::variant<LPOptimal, LPUnbounded, LPInfeasible>;

/// Exact two-phase primal simplex with Bland's rule. Throws InputError when
/// a row length or the objective length disagrees with num_vars.
LPOutcome lp_solve(const LinearProgram& program);

/// True when the outcome's witnesses check out by exact substitution: an
/// optimal point is feasible and attains its value; an unbounded point is
/// feasible, the ray stays feasible and strictly improves the objective.
/// Infeasible outcomes carry no witness and always pass.
bool verify_outcome(const LinearProgram& program, const LPOutcome& outcome);

bool is_feasible_point(const LinearProgram& program, std::span<const Rational> x);

Rational dot(std::span<const Rational> a, std::span<const Rational> b);

} // namespace desir
