#include "desir/lp.hpp"

#include <optional>
#include <string>

#include "desir/error.hpp"

namespace desir {

namespace {

void validate(const LinearProgram& p) {
    if (p.objective.size() != p.num_vars) {
        throw InputError("objective has " + std::to_string(p.objective.size()) + " entries, expected " +
                         std::to_string(p.num_vars));
    }
    for (std::size_t i = 0; i < p.constraints.size(); ++i) {
        if (p.constraints[i].coeffs.size() != p.num_vars) {
            throw InputError("constraint row " + std::to_string(i) + " has " +
                             std::to_string(p.constraints[i].coeffs.size()) + " entries, expected " +
                             std::to_string(p.num_vars));
        }
    }
}

// Dense tableau. Column `cols` holds the right-hand side; `cost` is the
// reduced-cost row of a maximization (entering candidates have cost < 0) and
// cost[cols] is the current objective value.
class Tableau {
public:
    Tableau(std::size_t rows, std::size_t cols)
        : cols_(cols), a_(rows, RationalVector(cols + 1)), basis_(rows), cost_(cols + 1) {}

    std::size_t rows() const { return a_.size(); }
    std::size_t cols() const { return cols_; }
    Rational& at(std::size_t r, std::size_t c) { return a_[r][c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return a_[r][c]; }
    Rational& rhs(std::size_t r) { return a_[r][cols_]; }
    const Rational& rhs(std::size_t r) const { return a_[r][cols_]; }
    std::size_t& basic(std::size_t r) { return basis_[r]; }
    std::size_t basic(std::size_t r) const { return basis_[r]; }
    const Rational& value() const { return cost_[cols_]; }

    // Installs the reduced-cost row for `maximize c·x` under the current basis.
    void set_objective(const RationalVector& c) {
        for (std::size_t j = 0; j <= cols_; ++j) {
            cost_[j] = j < cols_ ? -c[j] : Rational(0);
        }
        for (std::size_t r = 0; r < rows(); ++r) {
            const Rational& cb = c[basis_[r]];
            if (cb.is_zero()) {
                continue;
            }
            for (std::size_t j = 0; j <= cols_; ++j) {
                if (!a_[r][j].is_zero()) {
                    cost_[j] += cb * a_[r][j];
                }
            }
        }
    }

    void pivot(std::size_t pr, std::size_t pc) {
        const Rational inv = Rational(1) / a_[pr][pc];
        for (auto& v : a_[pr]) {
            if (!v.is_zero()) {
                v *= inv;
            }
        }
        auto eliminate = [&](RationalVector& row) {
            const Rational factor = row[pc];
            if (factor.is_zero()) {
                return;
            }
            for (std::size_t j = 0; j <= cols_; ++j) {
                if (!a_[pr][j].is_zero()) {
                    row[j] -= factor * a_[pr][j];
                }
            }
        };
        for (std::size_t r = 0; r < rows(); ++r) {
            if (r != pr) {
                eliminate(a_[r]);
            }
        }
        eliminate(cost_);
        basis_[pr] = pc;
    }

    void drop_row(std::size_t r) {
        a_.erase(a_.begin() + static_cast<std::ptrdiff_t>(r));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
    }

    enum class Status { Optimal, Unbounded };

    // Bland's rule: lowest-index improving column enters; ties in the ratio
    // test go to the lowest-index basic variable.
    Status run(const std::vector<bool>& allowed, std::size_t& unbounded_col) {
        for (;;) {
            std::optional<std::size_t> enter;
            for (std::size_t j = 0; j < cols_; ++j) {
                if (allowed[j] && cost_[j].sign() < 0) {
                    enter = j;
                    break;
                }
            }
            if (!enter) {
                return Status::Optimal;
            }
            std::optional<std::size_t> leave;
            Rational best_ratio;
            for (std::size_t r = 0; r < rows(); ++r) {
                if (a_[r][*enter].sign() <= 0) {
                    continue;
                }
                Rational ratio = a_[r][cols_] / a_[r][*enter];
                if (!leave || ratio < best_ratio || (ratio == best_ratio && basis_[r] < basis_[*leave])) {
                    leave = r;
                    best_ratio = std::move(ratio);
                }
            }
            if (!leave) {
                unbounded_col = *enter;
                return Status::Unbounded;
            }
            pivot(*leave, *enter);
        }
    }

    RationalVector solution(std::size_t n) const {
        RationalVector x(n);
        for (std::size_t r = 0; r < rows(); ++r) {
            if (basis_[r] < n) {
                x[basis_[r]] = a_[r][cols_];
            }
        }
        return x;
    }

private:
    std::size_t cols_;
    std::vector<RationalVector> a_;
    std::vector<std::size_t> basis_;
    RationalVector cost_;
};

} // namespace

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
    Rational s;
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
        if (!a[i].is_zero() && !b[i].is_zero()) {
            s += a[i] * b[i];
        }
    }
    return s;
}

LPOutcome lp_solve(const LinearProgram& program) {
    validate(program);
    const std::size_t n = program.num_vars;
    const std::size_t m = program.constraints.size();

    // Normalize to nonnegative right-hand sides: LE rows with b < 0 become GE.
    enum class Kind { LE, GE, EQ };
    std::vector<Kind> kinds(m);
    std::vector<bool> negate(m, false);
    std::size_t slack_count = 0;
    std::size_t art_count = 0;
    for (std::size_t i = 0; i < m; ++i) {
        const auto& c = program.constraints[i];
        negate[i] = c.bound.sign() < 0;
        if (c.relation == Relation::Equal) {
            kinds[i] = Kind::EQ;
        } else {
            kinds[i] = negate[i] ? Kind::GE : Kind::LE;
        }
        if (kinds[i] != Kind::EQ) {
            ++slack_count;
        }
        if (kinds[i] != Kind::LE) {
            ++art_count;
        }
    }
    const std::size_t first_art = n + slack_count;
    const std::size_t total = first_art + art_count;

    Tableau t(m, total);
    std::size_t next_slack = n;
    std::size_t next_art = first_art;
    for (std::size_t i = 0; i < m; ++i) {
        const auto& c = program.constraints[i];
        for (std::size_t j = 0; j < n; ++j) {
            t.at(i, j) = negate[i] ? -c.coeffs[j] : c.coeffs[j];
        }
        t.rhs(i) = negate[i] ? -c.bound : c.bound;
        switch (kinds[i]) {
        case Kind::LE:
            t.at(i, next_slack) = 1;
            t.basic(i) = next_slack++;
            break;
        case Kind::GE:
            t.at(i, next_slack++) = -1;
            t.at(i, next_art) = 1;
            t.basic(i) = next_art++;
            break;
        case Kind::EQ:
            t.at(i, next_art) = 1;
            t.basic(i) = next_art++;
            break;
        }
    }

    std::vector<bool> allowed(total, true);
    std::size_t ray_col = 0;
    if (art_count > 0) {
        RationalVector phase1(total);
        for (std::size_t j = first_art; j < total; ++j) {
            phase1[j] = -1;
        }
        t.set_objective(phase1);
        t.run(allowed, ray_col); // bounded above by 0
        if (t.value().sign() < 0) {
            return LPInfeasible{};
        }
        // Drive zero-level artificials out of the basis; drop redundant rows.
        for (std::size_t r = t.rows(); r-- > 0;) {
            if (t.basic(r) < first_art) {
                continue;
            }
            std::optional<std::size_t> col;
            for (std::size_t j = 0; j < first_art; ++j) {
                if (!t.at(r, j).is_zero()) {
                    col = j;
                    break;
                }
            }
            if (col) {
                t.pivot(r, *col);
            } else {
                t.drop_row(r);
            }
        }
        for (std::size_t j = first_art; j < total; ++j) {
            allowed[j] = false;
        }
    }

    RationalVector phase2(total);
    for (std::size_t j = 0; j < n; ++j) {
        phase2[j] = program.objective[j];
    }
    t.set_objective(phase2);
    if (t.run(allowed, ray_col) == Tableau::Status::Unbounded) {
        RationalVector ray(total);
        ray[ray_col] = 1;
        for (std::size_t r = 0; r < t.rows(); ++r) {
            ray[t.basic(r)] = -t.at(r, ray_col);
        }
        ray.resize(n);
        return LPUnbounded{t.solution(n), std::move(ray)};
    }
    RationalVector x = t.solution(n);
    Rational value = dot(program.objective, x);
    return LPOptimal{std::move(value), std::move(x)};
}

bool is_feasible_point(const LinearProgram& program, std::span<const Rational> x) {
    if (x.size() != program.num_vars) {
        return false;
    }
    for (const auto& v : x) {
        if (v.sign() < 0) {
            return false;
        }
    }
    for (const auto& c : program.constraints) {
        const Rational lhs = dot(c.coeffs, x);
        if (c.relation == Relation::Equal ? lhs != c.bound : lhs > c.bound) {
            return false;
        }
    }
    return true;
}

bool verify_outcome(const LinearProgram& program, const LPOutcome& outcome) {
    if (const auto* opt = std::get_if<LPOptimal>(&outcome)) {
        return is_feasible_point(program, opt->assignment) && dot(program.objective, opt->assignment) == opt->value;
    }
    if (const auto* unb = std::get_if<LPUnbounded>(&outcome)) {
        if (!is_feasible_point(program, unb->feasible_point) || unb->improving_ray.size() != program.num_vars) {
            return false;
        }
        for (const auto& v : unb->improving_ray) {
            if (v.sign() < 0) {
                return false;
            }
        }
        for (const auto& c : program.constraints) {
            const Rational d = dot(c.coeffs, unb->improving_ray);
            if (c.relation == Relation::Equal ? !d.is_zero() : d.sign() > 0) {
                return false;
            }
        }
        return dot(program.objective, unb->improving_ray).sign() > 0;
    }
    return true;
}

} // namespace desir
