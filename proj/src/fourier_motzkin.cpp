#include "desir/fourier_motzkin.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <tuple>

#include "desir/error.hpp"

namespace desir {

namespace {

struct Ineq {
    RationalVector coeffs;
    bool strict = false;
    Rational bound;

    auto key() const { return std::tie(coeffs, strict, bound); }
    friend bool operator<(const Ineq& a, const Ineq& b) { return a.key() < b.key(); }
};

// Scales so the first nonzero coefficient has magnitude one. Returns false if
// the row has no variables left; `violated` then reports whether 0 (rel) b fails.
bool normalize(Ineq& row, bool& violated) {
    auto it = std::find_if(row.coeffs.begin(), row.coeffs.end(), [](const Rational& c) { return !c.is_zero(); });
    if (it == row.coeffs.end()) {
        violated = row.strict ? row.bound.sign() <= 0 : row.bound.sign() < 0;
        return false;
    }
    const Rational scale = abs(*it);
    if (scale != Rational(1)) {
        for (auto& c : row.coeffs) {
            c /= scale;
        }
        row.bound /= scale;
    }
    return true;
}

} // namespace

bool fm_feasible(std::span<const FmRow> rows) {
    if (rows.empty()) {
        return true;
    }
    const std::size_t n = rows.front().coeffs.size();
    std::vector<FmRow> equalities;
    std::vector<Ineq> ineqs;
    for (const auto& r : rows) {
        if (r.coeffs.size() != n) {
            throw InputError("Fourier-Motzkin row of length " + std::to_string(r.coeffs.size()) + ", expected " +
                             std::to_string(n));
        }
        if (r.relation == FmRelation::Equal) {
            equalities.push_back(r);
        } else {
            ineqs.push_back({r.coeffs, r.relation == FmRelation::Less, r.bound});
        }
    }

    // Gaussian substitution removes equalities first.
    while (!equalities.empty()) {
        FmRow eq = std::move(equalities.back());
        equalities.pop_back();
        auto pivot = std::find_if(eq.coeffs.begin(), eq.coeffs.end(), [](const Rational& c) { return !c.is_zero(); });
        if (pivot == eq.coeffs.end()) {
            if (!eq.bound.is_zero()) {
                return false;
            }
            continue;
        }
        const std::size_t k = static_cast<std::size_t>(pivot - eq.coeffs.begin());
        const Rational inv = Rational(1) / eq.coeffs[k];
        for (auto& c : eq.coeffs) {
            c *= inv;
        }
        eq.bound *= inv;
        auto substitute = [&](RationalVector& coeffs, Rational& bound) {
            const Rational f = coeffs[k];
            if (f.is_zero()) {
                return;
            }
            for (std::size_t j = 0; j < n; ++j) {
                coeffs[j] -= f * eq.coeffs[j];
            }
            bound -= f * eq.bound;
        };
        for (auto& other : equalities) {
            substitute(other.coeffs, other.bound);
        }
        for (auto& ineq : ineqs) {
            substitute(ineq.coeffs, ineq.bound);
        }
    }

    std::set<Ineq> current;
    for (auto& row : ineqs) {
        bool violated = false;
        if (normalize(row, violated)) {
            current.insert(std::move(row));
        } else if (violated) {
            return false;
        }
    }

    std::vector<bool> eliminated(n, false);
    for (std::size_t step = 0; step < n; ++step) {
        // Cheapest variable first: fewest generated pairs.
        std::size_t best = n;
        std::size_t best_cost = 0;
        for (std::size_t k = 0; k < n; ++k) {
            if (eliminated[k]) {
                continue;
            }
            std::size_t pos = 0;
            std::size_t neg = 0;
            for (const auto& row : current) {
                pos += row.coeffs[k].sign() > 0;
                neg += row.coeffs[k].sign() < 0;
            }
            const std::size_t cost = pos * neg;
            if (best == n || cost < best_cost) {
                best = k;
                best_cost = cost;
            }
        }
        const std::size_t k = best;
        eliminated[k] = true;

        std::vector<const Ineq*> upper;
        std::vector<const Ineq*> lower;
        std::set<Ineq> next;
        for (const auto& row : current) {
            const int s = row.coeffs[k].sign();
            if (s > 0) {
                upper.push_back(&row);
            } else if (s < 0) {
                lower.push_back(&row);
            } else {
                next.insert(row);
            }
        }
        for (const Ineq* u : upper) {
            for (const Ineq* l : lower) {
                const Rational wu = -l->coeffs[k];
                const Rational wl = u->coeffs[k];
                Ineq combined{RationalVector(n), u->strict || l->strict, wu * u->bound + wl * l->bound};
                for (std::size_t j = 0; j < n; ++j) {
                    combined.coeffs[j] = wu * u->coeffs[j] + wl * l->coeffs[j];
                }
                combined.coeffs[k] = 0;
                bool violated = false;
                if (normalize(combined, violated)) {
                    next.insert(std::move(combined));
                } else if (violated) {
                    return false;
                }
            }
        }
        current = std::move(next);
    }
    return true;
}

bool fm_feasible(std::span<const Constraint> constraints) {
    std::vector<FmRow> rows;
    rows.reserve(constraints.size());
    for (const auto& c : constraints) {
        rows.push_back({c.coeffs, c.relation == Relation::Equal ? FmRelation::Equal : FmRelation::LessEqual, c.bound});
    }
    return fm_feasible(rows);
}

void fm_add_nonnegativity(std::vector<FmRow>& rows, std::size_t num_vars) {
    for (std::size_t i = 0; i < num_vars; ++i) {
        RationalVector c(num_vars);
        c[i] = -1;
        rows.push_back({std::move(c), FmRelation::LessEqual, Rational(0)});
    }
}

} // namespace desir
