#include "desir/cone.hpp"

#include <variant>

#include "desir/error.hpp"
#include "desir/lp.hpp"

namespace desir {

namespace {

void require_dim(const ConeGenerators& e, const Gamble& f) {
    if (e.dim() != f.size()) {
        throw DimensionError("gamble of dimension " + std::to_string(f.size()) + " queried against cone of dimension " +
                             std::to_string(e.dim()));
    }
}

Rational sum(std::span<const Rational> v) {
    Rational s;
    for (const auto& x : v) {
        s += x;
    }
    return s;
}

// One row per atom: sum_k lambda_k g_k[i] (rel) f[i], plus `extra` trailing
// zero columns for auxiliary variables.
LinearProgram generator_rows(std::span<const Gamble> gens, const Gamble& f, Relation rel, std::size_t extra = 0) {
    LinearProgram lp;
    lp.num_vars = gens.size() + extra;
    lp.objective.assign(lp.num_vars, Rational(0));
    for (std::size_t i = 0; i < f.size(); ++i) {
        RationalVector row(lp.num_vars);
        for (std::size_t k = 0; k < gens.size(); ++k) {
            row[k] = gens[k][i];
        }
        lp.add(std::move(row), rel, f[i]);
    }
    return lp;
}

// Maximizes sum lambda over the program; yields a lambda with positive sum if
// the supremum is positive or unbounded.
std::optional<RationalVector> positive_sum_solution(LinearProgram lp, std::size_t num_lambdas) {
    for (std::size_t k = 0; k < num_lambdas; ++k) {
        lp.objective[k] = 1;
    }
    const LPOutcome out = lp_solve(lp);
    if (const auto* opt = std::get_if<LPOptimal>(&out)) {
        if (opt->value.sign() > 0) {
            return RationalVector(opt->assignment.begin(), opt->assignment.begin() + num_lambdas);
        }
        return std::nullopt;
    }
    if (const auto* unb = std::get_if<LPUnbounded>(&out)) {
        // Step far enough along the ray that sum lambda >= 1.
        const Rational point_sum = sum(std::span(unb->feasible_point).first(num_lambdas));
        const Rational ray_sum = sum(std::span(unb->improving_ray).first(num_lambdas));
        Rational t = point_sum >= Rational(1) ? Rational(0) : (Rational(1) - point_sum) / ray_sum;
        RationalVector x(num_lambdas);
        for (std::size_t k = 0; k < num_lambdas; ++k) {
            x[k] = unb->feasible_point[k] + t * unb->improving_ray[k];
        }
        return x;
    }
    return std::nullopt;
}

Certificate make_certificate(std::span<const Gamble> gens, RationalVector lambdas, const Gamble& f) {
    Gamble combo = combine(lambdas, gens, f.size());
    return Certificate{std::move(lambdas), subtract(f, combo)};
}

} // namespace

bool verify_certificate(std::span<const Gamble> generators, const Gamble& f, const Certificate& cert, Regularity mode) {
    if (cert.lambdas.size() != generators.size() || cert.remainder.size() != f.size()) {
        return false;
    }
    for (const auto& g : generators) {
        if (g.size() != f.size()) {
            return false;
        }
    }
    for (const auto& l : cert.lambdas) {
        if (l.sign() < 0) {
            return false;
        }
    }
    if (add(combine(cert.lambdas, generators, f.size()), cert.remainder) != f) {
        return false;
    }
    const bool any_lambda = sum(cert.lambdas).sign() > 0;
    if (mode == Regularity::Weak) {
        return any_lambda ? in_cone_geq0(cert.remainder) : in_cone_wd0(cert.remainder);
    }
    return any_lambda ? (cert.remainder.is_zero() || in_cone_gt0(cert.remainder)) : in_cone_gt0(cert.remainder);
}

bool verify_certificate(const ConeGenerators& e, const Gamble& f, const Certificate& cert, Regularity mode) {
    return verify_certificate(std::span<const Gamble>(e.generators()), f, cert, mode);
}

std::optional<Certificate> posi_decompose(std::span<const Gamble> generators, const Gamble& f) {
    for (const auto& g : generators) {
        require_same_dim(g, f);
    }
    if (generators.empty()) {
        return std::nullopt;
    }
    auto lambdas = positive_sum_solution(generator_rows(generators, f, Relation::Equal), generators.size());
    if (!lambdas) {
        return std::nullopt;
    }
    return Certificate{std::move(*lambdas), Gamble::zero(f.size())};
}

std::optional<Certificate> posi_contains(const ConeGenerators& e, const Gamble& f) {
    require_dim(e, f);
    return posi_decompose(e.generators(), f);
}

std::optional<Certificate> desext_contains(const ConeGenerators& e, const Gamble& f) {
    require_dim(e, f);
    const auto& gens = e.generators();
    if (!gens.empty()) {
        if (auto lambdas = positive_sum_solution(generator_rows(gens, f, Relation::LessEqual), gens.size())) {
            return make_certificate(gens, std::move(*lambdas), f);
        }
    }
    if (in_cone_wd0(f)) {
        return Certificate{RationalVector(gens.size()), f};
    }
    return std::nullopt;
}

std::vector<Rational> primitive_integer_vector(std::span<const Rational> v) {
    mpz_class common_den = 1;
    for (const auto& x : v) {
        mpz_lcm(common_den.get_mpz_t(), common_den.get_mpz_t(), x.denominator().get_mpz_t());
    }
    std::vector<mpz_class> ints;
    mpz_class g = 0;
    for (const auto& x : v) {
        mpz_class n = x.numerator() * (common_den / x.denominator());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
        ints.push_back(std::move(n));
    }
    std::vector<Rational> out;
    out.reserve(v.size());
    for (auto& n : ints) {
        out.emplace_back(g == 0 ? mpq_class(0) : mpq_class(n / g));
    }
    return out;
}

std::optional<Certificate> zero_in_desext(const ConeGenerators& e) {
    const auto& gens = e.generators();
    if (gens.empty()) {
        return std::nullopt;
    }
    // maximize t  s.t.  sum lambda g <= 0,  sum lambda = 1,  t - lambda_k <= 0.
    const std::size_t n = gens.size();
    LinearProgram lp = generator_rows(gens, Gamble::zero(e.dim()), Relation::LessEqual, 1);
    lp.objective[n] = 1;
    RationalVector normal(n + 1, Rational(1));
    normal[n] = 0;
    lp.add(std::move(normal), Relation::Equal, 1);
    for (std::size_t k = 0; k < n; ++k) {
        RationalVector row(n + 1);
        row[k] = -1;
        row[n] = 1;
        lp.add(std::move(row), Relation::LessEqual, 0);
    }
    const LPOutcome out = lp_solve(lp);
    const auto* opt = std::get_if<LPOptimal>(&out);
    if (opt == nullptr) {
        return std::nullopt; // t <= 1 keeps it bounded, so this is infeasibility
    }
    RationalVector lambdas =
        primitive_integer_vector(std::span(opt->assignment).first(n));
    return make_certificate(gens, std::move(lambdas), Gamble::zero(e.dim()));
}

bool d_coherent(const ConeGenerators& e) { return !zero_in_desext(e).has_value(); }

std::optional<Certificate> desext_contains_strict(const ConeGenerators& e, const Gamble& f) {
    require_dim(e, f);
    const auto& gens = e.generators();
    const std::size_t n = gens.size();
    // Exact combination branch.
    if (auto lambdas = n ? positive_sum_solution(generator_rows(gens, f, Relation::Equal), n) : std::nullopt) {
        return Certificate{std::move(*lambdas), Gamble::zero(f.size())};
    }
    // Slack branch: maximize eps s.t. sum lambda g + eps·1 <= f, eps <= 1.
    // eps* > 0 covers f > 0 (lambda = 0) and the positive-slack combinations.
    LinearProgram lp = generator_rows(gens, f, Relation::LessEqual, 1);
    for (auto& c : lp.constraints) {
        c.coeffs[n] = 1;
    }
    lp.objective[n] = 1;
    RationalVector cap(n + 1);
    cap[n] = 1;
    lp.add(std::move(cap), Relation::LessEqual, 1);
    const LPOutcome out = lp_solve(lp);
    const auto* opt = std::get_if<LPOptimal>(&out);
    if (opt == nullptr || opt->value.sign() <= 0) {
        return std::nullopt;
    }
    return make_certificate(gens, RationalVector(opt->assignment.begin(), opt->assignment.begin() + n), f);
}

std::optional<Certificate> zero_in_desext_strict(const ConeGenerators& e) {
    return desext_contains_strict(e, Gamble::zero(e.dim()));
}

std::optional<Certificate> cone_contains(const ConeGenerators& e, const Gamble& f, Regularity mode) {
    return mode == Regularity::Weak ? desext_contains(e, f) : desext_contains_strict(e, f);
}

std::optional<Certificate> zero_in_cone(const ConeGenerators& e, Regularity mode) {
    return mode == Regularity::Weak ? zero_in_desext(e) : zero_in_desext_strict(e);
}

} // namespace desir
