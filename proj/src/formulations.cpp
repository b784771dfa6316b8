#include "desir/formulations.hpp"

#include <variant>

#include "desir/error.hpp"
#include "desir/lp.hpp"

namespace desir {

namespace {

// Homogeneous system  sum_k mu_k g_k - t f (rel) 0  over mu, t >= 0. Looks for
// a solution with t > 0 and sum mu > 0 by maximizing s <= t, s <= sum mu under
// sum mu + t = 1; then lambda = mu / t.
std::optional<Certificate> scaled_combination(std::span<const Gamble> gens, const Gamble& f, Relation rel) {
    const std::size_t n = gens.size();
    if (n == 0) {
        return std::nullopt;
    }
    const std::size_t t = n;
    const std::size_t s = n + 1;
    LinearProgram lp;
    lp.num_vars = n + 2;
    lp.objective.assign(n + 2, Rational(0));
    lp.objective[s] = 1;
    for (std::size_t i = 0; i < f.size(); ++i) {
        RationalVector row(n + 2);
        for (std::size_t k = 0; k < n; ++k) {
            row[k] = gens[k][i];
        }
        row[t] = -f[i];
        lp.add(std::move(row), rel, 0);
    }
    RationalVector total(n + 2, Rational(1));
    total[s] = 0;
    lp.add(std::move(total), Relation::Equal, 1);
    RationalVector below_t(n + 2);
    below_t[s] = 1;
    below_t[t] = -1;
    lp.add(std::move(below_t), Relation::LessEqual, 0);
    RationalVector below_mu(n + 2, Rational(-1));
    below_mu[t] = 0;
    below_mu[s] = 1;
    lp.add(std::move(below_mu), Relation::LessEqual, 0);
    const LPOutcome out = lp_solve(lp);
    const auto* opt = std::get_if<LPOptimal>(&out);
    if (opt == nullptr || opt->value.sign() <= 0) {
        return std::nullopt;
    }
    Certificate cert{RationalVector(n), f};
    for (std::size_t k = 0; k < n; ++k) {
        cert.lambdas[k] = opt->assignment[k] / opt->assignment[t];
    }
    cert.remainder = subtract(f, combine(cert.lambdas, gens, f.size()));
    return cert;
}

// sum lambda g <= f with sum lambda > 0.
std::optional<Certificate> dominates_posi_member(std::span<const Gamble> gens, const Gamble& f) {
    return scaled_combination(gens, f, Relation::LessEqual);
}

// Feasibility of  sum mu_k g_k <= 0,  sum mu = 1,  mu >= 0  (phase one only).
std::optional<Certificate> homogeneous_nonpositive(std::span<const Gamble> gens, std::size_t dim) {
    const std::size_t n = gens.size();
    if (n == 0) {
        return std::nullopt;
    }
    LinearProgram lp;
    lp.num_vars = n;
    lp.objective.assign(n, Rational(0));
    for (std::size_t i = 0; i < dim; ++i) {
        RationalVector row(n);
        for (std::size_t k = 0; k < n; ++k) {
            row[k] = gens[k][i];
        }
        lp.add(std::move(row), Relation::LessEqual, 0);
    }
    lp.add(RationalVector(n, Rational(1)), Relation::Equal, 1);
    const LPOutcome out = lp_solve(lp);
    const auto* opt = std::get_if<LPOptimal>(&out);
    if (opt == nullptr) {
        return std::nullopt;
    }
    const Gamble zero = Gamble::zero(dim);
    return Certificate{opt->assignment, subtract(zero, combine(opt->assignment, gens, dim))};
}

// f = sum lambda g with sum lambda > 0.
std::optional<Certificate> exact_posi_member(std::span<const Gamble> gens, const Gamble& f) {
    return scaled_combination(gens, f, Relation::Equal);
}

std::optional<std::size_t> first_weakly_positive(const GambleSet& b) {
    for (std::size_t k = 0; k < b.size(); ++k) {
        if (in_cone_wd0(b[k])) {
            return k;
        }
    }
    return std::nullopt;
}

void require_dims(const Assessment& a, const GambleSet& b) {
    if (a.dim() != b.dim()) {
        throw DimensionError("query set and assessment differ in dimension");
    }
}

template <class PerSequence>
ExtAnswer run_full_list(const Assessment& a, const GambleSet& b, PerSequence&& per_sequence) {
    ExtAnswer answer;
    if (auto k = first_weakly_positive(b)) {
        answer.member = true;
        answer.direct_hit = k;
        return answer;
    }
    if (a.empty()) {
        return answer;
    }
    const std::span<const GambleSet> list = a.sets();
    answer.witness_list = a.sets();
    answer.member = true;
    const std::uint64_t total = product_size(list);
    for (std::uint64_t i = 0; i < total; ++i) {
        SequenceEvidence ev;
        ev.choice = sequence_at(list, i);
        std::vector<Gamble> seq;
        for (std::size_t k = 0; k < list.size(); ++k) {
            seq.push_back(list[k][ev.choice[k]]);
        }
        per_sequence(seq, ev);
        answer.per_sequence.push_back(std::move(ev));
        if (answer.per_sequence.back().verdict == Verdict::Miss) {
            answer.member = false;
            break;
        }
    }
    return answer;
}

} // namespace

ExtAnswer ext_contains_decadt(const Assessment& a, const GambleSet& b) {
    require_dims(a, b);
    const std::size_t dim = b.dim();
    return run_full_list(a, b, [&](const std::vector<Gamble>& seq, SequenceEvidence& ev) {
        ev.generators = seq;
        if (auto cert = homogeneous_nonpositive(seq, dim)) {
            ev.verdict = Verdict::Skip;
            ev.certificate = std::move(cert);
            return;
        }
        for (std::size_t k = 0; k < b.size(); ++k) {
            if (auto cert = dominates_posi_member(seq, b[k])) {
                ev.verdict = Verdict::Hit;
                ev.hit = k;
                ev.certificate = std::move(cert);
                return;
            }
        }
        ev.verdict = Verdict::Miss;
    });
}

std::optional<Certificate> nonpositive_in_indicator_posi(const ConeGenerators& e) {
    std::vector<Gamble> augmented = e.generators();
    for (std::size_t w = 0; w < e.dim(); ++w) {
        augmented.push_back(indicator(e.dim(), w));
    }
    return homogeneous_nonpositive(augmented, e.dim());
}

ExtAnswer ext_contains_dbdc(const Assessment& a, const GambleSet& b) {
    require_dims(a, b);
    const std::size_t dim = b.dim();
    return run_full_list(a, b, [&](const std::vector<Gamble>& seq, SequenceEvidence& ev) {
        std::vector<Gamble> augmented = seq;
        for (std::size_t w = 0; w < dim; ++w) {
            augmented.push_back(indicator(dim, w));
        }
        ev.generators = augmented;
        if (auto cert = homogeneous_nonpositive(augmented, dim)) {
            ev.verdict = Verdict::Skip;
            ev.certificate = std::move(cert);
            return;
        }
        for (std::size_t k = 0; k < b.size(); ++k) {
            if (b[k].is_zero()) {
                continue; // 0 is in G_{<=0}; handled by the clause above
            }
            if (auto cert = exact_posi_member(augmented, b[k])) {
                ev.verdict = Verdict::Hit;
                ev.hit = k;
                ev.certificate = std::move(cert);
                return;
            }
        }
        ev.verdict = Verdict::Miss;
    });
}

bool verify_self_contained(const ExtAnswer& answer, const GambleSet& b) {
    if (!answer.member) {
        return true;
    }
    if (answer.direct_hit) {
        return *answer.direct_hit < b.size() && in_cone_wd0(b[*answer.direct_hit]);
    }
    if (answer.per_sequence.size() != product_size(answer.witness_list)) {
        return false;
    }
    const Gamble zero = Gamble::zero(b.dim());
    for (const auto& ev : answer.per_sequence) {
        if (!ev.certificate) {
            return false;
        }
        if (ev.verdict == Verdict::Skip) {
            if (!verify_certificate(ev.generators, zero, *ev.certificate)) {
                return false;
            }
        } else if (ev.verdict == Verdict::Hit) {
            if (!ev.hit || *ev.hit >= b.size() || !verify_certificate(ev.generators, b[*ev.hit], *ev.certificate)) {
                return false;
            }
        } else {
            return false;
        }
    }
    return true;
}

FormulationReport compare_formulations(const Assessment& a, const GambleSet& b) {
    FormulationReport report;
    const ExtAnswer natext = ext_contains(a, b);
    const ExtAnswer decadt = ext_contains_decadt(a, b);
    const ExtAnswer dbdc = ext_contains_dbdc(a, b);
    report.natext = natext.member;
    report.decadt = decadt.member;
    report.dbdc = dbdc.member;
    report.certificates_valid =
        verify_answer(natext, b) && verify_self_contained(decadt, b) && verify_self_contained(dbdc, b);
    return report;
}

bool formulations_agree(const Assessment& a, const GambleSet& b) { return compare_formulations(a, b).agree(); }

} // namespace desir
