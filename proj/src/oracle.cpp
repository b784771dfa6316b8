#include "desir/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "desir/error.hpp"
#include "desir/fourier_motzkin.hpp"

namespace desir {

namespace {

// Rows for  sum_k x_k v_k (rel) target  componentwise.
void combination_rows(std::vector<FmRow>& rows, std::span<const Gamble> vectors, std::size_t num_vars,
                      const Gamble& target, FmRelation rel) {
    for (std::size_t i = 0; i < target.size(); ++i) {
        FmRow row{RationalVector(num_vars), rel, target[i]};
        for (std::size_t k = 0; k < vectors.size(); ++k) {
            row.coeffs[k] = vectors[k][i];
        }
        rows.push_back(std::move(row));
    }
}

// -(x_0 + ... + x_{count-1}) < 0
FmRow positive_sum(std::size_t num_vars, std::size_t count) {
    FmRow row{RationalVector(num_vars), FmRelation::Less, Rational(0)};
    for (std::size_t k = 0; k < count; ++k) {
        row.coeffs[k] = -1;
    }
    return row;
}

std::vector<Gamble> with_indicators(std::span<const Gamble> gens, std::size_t dim) {
    std::vector<Gamble> all(gens.begin(), gens.end());
    for (std::size_t w = 0; w < dim; ++w) {
        all.push_back(indicator(dim, w));
    }
    return all;
}

void check_dims(std::span<const Gamble> gens, const Gamble& f) {
    for (const auto& g : gens) {
        require_same_dim(g, f);
    }
}

} // namespace

bool fm_posi_contains(std::span<const Gamble> gens, const Gamble& f) {
    check_dims(gens, f);
    const std::size_t n = gens.size();
    if (n == 0) {
        return false;
    }
    std::vector<FmRow> rows;
    combination_rows(rows, gens, n, f, FmRelation::Equal);
    rows.push_back(positive_sum(n, n));
    fm_add_nonnegativity(rows, n);
    return fm_feasible(rows);
}

bool fm_desext_contains(std::span<const Gamble> gens, const Gamble& f) {
    check_dims(gens, f);
    return fm_posi_contains(with_indicators(gens, f.size()), f);
}

bool fm_zero_in_desext(std::span<const Gamble> gens) {
    if (gens.empty()) {
        return false;
    }
    return fm_desext_contains(gens, Gamble::zero(gens.front().size()));
}

bool fm_strict_contains(std::span<const Gamble> gens, const Gamble& f) {
    check_dims(gens, f);
    if (in_cone_gt0(f)) {
        return true;
    }
    if (fm_posi_contains(gens, f)) {
        return true;
    }
    const std::size_t n = gens.size();
    if (n == 0) {
        return false;
    }
    std::vector<FmRow> rows;
    combination_rows(rows, gens, n, f, FmRelation::Less);
    rows.push_back(positive_sum(n, n));
    fm_add_nonnegativity(rows, n);
    return fm_feasible(rows);
}

bool brute_ext_contains(const Assessment& a, const GambleSet& b, std::size_t max_len, std::uint64_t cap) {
    if (a.dim() != b.dim()) {
        throw DimensionError("query set and assessment differ in dimension");
    }
    if (std::any_of(b.begin(), b.end(), [](const Gamble& f) { return in_cone_wd0(f); })) {
        return true;
    }
    if (a.empty()) {
        return false;
    }
    const auto& members = a.sets();
    // Skip-or-Hit depends only on the set of chosen gambles.
    std::map<GambleSet, bool> covered;
    auto sequence_ok = [&](const std::vector<Gamble>& seq) {
        GambleSet key(b.dim(), seq);
        auto it = covered.find(key);
        if (it != covered.end()) {
            return it->second;
        }
        bool ok = fm_zero_in_desext(key.members());
        for (std::size_t k = 0; !ok && k < b.size(); ++k) {
            ok = fm_desext_contains(key.members(), b[k]);
        }
        covered.emplace(std::move(key), ok);
        return ok;
    };
    auto list_works = [&](const std::vector<std::size_t>& picks) {
        std::vector<GambleSet> list;
        for (std::size_t p : picks) {
            list.push_back(members[p]);
        }
        const std::uint64_t total = product_size(list);
        if (total > cap) {
            throw CapExceeded("brute-force product has " + std::to_string(total) + " sequences, cap is " +
                              std::to_string(cap));
        }
        for (std::uint64_t i = 0; i < total; ++i) {
            const auto choice = sequence_at(list, i);
            std::vector<Gamble> seq;
            for (std::size_t k = 0; k < list.size(); ++k) {
                seq.push_back(list[k][choice[k]]);
            }
            if (!sequence_ok(seq)) {
                return false;
            }
        }
        return true;
    };
    // Nondecreasing index lists enumerate multisets; order of a list does not
    // change the set of sequences up to permutation.
    std::vector<std::size_t> picks;
    std::function<bool(std::size_t)> search = [&](std::size_t from) {
        if (!picks.empty() && list_works(picks)) {
            return true;
        }
        if (picks.size() == max_len) {
            return false;
        }
        for (std::size_t p = from; p < members.size(); ++p) {
            picks.push_back(p);
            if (search(p)) {
                return true;
            }
            picks.pop_back();
        }
        return false;
    };
    return search(0);
}

Gamble random_gamble(SeededRng& rng, std::size_t dim, std::int64_t range) {
    std::vector<Rational> values;
    values.reserve(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        values.emplace_back(rng.uniform(-range, range));
    }
    return Gamble(std::move(values));
}

GambleSet random_set(SeededRng& rng, std::size_t dim, std::size_t size, std::int64_t range) {
    std::vector<Gamble> members;
    for (std::size_t i = 0; i < size; ++i) {
        members.push_back(random_gamble(rng, dim, range));
    }
    return GambleSet(dim, std::move(members));
}

std::pair<Assessment, GambleSet> gen_instance(const InstanceGenConfig& cfg) {
    if (cfg.omega_size == 0 || cfg.num_sets == 0 || cfg.set_size == 0 || cfg.coeff_range < 1) {
        throw InputError("instance generator sizes must be at least 1");
    }
    SeededRng rng(cfg.seed);
    std::vector<GambleSet> sets;
    for (std::size_t s = 0; s < cfg.num_sets; ++s) {
        sets.push_back(random_set(rng, cfg.omega_size, cfg.set_size, cfg.coeff_range));
    }
    GambleSet b = random_set(rng, cfg.omega_size, cfg.set_size, cfg.coeff_range);
    return {Assessment(cfg.omega_size, std::move(sets)), std::move(b)};
}

} // namespace desir
