#include "desir/axioms.hpp"

#include <algorithm>

#include "desir/error.hpp"
#include "desir/random.hpp"

namespace desir {

namespace {

constexpr std::size_t kPoolLimit = 24;
constexpr std::uint64_t kMaxAddProduct = 27;

class MemberSampler {
public:
    MemberSampler(const Assessment& a, std::uint64_t seed, const ClosureOptions& options)
        : a_(a), rng_(seed), options_(options), pool_(a.sets()) {
        for (const auto& s : a.sets()) {
            for (const auto& g : s) {
                for (const auto& v : g.values()) {
                    const Rational m = abs(v);
                    while (Rational(range_) < m && range_ < 4) {
                        ++range_;
                    }
                }
            }
        }
    }

    bool in_ext(const GambleSet& b) { return ext_contains(a_, b, options_).member; }

    Gamble random_gamble() {
        std::vector<Rational> v(a_.dim());
        for (auto& x : v) {
            x = rng_.uniform(-range_, range_);
        }
        return Gamble(std::move(v));
    }

    Gamble random_nonneg(bool allow_zero) {
        for (;;) {
            std::vector<Rational> v(a_.dim());
            for (auto& x : v) {
                x = rng_.uniform(0, range_);
            }
            Gamble g(std::move(v));
            if (allow_zero || !g.is_zero()) {
                return g;
            }
        }
    }

    const GambleSet& pool_member() { return pool_[rng_.index(pool_.size())]; }

    Combination random_weights() {
        return [this](std::span<const Gamble> seq) {
            std::vector<Rational> w(seq.size());
            bool any = false;
            while (!any) {
                for (auto& x : w) {
                    x = rng_.uniform(0, 2);
                    any = any || !x.is_zero();
                }
            }
            return combine(w, seq, a_.dim());
        };
    }

    /// A list of pool members whose product stays small.
    std::vector<GambleSet> member_list(std::size_t max_len) {
        std::vector<GambleSet> list;
        const std::size_t n = 1 + rng_.index(max_len);
        std::uint64_t product = 1;
        for (std::size_t i = 0; i < n; ++i) {
            const GambleSet& m = pool_member();
            if (m.empty() || product * m.size() > kMaxAddProduct) {
                continue;
            }
            product *= m.size();
            list.push_back(m);
        }
        if (list.empty()) {
            list.push_back(pool_member());
        }
        return list;
    }

    /// Some set verified to be in Ext(A). Newly found members join the pool.
    GambleSet sample_member() {
        for (int attempt = 0; attempt < 6; ++attempt) {
            GambleSet candidate(a_.dim());
            switch (rng_.uniform(0, 3)) {
            case 0:
                return pool_member();
            case 1:
                candidate = pool_member().with(random_gamble());
                break;
            case 2: {
                std::vector<Gamble> gs;
                const auto k = rng_.uniform(1, 3);
                for (std::int64_t i = 0; i < k; ++i) {
                    gs.push_back(random_gamble());
                }
                candidate = GambleSet(a_.dim(), std::move(gs));
                break;
            }
            default: {
                auto list = member_list(2);
                candidate = kadd_combine(list, random_weights());
                break;
            }
            }
            if (candidate.size() <= 9 && in_ext(candidate)) {
                if (pool_.size() < kPoolLimit && std::find(pool_.begin(), pool_.end(), candidate) == pool_.end()) {
                    pool_.push_back(candidate);
                }
                return candidate;
            }
        }
        return pool_member();
    }

    SeededRng& rng() { return rng_; }

private:
    const Assessment& a_;
    SeededRng rng_;
    ClosureOptions options_;
    std::vector<GambleSet> pool_;
    std::int64_t range_ = 1;
};

} // namespace

std::string_view axiom_name(Axiom axiom) {
    switch (axiom) {
    case Axiom::NonTrivial: return "K_empty";
    case Axiom::DropZero: return "K_0";
    case Axiom::Positive: return "K_pos";
    case Axiom::Superset: return "K_superset";
    case Axiom::Dominators: return "K_Dom";
    case Axiom::Add: return "K_Add";
    }
    return "?";
}

const std::vector<Axiom>& all_axioms() {
    static const std::vector<Axiom> axioms{Axiom::NonTrivial, Axiom::DropZero,   Axiom::Positive,
                                           Axiom::Superset,   Axiom::Dominators, Axiom::Add};
    return axioms;
}

GambleSet kadd_combine(std::span<const GambleSet> list, const Combination& combination) {
    if (list.empty()) {
        throw InputError("the addition axiom needs at least one set");
    }
    const std::size_t dim = list.front().dim();
    std::vector<Gamble> out;
    const std::uint64_t total = product_size(list);
    std::vector<Gamble> seq(list.size());
    for (std::uint64_t i = 0; i < total; ++i) {
        const auto choice = sequence_at(list, i);
        for (std::size_t k = 0; k < list.size(); ++k) {
            seq[k] = list[k][choice[k]];
        }
        out.push_back(combination(seq));
    }
    return GambleSet(dim, std::move(out));
}

AxiomReport check_axiom(const Assessment& a, Axiom axiom, std::uint64_t seed, std::size_t trials,
                        const ClosureOptions& options) {
    if (!is_consistent(a, options)) {
        throw InconsistentAssessment("axiom checks need a consistent assessment");
    }
    AxiomReport report;
    report.axiom = axiom;
    MemberSampler sampler(a, seed, options);
    const Gamble zero = Gamble::zero(a.dim());
    auto fail = [&](const std::string& what) { report.counterexamples.push_back(what); };

    for (std::size_t t = 0; t < trials; ++t) {
        switch (axiom) {
        case Axiom::NonTrivial: {
            if (t == 0 && sampler.in_ext(GambleSet(a.dim()))) {
                fail("empty set in Ext");
            }
            if (sampler.sample_member().empty()) {
                fail("sampled member of Ext is empty");
            }
            break;
        }
        case Axiom::DropZero: {
            GambleSet with_zero = sampler.sample_member().with(zero);
            if (sampler.rng().coin()) {
                with_zero = with_zero.with(sampler.random_gamble());
            }
            if (!sampler.in_ext(with_zero)) {
                fail("superset " + to_string(with_zero) + " of a member not in Ext");
            } else if (!sampler.in_ext(with_zero.without(zero))) {
                fail(to_string(with_zero) + " in Ext but not without 0");
            }
            break;
        }
        case Axiom::Positive: {
            const Gamble g = sampler.random_nonneg(false);
            if (!sampler.in_ext(GambleSet(a.dim(), {g}))) {
                fail("{" + to_string(g) + "} not in Ext");
            }
            break;
        }
        case Axiom::Superset: {
            const GambleSet member = sampler.sample_member();
            GambleSet bigger = member.with(sampler.random_gamble());
            if (sampler.rng().coin()) {
                bigger = bigger.with(sampler.random_gamble());
            }
            if (!sampler.in_ext(bigger)) {
                fail(to_string(member) + " in Ext but superset " + to_string(bigger) + " not");
            }
            break;
        }
        case Axiom::Dominators: {
            const GambleSet member = sampler.sample_member();
            std::vector<Gamble> dominators;
            for (const auto& g : member) {
                dominators.push_back(add(g, sampler.random_nonneg(true)));
            }
            const GambleSet dominated(a.dim(), std::move(dominators));
            if (!sampler.in_ext(dominated)) {
                fail(to_string(member) + " in Ext but dominating " + to_string(dominated) + " not");
            }
            break;
        }
        case Axiom::Add: {
            std::vector<GambleSet> list;
            std::uint64_t product = 1;
            const auto n = sampler.rng().uniform(1, 3);
            for (std::int64_t i = 0; i < n; ++i) {
                GambleSet m = sampler.sample_member();
                if (product * m.size() > kMaxAddProduct) {
                    continue;
                }
                product *= m.size();
                list.push_back(std::move(m));
            }
            if (list.empty()) {
                list.push_back(sampler.pool_member());
            }
            const GambleSet combined = kadd_combine(list, sampler.random_weights());
            if (!sampler.in_ext(combined)) {
                std::string desc = "combination " + to_string(combined) + " of";
                for (const auto& s : list) {
                    desc += " " + to_string(s);
                }
                fail(desc + " not in Ext");
            }
            break;
        }
        }
        ++report.instances;
    }
    return report;
}

} // namespace desir
