#include "desir/representation.hpp"

#include <algorithm>

#include "desir/error.hpp"

namespace desir {

FinGenD::FinGenD(ConeGenerators generators) : generators_(std::move(generators)) {
    if (!d_coherent(generators_)) {
        throw InputError("generators do not give a coherent cone: 0 is in desext");
    }
}

std::optional<FinGenD> FinGenD::try_make(ConeGenerators generators) {
    if (!d_coherent(generators)) {
        return std::nullopt;
    }
    return FinGenD(std::move(generators), Trusted{});
}

namespace {

void require_dim(std::size_t expected, std::size_t got) {
    if (expected != got) {
        throw DimensionError("dimension mismatch: " + std::to_string(expected) + " vs " + std::to_string(got));
    }
}

void require_family(const DFamilySpec& fam) {
    if (fam.sets.empty()) {
        throw InputError("a family needs at least one set");
    }
    for (const auto& s : fam.sets) {
        require_dim(fam.sets.front().dim(), s.dim());
    }
}

std::vector<Gamble> pick(std::span<const GambleSet> list, const std::vector<std::size_t>& choice) {
    std::vector<Gamble> seq;
    seq.reserve(list.size());
    for (std::size_t k = 0; k < list.size(); ++k) {
        seq.push_back(list[k][choice[k]]);
    }
    return seq;
}

} // namespace

bool kd_contains(const FinGenD& d, const GambleSet& b) {
    require_dim(d.dim(), b.dim());
    return std::any_of(b.begin(), b.end(),
                       [&](const Gamble& f) { return desext_contains(d.generators(), f).has_value(); });
}

bool family_contains_d(const DFamilySpec& fam, const FinGenD& d) {
    require_family(fam);
    require_dim(fam.sets.front().dim(), d.dim());
    const std::uint64_t total = product_size(fam.sets);
    for (std::uint64_t i = 0; i < total; ++i) {
        const auto seq = pick(fam.sets, sequence_at(fam.sets, i));
        if (!d_coherent(ConeGenerators(d.dim(), seq))) {
            continue;
        }
        const bool inside = std::all_of(seq.begin(), seq.end(), [&](const Gamble& g) {
            return desext_contains(d.generators(), g).has_value();
        });
        if (inside) {
            return true;
        }
    }
    return false;
}

FamilyAnswer k_family_answer(const DFamilySpec& fam, const GambleSet& b, std::uint64_t cap) {
    require_family(fam);
    require_dim(fam.sets.front().dim(), b.dim());
    const std::uint64_t total = product_size(fam.sets);
    if (total > cap) {
        throw CapExceeded("family product has " + std::to_string(total) + " sequences, cap is " +
                          std::to_string(cap));
    }
    FamilyAnswer answer;
    answer.member = true;
    for (std::uint64_t i = 0; i < total; ++i) {
        FamilyWitness w;
        w.choice = sequence_at(fam.sets, i);
        w.sequence = pick(fam.sets, w.choice);
        auto d = FinGenD::try_make(ConeGenerators(b.dim(), w.sequence));
        if (!d) {
            w.inconsistent = true;
            answer.witnesses.push_back(std::move(w));
            continue;
        }
        const bool hit = kd_contains(*d, b);
        if (hit) {
            for (std::size_t k = 0; k < b.size(); ++k) {
                if (auto cert = desext_contains(d->generators(), b[k])) {
                    w.hit = k;
                    w.certificate = std::move(cert);
                    break;
                }
            }
        }
        answer.witnesses.push_back(std::move(w));
        if (!hit) {
            answer.member = false;
            break;
        }
    }
    return answer;
}

bool k_family_contains(const DFamilySpec& fam, const GambleSet& b) { return k_family_answer(fam, b).member; }

bool representation_agrees(const Assessment& a, const GambleSet& b) {
    if (a.empty()) {
        throw InputError("representation needs a nonempty assessment");
    }
    if (!is_consistent(a)) {
        throw InconsistentAssessment("assessment is inconsistent");
    }
    return k_family_contains(DFamilySpec{a.sets()}, b) == ext_contains(a, b).member;
}

ClosureReport downward_closure_check(const DFamilySpec& fam1, const DFamilySpec& fam2,
                                     std::span<const FinGenD> sampled) {
    DFamilySpec joined = fam1;
    joined.sets.insert(joined.sets.end(), fam2.sets.begin(), fam2.sets.end());
    ClosureReport report;
    for (std::size_t i = 0; i < sampled.size(); ++i) {
        ++report.checked;
        if (!family_contains_d(joined, sampled[i])) {
            continue;
        }
        ++report.antecedent_held;
        if (!family_contains_d(fam1, sampled[i]) || !family_contains_d(fam2, sampled[i])) {
            report.violations.push_back("D #" + std::to_string(i) + " " +
                                        to_string(sampled[i].generators().as_set()));
        }
    }
    return report;
}

ClosureReport kd_add_closure_check(std::span<const FinGenD> d_list, std::span<const KAddInstance> instances) {
    if (d_list.empty()) {
        throw InputError("kd_add_closure_check needs at least one D");
    }
    auto in_all = [&](const GambleSet& s) {
        return std::all_of(d_list.begin(), d_list.end(), [&](const FinGenD& d) { return kd_contains(d, s); });
    };
    ClosureReport report;
    for (std::size_t i = 0; i < instances.size(); ++i) {
        ++report.checked;
        const auto& inst = instances[i];
        if (!std::all_of(inst.sets.begin(), inst.sets.end(), in_all)) {
            continue;
        }
        ++report.antecedent_held;
        const GambleSet combined = kadd_combine(inst.sets, inst.combination);
        if (!in_all(combined)) {
            report.violations.push_back("instance #" + std::to_string(i) + " combined " + to_string(combined));
        }
    }
    return report;
}

} // namespace desir
