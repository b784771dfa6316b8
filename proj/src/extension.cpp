#include "desir/extension.hpp"

#include <algorithm>
#include <limits>

#include "desir/error.hpp"

namespace desir {

namespace {

void check_list(std::span<const GambleSet> list, const GambleSet& b, const ClosureOptions& options) {
    if (list.empty()) {
        throw InputError("closure_holds needs at least one gamble set");
    }
    for (const auto& s : list) {
        if (s.dim() != b.dim()) {
            throw DimensionError("witness set and query set differ in dimension");
        }
    }
    if (product_size(list) > options.max_sequences) {
        throw CapExceeded("sequence product " + std::to_string(product_size(list)) + " exceeds the cap of " +
                          std::to_string(options.max_sequences));
    }
}

SequenceEvidence evaluate(std::span<const GambleSet> list, const GambleSet& b, std::uint64_t index,
                          Regularity mode) {
    SequenceEvidence ev;
    ev.choice = sequence_at(list, index);
    std::vector<Gamble> chosen;
    chosen.reserve(list.size());
    for (std::size_t i = 0; i < list.size(); ++i) {
        chosen.push_back(list[i][ev.choice[i]]);
    }
    const ConeGenerators gens(b.dim(), std::move(chosen));
    ev.generators = gens.generators();
    if (auto cert = zero_in_cone(gens, mode)) {
        ev.verdict = Verdict::Skip;
        ev.certificate = std::move(cert);
        return ev;
    }
    for (std::size_t k = 0; k < b.size(); ++k) {
        if (auto cert = cone_contains(gens, b[k], mode)) {
            ev.verdict = Verdict::Hit;
            ev.hit = k;
            ev.certificate = std::move(cert);
            return ev;
        }
    }
    ev.verdict = Verdict::Miss;
    return ev;
}

ExtAnswer assemble(std::span<const GambleSet> list, std::vector<SequenceEvidence> evidence) {
    ExtAnswer answer;
    answer.witness_list.assign(list.begin(), list.end());
    const auto miss = std::find_if(evidence.begin(), evidence.end(),
                                   [](const SequenceEvidence& e) { return e.verdict == Verdict::Miss; });
    answer.member = miss == evidence.end();
    if (!answer.member) {
        evidence.erase(miss + 1, evidence.end());
    }
    answer.per_sequence = std::move(evidence);
    return answer;
}

bool direct_member(const GambleSet& b, Regularity mode, std::optional<std::size_t>& which) {
    for (std::size_t k = 0; k < b.size(); ++k) {
        if (mode == Regularity::Weak ? in_cone_wd0(b[k]) : in_cone_gt0(b[k])) {
            which = k;
            return true;
        }
    }
    return false;
}

} // namespace

Assessment::Assessment(std::size_t dim, std::vector<GambleSet> sets) : dim_(dim), sets_(std::move(sets)) {
    for (const auto& s : sets_) {
        if (s.dim() != dim_) {
            throw DimensionError("assessment member of dimension " + std::to_string(s.dim()) + ", expected " +
                                 std::to_string(dim_));
        }
    }
    std::sort(sets_.begin(), sets_.end());
    sets_.erase(std::unique(sets_.begin(), sets_.end()), sets_.end());
}

Assessment Assessment::with(const GambleSet& s) const {
    auto sets = sets_;
    sets.push_back(s);
    return Assessment(dim_, std::move(sets));
}

std::uint64_t product_size(std::span<const GambleSet> list) {
    constexpr auto max = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t n = 1;
    for (const auto& s : list) {
        if (s.empty()) {
            return 0;
        }
        n = n > max / s.size() ? max : n * s.size();
    }
    return n;
}

std::vector<std::size_t> sequence_at(std::span<const GambleSet> list, std::uint64_t index) {
    std::vector<std::size_t> choice(list.size());
    for (std::size_t i = list.size(); i-- > 0;) {
        choice[i] = static_cast<std::size_t>(index % list[i].size());
        index /= list[i].size();
    }
    return choice;
}

ExtAnswer closure_holds(std::span<const GambleSet> list, const GambleSet& b, const ClosureOptions& options) {
    check_list(list, b, options);
    const auto total = static_cast<std::int64_t>(product_size(list));
    std::vector<SequenceEvidence> evidence(static_cast<std::size_t>(total));
    const bool go_parallel = static_cast<std::size_t>(total) >= options.parallel_threshold;
#pragma omp parallel for schedule(dynamic) if (go_parallel)
    for (std::int64_t i = 0; i < total; ++i) {
        evidence[static_cast<std::size_t>(i)] =
            evaluate(list, b, static_cast<std::uint64_t>(i), options.regularity);
    }
    return assemble(list, std::move(evidence));
}

ExtAnswer closure_holds_serial(std::span<const GambleSet> list, const GambleSet& b, const ClosureOptions& options) {
    check_list(list, b, options);
    const std::uint64_t total = product_size(list);
    std::vector<SequenceEvidence> evidence;
    for (std::uint64_t i = 0; i < total; ++i) {
        evidence.push_back(evaluate(list, b, i, options.regularity));
        if (evidence.back().verdict == Verdict::Miss) {
            break;
        }
    }
    return assemble(list, std::move(evidence));
}

ExtAnswer ext_contains(const Assessment& a, const GambleSet& b, const ClosureOptions& options) {
    if (a.dim() != b.dim()) {
        throw DimensionError("query set and assessment differ in dimension");
    }
    if (a.empty()) {
        ExtAnswer answer;
        answer.member = direct_member(b, options.regularity, answer.direct_hit);
        return answer;
    }
    return closure_holds(a.sets(), b, options);
}

bool is_consistent(const Assessment& a, const ClosureOptions& options) {
    return !ext_contains(a, GambleSet(a.dim()), options).member;
}

bool verify_answer(const ExtAnswer& answer, const GambleSet& b, Regularity mode) {
    if (!answer.member) {
        return true;
    }
    if (answer.direct_hit) {
        if (*answer.direct_hit >= b.size()) {
            return false;
        }
        const Gamble& f = b[*answer.direct_hit];
        return mode == Regularity::Weak ? in_cone_wd0(f) : in_cone_gt0(f);
    }
    const std::span<const GambleSet> list = answer.witness_list;
    if (list.empty() || answer.per_sequence.size() != product_size(list)) {
        return false;
    }
    for (std::uint64_t i = 0; i < answer.per_sequence.size(); ++i) {
        const auto& ev = answer.per_sequence[i];
        if (ev.choice != sequence_at(list, i) || !ev.certificate) {
            return false;
        }
        std::vector<Gamble> chosen;
        for (std::size_t k = 0; k < list.size(); ++k) {
            chosen.push_back(list[k][ev.choice[k]]);
        }
        if (ConeGenerators(b.dim(), std::move(chosen)).generators() != ev.generators) {
            return false;
        }
        switch (ev.verdict) {
        case Verdict::Skip:
            if (!verify_certificate(ev.generators, Gamble::zero(b.dim()), *ev.certificate, mode)) {
                return false;
            }
            break;
        case Verdict::Hit:
            if (!ev.hit || *ev.hit >= b.size() ||
                !verify_certificate(ev.generators, b[*ev.hit], *ev.certificate, mode)) {
                return false;
            }
            break;
        case Verdict::Miss:
            return false;
        }
    }
    return true;
}

} // namespace desir
