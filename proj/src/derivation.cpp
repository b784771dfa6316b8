#include "desir/derivation.hpp"

#include <algorithm>
#include <set>

#include "desir/error.hpp"
#include "desir/extension.hpp"

namespace desir {

namespace {

std::vector<Gamble> chosen_gambles(std::span<const GambleSet> list, const std::vector<std::size_t>& choice) {
    std::vector<Gamble> seq;
    for (std::size_t i = 0; i < list.size(); ++i) {
        seq.push_back(list[i][choice[i]]);
    }
    return seq;
}

PairWitness witness(const Gamble& left, const Gamble& right, const Gamble& produced) {
    const std::vector<Gamble> gens{left, right};
    auto cert = posi_decompose(gens, produced);
    if (!cert) {
        throw std::logic_error("pair step produced " + to_string(produced) + " outside posi of " + to_string(left) +
                               ", " + to_string(right));
    }
    return PairWitness{left, right, produced, std::move(*cert)};
}

class Deriver {
public:
    explicit Deriver(DerivationTrace& trace) : trace_(trace) {}

    std::size_t premise(const GambleSet& s) {
        for (std::size_t i = 0; i < trace_.steps.size(); ++i) {
            if (trace_.steps[i].kind == StepKind::Premise && trace_.steps[i].result == s) {
                return i;
            }
        }
        DerivationStep step;
        step.kind = StepKind::Premise;
        step.result = s;
        trace_.steps.push_back(std::move(step));
        return trace_.steps.size() - 1;
    }

    // Returns the step whose result is {f_<g>}.
    std::size_t derive(std::span<const GambleSet> list, std::span<const std::size_t> premises, const SequenceMap& f) {
        const std::size_t dim = list.front().dim();
        const std::size_t n = list.size();
        if (n == 1) {
            const GambleSet& a = list[0];
            std::vector<Gamble> values;
            for (std::size_t i = 0; i < a.size(); ++i) {
                values.push_back(f.at({i}));
            }
            DerivationStep step;
            step.kind = StepKind::AddPair;
            step.left = premises[0];
            step.right = premises[0];
            for (std::size_t i = 0; i < a.size(); ++i) {
                for (std::size_t j = 0; j < a.size(); ++j) {
                    step.pairs.push_back(witness(a[i], a[j], values[i]));
                }
            }
            step.result = GambleSet(dim, std::move(values));
            trace_.steps.push_back(std::move(step));
            return trace_.steps.size() - 1;
        }

        const auto sub = list.first(n - 1);
        const GambleSet& last = list[n - 1];
        const std::uint64_t sub_total = product_size(sub);
        std::size_t previous = premises[n - 1]; // B_0 = A_n

        for (std::size_t k = 0; k < last.size(); ++k) {
            const Gamble& a = last[k];
            // h_<g> in posi({g_1..g_{n-1}}) with f_<g,a> in posi({a, h_<g>}).
            SequenceMap h;
            for (std::uint64_t s = 0; s < sub_total; ++s) {
                auto choice = sequence_at(sub, s);
                std::vector<Gamble> seq = chosen_gambles(sub, choice);
                auto full = choice;
                full.push_back(k);
                const Gamble& value = f.at(full);
                seq.push_back(a);
                const auto cert = posi_decompose(seq, value);
                if (!cert) {
                    throw std::logic_error("combination value left posi during derivation");
                }
                std::vector<Rational> head(cert->lambdas.begin(), cert->lambdas.end() - 1);
                const bool uses_head = std::any_of(head.begin(), head.end(), [](const Rational& x) { return x.sign() > 0; });
                seq.pop_back();
                h.emplace(choice, uses_head ? combine(head, seq, dim) : seq.front());
            }
            const std::size_t aux = derive(sub, premises.first(n - 1), h);

            std::vector<Gamble> next_members;
            for (std::uint64_t s = 0; s < sub_total; ++s) {
                auto full = sequence_at(sub, s);
                for (std::size_t j = 0; j <= k; ++j) {
                    full.push_back(j);
                    next_members.push_back(f.at(full));
                    full.pop_back();
                }
            }
            for (std::size_t j = k + 1; j < last.size(); ++j) {
                next_members.push_back(last[j]);
            }
            const GambleSet next(dim, std::move(next_members));

            DerivationStep step;
            step.kind = StepKind::AddPair;
            step.left = previous;
            step.right = aux;
            const GambleSet left_set = trace_.steps[previous].result;
            const GambleSet right_set = trace_.steps[aux].result;
            for (const auto& c : left_set) {
                for (const auto& b : right_set) {
                    if (next.contains(c)) {
                        step.pairs.push_back(witness(c, b, c));
                        continue;
                    }
                    // c is a itself; pick a sequence whose h is b.
                    const auto it = std::find_if(h.begin(), h.end(), [&](const auto& kv) { return kv.second == b; });
                    auto full = it->first;
                    full.push_back(k);
                    step.pairs.push_back(witness(c, b, f.at(full)));
                }
            }
            step.result = next;
            trace_.steps.push_back(std::move(step));
            previous = trace_.steps.size() - 1;
        }
        return previous;
    }

private:
    DerivationTrace& trace_;
};

} // namespace

PosiChecker simplex_posi_checker() {
    return [](std::span<const Gamble> gens, const Gamble& f) { return posi_decompose(gens, f).has_value(); };
}

std::size_t DerivationTrace::pair_steps() const {
    return static_cast<std::size_t>(
        std::count_if(steps.begin(), steps.end(), [](const DerivationStep& s) { return s.kind == StepKind::AddPair; }));
}

DerivationTrace addpair_derive(std::span<const GambleSet> list, const SequenceMap& combination) {
    if (list.empty()) {
        throw InputError("derivation needs at least one set");
    }
    const std::size_t dim = list.front().dim();
    const std::uint64_t total = product_size(list);
    std::vector<Gamble> target;
    for (std::uint64_t i = 0; i < total; ++i) {
        const auto choice = sequence_at(list, i);
        const auto it = combination.find(choice);
        if (it == combination.end()) {
            throw InputError("combination has no value for sequence " + std::to_string(i));
        }
        if (!posi_decompose(chosen_gambles(list, choice), it->second)) {
            throw InputError("combination value " + to_string(it->second) + " is not in posi of its sequence");
        }
        target.push_back(it->second);
    }

    DerivationTrace trace;
    trace.target = GambleSet(dim, std::move(target));
    if (total == 0) {
        throw InputError("derivation over an empty product");
    }
    Deriver deriver(trace);
    std::vector<std::size_t> premises;
    for (const auto& s : list) {
        premises.push_back(deriver.premise(s));
    }
    trace.conclusion = deriver.derive(list, premises, combination);
    return trace;
}

DerivationTrace addpair_derive(std::span<const GambleSet> list, const Combination& combination) {
    SequenceMap values;
    const std::uint64_t total = product_size(list);
    for (std::uint64_t i = 0; i < total; ++i) {
        auto choice = sequence_at(list, i);
        values.emplace(choice, combination(chosen_gambles(list, choice)));
    }
    return addpair_derive(list, values);
}

bool verify_trace(const DerivationTrace& trace, std::span<const GambleSet> list, const PosiChecker& checker) {
    for (std::size_t i = 0; i < trace.steps.size(); ++i) {
        const auto& step = trace.steps[i];
        if (step.kind == StepKind::Premise) {
            if (std::find(list.begin(), list.end(), step.result) == list.end()) {
                return false;
            }
            continue;
        }
        if (step.left >= i || step.right >= i) {
            return false;
        }
        const GambleSet& left = trace.steps[step.left].result;
        const GambleSet& right = trace.steps[step.right].result;
        if (step.pairs.size() != left.size() * right.size()) {
            return false;
        }
        std::size_t p = 0;
        for (const auto& c : left) {
            for (const auto& b : right) {
                const auto& w = step.pairs[p++];
                if (w.left != c || w.right != b || !step.result.contains(w.produced)) {
                    return false;
                }
                const std::vector<Gamble> gens{c, b};
                if (!verify_certificate(gens, w.produced, w.certificate) || !checker(gens, w.produced)) {
                    return false;
                }
            }
        }
    }
    return trace.conclusion < trace.steps.size() && trace.steps[trace.conclusion].result.is_subset_of(trace.target);
}

DomTrace dom_from_add_check(const GambleSet& a, const std::map<Gamble, Gamble>& dominators) {
    const std::size_t dim = a.dim();
    DomTrace trace;
    trace.source = a;
    std::vector<Gamble> values;
    std::set<Gamble> hs;
    for (const auto& g : a) {
        const auto it = dominators.find(g);
        if (it == dominators.end()) {
            throw InputError("no dominator given for " + to_string(g));
        }
        if (!geq(it->second, g)) {
            throw InputError(to_string(it->second) + " does not dominate " + to_string(g));
        }
        values.push_back(it->second);
        Gamble h = subtract(it->second, g);
        if (!h.is_zero()) {
            hs.insert(std::move(h));
        }
    }
    trace.target = GambleSet(dim, std::move(values));
    trace.singletons.assign(hs.begin(), hs.end());
    trace.add_list.push_back(a);
    for (const auto& h : trace.singletons) {
        trace.add_list.push_back(GambleSet(dim, {h}));
    }
    for (const auto& g : a) {
        const Gamble& f = dominators.at(g);
        const Gamble h = subtract(f, g);
        DomTrace::Entry entry{g, f, {g}, Certificate{{Rational(1)}, Gamble::zero(dim)}};
        for (const auto& s : trace.singletons) {
            entry.sequence.push_back(s);
            entry.certificate.lambdas.push_back(s == h ? Rational(1) : Rational(0));
        }
        trace.combination.push_back(std::move(entry));
    }
    return trace;
}

bool verify_dom_trace(const DomTrace& trace, const PosiChecker& checker) {
    const std::size_t dim = trace.source.dim();
    if (trace.add_list.empty() || trace.add_list.front() != trace.source ||
        trace.add_list.size() != trace.singletons.size() + 1) {
        return false;
    }
    for (std::size_t i = 0; i < trace.singletons.size(); ++i) {
        if (!in_cone_wd0(trace.singletons[i]) || trace.add_list[i + 1] != GambleSet(dim, {trace.singletons[i]})) {
            return false;
        }
    }
    if (trace.combination.size() != trace.source.size()) {
        return false;
    }
    std::vector<Gamble> produced;
    for (std::size_t i = 0; i < trace.combination.size(); ++i) {
        const auto& e = trace.combination[i];
        if (e.chosen != trace.source[i] || e.sequence.size() != trace.singletons.size() + 1 ||
            e.sequence.front() != e.chosen ||
            !std::equal(trace.singletons.begin(), trace.singletons.end(), e.sequence.begin() + 1)) {
            return false;
        }
        if (!verify_certificate(e.sequence, e.value, e.certificate) || !checker(e.sequence, e.value)) {
            return false;
        }
        produced.push_back(e.value);
    }
    return GambleSet(dim, std::move(produced)) == trace.target;
}

} // namespace desir
