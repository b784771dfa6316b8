#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <span>
#include <vector>

#include "desir/axioms.hpp"
#include "desir/cone.hpp"

namespace desir {

/// Decides f in posi(generators); lets traces be re-checked by any backend.
using PosiChecker = std::function<bool(std::span<const Gamble> generators, const Gamble& f)>;

/// The engine's own checker (simplex-backed posi_decompose).
PosiChecker simplex_posi_checker();

/// Values f_<g> keyed by the choice vector (one index per set).
using SequenceMap = std::map<std::vector<std::size_t>, Gamble>;

enum class StepKind { Premise, AddPair };

/// produced in posi({left, right}); certificate lambdas align with [left, right].
struct PairWitness {
    Gamble left;
    Gamble right;
    Gamble produced;
    Certificate certificate;
};

/// A premise, or one pairwise-addition step followed by taking a superset:
/// the produced gambles all lie in `result`.
struct DerivationStep {
    StepKind kind = StepKind::Premise;
    std::size_t left = 0;
    std::size_t right = 0;
    std::vector<PairWitness> pairs;
    GambleSet result{0};
};

struct DerivationTrace {
    std::vector<DerivationStep> steps;
    std::size_t conclusion = 0;
    GambleSet target{0};

    [[nodiscard]] std::size_t pair_steps() const;
};

/// Derives {f_<g>} from A_1..A_n using only pairwise addition and supersets,
/// replacing the members of the last set one at a time and recursing on the
/// shorter list for the auxiliary set. Throws InputError if a sequence is
/// missing from the map or its value is not in posi of the sequence.
DerivationTrace addpair_derive(std::span<const GambleSet> list, const SequenceMap& combination);
DerivationTrace addpair_derive(std::span<const GambleSet> list, const Combination& combination);

/// Premises are the sets of `list`; every pairwise membership is re-checked
/// with `checker` and the conclusion must be a subset of the target.
bool verify_trace(const DerivationTrace& trace, std::span<const GambleSet> list, const PosiChecker& checker);

/// The addition instance that yields {f_g : g in A} from A and the
/// singletons {f_g - g} (for f_g != g).
struct DomTrace {
    GambleSet source{0};
    GambleSet target{0};
    std::vector<Gamble> singletons;
    std::vector<GambleSet> add_list;

    struct Entry {
        Gamble chosen;
        Gamble value;
        std::vector<Gamble> sequence;
        Certificate certificate;
    };
    std::vector<Entry> combination;
};

/// Throws InputError if some g in A has no dominator or f_g >= g fails.
DomTrace dom_from_add_check(const GambleSet& a, const std::map<Gamble, Gamble>& dominators);

bool verify_dom_trace(const DomTrace& trace, const PosiChecker& checker);

} // namespace desir
