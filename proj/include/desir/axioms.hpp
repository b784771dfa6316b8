#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "desir/extension.hpp"

namespace desir {

enum class Axiom { NonTrivial, DropZero, Positive, Superset, Dominators, Add };

std::string_view axiom_name(Axiom axiom);
const std::vector<Axiom>& all_axioms();

struct AxiomReport {
    Axiom axiom = Axiom::NonTrivial;
    std::size_t instances = 0;
    std::vector<std::string> counterexamples;

    [[nodiscard]] bool passed() const { return counterexamples.empty(); }
};

/// f_<g_1..g_n> for a sequence; must lie in posi({g_1..g_n}).
using Combination = std::function<Gamble(std::span<const Gamble> sequence)>;

/// {f_<g> : <g> in A_1 × ... × A_n}, the set the addition axiom produces.
GambleSet kadd_combine(std::span<const GambleSet> list, const Combination& combination);

/// Samples instances of the axiom's hypothesis among members of Ext(A) and
/// checks the conclusion with ext_contains. Throws InconsistentAssessment
/// when the empty set is in Ext(A).
AxiomReport check_axiom(const Assessment& a, Axiom axiom, std::uint64_t seed, std::size_t trials,
                        const ClosureOptions& options = {});

} // namespace desir
