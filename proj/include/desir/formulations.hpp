#pragma once

#include "desir/extension.hpp"

namespace desir {

/// Natural extension via posi and dominance only: B is in iff some f in B is
/// ⪈ 0, or over the full member list every sequence either has 0 in its
/// desext or admits f in B and h in posi(sequence) with f >= h. Uses its own
/// homogenized LP encodings.
ExtAnswer ext_contains_decadt(const Assessment& a, const GambleSet& b);

/// Natural extension in the posi-of-sets style: every sequence over the full
/// member list, augmented with all indicator singletons, must have some f in
/// B ∪ G_{<=0} inside posi of the augmented sequence. Certificates refer to
/// the augmented generator list (sequence members, then indicators).
ExtAnswer ext_contains_dbdc(const Assessment& a, const GambleSet& b);

/// Exists f <= 0 in posi(E ∪ indicators); the DBdC form of the Skip clause.
std::optional<Certificate> nonpositive_in_indicator_posi(const ConeGenerators& e);

struct FormulationReport {
    bool natext = false;
    bool decadt = false;
    bool dbdc = false;
    bool certificates_valid = false;

    [[nodiscard]] bool agree() const { return natext == decadt && decadt == dbdc; }
};

FormulationReport compare_formulations(const Assessment& a, const GambleSet& b);

/// All three membership answers coincide (a false return is a bug report).
bool formulations_agree(const Assessment& a, const GambleSet& b);

/// Verifies an answer whose evidence carries its own generator lists
/// (as produced by the alternative formulations).
bool verify_self_contained(const ExtAnswer& answer, const GambleSet& b);

} // namespace desir
