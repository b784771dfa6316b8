#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "desir/axioms.hpp"
#include "desir/extension.hpp"

namespace desir {

/// A coherent set of desirable gambles given as desext(E) for a finite E
/// with 0 not in desext(E).
class FinGenD {
public:
    /// Throws InputError when 0 is in desext(generators).
    explicit FinGenD(ConeGenerators generators);
    static std::optional<FinGenD> try_make(ConeGenerators generators);

    [[nodiscard]] const ConeGenerators& generators() const { return generators_; }
    [[nodiscard]] std::size_t dim() const { return generators_.dim(); }

private:
    struct Trusted {};
    FinGenD(ConeGenerators generators, Trusted) : generators_(std::move(generators)) {}

    ConeGenerators generators_;
};

/// The family of all coherent D containing desext(seq) for some sequence
/// over A_1 × ... × A_n with 0 not in desext(seq).
struct DFamilySpec {
    std::vector<GambleSet> sets;
};

/// B ∩ D nonempty.
bool kd_contains(const FinGenD& d, const GambleSet& b);

/// D belongs to the family: some sequence is consistent and lies in D.
bool family_contains_d(const DFamilySpec& fam, const FinGenD& d);

/// Evidence for one sequence of a family: either the sequence is
/// inconsistent, or its cone is coherent and meets B (or fails to).
struct FamilyWitness {
    std::vector<std::size_t> choice;
    std::vector<Gamble> sequence;
    bool inconsistent = false;
    std::optional<std::size_t> hit;
    std::optional<Certificate> certificate;
};

struct FamilyAnswer {
    bool member = false;
    /// All sequences when member, otherwise up to the first failing one.
    std::vector<FamilyWitness> witnesses;
};

/// B in K of the family: for every sequence, 0 in desext(seq) or B meets the
/// coherent cone D = desext(seq).
FamilyAnswer k_family_answer(const DFamilySpec& fam, const GambleSet& b, std::uint64_t cap = 1'000'000);
bool k_family_contains(const DFamilySpec& fam, const GambleSet& b);

/// k_family_contains over the full member list of A equals ext_contains.
/// Throws InputError for an empty A and InconsistentAssessment when the empty
/// set is in Ext(A).
bool representation_agrees(const Assessment& a, const GambleSet& b);

struct ClosureReport {
    std::size_t checked = 0;
    std::size_t antecedent_held = 0;
    std::vector<std::string> violations;

    [[nodiscard]] bool passed() const { return violations.empty(); }
};

/// D in family(fam1 ++ fam2) implies D in family(fam1) and in family(fam2).
ClosureReport downward_closure_check(const DFamilySpec& fam1, const DFamilySpec& fam2,
                                     std::span<const FinGenD> sampled);

struct KAddInstance {
    std::vector<GambleSet> sets;
    Combination combination;
};

/// For every instance whose sets all lie in K of every D, the combined set
/// does too.
ClosureReport kd_add_closure_check(std::span<const FinGenD> d_list, std::span<const KAddInstance> instances);

} // namespace desir
