#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "desir/cone.hpp"
#include "desir/gamble.hpp"

namespace desir {

/// A finite family of gamble sets (the assessment whose natural extension is
/// queried). Members are deduplicated and kept in canonical order.
class Assessment {
public:
    explicit Assessment(std::size_t dim) : dim_(dim) {}
    Assessment(std::size_t dim, std::vector<GambleSet> sets);

    [[nodiscard]] std::size_t dim() const { return dim_; }
    [[nodiscard]] std::size_t size() const { return sets_.size(); }
    [[nodiscard]] bool empty() const { return sets_.empty(); }
    [[nodiscard]] const std::vector<GambleSet>& sets() const { return sets_; }
    [[nodiscard]] Assessment with(const GambleSet& s) const;

    friend bool operator==(const Assessment&, const Assessment&) = default;

private:
    std::size_t dim_;
    std::vector<GambleSet> sets_;
};

enum class Verdict { Skip, Hit, Miss };

/// Evidence for one sequence <g_1..g_n> of the witness-list product.
struct SequenceEvidence {
    std::vector<std::size_t> choice;   ///< index into each witness set
    std::vector<Gamble> generators;    ///< the cone generators the certificate refers to
    Verdict verdict = Verdict::Miss;
    std::optional<std::size_t> hit;    ///< index into B for a Hit
    std::optional<Certificate> certificate;
};

struct ExtAnswer {
    bool member = false;
    std::vector<GambleSet> witness_list;
    /// Every sequence in lexicographic order when member; otherwise the
    /// sequences up to and including the first Miss.
    std::vector<SequenceEvidence> per_sequence;
    /// Set when membership follows from some f in B with f ⪈ 0 (or f > 0 in
    /// strict mode) without a witness list.
    std::optional<std::size_t> direct_hit;
};

struct ClosureOptions {
    Regularity regularity = Regularity::Weak;
    /// Products larger than this are refused with CapExceeded.
    std::uint64_t max_sequences = 1'000'000;
    /// Products smaller than this run serially even in the parallel kernel.
    std::size_t parallel_threshold = 64;
};

/// Number of sequences in A_1 × ... × A_n (saturating).
std::uint64_t product_size(std::span<const GambleSet> list);

/// Lexicographic enumeration of the product, last factor fastest.
std::vector<std::size_t> sequence_at(std::span<const GambleSet> list, std::uint64_t index);

/// For every <g_1..g_n> in A_1 × ... × A_n: 0 in desext({g_i}) (Skip) or some
/// f in B lies in desext({g_i}) (Hit). Per-sequence checks run under OpenMP.
/// Requires a nonempty list.
ExtAnswer closure_holds(std::span<const GambleSet> list, const GambleSet& b, const ClosureOptions& options = {});

/// Serial reference kernel; same contract and same answer as closure_holds.
ExtAnswer closure_holds_serial(std::span<const GambleSet> list, const GambleSet& b,
                               const ClosureOptions& options = {});

/// B in Ext(A). The empty assessment accepts B iff some f in B is ⪈ 0;
/// otherwise the full member list of A is the witness list.
ExtAnswer ext_contains(const Assessment& a, const GambleSet& b, const ClosureOptions& options = {});

/// The empty set is not in Ext(A).
bool is_consistent(const Assessment& a, const ClosureOptions& options = {});

/// Re-validates every certificate of a positive answer by substitution and
/// checks that the evidence covers the whole product.
bool verify_answer(const ExtAnswer& answer, const GambleSet& b, Regularity mode = Regularity::Weak);

} // namespace desir
