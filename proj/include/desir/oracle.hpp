#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>

#include "desir/extension.hpp"
#include "desir/random.hpp"

namespace desir {

// Ground truth decided by Fourier–Motzkin elimination only; none of these
// call the simplex.

/// f in posi(gens).
bool fm_posi_contains(std::span<const Gamble> gens, const Gamble& f);

/// f in posi(gens ∪ indicators) = desext(gens).
bool fm_desext_contains(std::span<const Gamble> gens, const Gamble& f);

/// 0 in posi(gens ∪ indicators).
bool fm_zero_in_desext(std::span<const Gamble> gens);

/// f in posi(gens ∪ G>0), decided as f > 0, or f in posi(gens), or
/// sum lambda_i g_i < f with sum lambda > 0.
bool fm_strict_contains(std::span<const Gamble> gens, const Gamble& f);

/// B in Ext(A) by searching every multiset of members of A of size up to
/// max_len as a witness list. Throws CapExceeded when a single product has
/// more than cap sequences.
bool brute_ext_contains(const Assessment& a, const GambleSet& b, std::size_t max_len,
                        std::uint64_t cap = 100'000);

struct InstanceGenConfig {
    std::uint64_t seed = 0;
    std::size_t omega_size = 2;
    std::size_t num_sets = 2;
    std::size_t set_size = 2;
    std::int64_t coeff_range = 2;
};

/// Gamble with integer entries in [-range, range].
Gamble random_gamble(SeededRng& rng, std::size_t dim, std::int64_t range);

/// Up to `size` distinct random gambles.
GambleSet random_set(SeededRng& rng, std::size_t dim, std::size_t size, std::int64_t range);

/// Deterministic (assessment, query set) for the seed. Throws InputError on
/// a zero size or range.
std::pair<Assessment, GambleSet> gen_instance(const InstanceGenConfig& cfg);

} // namespace desir
