#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "desir/rational.hpp"

namespace desir {

/// Finite, nonempty, ordered set of distinctly named atoms.
class PossibilitySpace {
public:
    explicit PossibilitySpace(std::vector<std::string> labels);
    /// Atoms named "w0", "w1", ...
    static PossibilitySpace with_size(std::size_t n);

    [[nodiscard]] std::size_t size() const { return labels_.size(); }
    [[nodiscard]] const std::vector<std::string>& labels() const { return labels_; }
    /// Throws InputError for an unknown label.
    [[nodiscard]] std::size_t index_of(std::string_view label) const;

private:
    std::vector<std::string> labels_;
};

/// An exact real-valued function on a finite possibility space, stored in
/// the space's label order.
class Gamble {
public:
    Gamble() = default;
    explicit Gamble(std::vector<Rational> values) : values_(std::move(values)) {}
    Gamble(std::initializer_list<Rational> values) : values_(values) {}
    static Gamble zero(std::size_t dim) { return Gamble(std::vector<Rational>(dim)); }
    static Gamble constant(std::size_t dim, const Rational& c) { return Gamble(std::vector<Rational>(dim, c)); }

    [[nodiscard]] std::size_t size() const { return values_.size(); }
    [[nodiscard]] const Rational& operator[](std::size_t i) const { return values_[i]; }
    [[nodiscard]] std::span<const Rational> values() const { return values_; }
    [[nodiscard]] bool is_zero() const;

    friend bool operator==(const Gamble&, const Gamble&) = default;
    friend auto operator<=>(const Gamble& a, const Gamble& b) { return a.values_ <=> b.values_; }

private:
    std::vector<Rational> values_;
};

void require_same_dim(const Gamble& f, const Gamble& g);

bool geq(const Gamble& f, const Gamble& g);  ///< f >= g everywhere
bool gt(const Gamble& f, const Gamble& g);   ///< f > g everywhere
bool wgeq(const Gamble& f, const Gamble& g); ///< f >= g and f != g

bool in_cone_wd0(const Gamble& f);  ///< f ⪈ 0
bool in_cone_gt0(const Gamble& f);  ///< f > 0
bool in_cone_geq0(const Gamble& f); ///< f >= 0
bool in_cone_leq0(const Gamble& f); ///< f <= 0

Gamble add(const Gamble& f, const Gamble& g);
Gamble subtract(const Gamble& f, const Gamble& g);
/// lambda > 0 required (InputError otherwise).
Gamble scale(const Rational& lambda, const Gamble& f);
Gamble indicator(const PossibilitySpace& space, std::string_view atom);
Gamble indicator(std::size_t dim, std::size_t atom);

/// sum_i weights[i] * gambles[i]; weights may be zero.
Gamble combine(std::span<const Rational> weights, std::span<const Gamble> gambles, std::size_t dim);

std::string to_string(const Gamble& f);

/// Finite set of gambles on a common space, kept sorted and deduplicated.
/// The dimension is stored explicitly so the empty set still has a space.
class GambleSet {
public:
    explicit GambleSet(std::size_t dim) : dim_(dim) {}
    GambleSet(std::size_t dim, std::vector<Gamble> members);

    [[nodiscard]] std::size_t dim() const { return dim_; }
    [[nodiscard]] std::size_t size() const { return members_.size(); }
    [[nodiscard]] bool empty() const { return members_.empty(); }
    [[nodiscard]] const std::vector<Gamble>& members() const { return members_; }
    [[nodiscard]] const Gamble& operator[](std::size_t i) const { return members_[i]; }
    [[nodiscard]] auto begin() const { return members_.begin(); }
    [[nodiscard]] auto end() const { return members_.end(); }

    [[nodiscard]] bool contains(const Gamble& g) const;
    [[nodiscard]] bool is_subset_of(const GambleSet& other) const;
    [[nodiscard]] GambleSet with(const Gamble& g) const;
    [[nodiscard]] GambleSet without(const Gamble& g) const;
    [[nodiscard]] GambleSet united(const GambleSet& other) const;

    friend bool operator==(const GambleSet&, const GambleSet&) = default;
    friend auto operator<=>(const GambleSet& a, const GambleSet& b) {
        if (auto c = a.dim_ <=> b.dim_; c != 0) {
            return c;
        }
        return a.members_ <=> b.members_;
    }

private:
    std::size_t dim_;
    std::vector<Gamble> members_;
};

std::string to_string(const GambleSet& s);

} // namespace desir
