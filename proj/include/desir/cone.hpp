#pragma once

#include <optional>
#include <span>
#include <vector>

#include "desir/gamble.hpp"

namespace desir {

/// Which background cone is added to the generators: the weakly positive
/// gambles (the default) or, in regularity mode, the strictly positive ones.
enum class Regularity { Weak, Strict };

/// Finite deduplicated generator list E of a cone, in canonical order.
class ConeGenerators {
public:
    explicit ConeGenerators(std::size_t dim) : set_(dim) {}
    ConeGenerators(std::size_t dim, std::vector<Gamble> generators) : set_(dim, std::move(generators)) {}
    explicit ConeGenerators(GambleSet set) : set_(std::move(set)) {}

    [[nodiscard]] std::size_t dim() const { return set_.dim(); }
    [[nodiscard]] std::size_t size() const { return set_.size(); }
    [[nodiscard]] bool empty() const { return set_.empty(); }
    [[nodiscard]] const std::vector<Gamble>& generators() const { return set_.members(); }
    [[nodiscard]] const Gamble& operator[](std::size_t i) const { return set_[i]; }
    [[nodiscard]] const GambleSet& as_set() const { return set_; }

    friend bool operator==(const ConeGenerators&, const ConeGenerators&) = default;

private:
    GambleSet set_;
};

/// Witness that f = sum_i lambdas[i] * generators[i] + remainder.
struct Certificate {
    std::vector<Rational> lambdas;
    Gamble remainder;

    friend bool operator==(const Certificate&, const Certificate&) = default;
};

/// Exact reconstruction plus the validity predicate for the regularity mode:
///   Weak:   (sum > 0 and remainder >= 0) or (sum = 0 and remainder ⪈ 0)
///   Strict: (sum > 0 and (remainder = 0 or remainder > 0)) or (sum = 0 and remainder > 0)
/// `generators` may contain repeats; lambdas align with it.
bool verify_certificate(std::span<const Gamble> generators, const Gamble& f, const Certificate& cert,
                        Regularity mode = Regularity::Weak);
bool verify_certificate(const ConeGenerators& e, const Gamble& f, const Certificate& cert,
                        Regularity mode = Regularity::Weak);

/// f in posi(E): f = sum lambda_i g_i with lambda >= 0 and sum lambda > 0.
/// Remainder of the returned certificate is zero. posi(empty) is empty.
std::optional<Certificate> posi_contains(const ConeGenerators& e, const Gamble& f);

/// posi membership over an explicit, possibly repeating, generator list.
std::optional<Certificate> posi_decompose(std::span<const Gamble> generators, const Gamble& f);

/// f in desext(E) = posi(E ∪ G⪈0): either sum lambda_i g_i <= f for some
/// lambda >= 0 with sum lambda > 0, or f ⪈ 0 (certificate with zero lambdas).
std::optional<Certificate> desext_contains(const ConeGenerators& e, const Gamble& f);

/// 0 in desext(E). The certificate's lambdas are the primitive integer
/// vector of a maximally spread solution, its remainder is -sum lambda_i g_i.
std::optional<Certificate> zero_in_desext(const ConeGenerators& e);

/// desext(E) is a coherent set of desirable gambles: 0 not in desext(E).
bool d_coherent(const ConeGenerators& e);

/// f in posi(E ∪ G>0).
std::optional<Certificate> desext_contains_strict(const ConeGenerators& e, const Gamble& f);

std::optional<Certificate> zero_in_desext_strict(const ConeGenerators& e);

/// Regularity-dispatching forms of the two tests above.
std::optional<Certificate> cone_contains(const ConeGenerators& e, const Gamble& f, Regularity mode);
std::optional<Certificate> zero_in_cone(const ConeGenerators& e, Regularity mode);

/// Scales a nonnegative vector to the primitive integer vector on its ray.
std::vector<Rational> primitive_integer_vector(std::span<const Rational> v);

} // namespace desir
