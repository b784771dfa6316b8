#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace desir {

/// Exact arbitrary-precision fraction, always kept in lowest terms with a
/// positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t value); // NOLINT(google-explicit-constructor)
    Rational(std::int64_t numerator, std::int64_t denominator);
    explicit Rational(mpq_class value);

    /// Parses "n", "-n" or "n/d" (d > 0). Non-reduced fractions are accepted
    /// and canonicalized; anything else throws InputError.
    static Rational parse(std::string_view text);

    /// Canonical wire form: "n", "-n" or "n/d".
    [[nodiscard]] std::string to_string() const;
    [[nodiscard]] double to_double() const { return value_.get_d(); }

    [[nodiscard]] mpz_class numerator() const { return value_.get_num(); }
    [[nodiscard]] mpz_class denominator() const { return value_.get_den(); }
    [[nodiscard]] int sign() const { return sgn(value_); }
    [[nodiscard]] bool is_zero() const { return sign() == 0; }
    [[nodiscard]] bool is_integer() const { return value_.get_den() == 1; }
    [[nodiscard]] const mpq_class& raw() const { return value_; }

    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
    friend Rational operator-(const Rational& x);

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpq_class value_{0};
};

Rational abs(const Rational& x);

std::ostream& operator<<(std::ostream& os, const Rational& x);

} // namespace desir
