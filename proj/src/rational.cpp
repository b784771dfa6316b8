#include "desir/rational.hpp"

#include <cctype>
#include <ostream>
#include <utility>

#include "desir/error.hpp"

namespace desir {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            return false;
        }
    }
    return true;
}

} // namespace

Rational::Rational(std::int64_t value) : value_(static_cast<long>(value)) {}

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
    if (denominator == 0) {
        throw InputError("rational with zero denominator");
    }
    value_ = mpq_class(mpz_class(static_cast<long>(numerator)), mpz_class(static_cast<long>(denominator)));
    value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && body.front() == '-') {
        negative = true;
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    const std::string_view num = body.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
        throw InputError("malformed rational '" + std::string(text) + "'");
    }
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) {
        throw InputError("rational with zero denominator '" + std::string(text) + "'");
    }
    if (negative) {
        n = -n;
    }
    return Rational(mpq_class(n, d));
}

std::string Rational::to_string() const { return value_.get_str(10); }

Rational& Rational::operator+=(const Rational& rhs) {
    value_ += rhs.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    value_ -= rhs.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    value_ *= rhs.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) {
        throw std::domain_error("rational division by zero");
    }
    value_ /= rhs.value_;
    return *this;
}

Rational operator-(const Rational& x) { return Rational(mpq_class(-x.value_)); }

Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.to_string(); }

} // namespace desir
