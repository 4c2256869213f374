#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>

namespace eulertri {

/// Exact arbitrary-precision rational, always in lowest terms with a
/// positive denominator. Every scalar in the library is a Rational.
class Rational {
public:
    Rational() = default;

    template <std::integral I>
    Rational(I value) : v_(static_cast<long>(value)) {}  // NOLINT(google-explicit-constructor)

    Rational(long num, long den);
    explicit Rational(mpq_class v);
    explicit Rational(const mpz_class& v) : v_(v) {}

    /// Parses "p", "-p", "p/q". Throws std::invalid_argument on malformed
    /// input or a zero denominator.
    static Rational parse(std::string_view text);

    const mpq_class& raw() const { return v_; }
    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    int sign() const { return sgn(v_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return v_.get_den() == 1; }

    /// "p" for integers, "p/q" otherwise.
    std::string to_string() const;

    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);  // throws std::domain_error on zero

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const;

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.to_string();
    }

private:
    mpq_class v_;
};

/// Integer power; negative exponents invert (zero base rejected).
Rational pow(const Rational& base, long exponent);
Rational abs(const Rational& r);

/// n! as a Rational.
Rational factorial(std::size_t n);

/// Integer binomial C(n, k), zero when k > n.
Rational binomial(std::size_t n, std::size_t k);

/// Generalized binomial r(r-1)...(r-k+1)/k! with rational upper argument.
Rational rational_binomial(const Rational& r, std::size_t k);

}  // namespace eulertri
