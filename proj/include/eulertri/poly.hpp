#pragma once

#include "eulertri/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace eulertri {

/// Dense univariate polynomial over Rational. coeffs()[i] is the
/// coefficient of x^i; the highest stored coefficient is nonzero, so the
/// zero polynomial stores nothing and has degree -1.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rational> coeffs);
    Poly(std::initializer_list<Rational> coeffs) : Poly(std::vector<Rational>(coeffs)) {}

    static Poly constant(const Rational& c);
    static Poly x();
    static Poly monomial(const Rational& c, std::size_t degree);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    std::span<const Rational> coeffs() const { return coeffs_; }

    /// Coefficient of x^i, zero beyond the degree.
    const Rational& operator[](std::size_t i) const;
    const Rational& leading() const;  // zero for the zero polynomial

    Rational eval(const Rational& at) const;
    Poly derivative() const;
    Poly compose(const Poly& inner) const;  // this(inner(x))
    Poly pow(std::size_t e) const;
    Poly monic() const;
    bool is_even() const;  // only even exponents occur

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const Rational& s);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
    friend Poly operator*(const Rational& s, Poly a) { return a *= s; }
    Poly operator-() const;

    friend bool operator==(const Poly&, const Poly&) = default;

    std::string to_string(char var = 'x') const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

/// Euclidean division; throws std::domain_error for a zero divisor.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
/// Monic gcd (zero when both inputs are zero).
Poly gcd(const Poly& a, const Poly& b);

enum class PolyOp { add, sub, mul };
Poly poly_arith(const Poly& p, const Poly& q, PolyOp op);

/// den^n * p(num/den) = sum_i p_i num^i den^(n-i). Requires deg p <= n.
Poly homogeneous_substitute(const Poly& p, std::size_t n, const Poly& num, const Poly& den);

/// (lambda + d x)^n A(x / (lambda + d x)) as a polynomial of degree <= n.
/// Rejects deg A > n and lambda == 0 with std::invalid_argument.
Poly poly_compose_linear_lift(const Poly& a, std::size_t n, const Rational& lambda, const Rational& d);

/// First coefficient where p and q differ, as "coefficient of x^k: lhs=.. rhs=..";
/// empty string when p == q.
std::string first_difference(const Poly& lhs, const Poly& rhs, char var = 'x');

}  // namespace eulertri
