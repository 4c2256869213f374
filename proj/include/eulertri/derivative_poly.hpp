#pragma once

#include "eulertri/poly.hpp"
#include "eulertri/report.hpp"

#include <cstdint>
#include <vector>

namespace eulertri {

/// Q_n(delta,t) = sum_k coeffs[k] t^(n-2k), k = 0..floor(n/2).
struct QPoly {
    std::size_t n = 0;
    Rational delta;
    std::vector<Rational> coeffs;

    Poly dense() const;  // as a polynomial in t
    Rational at(const Rational& t) const;
};

/// Q_0 .. Q_{n_max} via Q_{n+1,k} = (n-2k+delta) Q_{n,k} + (n-2k+2) Q_{n,k-1}.
std::vector<QPoly> build_Q(const Rational& delta, std::size_t n_max);

/// Q_n(1,1) for n <= n_max.
std::vector<Rational> springer(std::size_t n_max);

/// Springer numbers by differentiating sec t in the (x = tan t, y = sec t) algebra.
std::vector<Rational> springer_via_sec_derivatives(std::size_t n_max);

/// S_n(a(1+v)/(2c)) = (a/2)^n sum_k Q_{n,k}(2b/a) v^k.
VerificationReport verify_thm34(const Rational& a, const Rational& b, const Rational& c, std::size_t n_max,
                                const std::string& scope = "params");
VerificationReport verify_thm34_random(std::size_t draws, std::size_t n_max, std::uint64_t seed);

/// E_n(x) = (a1/2)^n sum_k (-1)^k Q_{n,k}(2a2/a1) (1+x)^(n-2k) (1-x)^(2k).
VerificationReport verify_thm35(const Rational& a1, const Rational& a2, std::size_t n_max,
                                const std::string& scope = "params");
VerificationReport verify_thm35_random(std::size_t draws, std::size_t n_max, std::uint64_t seed);

/// sum_n Q_n(delta,x) z^n/n! = (cos z - x sin z)^(-delta), to the given order.
VerificationReport verify_Q_egf(const Rational& delta, std::size_t order, const std::string& scope = "params");

/// Q_n(delta,t) compared against the Springer oracle for n <= n_max.
VerificationReport verify_springer(std::size_t n_max);

}  // namespace eulertri
