#pragma once

#include "eulertri/poly.hpp"
#include "eulertri/report.hpp"
#include "eulertri/triangle.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

namespace eulertri {

/// Row n of the lift T(n,k) = sum_i A(n,i) C(n-i,k-i) lambda^(n-k) d^(k-i).
std::vector<Rational> lift_A_to_T(const Triangle& a, const Rational& lambda, const Rational& d, std::size_t n);

/// Compares build_T against both lift paths of build_A for every n <= n_max.
VerificationReport verify_thm21(const TriangleParams& params, std::size_t n_max, const std::string& scope = "params");

/// Small random rational p/q with |p| <= 10, 1 <= q <= 10.
Rational draw_small_rational(std::mt19937_64& rng, bool nonzero = false, bool positive = false);
/// Random parameters with lambda != 0 and b1 := d a1 - c.
TriangleParams draw_compatible_params(std::mt19937_64& rng);
VerificationReport verify_thm21_random(std::size_t draws, std::size_t n_max, std::uint64_t seed);

struct FrobeniusParams {
    Rational a1, a2, b1, b2;
    /// Throws std::invalid_argument if a1 or b1 is zero.
    void validate() const;
    std::string describe() const;
};

Rational frobenius_explicit(const FrobeniusParams& p, std::size_t n, std::size_t k);
VerificationReport verify_thm31(const FrobeniusParams& p, std::size_t n_max, const std::string& scope = "params");
VerificationReport verify_thm31_random(std::size_t draws, std::size_t n_max, std::uint64_t seed);

/// Two-term triangle with middle coefficient b1 k + b2 - b1 + (a2/a1) b1.
Triangle build_F_shifted(const FrobeniusParams& p, std::size_t n_max);
VerificationReport verify_thm32(const FrobeniusParams& p, std::size_t n_max, const std::string& scope = "params");
VerificationReport verify_thm32_random(std::size_t draws, std::size_t n_max, std::uint64_t seed);

/// <n,k> = sum_i S(n,i) i! C(n-i,k-i) (-1)^(k-i), checked against the shifted Eulerian rows.
VerificationReport verify_formu_eulerian(std::size_t n_max);
/// Eulerian number <n,k> via the Stirling sum (permutations of [n] with k-1 descents).
Rational eulerian_via_stirling(std::size_t n, std::size_t k);

struct GammaVector {
    std::size_t n = 0;
    std::vector<Rational> entries;  // k = 0..floor(n/2)
    Rational scale{1};

    bool nonnegative() const;
};

struct GammaOutcome {
    std::optional<GammaVector> gamma;
    Poly residual;  // nonzero exactly on failure
    std::string reason;
};

/// Solves p = sum_k g_k x^k (1+x)^(n-2k) by descending-degree elimination.
GammaOutcome gamma_decompose(const Poly& p, std::size_t n);
Poly reconstruct(const GammaVector& g);

VerificationReport verify_thm33(const Rational& a1, const Rational& a2, const Rational& c, std::size_t n_max,
                                const std::string& scope = "params");
VerificationReport verify_thm33_random(std::size_t draws, std::size_t n_max, std::uint64_t seed);

}  // namespace eulertri
