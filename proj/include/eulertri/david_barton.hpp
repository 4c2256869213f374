#pragma once

#include "eulertri/report.hpp"
#include "eulertri/triangle.hpp"

#include <cstdint>

namespace eulertri {

/// Parameters with b2 = d (a2 + sigma a1) and c = d a1, sigma in {-1, 0, 1}.
struct DBInstance {
    Rational a1, a2, c, d, b2;
    int sigma = 0;

    static DBInstance make(const Rational& a1, const Rational& a2, const Rational& d, int sigma);
    /// Throws std::invalid_argument when sigma or the derived parameters are off.
    void validate() const;
    std::string describe() const;
};

/// T(n,k) = d (a1 k + a2) T(n-1,k) + b2 T(n-1,k-1) + c (n-k+1) T(n-1,k-2).
CoeffRule db_rule(const DBInstance& inst);
Triangle build_T_db(const DBInstance& inst, std::size_t n_max);

/// (1+w^2)^n T_n((1-w^2)/(1+w^2)) = a2^(-sigma) (2d)^n 2^(-(n+sigma)) sum_k E_{n+sigma,k} (1-w)^k (1+w)^(n+sigma-k).
VerificationReport verify_thm36(const DBInstance& inst, std::size_t n_max, const std::string& scope = "params");
/// Same identity for an arbitrary T triangle (used for the preset-built rows).
VerificationReport verify_thm36_rows(const DBInstance& inst, const Triangle& t, const std::string& scope);
VerificationReport verify_thm36_random(std::size_t draws_per_sigma, std::size_t n_max, std::uint64_t seed);

/// Parts (ii), (iii) and (iv) for the shifted type-B runs triangle.
VerificationReport verify_prop43(std::size_t n_max);

}  // namespace eulertri
