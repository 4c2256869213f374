#pragma once

#include "eulertri/biseries.hpp"
#include "eulertri/report.hpp"

#include <cstdint>

namespace eulertri {

/// e^{a2 t} [1 + b1 q (1 - e^{a1 t})/a1]^{-(1 + b2/b1)}
BiSeries frobenius_egf(const Rational& a1, const Rational& a2, const Rational& b1, const Rational& b2,
                       std::size_t order);
/// (e^{(q-1)t/3} / (1 - (q+1) sum_{m>=1} (q-1)^{m-1} t^m/m!))^{3/2}
BiSeries staircase_egf(std::size_t order);
/// (e^{(2q-1)t/3} / (1 - sum_{m>=1} (2q-1)^{m-1} t^m/m!))^{3/2}
BiSeries flower_egf(std::size_t order);

VerificationReport verify_egf_F(const Rational& a1, const Rational& a2, const Rational& b1, const Rational& b2,
                                std::size_t order, const std::string& scope = "params");
VerificationReport verify_egf_F_random(std::size_t draws, std::size_t order, std::uint64_t seed);
VerificationReport verify_egf_staircase(std::size_t order);
VerificationReport verify_egf_flower(std::size_t order);

}  // namespace eulertri
