#pragma once

#include "eulertri/triangle.hpp"

namespace eulertri::rules {

// Two-term rule (a1 k + a2) M(n-1,k) + (b0 n + b1 k + b2) M(n-1,k-1).
CoeffRule two_term(std::string name, const Affine& left, const Affine& right);

CoeffRule shifted_eulerian();   // (k+1), (n-k+1)
CoeffRule type_b_eulerian();    // (2k+1), (2n-2k+1)
CoeffRule flower();             // (k+1), (2n-2k+1)
CoeffRule frobenius_classical();  // k, k

/// (a1 k + a2), (b1 k + b2)
CoeffRule frobenius(const Rational& a1, const Rational& a2, const Rational& b1, const Rational& b2);
/// (a1 k + a2), (b1 n - b1 k + b2)
CoeffRule eulerian_frobenius(const Rational& a1, const Rational& a2, const Rational& b1, const Rational& b2);
/// (a1 k + a2), (a1 n - a1 k + a2)
CoeffRule generalized_eulerian(const Rational& a1, const Rational& a2);
/// (a k + b), c (n - 2k + 1), supported on k <= (n+1)/2
CoeffRule gamma_triangle(const Rational& a, const Rational& b, const Rational& c);

CoeffRule petersen_wl();

/// Shifted beta(n+1,k): (3n-k-1) T(n-1,k) + n T(n-1,k-1) - (k+1) T(n-1,k+1).
CoeffRule lambert_beta_shift();

/// R(n,k) for n >= 0 with R_0 = [1], R_1 = [1,0].
CoeffRule runs_a();
/// Z(n,k) with Z_0 = [1], Z_1 = [0,1].
CoeffRule runs_type_b();

/// Dense-in-t coefficients of Q_n(delta,t).
CoeffRule derivative_dense(const Rational& delta);

}  // namespace eulertri::rules
