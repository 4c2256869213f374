#pragma once

#include "eulertri/poly.hpp"
#include "eulertri/rational.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace eulertri {

/// Parameters of the master three-term family
///   T(n,k) = lambda (a0 n + a1 k + a2) T(n-1,k) + (b0 n + b1 k + b2) T(n-1,k-1)
///          + (c d / lambda) (n - k + 1) T(n-1,k-2).
struct TriangleParams {
    Rational lambda{1};
    Rational a0, a1, a2;
    Rational b0, b1, b2;
    Rational c, d;

    /// lambda > 0 and a0, a1, a2, b0, b2, d >= 0. Negative values are still
    /// accepted by the builders; only theorems that need the sign region
    /// consult this.
    bool strict() const;
    /// b1 == d a1 - c, the condition for the two-term companion array.
    bool compatible() const;

    std::string describe() const;
};

/// Jagged triangular array; row n holds entries k = 0..n, everything
/// outside that range is implicitly zero.
class Triangle {
public:
    Triangle() = default;
    Triangle(std::vector<std::vector<Rational>> rows, std::string provenance);

    std::size_t depth() const { return rows_.empty() ? 0 : rows_.size() - 1; }
    std::size_t size() const { return rows_.size(); }
    std::span<const Rational> row(std::size_t n) const;
    const std::vector<std::vector<Rational>>& rows() const { return rows_; }
    const std::string& provenance() const { return provenance_; }

    /// Zero outside 0 <= k <= n (and for n beyond the built depth).
    Rational at(long n, long k) const;

    friend bool operator==(const Triangle& a, const Triangle& b) { return a.rows_ == b.rows_; }

private:
    std::vector<std::vector<Rational>> rows_;
    std::string provenance_;
};

/// c0 + cn * n + ck * k
struct Affine {
    Rational c0, cn, ck;
    Rational operator()(long n, long k) const { return c0 + cn * Rational(n) + ck * Rational(k); }
};

/// One recurrence term: coeff(n,k) * T(n-1, k - offset). Offset -1 reaches
/// T(n-1, k+1).
struct RuleTerm {
    int offset;
    Affine coeff;
};

/// Uniform carrier for a row recurrence: a sum of affine-weighted terms
/// referencing the previous row, optional explicit seed rows (default [1]),
/// and an optional support cap k <= floor((n + half_support_shift) / 2).
struct CoeffRule {
    std::string name;
    std::vector<RuleTerm> terms;
    std::vector<std::vector<Rational>> seeds{{Rational(1)}};
    std::optional<int> half_support_shift;

    bool in_support(long n, long k) const;
};

Triangle build_T(const TriangleParams& params, std::size_t n_max);

/// Companion two-term array; rejects params with b1 != d a1 - c.
Triangle build_A(const TriangleParams& params, std::size_t n_max);

/// The master family expressed as a CoeffRule (used for engine self-consistency).
CoeffRule master_rule(const TriangleParams& params);
CoeffRule companion_rule(const TriangleParams& params);

Triangle build_generic(const CoeffRule& rule, std::size_t n_max);

/// M*(n,k) = M(n, n-k).
Triangle reciprocal(const Triangle& t);

/// sum_k t(n,k) x^k; throws std::out_of_range beyond the built depth.
Poly row_poly(const Triangle& t, std::size_t n);

}  // namespace eulertri
