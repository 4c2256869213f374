#pragma once

#include "eulertri/poly.hpp"
#include "eulertri/report.hpp"

#include <optional>
#include <vector>

namespace eulertri {

/// Closed interval [lo, hi].
struct Interval {
    Rational lo, hi;
};

struct RootReport {
    bool real_rooted = false;
    std::size_t degree = 0;
    std::size_t distinct_real = 0;
    std::size_t root_count_total = 0;  // real roots with multiplicity
    std::optional<std::size_t> roots_in_interval;  // with multiplicity, closed interval
    std::vector<Interval> isolating_intervals;     // half-open (lo, hi], sorted, one distinct root each
};

/// Square-free factors f_1, f_2, ... with p = c * prod f_i^i (f_i monic, possibly constant).
std::vector<Poly> squarefree_decomposition(const Poly& p);

std::vector<Poly> sturm_chain(const Poly& p);
/// Distinct roots of the square-free p in the closed interval [lo, hi].
std::size_t count_roots_closed(const std::vector<Poly>& chain, const Rational& lo, const Rational& hi);

/// Throws std::invalid_argument for the zero polynomial.
RootReport sturm_analyze(const Poly& p, const std::optional<Interval>& interval = std::nullopt);

struct LogConcavity {
    bool ok = true;
    std::optional<std::size_t> witness;  // first k with a_k a_{k+2} > a_{k+1}^2
};
LogConcavity log_concave(const std::vector<Rational>& seq);

/// Throws std::invalid_argument if either input is not real-rooted.
bool interlacing(const Poly& p, const Poly& q);

struct QLogConvexityReport {
    std::size_t n_max = 0;
    bool verdict = true;
    struct Witness {
        std::size_t n, m, k;
        Rational coefficient;
    };
    std::optional<Witness> witness;
};
/// f_{n+1} f_{m-1} - f_n f_m >= 0 coefficientwise for n_max >= n >= m >= 1.
QLogConvexityReport strong_q_log_convex(const std::vector<Poly>& polys, std::size_t n_max);

struct StructureSummary {
    bool symmetric = false;
    Rational center;  // (lowest + highest exponent) / 2 when symmetric
    bool unimodal = false;
    std::optional<bool> gamma_nonneg;
    std::vector<Rational> gamma;
};
StructureSummary structure_summary(const Poly& p);

/// Lambert array: rows positive and log-concave, beta_n(q) strongly q-log-convex,
/// and the p_n recurrence reproduces the triangle.
VerificationReport verify_prop41(std::size_t n_max, std::size_t q_n_max);
/// Staircase: real roots in [-1, 0] and log-concave, explicit triple sum, EGF.
VerificationReport verify_prop42(std::size_t n_max, std::size_t egf_order);

}  // namespace eulertri
