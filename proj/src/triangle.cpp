#include "eulertri/triangle.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace eulertri {

bool TriangleParams::strict() const {
    const Rational zero(0);
    return lambda > zero && a0 >= zero && a1 >= zero && a2 >= zero && b0 >= zero && b2 >= zero && d >= zero;
}

bool TriangleParams::compatible() const { return b1 == d * a1 - c; }

std::string TriangleParams::describe() const {
    std::ostringstream os;
    os << "lambda=" << lambda << " a0=" << a0 << " a1=" << a1 << " a2=" << a2 << " b0=" << b0 << " b1=" << b1
       << " b2=" << b2 << " c=" << c << " d=" << d;
    return os.str();
}

Triangle::Triangle(std::vector<std::vector<Rational>> rows, std::string provenance)
    : rows_(std::move(rows)), provenance_(std::move(provenance)) {
    for (std::size_t n = 0; n < rows_.size(); ++n) {
        if (rows_[n].size() != n + 1) {
            throw std::invalid_argument("Triangle: row " + std::to_string(n) + " has " +
                                        std::to_string(rows_[n].size()) + " entries, expected " +
                                        std::to_string(n + 1));
        }
    }
}

std::span<const Rational> Triangle::row(std::size_t n) const {
    if (n >= rows_.size()) {
        throw std::out_of_range("Triangle::row: n = " + std::to_string(n) + " beyond depth " +
                                std::to_string(depth()));
    }
    return rows_[n];
}

Rational Triangle::at(long n, long k) const {
    if (n < 0 || k < 0 || k > n || static_cast<std::size_t>(n) >= rows_.size()) {
        return Rational(0);
    }
    return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

bool CoeffRule::in_support(long n, long k) const {
    if (k < 0 || k > n) {
        return false;
    }
    if (half_support_shift) {
        return 2 * k <= n + *half_support_shift;
    }
    return true;
}

CoeffRule master_rule(const TriangleParams& p) {
    if (p.lambda.is_zero()) {
        throw std::invalid_argument("master recurrence: lambda must be nonzero");
    }
    const Rational third = p.c * p.d / p.lambda;
    CoeffRule rule;
    rule.name = "master{" + p.describe() + "}";
    rule.terms = {
        {0, Affine{p.lambda * p.a2, p.lambda * p.a0, p.lambda * p.a1}},
        {1, Affine{p.b2, p.b0, p.b1}},
        // (cd/lambda)(n - k + 1)
        {2, Affine{third, third, -third}},
    };
    return rule;
}

CoeffRule companion_rule(const TriangleParams& p) {
    if (!p.compatible()) {
        throw std::invalid_argument("companion array requires b1 = d*a1 - c, but b1 = " + p.b1.to_string() +
                                    " and d*a1 - c = " + (p.d * p.a1 - p.c).to_string());
    }
    CoeffRule rule;
    rule.name = "companion{" + p.describe() + "}";
    rule.terms = {
        {0, Affine{p.a2, p.a0, p.a1}},
        {1, Affine{p.b2 + p.d * (p.a1 - p.a2), p.b0 + p.d * (p.a1 - p.a0), -(p.c + p.d * p.a1)}},
    };
    return rule;
}

Triangle build_T(const TriangleParams& params, std::size_t n_max) {
    if (params.lambda.is_zero()) {
        throw std::invalid_argument("build_T: lambda must be nonzero");
    }
    const Rational third = params.c * params.d / params.lambda;
    std::vector<std::vector<Rational>> rows{{Rational(1)}};
    for (std::size_t n = 1; n <= n_max; ++n) {
        const auto& prev = rows.back();
        const Rational rn(n);
        auto prev_at = [&](long k) { return (k < 0 || k >= static_cast<long>(prev.size())) ? Rational(0) : prev[k]; };
        std::vector<Rational> row(n + 1);
        for (std::size_t k = 0; k <= n; ++k) {
            const Rational rk(k);
            const long lk = static_cast<long>(k);
            row[k] = params.lambda * (params.a0 * rn + params.a1 * rk + params.a2) * prev_at(lk) +
                     (params.b0 * rn + params.b1 * rk + params.b2) * prev_at(lk - 1) +
                     third * (rn - rk + Rational(1)) * prev_at(lk - 2);
        }
        rows.push_back(std::move(row));
    }
    return Triangle(std::move(rows), "build_T{" + params.describe() + "}");
}

Triangle build_A(const TriangleParams& params, std::size_t n_max) {
    if (!params.compatible()) {
        throw std::invalid_argument("build_A: requires b1 = d*a1 - c, but b1 = " + params.b1.to_string() +
                                    " and d*a1 - c = " + (params.d * params.a1 - params.c).to_string());
    }
    const Rational mid_n = params.b0 + params.d * (params.a1 - params.a0);
    const Rational mid_k = params.c + params.d * params.a1;
    const Rational mid_0 = params.b2 + params.d * (params.a1 - params.a2);
    std::vector<std::vector<Rational>> rows{{Rational(1)}};
    for (std::size_t n = 1; n <= n_max; ++n) {
        const auto& prev = rows.back();
        const Rational rn(n);
        std::vector<Rational> row(n + 1);
        for (std::size_t k = 0; k <= n; ++k) {
            const Rational rk(k);
            if (k < prev.size()) {
                row[k] += (params.a0 * rn + params.a1 * rk + params.a2) * prev[k];
            }
            if (k >= 1) {
                row[k] += (mid_n * rn - mid_k * rk + mid_0) * prev[k - 1];
            }
        }
        rows.push_back(std::move(row));
    }
    return Triangle(std::move(rows), "build_A{" + params.describe() + "}");
}

Triangle build_generic(const CoeffRule& rule, std::size_t n_max) {
    if (rule.seeds.empty()) {
        throw std::invalid_argument("build_generic: rule '" + rule.name + "' has no seed rows");
    }
    std::vector<std::vector<Rational>> rows;
    rows.reserve(n_max + 1);
    for (std::size_t n = 0; n < rule.seeds.size() && n <= n_max; ++n) {
        if (rule.seeds[n].size() != n + 1) {
            throw std::invalid_argument("build_generic: seed row " + std::to_string(n) + " of '" + rule.name +
                                        "' must have " + std::to_string(n + 1) + " entries");
        }
        rows.push_back(rule.seeds[n]);
    }
    for (std::size_t n = rows.size(); n <= n_max; ++n) {
        const auto& prev = rows.back();
        const long ln = static_cast<long>(n);
        std::vector<Rational> row(n + 1);
        for (long k = 0; k <= ln; ++k) {
            if (!rule.in_support(ln, k)) continue;
            Rational acc(0);
            for (const auto& term : rule.terms) {
                const long j = k - term.offset;
                if (j < 0 || j >= static_cast<long>(prev.size())) continue;
                const Rational& ref = prev[static_cast<std::size_t>(j)];
                if (ref.is_zero()) continue;
                acc += term.coeff(ln, k) * ref;
            }
            row[static_cast<std::size_t>(k)] = std::move(acc);
        }
        rows.push_back(std::move(row));
    }
    return Triangle(std::move(rows), rule.name);
}

Triangle reciprocal(const Triangle& t) {
    std::vector<std::vector<Rational>> rows = t.rows();
    for (auto& r : rows) {
        std::reverse(r.begin(), r.end());
    }
    return Triangle(std::move(rows), "reciprocal(" + t.provenance() + ")");
}

Poly row_poly(const Triangle& t, std::size_t n) {
    const auto r = t.row(n);
    return Poly(std::vector<Rational>(r.begin(), r.end()));
}

}  // namespace eulertri
