#include "eulertri/oracles.hpp"

#include "eulertri/poly.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace eulertri {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw std::invalid_argument(what);
}

std::vector<Rational> to_rationals(const std::vector<long>& h) {
    return std::vector<Rational>(h.begin(), h.end());
}

// runs of a sequence of distinct values; a single element has none
std::size_t alternating_runs(const std::vector<int>& s) {
    if (s.size() < 2) return 0;
    std::size_t runs = 1;
    for (std::size_t i = 2; i < s.size(); ++i) {
        const bool up_prev = s[i - 1] > s[i - 2];
        const bool up = s[i] > s[i - 1];
        if (up != up_prev) ++runs;
    }
    return runs;
}

}  // namespace

SignedPermutation::SignedPermutation(std::vector<int> values) : values_(std::move(values)) {
    std::vector<bool> seen(values_.size() + 1, false);
    for (int v : values_) {
        const auto a = static_cast<std::size_t>(std::abs(v));
        if (a == 0 || a > values_.size() || seen[a]) {
            throw std::invalid_argument("SignedPermutation: |values| must be a permutation of 1..n");
        }
        seen[a] = true;
    }
}

void for_each_signed_permutation(std::size_t n, const std::function<void(const SignedPermutation&)>& fn) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    do {
        for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
            std::vector<int> v = perm;
            for (std::size_t i = 0; i < n; ++i) {
                if (mask >> i & 1U) v[i] = -v[i];
            }
            fn(SignedPermutation(std::move(v)));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
}

std::vector<Rational> oracle_eulerian(std::size_t n) {
    require(n >= 1 && n <= 8, "oracle_eulerian: n must be in 1..8, got " + std::to_string(n));
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    std::vector<long> h(n, 0);
    do {
        std::size_t des = 0;
        for (std::size_t i = 0; i + 1 < n; ++i) {
            if (perm[i] > perm[i + 1]) ++des;
        }
        ++h[des];
    } while (std::next_permutation(perm.begin(), perm.end()));
    return to_rationals(h);
}

std::vector<Rational> oracle_type_b(std::size_t n, TypeBStatistic statistic) {
    require(n <= 6, "oracle_type_b: n must be at most 6, got " + std::to_string(n));
    std::vector<long> h(n + 1, 0);
    for_each_signed_permutation(n, [&](const SignedPermutation& p) {
        std::vector<int> seq{0};
        seq.insert(seq.end(), p.values().begin(), p.values().end());
        std::size_t stat = 0;
        switch (statistic) {
            case TypeBStatistic::descent:
                for (std::size_t i = 0; i < n; ++i) {
                    if (seq[i] > seq[i + 1]) ++stat;
                }
                break;
            case TypeBStatistic::excedance_A:
                for (std::size_t i = 1; i <= n; ++i) {
                    if (seq[i] > static_cast<int>(i)) ++stat;
                }
                break;
            case TypeBStatistic::runs:
                if (n >= 1 && p[0] < 0) return;
                stat = alternating_runs(seq);
                break;
        }
        ++h[stat];
    });
    return to_rationals(h);
}

std::vector<Rational> oracle_runs_A(std::size_t n) {
    require(n >= 2 && n <= 8, "oracle_runs_A: n must be in 2..8, got " + std::to_string(n));
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    std::vector<long> h(n + 1, 0);
    do {
        ++h[alternating_runs(perm)];
    } while (std::next_permutation(perm.begin(), perm.end()));
    return to_rationals(h);
}

std::vector<Rational> oracle_runs_A_shifted(std::size_t n) {
    require(n <= 6, "oracle_runs_A_shifted: n must be at most 6, got " + std::to_string(n));
    const auto r = oracle_runs_A(n + 2);
    std::vector<Rational> out(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        out[k] = r[k + 1] / Rational(2);
    }
    return out;
}

Rational oracle_stirling(std::size_t n, std::size_t k) {
    require(n <= 12, "oracle_stirling: n must be at most 12, got " + std::to_string(n));
    Rational acc(0);
    for (std::size_t j = 0; j <= k; ++j) {
        Rational term = binomial(k, j) * pow(Rational(static_cast<long>(j)), static_cast<long>(n));
        if ((k - j) % 2 == 1) term = -term;
        acc += term;
    }
    return acc;
}

Rational stirling_partition_count(std::size_t n, std::size_t k) {
    require(n <= 8, "stirling_partition_count: n must be at most 8, got " + std::to_string(n));
    if (n == 0) return Rational(k == 0 ? 1 : 0);
    // restricted growth strings a_0 = 0, a_i <= 1 + max(a_0..a_{i-1})
    long count = 0;
    std::vector<std::size_t> a(n, 0);
    std::vector<std::size_t> mx(n, 0);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == n) {
            if (mx[n - 1] + 1 == k) ++count;
            return;
        }
        for (std::size_t v = 0; v <= mx[i - 1] + 1; ++v) {
            a[i] = v;
            mx[i] = std::max(mx[i - 1], v);
            rec(i + 1);
        }
    };
    rec(1);
    return Rational(count);
}

Triangle oracle_lambert(std::size_t n_max) {
    std::vector<std::vector<Rational>> rows;
    Poly p = Poly::constant(Rational(1));
    for (std::size_t n = 1; n <= n_max + 1; ++n) {
        const Rational sign = (n - 1) % 2 == 0 ? Rational(1) : Rational(-1);
        std::vector<Rational> row(n);
        for (std::size_t k = 0; k < n; ++k) {
            row[k] = sign * p[k];
        }
        rows.push_back(std::move(row));
        const long ln = static_cast<long>(n);
        p = -(Poly{Rational(3 * ln - 1), Rational(ln)} * p) + Poly{1, 1} * p.derivative();
    }
    return Triangle(std::move(rows), "lambert p_n recurrence");
}

std::vector<Rational> oracle_staircase(std::size_t n) {
    require(n <= 3, "oracle_staircase: n must be at most 3, got " + std::to_string(n));
    struct Cell {
        std::size_t r, c;
    };
    std::vector<Cell> cells;
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c + r < n; ++c) {
            cells.push_back({r, c});
        }
    }
    enum Label { empty = 0, alpha, beta, delta };
    std::vector<long> h(n + 1, 0);
    std::vector<std::vector<int>> grid(n, std::vector<int>(n, empty));
    std::size_t total = 1;
    for (std::size_t i = 0; i < cells.size(); ++i) total *= 4;
    for (std::size_t code = 0; code < total; ++code) {
        std::size_t rest = code;
        for (const auto& cell : cells) {
            grid[cell.r][cell.c] = static_cast<int>(rest % 4);
            rest /= 4;
        }
        bool ok = true;
        std::size_t k = 0;
        for (const auto& [r, c] : cells) {
            const int lab = grid[r][c];
            const bool diagonal = c + r + 1 == n;
            if (diagonal && lab == empty) ok = false;
            if (diagonal && (lab == alpha || lab == delta)) ++k;
            if (lab == beta || lab == delta) {
                for (std::size_t cc = 0; cc < c; ++cc) {
                    if (grid[r][cc] != empty) ok = false;
                }
            }
            if (lab == alpha) {
                for (std::size_t rr = 0; rr < r; ++rr) {
                    if (grid[rr][c] != empty) ok = false;
                }
            }
            if (!ok) break;
        }
        if (ok) ++h[k];
    }
    return to_rationals(h);
}

}  // namespace eulertri
