#pragma once

#include "eulertri/rational.hpp"
#include "eulertri/triangle.hpp"

#include <cstddef>
#include <functional>
#include <vector>

namespace eulertri {

/// Signed permutation of [n]: |values| is a permutation of 1..n.
class SignedPermutation {
public:
    explicit SignedPermutation(std::vector<int> values);  // throws on a non-bijection
    std::size_t size() const { return values_.size(); }
    int operator[](std::size_t i) const { return values_[i]; }  // pi(i+1)
    const std::vector<int>& values() const { return values_; }

private:
    std::vector<int> values_;
};

/// Calls fn for all 2^n n! elements of B_n.
void for_each_signed_permutation(std::size_t n, const std::function<void(const SignedPermutation&)>& fn);

enum class TypeBStatistic { descent, excedance_A, runs };

/// Histogram of des over S_n, index = number of descents (1 <= n <= 8).
std::vector<Rational> oracle_eulerian(std::size_t n);

/// Histogram over B_n (n <= 6). descent counts i in [0, n-1] with pi(i) > pi(i+1), pi(0) = 0;
/// excedance_A counts i with pi(i) > i; runs counts alternating runs of 0, pi(1), ..., pi(n)
/// over the signed permutations with pi(1) > 0.
std::vector<Rational> oracle_type_b(std::size_t n, TypeBStatistic statistic);

/// R(n,k) for k = 0..n over S_n (2 <= n <= 8).
std::vector<Rational> oracle_runs_A(std::size_t n);
/// R(n+2,k+1)/2 for k = 0..n (0 <= n <= 6).
std::vector<Rational> oracle_runs_A_shifted(std::size_t n);

/// k! S(n,k) by the alternating sum (n <= 12).
Rational oracle_stirling(std::size_t n, std::size_t k);
/// S(n,k) by enumerating restricted growth strings (n <= 8).
Rational stirling_partition_count(std::size_t n, std::size_t k);

/// Rows beta(n+1, k), n = 0..n_max, from the p_n polynomial recurrence.
Triangle oracle_lambert(std::size_t n_max);

/// Staircase tableaux of size n without gamma, by number of alpha/delta labels on the diagonal (n <= 3).
std::vector<Rational> oracle_staircase(std::size_t n);

}  // namespace eulertri
