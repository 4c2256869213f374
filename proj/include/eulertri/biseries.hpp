#pragma once

#include "eulertri/poly.hpp"

#include <cstddef>
#include <variant>
#include <vector>

namespace eulertri {

/// Power series in t truncated after t^order, with polynomial-in-q
/// coefficients. Binary operations between series of different orders
/// truncate to the smaller order.
class BiSeries {
public:
    explicit BiSeries(std::size_t order);
    BiSeries(std::size_t order, std::vector<Poly> coeffs);  // pads with zeros / truncates

    static BiSeries constant(std::size_t order, const Poly& c);
    static BiSeries t(std::size_t order);
    /// e^{a t} = sum_n a^n t^n / n!
    static BiSeries exp_linear(std::size_t order, const Poly& a);

    std::size_t order() const { return coeffs_.size() - 1; }
    const Poly& operator[](std::size_t n) const { return coeffs_.at(n); }
    const std::vector<Poly>& coeffs() const { return coeffs_; }

    BiSeries& operator+=(const BiSeries& o);
    BiSeries& operator-=(const BiSeries& o);
    friend BiSeries operator+(BiSeries a, const BiSeries& b) { return a += b; }
    friend BiSeries operator-(BiSeries a, const BiSeries& b) { return a -= b; }
    friend BiSeries operator*(const BiSeries& a, const BiSeries& b);
    friend BiSeries operator*(BiSeries a, const Poly& p);
    friend BiSeries operator*(BiSeries a, const Rational& s);

    friend bool operator==(const BiSeries&, const BiSeries&) = default;

    /// Requires a zero constant-in-t term.
    BiSeries exp() const;
    /// Require the constant-in-t term to be the constant polynomial 1.
    BiSeries log() const;
    BiSeries pow(const Rational& e) const;  // exp(e * log(s))
    /// Multiplicative inverse; the constant-in-t term must be a nonzero constant.
    BiSeries reciprocal() const;

private:
    std::vector<Poly> coeffs_;
};

struct SeriesExp {};
struct SeriesLog {};
struct SeriesPow {
    Rational exponent;
};
using SeriesFn = std::variant<SeriesExp, SeriesLog, SeriesPow>;

BiSeries series_exp_log_pow(const BiSeries& s, const SeriesFn& mode);

}  // namespace eulertri
