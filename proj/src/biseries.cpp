#include "eulertri/biseries.hpp"

#include <algorithm>
#include <stdexcept>

namespace eulertri {

BiSeries::BiSeries(std::size_t order) : coeffs_(order + 1) {}

BiSeries::BiSeries(std::size_t order, std::vector<Poly> coeffs) : coeffs_(std::move(coeffs)) {
    coeffs_.resize(order + 1);
}

BiSeries BiSeries::constant(std::size_t order, const Poly& c) {
    BiSeries s(order);
    s.coeffs_[0] = c;
    return s;
}

BiSeries BiSeries::t(std::size_t order) {
    BiSeries s(order);
    if (order >= 1) {
        s.coeffs_[1] = Poly::constant(Rational(1));
    }
    return s;
}

BiSeries BiSeries::exp_linear(std::size_t order, const Poly& a) {
    BiSeries s(order);
    Poly power = Poly::constant(Rational(1));
    for (std::size_t n = 0; n <= order; ++n) {
        s.coeffs_[n] = power * (Rational(1) / factorial(n));
        power *= a;
    }
    return s;
}

BiSeries& BiSeries::operator+=(const BiSeries& o) {
    coeffs_.resize(std::min(coeffs_.size(), o.coeffs_.size()));
    for (std::size_t n = 0; n < coeffs_.size(); ++n) {
        coeffs_[n] += o.coeffs_[n];
    }
    return *this;
}

BiSeries& BiSeries::operator-=(const BiSeries& o) {
    coeffs_.resize(std::min(coeffs_.size(), o.coeffs_.size()));
    for (std::size_t n = 0; n < coeffs_.size(); ++n) {
        coeffs_[n] -= o.coeffs_[n];
    }
    return *this;
}

BiSeries operator*(const BiSeries& a, const BiSeries& b) {
    const std::size_t order = std::min(a.order(), b.order());
    BiSeries out(order);
    for (std::size_t i = 0; i <= order; ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; i + j <= order; ++j) {
            out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return out;
}

BiSeries operator*(BiSeries a, const Poly& p) {
    for (auto& c : a.coeffs_) {
        c *= p;
    }
    return a;
}

BiSeries operator*(BiSeries a, const Rational& s) {
    for (auto& c : a.coeffs_) {
        c *= s;
    }
    return a;
}

// f = exp(s) satisfies f' = s' f, so n f_n = sum_{k=1..n} k s_k f_{n-k}.
BiSeries BiSeries::exp() const {
    if (!coeffs_[0].is_zero()) {
        throw std::domain_error("BiSeries::exp: constant-in-t term must be 0, got " + coeffs_[0].to_string('q'));
    }
    BiSeries f(order());
    f.coeffs_[0] = Poly::constant(Rational(1));
    for (std::size_t n = 1; n <= order(); ++n) {
        Poly acc;
        for (std::size_t k = 1; k <= n; ++k) {
            if (coeffs_[k].is_zero()) continue;
            acc += Rational(k) * (coeffs_[k] * f.coeffs_[n - k]);
        }
        f.coeffs_[n] = acc * (Rational(1) / Rational(n));
    }
    return f;
}

// g = log(s) with s_0 = 1: s' = g' s gives g_n = s_n - (1/n) sum_{k=1..n-1} k g_k s_{n-k}.
BiSeries BiSeries::log() const {
    if (coeffs_[0] != Poly::constant(Rational(1))) {
        throw std::domain_error("BiSeries::log: constant-in-t term must be 1, got " + coeffs_[0].to_string('q'));
    }
    BiSeries g(order());
    for (std::size_t n = 1; n <= order(); ++n) {
        Poly acc;
        for (std::size_t k = 1; k < n; ++k) {
            if (g.coeffs_[k].is_zero()) continue;
            acc += Rational(k) * (g.coeffs_[k] * coeffs_[n - k]);
        }
        g.coeffs_[n] = coeffs_[n] - acc * (Rational(1) / Rational(n));
    }
    return g;
}

BiSeries BiSeries::pow(const Rational& e) const {
    if (coeffs_[0] != Poly::constant(Rational(1))) {
        throw std::domain_error("BiSeries::pow: constant-in-t term must be 1, got " + coeffs_[0].to_string('q'));
    }
    return (log() * e).exp();
}

BiSeries BiSeries::reciprocal() const {
    if (coeffs_[0].degree() != 0) {
        throw std::domain_error("BiSeries::reciprocal: constant-in-t term must be a nonzero constant, got " +
                                coeffs_[0].to_string('q'));
    }
    const Rational inv = Rational(1) / coeffs_[0][0];
    BiSeries r(order());
    r.coeffs_[0] = Poly::constant(inv);
    for (std::size_t n = 1; n <= order(); ++n) {
        Poly acc;
        for (std::size_t k = 1; k <= n; ++k) {
            acc += coeffs_[k] * r.coeffs_[n - k];
        }
        r.coeffs_[n] = acc * (-inv);
    }
    return r;
}

BiSeries series_exp_log_pow(const BiSeries& s, const SeriesFn& mode) {
    struct Visitor {
        const BiSeries& s;
        BiSeries operator()(const SeriesExp&) const { return s.exp(); }
        BiSeries operator()(const SeriesLog&) const { return s.log(); }
        BiSeries operator()(const SeriesPow& p) const { return s.pow(p.exponent); }
    };
    return std::visit(Visitor{s}, mode);
}

}  // namespace eulertri
