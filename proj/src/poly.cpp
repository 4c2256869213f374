#include "eulertri/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace eulertri {

namespace {
const Rational kZero{0};
}

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly Poly::constant(const Rational& c) { return Poly(std::vector<Rational>{c}); }

Poly Poly::x() { return monomial(Rational(1), 1); }

Poly Poly::monomial(const Rational& c, std::size_t degree) {
    std::vector<Rational> v(degree + 1);
    v[degree] = c;
    return Poly(std::move(v));
}

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) {
        coeffs_.pop_back();
    }
}

const Rational& Poly::operator[](std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : kZero;
}

const Rational& Poly::leading() const { return coeffs_.empty() ? kZero : coeffs_.back(); }

Rational Poly::eval(const Rational& at) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * at + *it;
    }
    return acc;
}

Poly Poly::derivative() const {
    if (coeffs_.size() <= 1) {
        return Poly();
    }
    std::vector<Rational> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
        d[i - 1] = coeffs_[i] * Rational(i);
    }
    return Poly(std::move(d));
}

Poly Poly::compose(const Poly& inner) const {
    Poly acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * inner + constant(*it);
    }
    return acc;
}

Poly Poly::pow(std::size_t e) const {
    Poly result = constant(Rational(1));
    Poly base = *this;
    while (e > 0) {
        if (e & 1U) {
            result *= base;
        }
        e >>= 1U;
        if (e > 0) {
            base *= base;
        }
    }
    return result;
}

Poly Poly::monic() const {
    if (is_zero()) {
        return *this;
    }
    return *this * (Rational(1) / leading());
}

bool Poly::is_even() const {
    for (std::size_t i = 1; i < coeffs_.size(); i += 2) {
        if (!coeffs_[i].is_zero()) {
            return false;
        }
    }
    return true;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(o.coeffs_.size());
    }
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
        coeffs_[i] += o.coeffs_[i];
    }
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(o.coeffs_.size());
    }
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
        coeffs_[i] -= o.coeffs_[i];
    }
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) {
        return Poly();
    }
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return Poly(std::move(out));
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const Rational& s) {
    if (s.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    for (auto& c : coeffs_) {
        c *= s;
    }
    return *this;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& c : r.coeffs_) {
        c = -c;
    }
    return r;
}

std::string Poly::to_string(char var) const {
    if (is_zero()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const Rational& c = coeffs_[i];
        if (c.is_zero()) continue;
        Rational mag = abs(c);
        if (first) {
            if (c.sign() < 0) os << "-";
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        first = false;
        if (i == 0 || mag != Rational(1)) {
            os << mag;
            if (i > 0) os << "*";
        }
        if (i >= 1) os << var;
        if (i >= 2) os << "^" << i;
    }
    return os.str();
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) {
        throw std::domain_error("divmod: division by the zero polynomial");
    }
    Poly rem = a;
    std::vector<Rational> quot(a.degree() >= b.degree() ? a.degree() - b.degree() + 1 : 0);
    const Rational lead_inv = Rational(1) / b.leading();
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        const std::size_t shift = static_cast<std::size_t>(rem.degree() - b.degree());
        const Rational factor = rem.leading() * lead_inv;
        quot[shift] = factor;
        rem -= Poly::monomial(factor, shift) * b;
    }
    return {Poly(std::move(quot)), rem};
}

Poly gcd(const Poly& a, const Poly& b) {
    Poly x = a;
    Poly y = b;
    while (!y.is_zero()) {
        Poly r = divmod(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

Poly poly_arith(const Poly& p, const Poly& q, PolyOp op) {
    switch (op) {
        case PolyOp::add: return p + q;
        case PolyOp::sub: return p - q;
        case PolyOp::mul: return p * q;
    }
    throw std::invalid_argument("poly_arith: unknown op");
}

Poly homogeneous_substitute(const Poly& p, std::size_t n, const Poly& num, const Poly& den) {
    if (p.degree() > static_cast<int>(n)) {
        throw std::invalid_argument("homogeneous_substitute: degree " + std::to_string(p.degree()) +
                                    " exceeds n = " + std::to_string(n));
    }
    std::vector<Poly> num_pows{Poly::constant(Rational(1))};
    std::vector<Poly> den_pows{Poly::constant(Rational(1))};
    for (std::size_t i = 1; i <= n; ++i) {
        num_pows.push_back(num_pows.back() * num);
        den_pows.push_back(den_pows.back() * den);
    }
    Poly out;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        if (p[i].is_zero()) continue;
        out += p[i] * (num_pows[i] * den_pows[n - i]);
    }
    return out;
}

Poly poly_compose_linear_lift(const Poly& a, std::size_t n, const Rational& lambda, const Rational& d) {
    if (lambda.is_zero()) {
        throw std::invalid_argument("poly_compose_linear_lift: lambda must be nonzero");
    }
    if (a.degree() > static_cast<int>(n)) {
        throw std::invalid_argument("poly_compose_linear_lift: deg A = " + std::to_string(a.degree()) +
                                    " > n = " + std::to_string(n) + ", lift is not polynomial");
    }
    return homogeneous_substitute(a, n, Poly::x(), Poly{lambda, d});
}

std::string first_difference(const Poly& lhs, const Poly& rhs, char var) {
    const std::size_t len = std::max(lhs.coeffs().size(), rhs.coeffs().size());
    for (std::size_t k = 0; k < len; ++k) {
        if (lhs[k] != rhs[k]) {
            std::ostringstream os;
            os << "coefficient of " << var << "^" << k << ": lhs=" << lhs[k] << " rhs=" << rhs[k];
            return os.str();
        }
    }
    return {};
}

}  // namespace eulertri
