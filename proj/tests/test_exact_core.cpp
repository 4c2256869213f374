#include "eulertri/biseries.hpp"
#include "eulertri/poly.hpp"
#include "eulertri/rational.hpp"

#include <doctest.h>

#include <random>

using namespace eulertri;

TEST_CASE("rational normalizes and parses") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK(Rational::parse("-6/8") == Rational(-3, 4));
    CHECK(Rational::parse("17") == Rational(17));
    CHECK(Rational(-3, 4).to_string() == "-3/4");
    CHECK(Rational(5).to_string() == "5");
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
    CHECK_THROWS(Rational::parse("1/0"));
    CHECK_THROWS(Rational::parse("abc"));
}

TEST_CASE("rational arithmetic is exact") {
    Rational sum;
    for (long i = 1; i <= 20; ++i) sum += Rational(1, i * (i + 1));
    CHECK(sum == Rational(20, 21));
    CHECK(pow(Rational(2, 3), 3) == Rational(8, 27));
    CHECK(pow(Rational(2, 3), -2) == Rational(9, 4));
    CHECK(abs(Rational(-7, 3)) == Rational(7, 3));
    CHECK(factorial(20) == Rational::parse("2432902008176640000"));
    CHECK(factorial(25).to_string() == "15511210043330985984000000");
    CHECK(binomial(10, 3) == Rational(120));
    CHECK(binomial(3, 5) == Rational(0));
    CHECK(rational_binomial(Rational(1, 2), 2) == Rational(-1, 8));
    CHECK(rational_binomial(Rational(-3), 2) == Rational(6));
}

TEST_CASE("poly ring operations") {
    const Poly a{1, 2, 1};
    const Poly b{1, 1};
    CHECK(b * b == a);
    CHECK(b.pow(2) == a);
    CHECK((a - a).is_zero());
    CHECK(a.degree() == 2);
    CHECK(Poly{}.degree() == -1);
    CHECK(a.eval(Rational(3)) == Rational(16));
    CHECK(a.derivative() == Poly{2, 2});
    CHECK(a.compose(Poly{0, 2}) == Poly{1, 4, 4});
    CHECK(Poly{0, 0, 3}.leading() == Rational(3));
    CHECK(Poly{1, 0, 5, 0, 2}.is_even());
    CHECK_FALSE(a.is_even());
}

TEST_CASE("poly division and gcd") {
    const Poly p = Poly{1, 1} * Poly{-2, 1} * Poly{3, 0, 1};
    const Poly q = Poly{1, 1} * Poly{5, 1};
    const auto [quot, rem] = divmod(p, q);
    CHECK(quot * q + rem == p);
    CHECK(rem.degree() < q.degree());
    CHECK(gcd(p, q) == Poly{1, 1});
    CHECK(gcd(p, Poly{7}) == Poly{1});
    CHECK_THROWS(divmod(p, Poly{}));
}

TEST_CASE("homogeneous substitution") {
    // (1+x)^2 at x -> w/(1+w), degree 2: (1+2w)^2
    const Poly p{1, 2, 1};
    CHECK(homogeneous_substitute(p, 2, Poly{0, 1}, Poly{1, 1}) == Poly{1, 4, 4});
    // degree above the actual degree multiplies by den
    CHECK(homogeneous_substitute(Poly{1}, 2, Poly{0, 1}, Poly{1, 1}) == Poly{1, 2, 1});
}

TEST_CASE("linear lift matches the direct expansion") {
    const Poly a{2, 3, 5};
    const Rational lambda(2), d(3);
    // (lambda + d x)^2 a(x / (lambda + d x))
    const Poly lin{lambda, d};
    const Poly direct = Rational(2) * lin * lin + Rational(3) * Poly::x() * lin + Rational(5) * Poly::x() * Poly::x();
    CHECK(poly_compose_linear_lift(a, 2, lambda, d) == direct);
    CHECK(first_difference(direct, direct).empty());
    CHECK_FALSE(first_difference(direct, a).empty());
}

TEST_CASE("series exp and log are inverse") {
    const std::size_t order = 8;
    BiSeries s(order, {Poly{0}, Poly{1, 1}, Poly{0, 2}, Poly{3}});
    CHECK(s.exp().log() == s);
    const BiSeries u(order, {Poly{1}, Poly{0, 1}, Poly{2}});
    CHECK(u.log().exp() == u);
    CHECK(u * u.reciprocal() == BiSeries::constant(order, Poly{1}));
    CHECK(u.pow(Rational(1, 2)) * u.pow(Rational(1, 2)) == u);
    CHECK(u.pow(Rational(3)) == u * u * u);
    CHECK(series_exp_log_pow(u, SeriesPow{Rational(-1)}) == u.reciprocal());
}

TEST_CASE("series exp of t gives 1/n!") {
    const auto e = BiSeries::t(10).exp();
    for (std::size_t n = 0; n <= 10; ++n) CHECK(e[n] == Poly{Rational(1) / factorial(n)});
    CHECK(BiSeries::exp_linear(10, Poly{0, 1}) == (BiSeries::t(10) * Poly{0, 1}).exp());
}

TEST_CASE("property: random rational field axioms") {
    std::mt19937_64 rng(0);
    std::uniform_int_distribution<long> num(-50, 50), den(1, 50);
    for (int i = 0; i < 200; ++i) {
        const Rational a(num(rng), den(rng)), b(num(rng), den(rng)), c(num(rng), den(rng));
        CHECK((a + b) * c == a * c + b * c);
        CHECK(a - a == Rational(0));
        if (!b.is_zero()) CHECK((a / b) * b == a);
    }
}

TEST_CASE("property: random poly division identity") {
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<long> coef(-9, 9), deg(0, 6);
    auto draw = [&] {
        std::vector<Rational> c(static_cast<std::size_t>(deg(rng)) + 1);
        for (auto& v : c) v = Rational(coef(rng));
        return Poly(c);
    };
    for (int i = 0; i < 100; ++i) {
        const Poly a = draw();
        const Poly b = draw();
        if (b.is_zero()) continue;
        const auto [q, r] = divmod(a, b);
        CHECK(q * b + r == a);
        const Poly g = gcd(a * b, b);
        CHECK(divmod(b, g).second.is_zero());
    }
}
