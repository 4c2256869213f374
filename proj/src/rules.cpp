#include "eulertri/rules.hpp"

namespace eulertri::rules {

CoeffRule two_term(std::string name, const Affine& left, const Affine& right) {
    CoeffRule r;
    r.name = std::move(name);
    r.terms = {{0, left}, {1, right}};
    return r;
}

CoeffRule shifted_eulerian() { return two_term("shifted-eulerian", {1, 0, 1}, {1, 1, -1}); }

CoeffRule type_b_eulerian() { return two_term("type-b-eulerian", {1, 0, 2}, {1, 2, -2}); }

CoeffRule flower() { return two_term("flower", {1, 0, 1}, {1, 2, -2}); }

CoeffRule frobenius_classical() { return two_term("frobenius", {0, 0, 1}, {0, 0, 1}); }

CoeffRule frobenius(const Rational& a1, const Rational& a2, const Rational& b1, const Rational& b2) {
    return two_term("frobenius{" + a1.to_string() + "," + a2.to_string() + "," + b1.to_string() + "," +
                        b2.to_string() + "}",
                    {a2, 0, a1}, {b2, 0, b1});
}

CoeffRule eulerian_frobenius(const Rational& a1, const Rational& a2, const Rational& b1, const Rational& b2) {
    return two_term("eulerian-frobenius{" + a1.to_string() + "," + a2.to_string() + "," + b1.to_string() + "," +
                        b2.to_string() + "}",
                    {a2, 0, a1}, {b2, b1, -b1});
}

CoeffRule generalized_eulerian(const Rational& a1, const Rational& a2) {
    return two_term("generalized-eulerian{" + a1.to_string() + "," + a2.to_string() + "}", {a2, 0, a1},
                    {a2, a1, -a1});
}

CoeffRule gamma_triangle(const Rational& a, const Rational& b, const Rational& c) {
    CoeffRule r = two_term("gamma{" + a.to_string() + "," + b.to_string() + "," + c.to_string() + "}", {b, 0, a},
                           {c, c, Rational(-2) * c});
    r.half_support_shift = 1;
    return r;
}

CoeffRule petersen_wl() {
    CoeffRule r = two_term("petersen-wl", {1, 0, 2}, {1, 1, -2});
    r.half_support_shift = 1;
    return r;
}

CoeffRule lambert_beta_shift() {
    CoeffRule r;
    r.name = "lambert-beta-shift";
    r.terms = {
        {0, Affine{-1, 3, -1}},
        {1, Affine{0, 1, 0}},
        {-1, Affine{-1, 0, -1}},
    };
    return r;
}

CoeffRule runs_a() {
    CoeffRule r;
    r.name = "runs-a";
    r.terms = {
        {0, Affine{0, 0, 1}},
        {1, Affine{2, 0, 0}},
        {2, Affine{0, 1, -1}},
    };
    r.seeds = {{Rational(1)}, {Rational(1), Rational(0)}};
    return r;
}

CoeffRule runs_type_b() {
    CoeffRule r;
    r.name = "runs-type-b";
    r.terms = {
        {0, Affine{-1, 0, 2}},
        {1, Affine{3, 0, 0}},
        {2, Affine{2, 2, -2}},
    };
    r.seeds = {{Rational(1)}, {Rational(0), Rational(1)}};
    return r;
}

// coefficient of t^j in (1+t^2) Q' + delta t Q
CoeffRule derivative_dense(const Rational& delta) {
    CoeffRule r;
    r.name = "derivative{" + delta.to_string() + "}";
    r.terms = {
        {-1, Affine{1, 0, 1}},
        {1, Affine{delta - Rational(1), 0, 1}},
    };
    return r;
}

}  // namespace eulertri::rules
