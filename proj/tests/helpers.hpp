#pragma once

#include <array>
#include <random>

#include "fano/catalog.hpp"
#include "fano/geometry.hpp"

namespace fano::test {

inline FieldElement fe(long n) { return FieldElement(n); }
inline FieldElement fe(long num, long den) {
    return FieldElement(make_rational(mpz_class(num), mpz_class(den)));
}
inline FieldElement W() { return FieldElement::omega(); }
inline FieldElement W2() { return FieldElement::omega_sq(); }

inline Vec5 vec(std::array<FieldElement, 5> c) {
    Vec5 v;
    for (int i = 0; i < 5; ++i) v(i) = c[static_cast<std::size_t>(i)];
    return v;
}

inline ProjectivePoint pt(std::array<FieldElement, 5> c) {
    return ProjectivePoint(vec(std::move(c)));
}

inline Poly pterm(int e1, int e2, int e3, int e4, int e5, FieldElement c) {
    Monomial m;
    m.e = {e1, e2, e3, e4, e5};
    return Poly::term(m, std::move(c));
}

inline Cubic fermat() {
    Poly p;
    for (int i = 1; i <= 5; ++i) {
        Monomial m;
        m.e[i - 1] = 3;
        p.add_term(m, FieldElement(1));
    }
    return Cubic(p);
}

struct Rng {
    std::mt19937_64 gen{987654321};

    FieldElement rational() {
        std::uniform_int_distribution<long> num(-12, 12);
        std::uniform_int_distribution<long> den(1, 9);
        return fe(num(gen), den(gen));
    }
    FieldElement element() {
        return FieldElement(rational().a(), rational().a());
    }
    Poly cubic_form(int terms = 6) {
        std::uniform_int_distribution<int> var(0, 4);
        Poly p;
        for (int t = 0; t < terms; ++t) {
            Monomial m;
            for (int d = 0; d < 3; ++d) ++m.e[var(gen)];
            p.add_term(m, element());
        }
        return p;
    }
};

/// Independent oracle for line restriction: evaluates f(s p + t q) at four
/// parameter values and solves for the binary-cubic coefficients.  Shares
/// only the field arithmetic with the implementation.
inline BinaryCubic line_restriction_oracle(const Cubic& f, const Vec5& p, const Vec5& q) {
    auto value_at = [&](long s, long t) {
        Vec5 x;
        for (int i = 0; i < 5; ++i) x(i) = fe(s) * p(i) + fe(t) * q(i);
        return f.evaluate(x);
    };
    // c30 = f(p), c03 = f(q); the two mixed coefficients come from (1,1) and
    // (1,-1): f(p+q) = c30+c21+c12+c03, f(p-q) = c30-c21+c12-c03.
    FieldElement c30 = value_at(1, 0);
    FieldElement c03 = value_at(0, 1);
    FieldElement plus = value_at(1, 1) - c30 - c03;    // c21 + c12
    FieldElement minus = value_at(1, -1) - c30 + c03;  // -c21 + c12
    FieldElement half = fe(1, 2);
    return {c30, (plus - minus) * half, (plus + minus) * half, c03};
}

}  // namespace fano::test
