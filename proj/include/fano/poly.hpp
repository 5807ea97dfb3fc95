#pragma once

#include <array>
#include <initializer_list>
#include <map>
#include <string>
#include <vector>

#include "fano/linalg.hpp"

namespace fano {

/// Exponent vector of a monomial in the 5 ambient variables.
struct Monomial {
    std::array<int, 5> e{0, 0, 0, 0, 0};

    int degree() const { return e[0] + e[1] + e[2] + e[3] + e[4]; }
    bool operator==(const Monomial&) const = default;
};

/// Graded lexicographic order, leading term first (higher degree first; ties
/// broken by earlier variables carrying higher exponents).
struct GrlexBefore {
    bool operator()(const Monomial& x, const Monomial& y) const {
        int dx = x.degree(), dy = y.degree();
        if (dx != dy) return dx > dy;
        return x.e > y.e;
    }
};

/// Sparse polynomial over Q(w) in the 5 ambient variables.  No zero
/// coefficients are stored and terms iterate in canonical grlex order.
class Poly {
public:
    using TermMap = std::map<Monomial, FieldElement, GrlexBefore>;

    Poly() = default;

    static Poly variable(int i);
    static Poly constant(FieldElement c);
    static Poly term(const Monomial& m, FieldElement c);

    void add_term(const Monomial& m, const FieldElement& c);

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int degree() const { return terms_.empty() ? -1 : terms_.begin()->first.degree(); }
    bool is_homogeneous(int d) const;
    /// True when every term uses only variables x1..xk.
    bool uses_only_first(int k) const;

    FieldElement evaluate(const Vec5& x) const;
    Poly partial(int i) const;  // d/dx_i, 1-based index

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly operator-() const;
    friend Poly operator*(const Poly& x, const Poly& y);
    Poly& operator*=(const FieldElement& c);

    bool operator==(const Poly&) const = default;

    std::size_t hash() const;

    /// Renders with the given variable names, leading term first, e.g.
    /// "x1^3 - 3*x1*x2*x3 + (1+w)*x4^2*x5".
    std::string to_string(const std::array<std::string, 5>& names) const;
    std::string to_string() const;  // names x1..x5

private:
    TermMap terms_;
};

inline Poly operator+(Poly x, const Poly& y) { return x += y; }
inline Poly operator-(Poly x, const Poly& y) { return x -= y; }
inline Poly operator*(Poly x, const FieldElement& c) { return x *= c; }
inline Poly operator*(const FieldElement& c, Poly x) { return x *= c; }

/// f∘M: each x_i is replaced by the i-th coordinate of M·x.  Homogeneous
/// degree is preserved (or the result collapses to zero).
Poly linear_substitute(const Poly& f, const Mat5& m);

/// A homogeneous cubic form in 5 variables, the hypersurface equation.
class Cubic {
public:
    explicit Cubic(Poly form);  // validates: nonzero, homogeneous of degree 3

    const Poly& form() const { return form_; }
    FieldElement evaluate(const Vec5& x) const { return form_.evaluate(x); }
    /// All five partials, index 1..5 stored at 0..4.
    std::array<Poly, 5> gradient() const;

    bool operator==(const Cubic&) const = default;

private:
    Poly form_;
};

/// Coefficients (c30, c21, c12, c03) of f(s·p + t·q) = c30 s^3 + c21 s^2 t
/// + c12 s t^2 + c03 t^3.
using BinaryCubic = std::array<FieldElement, 4>;

/// Restriction of f to the line through p and q.  Throws DomainError when
/// the points are projectively equal.
BinaryCubic restrict_to_line(const Cubic& f, const Vec5& p, const Vec5& q);

/// Restriction of f to the plane spanned by the basis: a cubic in (s, t, r)
/// returned as a Poly supported on the first three variables.  Throws
/// DomainError when the basis is dependent.
Poly restrict_to_plane(const Cubic& f, const std::array<Vec5, 3>& basis);

}  // namespace fano
