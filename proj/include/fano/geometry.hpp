#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>

#include "fano/poly.hpp"

namespace fano {

/// Point of P^4 with exact coordinates, stored in canonical form: the first
/// nonzero coordinate equals 1, so equality and hashing are structural.
class ProjectivePoint {
public:
    explicit ProjectivePoint(const Vec5& coords);  // throws DomainError on zero

    const Vec5& coords() const { return c_; }
    int leading_index() const { return lead_; }

    bool operator==(const ProjectivePoint& o) const { return matrix_equal(c_, o.c_); }
    bool operator!=(const ProjectivePoint& o) const { return !(*this == o); }

    std::string to_string() const;  // "(1, -w, 0, 0, 0)"

private:
    Vec5 c_;
    int lead_;
};

std::size_t hash_value(const ProjectivePoint& p);
/// Structural order on canonical coordinates; deterministic, not geometric.
int compare(const ProjectivePoint& x, const ProjectivePoint& y);

/// Linear form on C^5.  Kept as given; canonical() rescales so the first
/// nonzero coefficient is 1 (the comparison convention for hyperplanes).
class LinearFunctional {
public:
    explicit LinearFunctional(const Vec5& coeffs);  // throws DomainError on zero

    const Vec5& coeffs() const { return c_; }
    FieldElement operator()(const Vec5& v) const;
    LinearFunctional canonical() const;

    bool operator==(const LinearFunctional& o) const { return matrix_equal(c_, o.c_); }

private:
    Vec5 c_;
};

/// A cone vertex p of the cubic together with the order-2 reflection R it
/// induces.  Invariants (checked at construction): F(p) = 0, tangent(p) = 0,
/// phi(p) = 1, R^2 = Id, rank(R - Id) = 1, R p = -p, F∘R = F.
struct VertexRecord {
    ProjectivePoint point;
    LinearFunctional tangent;          // gradient of F at p, canonically scaled
    Poly residual;                     // linear form m with Q = L*m, in the adapted frame
    LinearFunctional fixed_functional; // phi, scaled so phi(p) = 1; R fixes {phi = 0}
    Mat5 reflection;                   // R = Id - 2 p phi^T
    Mat5 sigma_star;                   // -R
};

/// Outcome of a failed cone-vertex test: the nonzero remainder of Q modulo
/// L witnesses that the tangent section is not a cone.
struct NotAVertex {
    Poly remainder;
};

using VertexTestResult = std::variant<VertexRecord, NotAVertex>;

/// Tangent hyperplane functional of F at p (coefficients dF/dx_i(p)).
/// Throws DomainError when p is not on F or the gradient vanishes (F is
/// then singular at p).
LinearFunctional tangent_functional(const Cubic& f, const ProjectivePoint& p);

/// True iff the line through p and q lies inside the cubic (all four
/// coefficients of the restriction vanish).
bool line_in_cubic(const Cubic& f, const ProjectivePoint& p, const ProjectivePoint& q);

/// Decides whether the tangent hyperplane section of F at p is a cone with
/// vertex p.  Writes F in adapted coordinates y with y1-axis at p,
///     F' = y1^2 L + y1 Q + C        (no y1^3 term since F(p) = 0),
/// and tests L | Q by substituting the pivot variable of L.  On success the
/// square is completed: phi' = y1 + (Q/L)/2 pulled back through the frame,
/// and R(v) = v - 2 phi(v) p.
VertexTestResult cone_vertex_test(const Cubic& f, const ProjectivePoint& p);

/// The third intersection point of the cubic with the line through two cone
/// vertices whose curves are disjoint.  The restricted binary cubic factors
/// as s*t*(a s + b t); returns b*p - a*q normalized.  Throws DomainError when
/// the line lies inside the cubic or the intersection is tangential.
ProjectivePoint third_vertex(const Cubic& f, const VertexRecord& v1, const VertexRecord& v2);

/// Plane model of the curve attached to a vertex: restriction of F to the
/// joint kernel of {tangent, fixed_functional}, with the canonical reduced
/// echelon basis of that kernel.
Poly plane_model(const Cubic& f, const VertexRecord& v);

/// A point of P^4(F_{p^k}) where the reduced cubic and all five partials
/// vanish.  Coordinates are pairs (a, b) meaning a + b*s with s a fixed
/// generator of F_{p^2} over F_p (b = 0 identically when k = 1).
struct SingularWitness {
    std::uint32_t p;
    int k;
    std::uint32_t delta;  // s^2 = delta when k = 2
    std::array<std::array<std::uint32_t, 2>, 5> coords;

    std::string to_string() const;
};

/// Brute-force search for a singular point of F over F_{p^k}, k in {1, 2},
/// in canonical point order.  Finding no witness is NOT a smoothness
/// certificate; a witness mod p does not disprove smoothness over Q(w)
/// (the reduction may be bad at p).  Throws DomainError on an inadmissible
/// prime or a non-reducible coefficient.
std::optional<SingularWitness> singular_scan(const Cubic& f, std::uint32_t p, int k);

}  // namespace fano
