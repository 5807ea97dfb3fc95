#include "fano/geometry.hpp"

#include <algorithm>
#include <sstream>

namespace fano {

ProjectivePoint::ProjectivePoint(const Vec5& coords) : c_(coords), lead_(-1) {
    for (int i = 0; i < 5; ++i) {
        if (!c_(i).is_zero()) {
            lead_ = i;
            break;
        }
    }
    if (lead_ < 0)
        throw DomainError("projective point with all coordinates zero");
    FieldElement inv = c_(lead_).inverse();
    for (int i = lead_; i < 5; ++i) c_(i) *= inv;
}

std::string ProjectivePoint::to_string() const {
    std::ostringstream os;
    os << "(";
    for (int i = 0; i < 5; ++i) {
        if (i) os << ", ";
        os << fano::to_string(c_(i));
    }
    os << ")";
    return os.str();
}

std::size_t hash_value(const ProjectivePoint& p) {
    return hash_matrix(p.coords());
}

int compare(const ProjectivePoint& x, const ProjectivePoint& y) {
    for (int i = 0; i < 5; ++i)
        if (int c = compare(x.coords()(i), y.coords()(i)); c != 0) return c;
    return 0;
}

LinearFunctional::LinearFunctional(const Vec5& coeffs) : c_(coeffs) {
    bool nonzero = false;
    for (int i = 0; i < 5; ++i) nonzero = nonzero || !c_(i).is_zero();
    if (!nonzero)
        throw DomainError("zero linear functional");
}

FieldElement LinearFunctional::operator()(const Vec5& v) const {
    FieldElement acc(0);
    for (int i = 0; i < 5; ++i)
        if (!c_(i).is_zero()) acc += c_(i) * v(i);
    return acc;
}

LinearFunctional LinearFunctional::canonical() const {
    Vec5 out = c_;
    for (int i = 0; i < 5; ++i) {
        if (!out(i).is_zero()) {
            FieldElement inv = out(i).inverse();
            for (int j = i; j < 5; ++j) out(j) *= inv;
            break;
        }
    }
    return LinearFunctional(out);
}

LinearFunctional tangent_functional(const Cubic& f, const ProjectivePoint& p) {
    if (!f.evaluate(p.coords()).is_zero())
        throw DomainError("point " + p.to_string() + " does not lie on the cubic");
    Vec5 grad;
    bool nonzero = false;
    std::array<Poly, 5> g = f.gradient();
    for (int i = 0; i < 5; ++i) {
        grad(i) = g[static_cast<std::size_t>(i)].evaluate(p.coords());
        nonzero = nonzero || !grad(i).is_zero();
    }
    if (!nonzero)
        throw DomainError("singular point: gradient vanishes at " + p.to_string());
    return LinearFunctional(grad).canonical();
}

bool line_in_cubic(const Cubic& f, const ProjectivePoint& p, const ProjectivePoint& q) {
    BinaryCubic c = restrict_to_line(f, p.coords(), q.coords());
    return c[0].is_zero() && c[1].is_zero() && c[2].is_zero() && c[3].is_zero();
}

namespace {

// Invertible frame with first column p, completed greedily by the standard
// basis vectors in index order.
Mat5 adapted_frame(const ProjectivePoint& p) {
    Mat5 m = Mat5::Zero();
    m.col(0) = p.coords();
    MatX cols(5, 1);
    for (int i = 0; i < 5; ++i) cols(i, 0) = p.coords()(i);
    int placed = 1;
    for (int j = 0; j < 5 && placed < 5; ++j) {
        MatX trial(5, placed + 1);
        trial.leftCols(placed) = cols;
        for (int i = 0; i < 5; ++i) trial(i, placed) = FieldElement(i == j ? 1 : 0);
        if (rank(trial) == placed + 1) {
            m(j, placed) = FieldElement(1);
            cols = std::move(trial);
            ++placed;
        }
    }
    return m;
}

// Exact division of q by the linear form l (leading variable = pivot), via
// repeated cancellation of the grlex-leading term.
std::optional<Poly> divide_by_linear(const Poly& q, const Poly& l) {
    Monomial lead_l = l.terms().begin()->first;
    FieldElement lead_c = l.terms().begin()->second;
    Poly rem = q, quot;
    while (!rem.is_zero()) {
        const auto& [m, c] = *rem.terms().begin();
        Monomial u = m;
        bool divisible = true;
        for (int i = 0; i < 5; ++i) {
            u.e[i] -= lead_l.e[i];
            if (u.e[i] < 0) divisible = false;
        }
        if (!divisible) return std::nullopt;
        FieldElement uc = c / lead_c;
        quot.add_term(u, uc);
        rem -= Poly::term(u, uc) * l;
    }
    return quot;
}

}  // namespace

VertexTestResult cone_vertex_test(const Cubic& f, const ProjectivePoint& p) {
    // Throws on the two precondition failures (off the cubic / singular point).
    LinearFunctional tangent = tangent_functional(f, p);

    Mat5 frame = adapted_frame(p);
    Poly fp = linear_substitute(f.form(), frame);

    // F' = y1^2 L + y1 Q + C; the y1^3 coefficient is F(p) = 0.
    Poly lin, quad;
    for (const auto& [m, c] : fp.terms()) {
        if (m.e[0] == 3)
            throw InvariantViolation("adapted form has a y1^3 term");
        Monomial rest = m;
        rest.e[0] = 0;
        if (m.e[0] == 2)
            lin.add_term(rest, c);
        else if (m.e[0] == 1)
            quad.add_term(rest, c);
    }
    if (lin.is_zero())
        throw InvariantViolation("vanishing quadratic cone part at a smooth point");

    // Pivot substitution: Q mod L is Q with the leading variable of L
    // eliminated; divisibility holds iff the remainder is identically zero.
    int pivot = -1;
    FieldElement pivot_c;
    for (const auto& [m, c] : lin.terms()) {
        int var = 0;
        for (int i = 0; i < 5; ++i)
            if (m.e[i] == 1) var = i;
        if (pivot < 0 || var < pivot) {
            pivot = var;
            pivot_c = c;
        }
    }
    Mat5 subst = Mat5::Identity();
    subst(pivot, pivot) = FieldElement(0);
    for (const auto& [m, c] : lin.terms()) {
        int var = 0;
        for (int i = 0; i < 5; ++i)
            if (m.e[i] == 1) var = i;
        if (var != pivot) subst(pivot, var) = -(c / pivot_c);
    }
    Poly remainder = linear_substitute(quad, subst);
    if (!remainder.is_zero())
        return NotAVertex{std::move(remainder)};

    std::optional<Poly> residual = divide_by_linear(quad, lin);
    if (!residual || !((*residual) * lin == quad))
        throw InvariantViolation("exact division Q / L failed after the pivot test");
    if (!residual->is_zero() && !residual->is_homogeneous(1))
        throw InvariantViolation("residual form is not linear");

    // Complete the square: F' = L (y1 + m/2)^2 + (C - L m^2 / 4), so the sign
    // flip of phi' = y1 + m/2 preserves F'.
    Vec5 phi_y = Vec5::Zero();
    phi_y(0) = FieldElement(1);
    FieldElement half(make_rational(1, 2));
    for (const auto& [m, c] : residual->terms()) {
        for (int i = 0; i < 5; ++i)
            if (m.e[i] == 1) phi_y(i) = c * half;
    }
    Mat5 frame_inv = inverse(frame);
    Vec5 phi = frame_inv.transpose() * phi_y;

    LinearFunctional fixed(phi);
    if (!(fixed(p.coords()) == FieldElement(1)))
        throw InvariantViolation("fixed functional not normalized at the vertex");

    Mat5 refl = Mat5::Identity() - FieldElement(2) * (p.coords() * phi.transpose());

    // Structural guarantees of a vertex record.
    if (!is_identity(mul(refl, refl)))
        throw InvariantViolation("reflection is not an involution");
    MatX rmi(5, 5);
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j)
            rmi(i, j) = refl(i, j) - FieldElement(i == j ? 1 : 0);
    if (rank(rmi) != 1)
        throw InvariantViolation("reflection does not fix a hyperplane");
    if (!matrix_equal(Vec5(refl * p.coords()), Vec5(-p.coords())))
        throw InvariantViolation("reflection does not negate the vertex");
    if (!(linear_substitute(f.form(), refl) == f.form()))
        throw InvariantViolation("reflection does not preserve the cubic");

    return VertexRecord{p, tangent, std::move(*residual), fixed, refl, Mat5(-refl)};
}

ProjectivePoint third_vertex(const Cubic& f, const VertexRecord& v1, const VertexRecord& v2) {
    const Vec5& p = v1.point.coords();
    const Vec5& q = v2.point.coords();
    BinaryCubic c = restrict_to_line(f, p, q);
    if (c[0].is_zero() && c[1].is_zero() && c[2].is_zero() && c[3].is_zero())
        throw DomainError("line through the vertices lies in the cubic; no third point");
    if (!c[0].is_zero() || !c[3].is_zero())
        throw InvariantViolation("line restriction does not vanish at the vertices");
    const FieldElement& a = c[1];
    const FieldElement& b = c[2];
    if (a.is_zero() || b.is_zero())
        throw DomainError("tangential line through the vertices: no third intersection point");
    return ProjectivePoint(b * p - a * q);
}

Poly plane_model(const Cubic& f, const VertexRecord& v) {
    MatX rows(2, 5);
    for (int j = 0; j < 5; ++j) {
        rows(0, j) = v.tangent.coeffs()(j);
        rows(1, j) = v.fixed_functional.coeffs()(j);
    }
    auto kernel = kernel_basis(rows);
    if (kernel.size() != 3)
        throw InvariantViolation("tangent and fixed functional are not independent");
    std::array<Vec5, 3> basis;
    for (int k = 0; k < 3; ++k)
        for (int i = 0; i < 5; ++i)
            basis[static_cast<std::size_t>(k)](i) = kernel[static_cast<std::size_t>(k)](i);
    return restrict_to_plane(f, basis);
}

namespace {

// Arithmetic in F_{p^k}, k in {1, 2}, elements a + b*s with s^2 = delta.
struct Fq {
    const PrimeField& fp;
    int k;
    std::uint32_t delta;

    using Elem = std::array<std::uint32_t, 2>;

    Elem add(Elem x, Elem y) const { return {fp.add(x[0], y[0]), fp.add(x[1], y[1])}; }
    Elem mul(Elem x, Elem y) const {
        if (k == 1) return {fp.mul(x[0], y[0]), 0};
        return {fp.add(fp.mul(x[0], y[0]), fp.mul(fp.mul(x[1], y[1]), delta)),
                fp.add(fp.mul(x[0], y[1]), fp.mul(x[1], y[0]))};
    }
    bool is_zero(Elem x) const { return x[0] == 0 && x[1] == 0; }
    Elem nth(std::uint64_t idx) const {
        return {static_cast<std::uint32_t>(idx % fp.p()),
                static_cast<std::uint32_t>(idx / fp.p())};
    }
    std::uint64_t size() const {
        return k == 1 ? fp.p() : static_cast<std::uint64_t>(fp.p()) * fp.p();
    }
};

struct ReducedPoly {
    struct Term {
        Monomial m;
        std::uint32_t c;
    };
    std::vector<Term> terms;

    static ReducedPoly from(const Poly& f, const PrimeField& fp) {
        ReducedPoly out;
        for (const auto& [m, c] : f.terms()) {
            std::uint32_t r = reduce_mod(c, fp);
            if (r != 0) out.terms.push_back({m, r});
        }
        return out;
    }

    Fq::Elem evaluate(const Fq& fq, const std::array<std::array<Fq::Elem, 4>, 5>& pow) const {
        Fq::Elem acc{0, 0};
        for (const auto& t : terms) {
            Fq::Elem v{t.c, 0};
            for (int i = 0; i < 5; ++i)
                if (t.m.e[i] > 0) v = fq.mul(v, pow[static_cast<std::size_t>(i)][static_cast<std::size_t>(t.m.e[i])]);
            acc = fq.add(acc, v);
        }
        return acc;
    }
};

std::uint32_t smallest_nonresidue(const PrimeField& fp) {
    for (std::uint32_t c = 2; c < fp.p(); ++c)
        if (fp.pow(c, (fp.p() - 1) / 2) != 1) return c;
    throw InvariantViolation("no quadratic non-residue found");
}

}  // namespace

std::string SingularWitness::to_string() const {
    std::ostringstream os;
    os << "(";
    for (int i = 0; i < 5; ++i) {
        if (i) os << ", ";
        const auto& c = coords[static_cast<std::size_t>(i)];
        if (c[1] == 0) {
            os << c[0];
        } else {
            if (c[0] != 0) os << c[0] << "+";
            os << c[1] << "*s";
        }
    }
    os << ") over F_" << p;
    if (k == 2) os << "^2 with s^2 = " << delta;
    return os.str();
}

std::optional<SingularWitness> singular_scan(const Cubic& f, std::uint32_t p, int k) {
    if (k != 1 && k != 2)
        throw DomainError("extension degree must be 1 or 2");
    PrimeField fp(p);
    Fq fq{fp, k, k == 2 ? smallest_nonresidue(fp) : 0};

    ReducedPoly rf = ReducedPoly::from(f.form(), fp);
    std::array<ReducedPoly, 5> rg;
    for (int i = 1; i <= 5; ++i)
        rg[static_cast<std::size_t>(i - 1)] = ReducedPoly::from(f.form().partial(i), fp);

    const std::uint64_t q = fq.size();
    std::array<Fq::Elem, 5> pt{};
    std::array<std::array<Fq::Elem, 4>, 5> pow{};
    for (int i = 0; i < 5; ++i) pow[static_cast<std::size_t>(i)][0] = {1, 0};

    // Canonical representatives: leading coordinate 1, earlier coordinates 0,
    // trailing coordinates sweeping F_q with the last coordinate fastest.
    for (int lead = 0; lead < 5; ++lead) {
        const int free = 4 - lead;
        std::uint64_t total = 1;
        for (int i = 0; i < free; ++i) total *= q;
        for (std::uint64_t idx = 0; idx < total; ++idx) {
            for (int i = 0; i < lead; ++i) pt[static_cast<std::size_t>(i)] = {0, 0};
            pt[static_cast<std::size_t>(lead)] = {1, 0};
            std::uint64_t rest = idx;
            for (int i = 4; i > lead; --i) {
                pt[static_cast<std::size_t>(i)] = fq.nth(rest % q);
                rest /= q;
            }
            for (int i = 0; i < 5; ++i) {
                auto& pw = pow[static_cast<std::size_t>(i)];
                pw[1] = pt[static_cast<std::size_t>(i)];
                pw[2] = fq.mul(pw[1], pw[1]);
                pw[3] = fq.mul(pw[2], pw[1]);
            }
            if (!fq.is_zero(rf.evaluate(fq, pow))) continue;
            bool singular = true;
            for (int i = 0; i < 5 && singular; ++i)
                singular = fq.is_zero(rg[static_cast<std::size_t>(i)].evaluate(fq, pow));
            if (singular) {
                SingularWitness w;
                w.p = p;
                w.k = k;
                w.delta = fq.delta;
                for (int i = 0; i < 5; ++i) w.coords[static_cast<std::size_t>(i)] = pt[static_cast<std::size_t>(i)];
                return w;
            }
        }
    }
    return std::nullopt;
}

}  // namespace fano
