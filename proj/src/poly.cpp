#include "fano/poly.hpp"

#include <sstream>

namespace fano {

Poly Poly::variable(int i) {
    Monomial m;
    m.e[i - 1] = 1;
    return term(m, FieldElement(1));
}

Poly Poly::constant(FieldElement c) {
    return term(Monomial{}, std::move(c));
}

Poly Poly::term(const Monomial& m, FieldElement c) {
    Poly p;
    p.add_term(m, c);
    return p;
}

void Poly::add_term(const Monomial& m, const FieldElement& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

bool Poly::is_homogeneous(int d) const {
    for (const auto& [m, c] : terms_)
        if (m.degree() != d) return false;
    return true;
}

bool Poly::uses_only_first(int k) const {
    for (const auto& [m, c] : terms_)
        for (int i = k; i < 5; ++i)
            if (m.e[i] != 0) return false;
    return true;
}

FieldElement Poly::evaluate(const Vec5& x) const {
    FieldElement acc(0);
    for (const auto& [m, c] : terms_) {
        FieldElement v = c;
        for (int i = 0; i < 5; ++i)
            for (int k = 0; k < m.e[i]; ++k)
                v *= x(i);
        acc += v;
    }
    return acc;
}

Poly Poly::partial(int i) const {
    Poly out;
    const int idx = i - 1;
    for (const auto& [m, c] : terms_) {
        if (m.e[idx] == 0) continue;
        Monomial d = m;
        d.e[idx] -= 1;
        out.add_term(d, FieldElement(m.e[idx]) * c);
    }
    return out;
}

Poly& Poly::operator+=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Poly Poly::operator-() const {
    Poly out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

Poly operator*(const Poly& x, const Poly& y) {
    Poly out;
    for (const auto& [mx, cx] : x.terms_)
        for (const auto& [my, cy] : y.terms_) {
            Monomial m;
            for (int i = 0; i < 5; ++i) m.e[i] = mx.e[i] + my.e[i];
            out.add_term(m, cx * cy);
        }
    return out;
}

Poly& Poly::operator*=(const FieldElement& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, coeff] : terms_) coeff *= c;
    return *this;
}

std::size_t Poly::hash() const {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (const auto& [m, c] : terms_) {
        for (int i = 0; i < 5; ++i)
            h = (h ^ static_cast<std::size_t>(m.e[i])) * 1099511628211ULL;
        h = (h ^ hash_value(c)) * 1099511628211ULL;
    }
    return h;
}

std::string Poly::to_string(const std::array<std::string, 5>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        FieldElement coeff = c;
        if (first) {
            first = false;
        } else if (coeff.is_rational() && sgn(coeff.a()) < 0) {
            os << " - ";
            coeff = -coeff;
        } else {
            os << " + ";
        }
        std::string cs = fano::to_string(coeff);
        bool has_vars = m.degree() > 0;
        if (!has_vars) {
            os << cs;
            continue;
        }
        if (cs != "1") {
            bool composite = cs.find('+') != std::string::npos ||
                             cs.find('-', 1) != std::string::npos;
            if (cs == "-1") {
                os << "-";
            } else if (composite || (!coeff.is_rational() && cs[0] == '-')) {
                os << "(" << cs << ")*";
            } else {
                os << cs << "*";
            }
        }
        bool first_var = true;
        for (int i = 0; i < 5; ++i) {
            if (m.e[i] == 0) continue;
            if (!first_var) os << "*";
            first_var = false;
            os << names[i];
            if (m.e[i] > 1) os << "^" << m.e[i];
        }
    }
    return os.str();
}

std::string Poly::to_string() const {
    return to_string({"x1", "x2", "x3", "x4", "x5"});
}

Poly linear_substitute(const Poly& f, const Mat5& m) {
    // Rows of M as linear polynomials, with their powers memoized.
    std::array<std::array<Poly, 4>, 5> pow{};  // pow[i][k] = row_i^k, k <= 3
    for (int i = 0; i < 5; ++i) {
        pow[i][0] = Poly::constant(FieldElement(1));
        Poly row;
        for (int j = 0; j < 5; ++j) {
            Monomial mj;
            mj.e[j] = 1;
            row.add_term(mj, m(i, j));
        }
        pow[i][1] = row;
        pow[i][2] = row * row;
        pow[i][3] = pow[i][2] * row;
    }
    Poly out;
    for (const auto& [mon, c] : f.terms()) {
        Poly t = Poly::constant(c);
        for (int i = 0; i < 5; ++i)
            if (mon.e[i] > 0) t = t * pow[i][mon.e[i]];
        out += t;
    }
    return out;
}

Cubic::Cubic(Poly form) : form_(std::move(form)) {
    if (form_.is_zero())
        throw DomainError("cubic form is zero");
    if (!form_.is_homogeneous(3))
        throw DomainError("cubic form is not homogeneous of degree 3");
}

std::array<Poly, 5> Cubic::gradient() const {
    std::array<Poly, 5> g;
    for (int i = 1; i <= 5; ++i) g[i - 1] = form_.partial(i);
    return g;
}

namespace {

bool projectively_equal_vectors(const Vec5& p, const Vec5& q) {
    // All 2x2 minors vanish.
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j)
            if (!(p(i) * q(j) - p(j) * q(i)).is_zero()) return false;
    return true;
}

}  // namespace

BinaryCubic restrict_to_line(const Cubic& f, const Vec5& p, const Vec5& q) {
    if (projectively_equal_vectors(p, q))
        throw DomainError("degenerate line: the two points coincide");
    Mat5 m = Mat5::Zero();
    m.col(0) = p;
    m.col(1) = q;
    Poly g = linear_substitute(f.form(), m);
    BinaryCubic c{FieldElement(0), FieldElement(0), FieldElement(0), FieldElement(0)};
    for (const auto& [mon, coeff] : g.terms())
        c[static_cast<std::size_t>(mon.e[1])] = coeff;
    return c;
}

Poly restrict_to_plane(const Cubic& f, const std::array<Vec5, 3>& basis) {
    MatX cols(5, 3);
    for (int j = 0; j < 3; ++j)
        for (int i = 0; i < 5; ++i) cols(i, j) = basis[static_cast<std::size_t>(j)](i);
    if (rank(cols) != 3)
        throw DomainError("plane basis is linearly dependent");
    Mat5 m = Mat5::Zero();
    for (int j = 0; j < 3; ++j) m.col(j) = basis[static_cast<std::size_t>(j)];
    return linear_substitute(f.form(), m);
}

}  // namespace fano
