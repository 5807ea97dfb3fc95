#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"

using namespace fano;
using namespace fano::test;

namespace {

// Test-only variant of the adapted frame: completes with standard basis
// vectors scanned from the HIGHEST index down.  Used to confirm the vertex
// data is independent of the greedy completion.
Mat5 reversed_frame(const ProjectivePoint& p) {
    Mat5 m = Mat5::Zero();
    m.col(0) = p.coords();
    MatX cols(5, 1);
    for (int i = 0; i < 5; ++i) cols(i, 0) = p.coords()(i);
    int placed = 1;
    for (int j = 4; j >= 0 && placed < 5; --j) {
        MatX trial(5, placed + 1);
        trial.leftCols(placed) = cols;
        for (int i = 0; i < 5; ++i) trial(i, placed) = fe(i == j ? 1 : 0);
        if (rank(trial) == placed + 1) {
            m(j, placed) = fe(1);
            cols = std::move(trial);
            ++placed;
        }
    }
    return m;
}

// Independent route to phi and R through the reversed frame.
std::pair<Vec5, Mat5> vertex_data_via(const Cubic& f, const ProjectivePoint& p,
                                      const Mat5& frame) {
    Poly fp = linear_substitute(f.form(), frame);
    Poly lin, quad;
    for (const auto& [m, c] : fp.terms()) {
        Monomial rest = m;
        rest.e[0] = 0;
        if (m.e[0] == 2) lin.add_term(rest, c);
        if (m.e[0] == 1) quad.add_term(rest, c);
    }
    // Solve lin * m = quad for the 4 unknown coefficients of the linear form
    // m, one equation per quadratic monomial.
    Vec5 phi_y = Vec5::Zero();
    phi_y(0) = fe(1);
    MatX a(10, 4);
    Eigen::Matrix<FieldElement, Eigen::Dynamic, 1> rhs(10);
    std::vector<Monomial> rows;
    for (int i = 1; i < 5; ++i)
        for (int j = i; j < 5; ++j) {
            Monomial m;
            ++m.e[i];
            ++m.e[j];
            rows.push_back(m);
        }
    for (std::size_t r = 0; r < rows.size(); ++r) {
        auto it = quad.terms().find(rows[r]);
        rhs(static_cast<int>(r)) = it == quad.terms().end() ? fe(0) : it->second;
        for (int k = 1; k < 5; ++k) {
            // contribution of unknown m_k to monomial rows[r]: lin[rows[r] / y_k]
            Monomial m = rows[r];
            if (m.e[k] == 0) {
                a(static_cast<int>(r), k - 1) = fe(0);
                continue;
            }
            --m.e[k];
            auto lt = lin.terms().find(m);
            a(static_cast<int>(r), k - 1) = lt == lin.terms().end() ? fe(0) : lt->second;
        }
    }
    // Least-structure exact solve: append rhs and reduce.
    MatX aug(10, 5);
    aug.leftCols(4) = a;
    aug.col(4) = rhs;
    rref_inplace(aug);
    Vec5 m_form = Vec5::Zero();
    for (int r = 0; r < 10; ++r) {
        int pivot = -1;
        for (int c = 0; c < 4; ++c)
            if (!aug(r, c).is_zero()) {
                pivot = c;
                break;
            }
        if (pivot >= 0) m_form(pivot + 1) = aug(r, 4);
    }
    FieldElement half = fe(1, 2);
    for (int i = 1; i < 5; ++i) phi_y(i) = m_form(i) * half;
    Vec5 phi = inverse(frame).transpose() * phi_y;
    Mat5 refl = Mat5::Identity() - fe(2) * (p.coords() * phi.transpose());
    return {phi, refl};
}

}  // namespace

TEST_CASE("tangent functionals") {
    Cubic f = fermat();
    LinearFunctional t = tangent_functional(f, pt({fe(1), fe(-1), fe(0), fe(0), fe(0)}));
    CHECK(matrix_equal(t.coeffs(), vec({fe(1), fe(1), fe(0), fe(0), fe(0)})));
    CHECK(t(vec({fe(1), fe(-1), fe(0), fe(0), fe(0)})) == fe(0));

    // x1^2 x2 + G: tangent at e1 is x2.
    Cubic single = instantiate_pinned("single");
    LinearFunctional t2 = tangent_functional(single, pt({fe(1), fe(0), fe(0), fe(0), fe(0)}));
    CHECK(matrix_equal(t2.coeffs(), vec({fe(0), fe(1), fe(0), fe(0), fe(0)})));

    CHECK_THROWS_AS(tangent_functional(f, pt({fe(1), fe(0), fe(0), fe(0), fe(0)})),
                    DomainError);  // not on F
    Cubic triple(pterm(3, 0, 0, 0, 0, fe(1)));
    CHECK_THROWS_AS(tangent_functional(triple, pt({fe(0), fe(1), fe(0), fe(0), fe(0)})),
                    DomainError);  // singular point
}

TEST_CASE("line-in-cubic test") {
    Cubic f = fermat();
    CHECK(line_in_cubic(f, pt({fe(1), fe(-1), fe(0), fe(0), fe(0)}),
                        pt({fe(0), fe(0), fe(1), fe(-1), fe(0)})));
    CHECK_FALSE(line_in_cubic(f, pt({fe(1), fe(-1), fe(0), fe(0), fe(0)}),
                              pt({fe(1), fe(0), fe(-1), fe(0), fe(0)})));
    // An endpoint off the cubic can never give a contained line.
    CHECK_FALSE(line_in_cubic(f, pt({fe(1), fe(0), fe(0), fe(0), fe(0)}),
                              pt({fe(0), fe(1), fe(0), fe(0), fe(0)})));
}

TEST_CASE("cone vertex test: adapted normal form with a diagonal reflection") {
    // F = x1^2 x2 + G(x2..x5): e1 is a vertex with R = diag(-1,1,1,1,1).
    Cubic f = instantiate_pinned("single");
    auto result = cone_vertex_test(f, pt({fe(1), fe(0), fe(0), fe(0), fe(0)}));
    REQUIRE(std::holds_alternative<VertexRecord>(result));
    const VertexRecord& v = std::get<VertexRecord>(result);
    Mat5 expected = Mat5::Identity();
    expected(0, 0) = fe(-1);
    CHECK(matrix_equal(v.reflection, expected));
    CHECK(matrix_equal(v.sigma_star, Mat5(-expected)));
    CHECK(v.fixed_functional(vec({fe(1), fe(0), fe(0), fe(0), fe(0)})) == fe(1));
}

TEST_CASE("cone vertex test: the Fermat swap reflection") {
    Cubic f = fermat();
    auto result = cone_vertex_test(f, pt({fe(1), fe(-1), fe(0), fe(0), fe(0)}));
    REQUIRE(std::holds_alternative<VertexRecord>(result));
    const VertexRecord& v = std::get<VertexRecord>(result);
    Mat5 swap = Mat5::Identity();
    swap(0, 0) = swap(1, 1) = fe(0);
    swap(0, 1) = swap(1, 0) = fe(1);
    CHECK(matrix_equal(v.reflection, swap));
    CHECK(is_identity(mul(v.reflection, v.reflection)));
    CHECK(linear_substitute(f.form(), v.reflection) == f.form());
    CHECK(matrix_equal(Vec5(v.reflection * v.point.coords()), Vec5(-v.point.coords())));
}

TEST_CASE("cone vertex test: rejection with a remainder witness") {
    Cubic f = fermat();
    auto result = cone_vertex_test(f, pt({fe(1), fe(-1), fe(1), fe(-1), fe(0)}));
    REQUIRE(std::holds_alternative<NotAVertex>(result));
    CHECK_FALSE(std::get<NotAVertex>(result).remainder.is_zero());

    CHECK_THROWS_AS(cone_vertex_test(f, pt({fe(1), fe(1), fe(0), fe(0), fe(0)})),
                    DomainError);  // not on the cubic
}

TEST_CASE("vertex data is independent of the frame completion") {
    std::vector<std::pair<std::string, ProjectivePoint>> cases = {
        {"fermat", pt({fe(1), fe(-1), fe(0), fe(0), fe(0)})},
        {"fermat", pt({fe(0), fe(1), -W(), fe(0), fe(0)})},
        {"g333-g332", pt({fe(1), -W2(), fe(0), fe(0), fe(0)})},
        {"g332-single", pt({fe(0), fe(0), fe(1), fe(0), fe(0)})},
    };
    for (const auto& [slug, p] : cases) {
        Cubic f = slug == "fermat" ? fermat() : instantiate_pinned(slug);
        auto result = cone_vertex_test(f, p);
        REQUIRE(std::holds_alternative<VertexRecord>(result));
        const VertexRecord& v = std::get<VertexRecord>(result);
        auto [phi, refl] = vertex_data_via(f, p, reversed_frame(p));
        CHECK(matrix_equal(phi, v.fixed_functional.coeffs()));
        CHECK(matrix_equal(refl, v.reflection));
    }
}

TEST_CASE("third vertex construction") {
    Cubic f = fermat();
    auto v1 = std::get<VertexRecord>(cone_vertex_test(f, pt({fe(1), fe(-1), fe(0), fe(0), fe(0)})));
    auto v2 = std::get<VertexRecord>(cone_vertex_test(f, pt({fe(1), fe(0), fe(-1), fe(0), fe(0)})));
    ProjectivePoint third = third_vertex(f, v1, v2);
    CHECK(third == pt({fe(0), fe(1), fe(-1), fe(0), fe(0)}));
    CHECK(third_vertex(f, v2, v1) == third);  // projective symmetry
    CHECK(std::holds_alternative<VertexRecord>(cone_vertex_test(f, third)));

    // A mu_3-twisted pair lands on a twisted vertex.
    auto v1w = std::get<VertexRecord>(cone_vertex_test(f, pt({fe(1), -W(), fe(0), fe(0), fe(0)})));
    ProjectivePoint tw = third_vertex(f, v1w, v2);
    const Vec5& c = tw.coords();
    CHECK(c(0) == fe(0));
    CHECK(c(1) == fe(1));
    bool beta_in_mu3 = (-c(2) == fe(1)) || (-c(2) == W()) || (-c(2) == W2());
    CHECK(beta_in_mu3);
    CHECK((c(3).is_zero() && c(4).is_zero()));
    CHECK(std::holds_alternative<VertexRecord>(cone_vertex_test(f, tw)));

    // Disjoint-index pair: the connecting line lies inside the Fermat cubic.
    auto v3 = std::get<VertexRecord>(cone_vertex_test(f, pt({fe(0), fe(0), fe(1), fe(-1), fe(0)})));
    CHECK_THROWS_AS(third_vertex(f, v1, v3), DomainError);
}

TEST_CASE("plane models") {
    Cubic f = fermat();
    auto v = std::get<VertexRecord>(cone_vertex_test(f, pt({fe(1), fe(-1), fe(0), fe(0), fe(0)})));
    Poly str = pterm(3, 0, 0, 0, 0, fe(1)) + pterm(0, 3, 0, 0, 0, fe(1)) +
               pterm(0, 0, 3, 0, 0, fe(1));
    CHECK(plane_model(f, v) == str);

    // Family x1^3+x2^3+3*x1*x2*l + hesse(x3,x4,x5; lambda) at vertex e1-e2:
    // the model is hesse + l^3 on the nose (here l = x3, lambda = 2).
    Poly form = pterm(3, 0, 0, 0, 0, fe(1)) + pterm(0, 3, 0, 0, 0, fe(1)) +
                pterm(1, 1, 1, 0, 0, fe(3)) + pterm(0, 0, 3, 0, 0, fe(1)) +
                pterm(0, 0, 0, 3, 0, fe(1)) + pterm(0, 0, 0, 0, 3, fe(1)) +
                pterm(0, 0, 1, 1, 1, fe(-6));
    Cubic g(form);
    auto vg = std::get<VertexRecord>(cone_vertex_test(g, pt({fe(1), fe(-1), fe(0), fe(0), fe(0)})));
    Poly expected = fe(2) * pterm(3, 0, 0, 0, 0, fe(1)) + pterm(0, 3, 0, 0, 0, fe(1)) +
                    pterm(0, 0, 3, 0, 0, fe(1)) + pterm(1, 1, 1, 0, 0, fe(-6));
    CHECK(plane_model(g, vg) == expected);

    // F_lambda at the e4-e5 vertex: the model is E_lambda itself.
    Cubic fl = instantiate_pinned("g333-g332");
    auto v45 = std::get<VertexRecord>(cone_vertex_test(fl, pt({fe(0), fe(0), fe(0), fe(1), fe(-1)})));
    Poly e_lambda = pterm(3, 0, 0, 0, 0, fe(1)) + pterm(0, 3, 0, 0, 0, fe(1)) +
                    pterm(0, 0, 3, 0, 0, fe(1)) + pterm(1, 1, 1, 0, 0, fe(-6));
    CHECK(plane_model(fl, v45) == e_lambda);
}

TEST_CASE("singular scan") {
    CHECK_FALSE(singular_scan(fermat(), 7, 1).has_value());

    auto w = singular_scan(Cubic(pterm(3, 0, 0, 0, 0, fe(1))), 7, 1);
    REQUIRE(w.has_value());
    CHECK(w->coords == std::array<std::array<std::uint32_t, 2>, 5>{
                           {{0, 0}, {1, 0}, {0, 0}, {0, 0}, {0, 0}}});

    // The lambda^3 = 1 member of the Hesse family is singular.
    Poly degenerate = pterm(3, 0, 0, 0, 0, fe(1)) + pterm(0, 3, 0, 0, 0, fe(1)) +
                      pterm(0, 0, 3, 0, 0, fe(1)) + pterm(1, 1, 1, 0, 0, fe(-3)) +
                      pterm(0, 0, 0, 3, 0, fe(1)) + pterm(0, 0, 0, 0, 3, fe(1));
    CHECK(singular_scan(Cubic(degenerate), 7, 1).has_value());

    CHECK_THROWS_AS(singular_scan(fermat(), 5, 1), DomainError);
    CHECK_THROWS_AS(singular_scan(fermat(), 7, 3), DomainError);
}

TEST_CASE("singular scan over the quadratic extension") {
    CHECK_FALSE(singular_scan(fermat(), 7, 2).has_value());
    auto w = singular_scan(Cubic(pterm(3, 0, 0, 0, 0, fe(1))), 7, 2);
    REQUIRE(w.has_value());
    CHECK(w->k == 2);
}

TEST_CASE("projective point canonicalization") {
    ProjectivePoint a = pt({fe(0), fe(2), fe(-2), fe(0), fe(0)});
    CHECK(matrix_equal(a.coords(), vec({fe(0), fe(1), fe(-1), fe(0), fe(0)})));
    ProjectivePoint b = pt({fe(0), fe(-3), fe(3), fe(0), fe(0)});
    CHECK(a == b);
    CHECK(hash_value(a) == hash_value(b));
    CHECK_THROWS_AS(pt({fe(0), fe(0), fe(0), fe(0), fe(0)}), DomainError);
}
