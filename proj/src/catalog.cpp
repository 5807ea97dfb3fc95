#include "fano/catalog.hpp"

#include <algorithm>

namespace fano {

namespace {

Monomial mono(int e1, int e2, int e3, int e4, int e5) {
    Monomial m;
    m.e = {e1, e2, e3, e4, e5};
    return m;
}

Poly cube(int i) {
    Monomial m;
    m.e[i - 1] = 3;
    return Poly::term(m, FieldElement(1));
}

Poly var(int i) { return Poly::variable(i); }

// x_i^3 + x_j^3 + x_k^3 - 3*lambda*x_i*x_j*x_k
Poly hesse(int i, int j, int k, const FieldElement& lambda) {
    Poly p = cube(i) + cube(j) + cube(k);
    Monomial m;
    m.e[i - 1] = m.e[j - 1] = m.e[k - 1] = 1;
    p.add_term(m, FieldElement(-3) * lambda);
    return p;
}

ProjectivePoint pt_e(int i) {
    Vec5 v = Vec5::Zero();
    v(i - 1) = FieldElement(1);
    return ProjectivePoint(v);
}

ProjectivePoint pt_diff(int i, int j, const FieldElement& beta) {
    Vec5 v = Vec5::Zero();
    v(i - 1) = FieldElement(1);
    v(j - 1) = -beta;
    return ProjectivePoint(v);
}

std::vector<FieldElement> mu3() {
    return {FieldElement(1), FieldElement::omega(), FieldElement::omega_sq()};
}

// Ternary model helpers on the (s, t, r) slots.
Poly model_str_cubes() { return cube(1) + cube(2) + cube(3); }

FieldElement get_param(const FamilySpec& spec, const std::map<std::string, FieldElement>& params,
                       const std::string& name) {
    if (auto it = params.find(name); it != params.end()) return it->second;
    return spec.pinned_parameters.at(name);
}

void check_lambda(const FamilySpec& spec, const FieldElement& lambda) {
    if (spec.lambda_cubed_ne_1 && lambda * lambda * lambda == FieldElement(1))
        throw DomainError("inadmissible parameter for " + spec.id + ": lambda^3 = 1");
}

bool two_index_label(const std::string& label, int i, int j) {
    ParsedLabel p = parse_label(label);
    return p.indices.size() == 2 && p.indices[0] == i && p.indices[1] == j;
}

std::vector<FamilySpec> build_catalog() {
    std::vector<FamilySpec> out;

    {  // trivial: the Klein cubic, no elliptic curves.
        FamilySpec s;
        s.id = "trivial";
        s.slug = "klein";
        s.formula = "x1^2*x2 + x2^2*x3 + x3^2*x4 + x4^2*x5 + x5^2*x1";
        s.expected_n = 0;
        s.expected_order = 1;
        out.push_back(std::move(s));
    }
    {  // []2: one reflection.  G chosen with distinct cube coefficients so no
       // candidate symmetry beyond x1 -> -x1 survives.
        FamilySpec s;
        s.id = "[]2";
        s.slug = "single";
        s.formula = "x1^2*x2 + x2^3 + x3^3 + 2*x4^3 + 3*x5^3";
        s.expected_n = 1;
        s.expected_order = 2;
        s.expected_vertices = {pt_e(1)};
        out.push_back(std::move(s));
    }
    {  // []2 x []2
        FamilySpec s;
        s.id = "[]2x[]2";
        s.slug = "pair";
        s.formula = "x1^2*x3 + x2^2*x4 + x3^3 + x4^3 + x5^3 - 3*lambda*x3*x4*x5";
        s.parameter_names = {"lambda"};
        s.pinned_parameters = {{"lambda", FieldElement(0)}};
        s.lambda_cubed_ne_1 = true;
        s.expected_n = 2;
        s.expected_order = 4;
        s.expected_vertices = {pt_e(1), pt_e(2)};
        out.push_back(std::move(s));
    }
    {  // G(3,3,2)
        FamilySpec s;
        s.id = "G(3,3,2)";
        s.slug = "g332";
        s.formula = "x1^3 + x2^3 + 3*x1*x2*(x3+2*x4) + x3^3 + x4^3 + x5^3 - 3*lambda*x3*x4*x5";
        s.parameter_names = {"lambda"};
        s.pinned_parameters = {{"lambda", FieldElement(0)}};
        s.lambda_cubed_ne_1 = true;
        s.expected_n = 3;
        s.expected_order = 6;
        for (const FieldElement& b : mu3()) s.expected_vertices.push_back(pt_diff(1, 2, b));
        s.expected_model = [](const std::string& label) -> std::optional<Poly> {
            if (!two_index_label(label, 1, 2)) return std::nullopt;
            Poly l = var(1) + FieldElement(2) * var(2);
            return model_str_cubes() + l * l * l;
        };
        out.push_back(std::move(s));
    }
    {  // S4
        FamilySpec s;
        s.id = "S4";
        s.slug = "s4";
        s.formula = "x1^3 + x2^3 + x3^3 + x4^3 + x5^3 + (x1+x2+x3+x4)*x5^2";
        s.expected_n = 6;
        s.expected_order = 24;
        for (int i = 1; i <= 4; ++i)
            for (int j = i + 1; j <= 4; ++j)
                s.expected_vertices.push_back(pt_diff(i, j, FieldElement(1)));
        s.validation_prime = 19;  // bad reduction at 7 and 13 (4E^2 = -27 branch)
        out.push_back(std::move(s));
    }
    {  // G(3,3,2) x []2
        FamilySpec s;
        s.id = "G(3,3,2)x[]2";
        s.slug = "g332-single";
        s.formula = "x1^3 + x2^3 - 3*lambda*x1*x2*(x4+x5) + x3^2*x5 + x4^3 + x5^3";
        s.parameter_names = {"lambda"};
        s.pinned_parameters = {{"lambda", FieldElement(3)}};
        s.lambda_cubed_ne_1 = true;  // lambda^3 = 1 makes the cubic singular
        s.expected_n = 4;
        s.expected_order = 12;
        for (const FieldElement& b : mu3()) s.expected_vertices.push_back(pt_diff(1, 2, b));
        s.expected_vertices.push_back(pt_e(3));
        out.push_back(std::move(s));
    }
    {  // G(3,3,2) x G(3,3,2)
        FamilySpec s;
        s.id = "G(3,3,2)xG(3,3,2)";
        s.slug = "g332-g332";
        s.formula = "x1^3 + x2^3 + 3*a*x1*x2*x5 + x3^3 + x4^3 + 3*b*x3*x4*x5 + x5^3";
        s.parameter_names = {"a", "b"};
        s.pinned_parameters = {{"a", FieldElement(1)}, {"b", FieldElement(1)}};
        s.expected_n = 6;
        s.expected_order = 36;
        for (const FieldElement& b : mu3()) s.expected_vertices.push_back(pt_diff(1, 2, b));
        for (const FieldElement& b : mu3()) s.expected_vertices.push_back(pt_diff(3, 4, b));
        s.expected_model = [](const std::string& label) -> std::optional<Poly> {
            if (!two_index_label(label, 1, 2) && !two_index_label(label, 3, 4))
                return std::nullopt;
            // x^3 + y^3 + (1+a^3) z^3 + 3b xyz with a = b = 1, either block.
            Poly m = cube(1) + cube(2) + FieldElement(2) * cube(3);
            m.add_term(mono(1, 1, 1, 0, 0), FieldElement(3));
            return m;
        };
        out.push_back(std::move(s));
    }
    {  // S5
        FamilySpec s;
        s.id = "S5";
        s.slug = "s5";
        s.formula =
            "sum_i x_i^3 + lambda*(sum_i x_i)*(sum_i x_i^2) + mu*(sum_i x_i)^3";
        s.parameter_names = {"lambda", "mu"};
        s.pinned_parameters = {{"lambda", FieldElement(1)}, {"mu", FieldElement(0)}};
        s.expected_n = 10;
        s.expected_order = 120;
        for (int i = 1; i <= 5; ++i)
            for (int j = i + 1; j <= 5; ++j)
                s.expected_vertices.push_back(pt_diff(i, j, FieldElement(1)));
        out.push_back(std::move(s));
    }
    {  // G(3,3,3) x G(3,3,2)
        FamilySpec s;
        s.id = "G(3,3,3)xG(3,3,2)";
        s.slug = "g333-g332";
        s.formula = "x1^3 + x2^3 + x3^3 - 3*lambda*x1*x2*x3 + x4^3 + x5^3";
        s.parameter_names = {"lambda"};
        s.pinned_parameters = {{"lambda", FieldElement(2)}};
        s.lambda_cubed_ne_1 = true;
        s.expected_n = 12;
        s.expected_order = 324;
        for (int i = 1; i <= 3; ++i)
            for (int j = i + 1; j <= 3; ++j)
                for (const FieldElement& b : mu3())
                    s.expected_vertices.push_back(pt_diff(i, j, b));
        for (const FieldElement& b : mu3()) s.expected_vertices.push_back(pt_diff(4, 5, b));
        s.validation_prime = 13;  // lambda^3 - 1 = 7: bad reduction at exactly 7
        s.expected_model = [](const std::string& label) -> std::optional<Poly> {
            ParsedLabel p = parse_label(label);
            if (p.indices.size() != 2) return std::nullopt;
            if (p.indices[0] == 4 && p.indices[1] == 5)
                return hesse(1, 2, 3, FieldElement(2));  // the plane cubic E_lambda
            // (1 - lambda^3) s^3 + t^3 + r^3 for E[1,2]; the sign of the s^3
            // coefficient flips for the frames of E[1,3] and E[2,3].
            FieldElement c = (p.indices[0] == 1 && p.indices[1] == 2) ? FieldElement(-7)
                                                                      : FieldElement(7);
            return c * cube(1) + cube(2) + cube(3);
        };
        out.push_back(std::move(s));
    }
    {  // G(3,3,5): the Fermat cubic
        FamilySpec s;
        s.id = "G(3,3,5)";
        s.slug = "fermat";
        s.formula = "x1^3 + x2^3 + x3^3 + x4^3 + x5^3";
        s.expected_n = 30;
        s.expected_order = 9720;
        for (int i = 1; i <= 5; ++i)
            for (int j = i + 1; j <= 5; ++j)
                for (const FieldElement& b : mu3())
                    s.expected_vertices.push_back(pt_diff(i, j, b));
        s.expected_model = [](const std::string&) -> std::optional<Poly> {
            return model_str_cubes();
        };
        out.push_back(std::move(s));
    }

    for (FamilySpec& s : out) {
        std::sort(s.expected_vertices.begin(), s.expected_vertices.end(),
                  [](const ProjectivePoint& x, const ProjectivePoint& y) {
                      return compare(x, y) < 0;
                  });
    }
    return out;
}

Poly sum_pow(int k) {
    Poly p;
    for (int i = 1; i <= 5; ++i) {
        Monomial m;
        m.e[i - 1] = k;
        p.add_term(m, FieldElement(1));
    }
    return p;
}

}  // namespace

const std::vector<FamilySpec>& catalog() {
    static const std::vector<FamilySpec> entries = build_catalog();
    return entries;
}

const FamilySpec& catalog_entry(const std::string& id_or_slug) {
    for (const FamilySpec& s : catalog())
        if (s.id == id_or_slug || s.slug == id_or_slug) return s;
    throw DomainError("unknown catalog id: " + id_or_slug);
}

Cubic instantiate(const std::string& id_or_slug,
                  const std::map<std::string, FieldElement>& params) {
    const FamilySpec& spec = catalog_entry(id_or_slug);
    for (const auto& [name, value] : params)
        if (std::find(spec.parameter_names.begin(), spec.parameter_names.end(), name) ==
            spec.parameter_names.end())
            throw DomainError("family " + spec.id + " has no parameter \"" + name + "\"");

    if (spec.slug == "klein")
        return Cubic(Poly::term(mono(2, 1, 0, 0, 0), FieldElement(1)) +
                     Poly::term(mono(0, 2, 1, 0, 0), FieldElement(1)) +
                     Poly::term(mono(0, 0, 2, 1, 0), FieldElement(1)) +
                     Poly::term(mono(0, 0, 0, 2, 1), FieldElement(1)) +
                     Poly::term(mono(1, 0, 0, 0, 2), FieldElement(1)));
    if (spec.slug == "single")
        return Cubic(Poly::term(mono(2, 1, 0, 0, 0), FieldElement(1)) + cube(2) + cube(3) +
                     FieldElement(2) * cube(4) + FieldElement(3) * cube(5));
    if (spec.slug == "pair") {
        FieldElement lambda = get_param(spec, params, "lambda");
        check_lambda(spec, lambda);
        return Cubic(Poly::term(mono(2, 0, 1, 0, 0), FieldElement(1)) +
                     Poly::term(mono(0, 2, 0, 1, 0), FieldElement(1)) +
                     hesse(3, 4, 5, lambda));
    }
    if (spec.slug == "g332") {
        FieldElement lambda = get_param(spec, params, "lambda");
        check_lambda(spec, lambda);
        Poly l = var(3) + FieldElement(2) * var(4);
        return Cubic(cube(1) + cube(2) + FieldElement(3) * (var(1) * var(2) * l) +
                     hesse(3, 4, 5, lambda));
    }
    if (spec.slug == "s4")
        return Cubic(sum_pow(3) +
                     (var(1) + var(2) + var(3) + var(4)) * Poly::term(mono(0, 0, 0, 0, 2),
                                                                     FieldElement(1)));
    if (spec.slug == "g332-single") {
        FieldElement lambda = get_param(spec, params, "lambda");
        check_lambda(spec, lambda);
        Poly p = cube(1) + cube(2) + cube(4) + cube(5);
        p += (FieldElement(-3) * lambda) * (var(1) * var(2) * (var(4) + var(5)));
        p.add_term(mono(0, 0, 2, 0, 1), FieldElement(1));
        return Cubic(p);
    }
    if (spec.slug == "g332-g332") {
        FieldElement a = get_param(spec, params, "a");
        FieldElement b = get_param(spec, params, "b");
        FieldElement a3 = a * a * a, b3 = b * b * b;
        if (a3 == FieldElement(-1) || b3 == FieldElement(-1) || a3 + b3 == FieldElement(-1))
            throw DomainError("inadmissible parameters for " + spec.id +
                              ": a^3, b^3 and a^3+b^3 must all differ from -1");
        Poly p = cube(1) + cube(2) + cube(3) + cube(4) + cube(5);
        p.add_term(mono(1, 1, 0, 0, 1), FieldElement(3) * a);
        p.add_term(mono(0, 0, 1, 1, 1), FieldElement(3) * b);
        return Cubic(p);
    }
    if (spec.slug == "s5") {
        FieldElement lambda = get_param(spec, params, "lambda");
        FieldElement mu = get_param(spec, params, "mu");
        Poly s1 = sum_pow(1);
        Poly p = sum_pow(3) + lambda * (s1 * sum_pow(2)) + mu * (s1 * s1 * s1);
        return Cubic(p);
    }
    if (spec.slug == "g333-g332") {
        FieldElement lambda = get_param(spec, params, "lambda");
        check_lambda(spec, lambda);
        return Cubic(hesse(1, 2, 3, lambda) + cube(4) + cube(5));
    }
    if (spec.slug == "fermat")
        return Cubic(sum_pow(3));
    throw InvariantViolation("catalog entry without a builder: " + spec.slug);
}

Cubic instantiate_pinned(const std::string& id_or_slug) {
    return instantiate(id_or_slug, {});
}

int expected_intersection(const std::string& label_a, const std::string& label_b) {
    ParsedLabel a = parse_label(label_a);
    ParsedLabel b = parse_label(label_b);
    if (a.indices.empty() || b.indices.empty())
        throw DomainError("expected intersection is defined for structured labels only");
    for (int i : a.indices)
        for (int j : b.indices)
            if (i == j) return 0;
    return 1;
}

const std::vector<std::string>& pinned_digests() {
    static const std::vector<std::string> digests = [] {
        std::vector<std::string> out;
        for (const FamilySpec& s : catalog())
            out.push_back(cubic_digest(instantiate_pinned(s.slug)));
        return out;
    }();
    return digests;
}

bool is_pinned_digest(const std::string& digest) {
    const auto& d = pinned_digests();
    return std::find(d.begin(), d.end(), digest) != d.end();
}

}  // namespace fano
