#include "fano/selftest.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <ostream>
#include <random>
#include <sstream>
#include <unordered_map>

#include "fano/catalog.hpp"
#include "fano/isogeny.hpp"
#include "fano/report.hpp"

namespace fano::selftest {

namespace {

struct Instance {
    const FamilySpec* spec;
    Cubic cubic;
    std::vector<VertexRecord> vertices;
    std::vector<CurveRecord> curves;
    Eigen::MatrixXi matrix;
    ConfigGraph coxeter;
    ConfigGraph incidence;
    GroupClosure group;

    Instance(const FamilySpec& s, Cubic f)
        : spec(&s),
          cubic(std::move(f)),
          vertices(saturate(cubic, default_candidates())),
          curves(label_curves(cubic, vertices)),
          matrix(intersection_matrix(cubic, vertices)) {
        auto [cox, inc] = build_graphs(matrix);
        coxeter = std::move(cox);
        incidence = std::move(inc);
        std::vector<Mat5> reflections;
        for (const VertexRecord& v : vertices) reflections.push_back(v.reflection);
        group = closure(reflections, 20000);
    }
};

using Instances = std::map<std::string, Instance>;

struct Check {
    std::ostream& os;
    std::ostringstream detail;
    bool ok = true;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            detail << (detail.tellp() > 0 ? "; " : "") << what;
        }
    }
    void note(const std::string& what) {
        detail << (detail.tellp() > 0 ? "; " : "") << what;
    }
    bool finish(const std::string& name) {
        os << (ok ? "[PASS] " : "[FAIL] ") << name;
        if (detail.tellp() > 0) os << " -- " << detail.str();
        os << "\n";
        return ok;
    }
};

const VertexRecord& curve_by_label(const Instance& inst, const std::string& label) {
    for (const CurveRecord& c : inst.curves)
        if (c.label == label) return c.vertex;
    throw DomainError("no curve labeled " + label + " in the " + inst.spec->id + " instance");
}

int intersection_from_labels(const Instance& inst, std::size_t i, std::size_t j) {
    return expected_intersection(inst.curves[i].label, inst.curves[j].label);
}

// ---- criterion bodies -----------------------------------------------------

bool criterion_fermat(std::ostream& os, const Instances& instances) {
    Check c{os};
    const Instance& inst = instances.at("fermat");

    auto start = std::chrono::steady_clock::now();
    VerifyOptions opts;
    opts.scan_prime = inst.spec->validation_prime;
    Report report = run_verify(inst.cubic, opts);
    double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    c.require(report.config.curves.size() == 30, "expected 30 curves");
    c.require(report.config.group.order == 9720, "expected order 9720");
    c.require(report.config.group.reflection_count == 30, "expected census 30");
    c.require(report.config.class_label == "G(3,3,5)", "expected class G(3,3,5)");

    int pairs = 0, mismatches = 0;
    for (std::size_t i = 0; i < inst.curves.size(); ++i)
        for (std::size_t j = i + 1; j < inst.curves.size(); ++j) {
            ++pairs;
            if (inst.matrix(static_cast<int>(i), static_cast<int>(j)) !=
                intersection_from_labels(inst, i, j))
                ++mismatches;
        }
    c.require(pairs == 435, "expected 435 pairs");
    c.require(mismatches == 0, std::to_string(mismatches) + " pairs break the index rule");
    c.require(seconds <= 60.0, "verify took longer than 60 s");
    {
        std::ostringstream ss;
        ss.precision(1);
        ss << std::fixed << "verify " << seconds << " s";
        c.note(ss.str());
    }
    return c.finish("criterion 1: Fermat end-to-end: 30 curves, order 9720, census 30, "
                    "class G(3,3,5), 435-pair index rule");
}

bool criterion_f_lambda(std::ostream& os, const Instances& instances) {
    Check c{os};
    const Instance& inst = instances.at("g333-g332");
    c.require(inst.curves.size() == 12, "expected 12 curves");
    c.require(inst.group.elements.size() == 324, "expected order 324");
    auto row = classify(static_cast<int>(inst.curves.size()),
                        static_cast<std::int64_t>(inst.group.elements.size()));
    c.require(row && row->label == "G(3,3,3)xG(3,3,2)", "expected class G(3,3,3)xG(3,3,2)");

    int cross = 0;
    for (std::size_t i = 0; i < inst.curves.size(); ++i)
        for (std::size_t j = i + 1; j < inst.curves.size(); ++j) {
            ParsedLabel a = parse_label(inst.curves[i].label);
            ParsedLabel b = parse_label(inst.curves[j].label);
            bool a45 = a.indices == std::vector<int>{4, 5};
            bool b45 = b.indices == std::vector<int>{4, 5};
            int got = inst.matrix(static_cast<int>(i), static_cast<int>(j));
            if (a45 != b45) {
                ++cross;
                c.require(got == 1, inst.curves[i].label + "*" + inst.curves[j].label + " != 1");
            } else {
                c.require(got == 0, inst.curves[i].label + "*" + inst.curves[j].label + " != 0");
            }
        }
    c.require(cross == 27, "expected 27 cross pairs, saw " + std::to_string(cross));
    return c.finish("criterion 2: F_lambda(2): 12 curves, order 324, 27 cross pairs = 1, "
                    "within-block pairs = 0");
}

Rational isogeny_value(const Instance& inst, const std::array<std::string, 5>& labels) {
    std::array<IsogenyMatrix, 5> parts = {
        n_matrix(curve_by_label(inst, labels[0]), labels[0]),
        n_matrix(curve_by_label(inst, labels[1]), labels[1]),
        n_matrix(curve_by_label(inst, labels[2]), labels[2]),
        n_matrix(curve_by_label(inst, labels[3]), labels[3]),
        n_matrix(curve_by_label(inst, labels[4]), labels[4]),
    };
    return degree_norm(differential_sum(parts));
}

bool criterion_isogeny(std::ostream& os, const Instances& instances) {
    Check c{os};
    const Instance& inst = instances.at("g333-g332");

    Rational with_w = isogeny_value(
        inst, {"E[1,2]^1", "E[2,3]^1", "E[1,2]^w", "E[4,5]^1", "E[4,5]^w"});
    c.require(with_w == 81, "alpha=w value " + to_string(with_w) + " != 81");

    Rational with_w2 = isogeny_value(
        inst, {"E[1,2]^1", "E[2,3]^1", "E[1,2]^w2", "E[4,5]^1", "E[4,5]^w2"});
    c.require(with_w2 == 81, "alpha=w^2 value " + to_string(with_w2) + " != 81");

    Cubic lambda3 = instantiate("g333-g332", {{"lambda", FieldElement(3)}});
    Instance inst3(catalog_entry("g333-g332"), lambda3);
    Rational rerun = isogeny_value(
        inst3, {"E[1,2]^1", "E[2,3]^1", "E[1,2]^w", "E[4,5]^1", "E[4,5]^w"});
    c.note("lambda=3 rerun: " + to_string(rerun));
    c.require(rerun == 81, "lambda=3 value " + to_string(rerun) + " != 81");

    return c.finish("criterion 3: isogeny degree norm = 81 (alpha=w, alpha=w^2, lambda=3 rerun)");
}

bool criterion_relations(std::ostream& os, const Instances& instances) {
    Check c{os};
    long checked = 0;
    for (const auto& [slug, inst] : instances) {
        for (std::size_t i = 0; i < inst.vertices.size(); ++i)
            for (std::size_t j = i + 1; j < inst.vertices.size(); ++j) {
                int meet = line_in_cubic(inst.cubic, inst.vertices[i].point,
                                         inst.vertices[j].point)
                               ? 1
                               : 0;
                const Mat5& r1 = inst.vertices[i].reflection;
                const Mat5& r2 = inst.vertices[j].reflection;
                int k = pair_order(r1, r2);
                c.require(k == 3 - meet,
                          slug + ": order(R1 R2) = " + std::to_string(k) + " but EE' = " +
                              std::to_string(meet));
                Mat5 prod = mul(r1, r2);
                Mat5 power = Mat5::Identity();
                for (int t = 0; t < 3 - meet; ++t) power = mul(power, prod);
                c.require(is_identity(power), slug + ": (R1 R2)^(3-EE') != Id");
                ++checked;
            }
    }
    c.note(std::to_string(checked) + " pairs");
    return c.finish("criterion 4: (R1 R2)^(3-EE') = Id for every catalog reflection pair");
}

bool criterion_petersen(std::ostream& os, const Instances& instances) {
    Check c{os};
    const Instance& inst = instances.at("s5");
    c.require(inst.curves.size() == 10, "expected 10 curves");
    c.require(inst.group.elements.size() == 120, "expected order 120");
    c.require(graph_is_regular(inst.incidence, 3), "incidence graph is not 3-regular");
    c.require(graph_edge_count(inst.incidence) == 15, "incidence graph does not have 15 edges");
    auto girth = graph_girth(inst.incidence);
    c.require(girth && *girth == 5,
              "incidence girth " + (girth ? std::to_string(*girth) : std::string("none")) +
                  " != 5");
    return c.finish("criterion 5: S5 sample is the Petersen configuration "
                    "(10 curves, order 120, 3-regular, 15 edges, girth 5)");
}

bool criterion_sweep(std::ostream& os, const Instances& instances) {
    Check c{os};
    for (const auto& [slug, inst] : instances) {
        const FamilySpec& spec = *inst.spec;
        c.require(static_cast<int>(inst.curves.size()) == spec.expected_n,
                  slug + ": " + std::to_string(inst.curves.size()) + " curves, expected " +
                      std::to_string(spec.expected_n));
        c.require(static_cast<std::int64_t>(inst.group.elements.size()) == spec.expected_order,
                  slug + ": order " + std::to_string(inst.group.elements.size()) +
                      ", expected " + std::to_string(spec.expected_order));
        auto row = classify(static_cast<int>(inst.curves.size()),
                            static_cast<std::int64_t>(inst.group.elements.size()));
        c.require(row && row->label == spec.id,
                  slug + ": classified " + (row ? row->label : "unclassified") + ", expected " +
                      spec.id);
        // Vertex sets must match the frozen expectation exactly.
        bool same = inst.vertices.size() == spec.expected_vertices.size();
        for (std::size_t i = 0; same && i < inst.vertices.size(); ++i)
            same = inst.vertices[i].point == spec.expected_vertices[i];
        c.require(same, slug + ": vertex set differs from the pinned expectation");
    }
    return c.finish("criterion 6: catalog sweep reproduces all ten (n, order) rows");
}

bool criterion_properties(std::ostream& os, const Instances& instances) {
    Check c{os};
    for (const auto& [slug, inst] : instances) {
        const Cubic& f = inst.cubic;

        // Reflection identities.
        for (const VertexRecord& v : inst.vertices) {
            c.require(linear_substitute(f.form(), v.reflection) == f.form(),
                      slug + ": F∘R != F at " + v.point.to_string());
            c.require(is_identity(mul(v.reflection, v.reflection)),
                      slug + ": R^2 != Id at " + v.point.to_string());
            MatX rmi(5, 5);
            for (int i = 0; i < 5; ++i)
                for (int j = 0; j < 5; ++j)
                    rmi(i, j) = v.reflection(i, j) - FieldElement(i == j ? 1 : 0);
            c.require(rank(rmi) == 1, slug + ": rank(R - Id) != 1");
            c.require(det(MatX(v.reflection)) == FieldElement(-1), slug + ": det R != -1");
        }

        c.require(incidence_triangle_check(inst.incidence),
                  slug + ": incidence graph has a triangle");
        c.require(inst.vertices.size() <= 30, slug + ": more than 30 curves");

        // No projective line carries 4 of the vertices.
        for (std::size_t i = 0; i < inst.vertices.size(); ++i)
            for (std::size_t j = i + 1; j < inst.vertices.size(); ++j) {
                int on_line = 2;
                for (std::size_t k = 0; k < inst.vertices.size(); ++k) {
                    if (k == i || k == j) continue;
                    MatX m(5, 3);
                    for (int row = 0; row < 5; ++row) {
                        m(row, 0) = inst.vertices[i].point.coords()(row);
                        m(row, 1) = inst.vertices[j].point.coords()(row);
                        m(row, 2) = inst.vertices[k].point.coords()(row);
                    }
                    if (rank(m) == 2) ++on_line;
                }
                c.require(on_line <= 3, slug + ": a line carries " + std::to_string(on_line) +
                                            " vertices");
            }

        // Group elements permute the vertex set.
        std::unordered_multimap<std::size_t, std::size_t> vertex_index;
        for (std::size_t i = 0; i < inst.vertices.size(); ++i)
            vertex_index.emplace(hash_value(inst.vertices[i].point), i);
        auto is_vertex = [&](const ProjectivePoint& q) {
            auto range = vertex_index.equal_range(hash_value(q));
            for (auto it = range.first; it != range.second; ++it)
                if (inst.vertices[it->second].point == q) return true;
            return false;
        };
        bool orbit_ok = true;
        for (const Mat5& g : inst.group.elements) {
            for (const VertexRecord& v : inst.vertices)
                if (!is_vertex(ProjectivePoint(Vec5(g * v.point.coords())))) {
                    orbit_ok = false;
                    break;
                }
            if (!orbit_ok) break;
        }
        c.require(orbit_ok, slug + ": a group element moves a vertex off the vertex set");

        // Third-intersection points of disjoint pairs are vertices.
        for (std::size_t i = 0; i < inst.vertices.size(); ++i)
            for (std::size_t j = i + 1; j < inst.vertices.size(); ++j) {
                if (inst.matrix(static_cast<int>(i), static_cast<int>(j)) != 0) continue;
                ProjectivePoint t = third_vertex(f, inst.vertices[i], inst.vertices[j]);
                c.require(std::holds_alternative<VertexRecord>(cone_vertex_test(f, t)),
                          slug + ": third point " + t.to_string() + " fails the vertex test");
            }

        // Saturation is idempotent.
        std::vector<ProjectivePoint> points;
        for (const VertexRecord& v : inst.vertices) points.push_back(v.point);
        std::vector<VertexRecord> again = saturate(f, points);
        bool same = again.size() == inst.vertices.size();
        for (std::size_t i = 0; same && i < again.size(); ++i)
            same = again[i].point == inst.vertices[i].point;
        c.require(same, slug + ": saturation is not idempotent");

        // Frozen plane-model templates, where the construction pins one.
        if (inst.spec->expected_model) {
            for (const CurveRecord& curve : inst.curves) {
                auto expected = inst.spec->expected_model(curve.label);
                if (expected)
                    c.require(curve.plane_model == *expected,
                              slug + ": plane model of " + curve.label +
                                  " differs from the template");
            }
        }

        // Byte-identical reports on a repeated run.
        VerifyOptions opts;
        opts.scan_prime = inst.spec->validation_prime;
        std::string first = render_json(run_verify(f, opts));
        std::string second = render_json(run_verify(f, opts));
        c.require(first == second, slug + ": reports differ between runs");
    }
    return c.finish("criterion 7: property suite on all catalog instances "
                    "(reflection identities, collinearity cap, orbit stability, idempotence, "
                    "plane-model templates, deterministic reports)");
}

bool criterion_micro(std::ostream& os) {
    Check c{os};
    std::mt19937_64 rng(20240917);
    auto rand_rational = [&]() {
        std::uniform_int_distribution<long> num(-20, 20);
        std::uniform_int_distribution<long> den(1, 12);
        return make_rational(mpz_class(num(rng)), mpz_class(den(rng)));
    };
    auto rand_elem = [&]() { return FieldElement(rand_rational(), rand_rational()); };

    int bad_norm = 0, bad_conj = 0, bad_euler = 0, bad_hom = 0;
    const int kRounds = 1200;

    for (int i = 0; i < kRounds; ++i) {
        FieldElement x = rand_elem(), y = rand_elem();
        if (!(norm(x * y) == norm(x) * norm(y))) ++bad_norm;
        if (!(conj(x * y) == conj(x) * conj(y)) || !(conj(x + y) == conj(x) + conj(y)) ||
            !(conj(conj(x)) == x))
            ++bad_conj;
    }
    c.require(bad_norm == 0, std::to_string(bad_norm) + " norm multiplicativity failures");
    c.require(bad_conj == 0, std::to_string(bad_conj) + " conjugation failures");

    std::uniform_int_distribution<int> var(0, 4);
    for (int i = 0; i < kRounds; ++i) {
        Poly form;
        for (int t = 0; t < 6; ++t) {
            Monomial m;
            for (int d = 0; d < 3; ++d) ++m.e[var(rng)];
            form.add_term(m, rand_elem());
        }
        if (form.is_zero()) continue;
        Poly euler;
        for (int v = 1; v <= 5; ++v) euler += Poly::variable(v) * form.partial(v);
        if (!(euler == FieldElement(3) * form)) ++bad_euler;
    }
    c.require(bad_euler == 0, std::to_string(bad_euler) + " Euler identity failures");

    const PrimeField f7(7), f13(13);
    for (int i = 0; i < kRounds; ++i) {
        const PrimeField& fp = (i % 2 == 0) ? f7 : f13;
        FieldElement x = rand_elem(), y = rand_elem();
        if (x.a().get_den() % fp.p() == 0 || x.b().get_den() % fp.p() == 0 ||
            y.a().get_den() % fp.p() == 0 || y.b().get_den() % fp.p() == 0)
            continue;
        std::uint32_t rx = reduce_mod(x, fp), ry = reduce_mod(y, fp);
        if (reduce_mod(x + y, fp) != fp.add(rx, ry)) ++bad_hom;
        if (reduce_mod(x * y, fp) != fp.mul(rx, ry)) ++bad_hom;
    }
    c.require(bad_hom == 0, std::to_string(bad_hom) + " reduction homomorphism failures");

    c.note(std::to_string(kRounds) + " randomized cases per suite");
    return c.finish("criterion 8: randomized micro-suites "
                    "(norm, conjugation, Euler identity, mod-p reduction)");
}

}  // namespace

int run_all(std::ostream& os) {
    Instances instances;
    for (const FamilySpec& spec : catalog()) {
        Cubic f = instantiate_pinned(spec.slug);
        // Catalog invariant: the pinned sample survives the smoothness
        // falsifier at its validation prime.
        if (auto witness = singular_scan(f, spec.validation_prime, 1))
            throw InvariantViolation("catalog sample " + spec.slug +
                                     " has a singular point mod " +
                                     std::to_string(spec.validation_prime) + " at " +
                                     witness->to_string());
        instances.emplace(spec.slug, Instance(spec, std::move(f)));
    }

    int failures = 0;
    failures += criterion_fermat(os, instances) ? 0 : 1;
    failures += criterion_f_lambda(os, instances) ? 0 : 1;
    failures += criterion_isogeny(os, instances) ? 0 : 1;
    failures += criterion_relations(os, instances) ? 0 : 1;
    failures += criterion_petersen(os, instances) ? 0 : 1;
    failures += criterion_sweep(os, instances) ? 0 : 1;
    failures += criterion_properties(os, instances) ? 0 : 1;
    failures += criterion_micro(os) ? 0 : 1;
    return failures;
}

}  // namespace fano::selftest
