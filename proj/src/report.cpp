#include "fano/report.hpp"

#include <json.hpp>

#include <chrono>
#include <sstream>

#include "fano/cubicio.hpp"

namespace fano {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

const std::array<std::string, 5> kModelVars = {"s", "t", "r", "-", "-"};

}  // namespace

Report run_verify(const Cubic& f, const VerifyOptions& options) {
    Report report;
    report.input_digest = cubic_digest(f);

    auto t0 = Clock::now();
    if (options.scan_prime != 0) {
        auto witness = singular_scan(f, options.scan_prime, options.scan_degree);
        if (witness)
            report.warnings.push_back(
                "singular point of the reduction mod " + std::to_string(options.scan_prime) +
                " at " + witness->to_string() +
                "; this does not disprove smoothness over Q(w) (the reduction may be bad at " +
                std::to_string(options.scan_prime) + "), but the input deserves scrutiny");
    }
    report.timings_ms.emplace_back("singular_scan", ms_since(t0));

    t0 = Clock::now();
    std::vector<ProjectivePoint> seeds = options.seeds_path
                                             ? parse_seeds_file(*options.seeds_path)
                                             : default_candidates();
    std::vector<VertexRecord> vertices = saturate(f, seeds);
    report.timings_ms.emplace_back("saturate", ms_since(t0));

    Configuration& config = report.config;
    config.curves = label_curves(f, vertices);

    t0 = Clock::now();
    config.matrix = intersection_matrix(f, vertices);
    auto [cox, inc] = build_graphs(config.matrix);
    config.coxeter = std::move(cox);
    config.incidence = std::move(inc);
    if (!incidence_triangle_check(config.incidence))
        throw InvariantViolation("incidence graph contains a triangle");
    report.timings_ms.emplace_back("intersections", ms_since(t0));

    t0 = Clock::now();
    std::vector<Mat5> reflections;
    for (const VertexRecord& v : vertices) reflections.push_back(v.reflection);
    GroupClosure group = closure(reflections, options.max_order);
    bool character_trivial = character_check(f, group.elements);
    config.group = make_summary(group, character_trivial);
    report.timings_ms.emplace_back("closure", ms_since(t0));

    int n = static_cast<int>(vertices.size());
    auto row = classify(n, config.group.order);
    config.class_label = row ? row->label : "unclassified";
    if (!row)
        report.warnings.push_back(
            "no classification row has " + std::to_string(n) + " curves with group order " +
            std::to_string(config.group.order));

    // A custom seed file constrains the search, so pinned status alone is not
    // enough to promise completeness.
    config.complete = !options.seeds_path && is_pinned_digest(report.input_digest);
    if (!config.complete)
        report.warnings.push_back(
            "vertex discovery is a heuristic for inputs outside the catalog: the curve "
            "set is a lower bound (complete=false)");

    if (config.complete && config.group.reflection_count != n)
        throw InvariantViolation(
            "catalog instance: reflection census " +
            std::to_string(config.group.reflection_count) + " != curve count " +
            std::to_string(n));

    if (!options.timings) report.timings_ms.clear();
    return report;
}

namespace {

nlohmann::json to_json(const Report& r) {
    nlohmann::json j;
    j["input_digest"] = r.input_digest;
    j["class"] = r.config.class_label;
    j["complete"] = r.config.complete;
    j["n_curves"] = r.config.curves.size();

    nlohmann::json curves = nlohmann::json::array();
    for (const CurveRecord& c : r.config.curves) {
        nlohmann::json e;
        e["label"] = c.label;
        e["vertex"] = c.vertex.point.to_string();
        e["tangent"] = "(" + [&] {
            std::string s;
            for (int i = 0; i < 5; ++i) {
                if (i) s += ", ";
                s += to_string(c.vertex.tangent.coeffs()(i));
            }
            return s;
        }() + ")";
        e["plane_model"] = c.plane_model.to_string(kModelVars);
        curves.push_back(std::move(e));
    }
    j["curves"] = std::move(curves);

    nlohmann::json matrix = nlohmann::json::array();
    for (int i = 0; i < r.config.matrix.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int k = 0; k < r.config.matrix.cols(); ++k) row.push_back(r.config.matrix(i, k));
        matrix.push_back(std::move(row));
    }
    j["intersection_matrix"] = std::move(matrix);

    auto edge_list = [&](const ConfigGraph& g) {
        nlohmann::json edges = nlohmann::json::array();
        for (auto [a, b] : g.edges)
            edges.push_back({r.config.curves[static_cast<std::size_t>(a)].label,
                             r.config.curves[static_cast<std::size_t>(b)].label});
        return edges;
    };
    j["graphs"]["coxeter"]["edges"] = edge_list(r.config.coxeter);
    j["graphs"]["incidence"]["edges"] = edge_list(r.config.incidence);

    j["group"]["order"] = r.config.group.order;
    j["group"]["reflection_count"] = r.config.group.reflection_count;
    j["group"]["generator_count"] = r.config.group.generator_count;
    j["group"]["character_trivial"] = r.config.group.character_trivial;

    j["warnings"] = r.warnings;
    if (!r.timings_ms.empty()) {
        nlohmann::json t = nlohmann::json::array();
        for (const auto& [name, ms] : r.timings_ms) t.push_back({name, ms});
        j["timings_ms"] = std::move(t);
    }
    return j;
}

}  // namespace

std::string render_json(const Report& r) {
    return to_json(r).dump(2) + "\n";
}

std::string render_text(const Report& r) {
    std::ostringstream os;
    os << "input_digest: " << r.input_digest << "\n";
    os << "class: " << r.config.class_label << "\n";
    os << "complete: " << (r.config.complete ? "true" : "false") << "\n";
    os << "curves: " << r.config.curves.size() << "\n";
    for (const CurveRecord& c : r.config.curves)
        os << "  " << c.label << "  vertex " << c.vertex.point.to_string() << "\n"
           << "      model " << c.plane_model.to_string(kModelVars) << "\n";
    os << "intersection matrix:\n";
    for (int i = 0; i < r.config.matrix.rows(); ++i) {
        os << "  ";
        for (int k = 0; k < r.config.matrix.cols(); ++k) {
            if (k) os << " ";
            os << r.config.matrix(i, k);
        }
        os << "\n";
    }
    auto print_graph = [&](const char* name, const ConfigGraph& g) {
        os << name << " graph: " << g.edges.size() << " edges\n";
        for (auto [a, b] : g.edges)
            os << "  " << r.config.curves[static_cast<std::size_t>(a)].label << " -- "
               << r.config.curves[static_cast<std::size_t>(b)].label << "\n";
    };
    print_graph("coxeter", r.config.coxeter);
    print_graph("incidence", r.config.incidence);
    os << "group: order " << r.config.group.order << ", reflections "
       << r.config.group.reflection_count << ", generators "
       << r.config.group.generator_count << ", character "
       << (r.config.group.character_trivial ? "trivial" : "nontrivial") << "\n";
    for (const std::string& w : r.warnings) os << "warning: " << w << "\n";
    for (const auto& [name, ms] : r.timings_ms)
        os << "timing: " << name << " " << ms << " ms\n";
    return os.str();
}

std::string render(const Report& r, const std::string& format) {
    if (format == "json") return render_json(r);
    if (format == "text") return render_text(r);
    throw DomainError("unknown report format: " + format);
}

}  // namespace fano
