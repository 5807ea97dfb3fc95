#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <map>
#include <string>

#include "fano/cubicio.hpp"
#include "fano/isogeny.hpp"
#include "fano/report.hpp"
#include "fano/selftest.hpp"

namespace {

struct CommonOptions {
    std::string seeds = "default";
    std::size_t max_order = 20000;
    std::uint32_t scan_prime = 7;
    int scan_degree = 1;
    std::string format = "json";
    bool timings = false;
    std::string output;
};

void add_common(CLI::App* cmd, CommonOptions& opts) {
    cmd->add_option("--seeds", opts.seeds, "\"default\" or a seeds file (one point per line)");
    cmd->add_option("--max-order", opts.max_order, "group closure cap")
        ->envname("FANO_MAX_ORDER");
    cmd->add_option("--scan-prime", opts.scan_prime,
                    "prime for the smoothness falsifier; 0 disables");
    cmd->add_option("--scan-degree", opts.scan_degree, "falsifier field degree (1 or 2)")
        ->check(CLI::Range(1, 2));
    cmd->add_option("--format", opts.format, "json or text")
        ->check(CLI::IsMember({"json", "text"}));
    cmd->add_flag("--timings", opts.timings, "include timings (reports stop being byte-stable)");
    cmd->add_option("-o,--output", opts.output, "write the report to a file instead of stdout");
}

fano::VerifyOptions to_verify_options(const CommonOptions& opts) {
    fano::VerifyOptions v;
    if (opts.seeds != "default") v.seeds_path = opts.seeds;
    v.max_order = opts.max_order;
    v.scan_prime = opts.scan_prime;
    v.scan_degree = opts.scan_degree;
    v.timings = opts.timings;
    return v;
}

void emit(const CommonOptions& opts, const std::string& content) {
    if (opts.output.empty())
        std::cout << content;
    else
        fano::write_file(opts.output, content);
}

fano::Report pipeline(const std::string& path, const CommonOptions& opts) {
    fano::Cubic cubic = fano::parse_cubic_file(path);
    return fano::run_verify(cubic, to_verify_options(opts));
}

void run_verify_cmd(const std::string& path, const CommonOptions& opts) {
    emit(opts, fano::render(pipeline(path, opts), opts.format));
}

void run_classify_cmd(const std::string& path, const CommonOptions& opts) {
    fano::Report r = pipeline(path, opts);
    if (opts.format == "json") {
        nlohmann::json j;
        j["class"] = r.config.class_label;
        j["complete"] = r.config.complete;
        j["group_order"] = r.config.group.order;
        j["input_digest"] = r.input_digest;
        j["n_curves"] = r.config.curves.size();
        j["warnings"] = r.warnings;
        emit(opts, j.dump(2) + "\n");
    } else {
        std::ostringstream os;
        os << "class: " << r.config.class_label << "\n"
           << "curves: " << r.config.curves.size() << "\n"
           << "group order: " << r.config.group.order << "\n"
           << "complete: " << (r.config.complete ? "true" : "false") << "\n";
        for (const std::string& w : r.warnings) os << "warning: " << w << "\n";
        emit(opts, os.str());
    }
}

void run_intersections_cmd(const std::string& path, const CommonOptions& opts) {
    fano::Report r = pipeline(path, opts);
    if (opts.format == "json") {
        nlohmann::json j;
        nlohmann::json labels = nlohmann::json::array();
        for (const auto& c : r.config.curves) labels.push_back(c.label);
        j["curves"] = std::move(labels);
        nlohmann::json matrix = nlohmann::json::array();
        for (int i = 0; i < r.config.matrix.rows(); ++i) {
            nlohmann::json row = nlohmann::json::array();
            for (int k = 0; k < r.config.matrix.cols(); ++k) row.push_back(r.config.matrix(i, k));
            matrix.push_back(std::move(row));
        }
        j["intersection_matrix"] = std::move(matrix);
        emit(opts, j.dump(2) + "\n");
    } else {
        std::ostringstream os;
        for (std::size_t i = 0; i < r.config.curves.size(); ++i) {
            os << r.config.curves[i].label << ":";
            for (int k = 0; k < r.config.matrix.cols(); ++k)
                os << " " << r.config.matrix(static_cast<int>(i), k);
            os << "\n";
        }
        emit(opts, os.str());
    }
}

void run_planemodels_cmd(const std::string& path, const CommonOptions& opts) {
    fano::Report r = pipeline(path, opts);
    const std::array<std::string, 5> vars = {"s", "t", "r", "-", "-"};
    if (opts.format == "json") {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& c : r.config.curves) {
            nlohmann::json e;
            e["label"] = c.label;
            e["vertex"] = c.vertex.point.to_string();
            e["plane_model"] = c.plane_model.to_string(vars);
            j.push_back(std::move(e));
        }
        emit(opts, j.dump(2) + "\n");
    } else {
        std::ostringstream os;
        for (const auto& c : r.config.curves)
            os << c.label << "  " << c.vertex.point.to_string() << "\n    "
               << c.plane_model.to_string(vars) << "\n";
        emit(opts, os.str());
    }
}

void run_isogeny_cmd(const std::string& path, const std::vector<std::string>& labels,
                     const CommonOptions& opts) {
    fano::Cubic cubic = fano::parse_cubic_file(path);
    std::vector<fano::ProjectivePoint> seeds =
        opts.seeds == "default" ? fano::default_candidates() : fano::parse_seeds_file(opts.seeds);
    std::vector<fano::VertexRecord> vertices = fano::saturate(cubic, seeds);
    std::vector<fano::CurveRecord> curves = fano::label_curves(cubic, vertices);

    std::array<fano::IsogenyMatrix, 5> parts = [&] {
        std::array<fano::IsogenyMatrix, 5> out = {
            fano::IsogenyMatrix{}, fano::IsogenyMatrix{}, fano::IsogenyMatrix{},
            fano::IsogenyMatrix{}, fano::IsogenyMatrix{}};
        for (std::size_t i = 0; i < 5; ++i) {
            const fano::CurveRecord* found = nullptr;
            for (const auto& c : curves)
                if (c.label == labels[i]) found = &c;
            if (!found)
                throw fano::DomainError("no curve labeled " + labels[i] +
                                        " on this cubic (run `planemodels` to list labels)");
            out[i] = fano::n_matrix(found->vertex, found->label);
        }
        return out;
    }();
    fano::Rational value = fano::degree_norm(fano::differential_sum(parts));

    if (opts.format == "json") {
        nlohmann::json j;
        j["curves"] = labels;
        j["degree_norm"] = fano::to_string(value);
        emit(opts, j.dump(2) + "\n");
    } else {
        emit(opts, "degree_norm = " + fano::to_string(value) + "\n");
    }
}

void run_catalog_list(const CommonOptions& opts) {
    if (opts.format == "json") {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& s : fano::catalog()) {
            nlohmann::json e;
            e["id"] = s.id;
            e["slug"] = s.slug;
            e["formula"] = s.formula;
            e["n_curves"] = s.expected_n;
            e["group_order"] = s.expected_order;
            nlohmann::json params = nlohmann::json::object();
            for (const auto& name : s.parameter_names)
                params[name] = fano::to_string(s.pinned_parameters.at(name));
            e["pinned_parameters"] = std::move(params);
            j.push_back(std::move(e));
        }
        emit(opts, j.dump(2) + "\n");
    } else {
        std::ostringstream os;
        for (const auto& s : fano::catalog()) {
            os << s.slug << "  (" << s.id << ")  n=" << s.expected_n
               << " order=" << s.expected_order << "\n    " << s.formula << "\n";
            for (const auto& name : s.parameter_names)
                os << "    " << name << " = " << fano::to_string(s.pinned_parameters.at(name))
                   << "\n";
        }
        emit(opts, os.str());
    }
}

void run_catalog_instantiate(const std::string& id, const std::vector<std::string>& params,
                             const CommonOptions& opts) {
    std::map<std::string, fano::FieldElement> values;
    for (const std::string& p : params) {
        auto eq = p.find('=');
        if (eq == std::string::npos)
            throw fano::ParseError("parameter must look like name=value: " + p);
        values[p.substr(0, eq)] = fano::parse_coeff(p.substr(eq + 1));
    }
    fano::Cubic cubic = fano::instantiate(id, values);
    emit(opts, fano::serialize_cubic(cubic));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact elliptic-curve configurations of smooth cubic threefolds over Q(w)"};
    app.require_subcommand(1);

    CommonOptions opts;
    std::string path;
    std::vector<std::string> labels;
    std::string catalog_id;
    std::vector<std::string> catalog_params;

    CLI::App* verify = app.add_subcommand("verify", "full pipeline report for a cubic file");
    verify->add_option("cubic", path, "cubic file")->required();
    add_common(verify, opts);

    CLI::App* classify = app.add_subcommand("classify", "configuration class only");
    classify->add_option("cubic", path, "cubic file")->required();
    add_common(classify, opts);

    CLI::App* intersections =
        app.add_subcommand("intersections", "curve labels and intersection matrix");
    intersections->add_option("cubic", path, "cubic file")->required();
    add_common(intersections, opts);

    CLI::App* planemodels = app.add_subcommand("planemodels", "plane model of every curve");
    planemodels->add_option("cubic", path, "cubic file")->required();
    add_common(planemodels, opts);

    CLI::App* isogeny = app.add_subcommand(
        "isogeny", "norm of det of the summed differentials of five labeled curves");
    isogeny->add_option("cubic", path, "cubic file")->required();
    isogeny->add_option("labels", labels, "five curve labels, e.g. E[1,2]^w")
        ->expected(5)
        ->required();
    add_common(isogeny, opts);

    CLI::App* catalog = app.add_subcommand("catalog", "built-in family catalog");
    catalog->require_subcommand(1);
    CLI::App* cat_list = catalog->add_subcommand("list", "list the families");
    add_common(cat_list, opts);
    CLI::App* cat_inst =
        catalog->add_subcommand("instantiate", "write a family sample as a cubic file");
    cat_inst->add_option("id", catalog_id, "row label or slug, e.g. fermat")->required();
    cat_inst->add_option("--param", catalog_params, "override, e.g. --param lambda=2");
    add_common(cat_inst, opts);

    CLI::App* selftest = app.add_subcommand("selftest", "run the acceptance suite");
    (void)selftest;

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify->parsed()) run_verify_cmd(path, opts);
        if (classify->parsed()) run_classify_cmd(path, opts);
        if (intersections->parsed()) run_intersections_cmd(path, opts);
        if (planemodels->parsed()) run_planemodels_cmd(path, opts);
        if (isogeny->parsed()) run_isogeny_cmd(path, labels, opts);
        if (cat_list->parsed()) run_catalog_list(opts);
        if (cat_inst->parsed()) run_catalog_instantiate(catalog_id, catalog_params, opts);
        if (selftest->parsed()) {
            int failures = fano::selftest::run_all(std::cout);
            if (failures > 0) {
                std::cout << failures << " criterion(s) failed\n";
                return 1;
            }
            std::cout << "all criteria passed\n";
        }
    } catch (const fano::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 3;
    } catch (const fano::CapExceeded& e) {
        std::cerr << "cap exceeded: " << e.what() << "\n";
        return 4;
    } catch (const fano::InvariantViolation& e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return 2;
    } catch (const fano::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
