#include "fano/discovery.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <unordered_map>

namespace fano {

namespace {

Vec5 basis_vector(int i) {
    Vec5 v = Vec5::Zero();
    v(i) = FieldElement(1);
    return v;
}

const std::vector<std::pair<std::string, FieldElement>>& beta_values() {
    static const std::vector<std::pair<std::string, FieldElement>> values = {
        {"1", FieldElement(1)},
        {"w", FieldElement::omega()},
        {"w2", FieldElement::omega_sq()},
        {"-1", FieldElement(-1)},
        {"-w", -FieldElement::omega()},
        {"-w2", -FieldElement::omega_sq()},
    };
    return values;
}

}  // namespace

std::optional<std::string> structured_label(const ProjectivePoint& p) {
    const Vec5& c = p.coords();
    std::vector<int> support;
    for (int i = 0; i < 5; ++i)
        if (!c(i).is_zero()) support.push_back(i);
    if (support.size() == 1)
        return "E[" + std::to_string(support[0] + 1) + "]";
    if (support.size() != 2 || !(c(support[0]) == FieldElement(1)))
        return std::nullopt;
    FieldElement beta = -c(support[1]);
    for (const auto& [name, value] : beta_values()) {
        if (beta == value)
            return "E[" + std::to_string(support[0] + 1) + "," +
                   std::to_string(support[1] + 1) + "]^" + name;
    }
    return std::nullopt;
}

ParsedLabel parse_label(const std::string& label) {
    auto fail = [&]() -> void { throw ParseError("bad curve label \"" + label + "\""); };
    ParsedLabel out;
    if (label.size() < 3 || label[0] != 'E') fail();
    if (label[1] == '#') {
        try {
            out.discovery_index = std::stoi(label.substr(2));
        } catch (...) {
            fail();
        }
        return out;
    }
    if (label[1] != '[') fail();
    std::size_t close = label.find(']');
    if (close == std::string::npos) fail();
    std::string inside = label.substr(2, close - 2);
    std::istringstream is(inside);
    std::string piece;
    while (std::getline(is, piece, ',')) {
        try {
            out.indices.push_back(std::stoi(piece));
        } catch (...) {
            fail();
        }
    }
    if (out.indices.empty() || out.indices.size() > 2) fail();
    for (int i : out.indices)
        if (i < 1 || i > 5) fail();
    if (out.indices.size() == 1) {
        if (close + 1 != label.size()) fail();
        return out;
    }
    if (close + 1 >= label.size() || label[close + 1] != '^') fail();
    std::string suffix = label.substr(close + 2);
    for (const auto& [name, value] : beta_values()) {
        if (suffix == name) {
            out.beta = value;
            return out;
        }
    }
    fail();
    return out;  // unreachable
}

std::vector<ProjectivePoint> default_candidates() {
    std::vector<ProjectivePoint> out;
    for (int i = 0; i < 5; ++i)
        out.emplace_back(basis_vector(i));
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j)
            for (const auto& [name, c] : beta_values()) {
                Vec5 v = Vec5::Zero();
                v(i) = FieldElement(1);
                v(j) = -c;
                out.emplace_back(v);
            }
    // The shapes above are pairwise projectively distinct by construction,
    // but dedup anyway so seed files can share the code path.
    std::sort(out.begin(), out.end(),
              [](const ProjectivePoint& x, const ProjectivePoint& y) { return compare(x, y) < 0; });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace {

class VertexSet {
public:
    bool contains(const ProjectivePoint& p) const {
        auto range = index_.equal_range(hash_value(p));
        for (auto it = range.first; it != range.second; ++it)
            if (records_[it->second].point == p) return true;
        return false;
    }

    void insert(VertexRecord rec) {
        if (records_.size() >= 30)
            throw InvariantViolation("more than 30 cone vertices discovered; "
                                     "the proven ceiling is 30");
        index_.emplace(hash_value(rec.point), records_.size());
        records_.push_back(std::move(rec));
    }

    const std::vector<VertexRecord>& records() const { return records_; }

private:
    std::vector<VertexRecord> records_;
    std::unordered_multimap<std::size_t, std::size_t> index_;
};

}  // namespace

std::vector<VertexRecord> saturate(const Cubic& f, const std::vector<ProjectivePoint>& seeds) {
    VertexSet found;
    for (const ProjectivePoint& p : seeds) {
        if (found.contains(p)) continue;
        if (!f.evaluate(p.coords()).is_zero()) continue;
        VertexTestResult r = cone_vertex_test(f, p);  // throws on a singular seed
        if (auto* rec = std::get_if<VertexRecord>(&r))
            found.insert(std::move(*rec));
    }

    bool changed = true;
    while (changed) {
        changed = false;

        // Third-intersection-point closure first: it needs no group data and
        // each new vertex refines the orbit pass below.
        std::vector<VertexRecord> snapshot = found.records();
        for (std::size_t i = 0; i < snapshot.size(); ++i) {
            for (std::size_t j = i + 1; j < snapshot.size(); ++j) {
                if (line_in_cubic(f, snapshot[i].point, snapshot[j].point)) continue;
                ProjectivePoint t = third_vertex(f, snapshot[i], snapshot[j]);
                if (found.contains(t)) continue;
                VertexTestResult r = cone_vertex_test(f, t);
                if (auto* rec = std::get_if<VertexRecord>(&r)) {
                    found.insert(std::move(*rec));
                    changed = true;
                } else {
                    throw InvariantViolation(
                        "third intersection point " + t.to_string() +
                        " of two disjoint-curve vertices failed the cone-vertex test");
                }
            }
        }

        // Orbit closure under the discovered reflections.
        snapshot = found.records();
        for (const VertexRecord& v : snapshot) {
            for (const VertexRecord& w : snapshot) {
                ProjectivePoint image(Vec5(v.reflection * w.point.coords()));
                if (found.contains(image)) continue;
                VertexTestResult r = cone_vertex_test(f, image);
                if (auto* rec = std::get_if<VertexRecord>(&r)) {
                    found.insert(std::move(*rec));
                    changed = true;
                }
            }
        }
    }

    std::vector<VertexRecord> out = found.records();
    std::sort(out.begin(), out.end(), [](const VertexRecord& x, const VertexRecord& y) {
        return compare(x.point, y.point) < 0;
    });
    return out;
}

Eigen::MatrixXi intersection_matrix(const Cubic& f, const std::vector<VertexRecord>& vertices) {
    const int n = static_cast<int>(vertices.size());
    Eigen::MatrixXi m(n, n);
    for (int i = 0; i < n; ++i) {
        m(i, i) = -3;
        for (int j = i + 1; j < n; ++j) {
            int v = line_in_cubic(f, vertices[static_cast<std::size_t>(i)].point,
                                  vertices[static_cast<std::size_t>(j)].point)
                        ? 1
                        : 0;
            m(i, j) = v;
            m(j, i) = v;
        }
    }
    return m;
}

std::pair<ConfigGraph, ConfigGraph> build_graphs(const Eigen::MatrixXi& m) {
    ConfigGraph cox{GraphFlavor::coxeter, static_cast<int>(m.rows()), {}};
    ConfigGraph inc{GraphFlavor::incidence, static_cast<int>(m.rows()), {}};
    for (int i = 0; i < m.rows(); ++i)
        for (int j = i + 1; j < m.cols(); ++j)
            (m(i, j) == 0 ? cox : inc).edges.emplace_back(i, j);
    return {cox, inc};
}

namespace {

std::vector<std::vector<int>> adjacency(const ConfigGraph& g) {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(g.n));
    for (auto [i, j] : g.edges) {
        adj[static_cast<std::size_t>(i)].push_back(j);
        adj[static_cast<std::size_t>(j)].push_back(i);
    }
    return adj;
}

}  // namespace

bool incidence_triangle_check(const ConfigGraph& g) {
    std::vector<std::vector<bool>> adj(static_cast<std::size_t>(g.n),
                                       std::vector<bool>(static_cast<std::size_t>(g.n), false));
    for (auto [i, j] : g.edges)
        adj[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            adj[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = true;
    for (int a = 0; a < g.n; ++a)
        for (int b = a + 1; b < g.n; ++b) {
            if (!adj[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]) continue;
            for (int c = b + 1; c < g.n; ++c)
                if (adj[static_cast<std::size_t>(a)][static_cast<std::size_t>(c)] &&
                    adj[static_cast<std::size_t>(b)][static_cast<std::size_t>(c)])
                    return false;
        }
    return true;
}

int graph_edge_count(const ConfigGraph& g) {
    return static_cast<int>(g.edges.size());
}

bool graph_is_regular(const ConfigGraph& g, int degree) {
    std::vector<int> deg(static_cast<std::size_t>(g.n), 0);
    for (auto [i, j] : g.edges) {
        ++deg[static_cast<std::size_t>(i)];
        ++deg[static_cast<std::size_t>(j)];
    }
    return std::all_of(deg.begin(), deg.end(), [&](int d) { return d == degree; });
}

std::optional<int> graph_girth(const ConfigGraph& g) {
    auto adj = adjacency(g);
    int best = -1;
    // BFS from every vertex; a non-tree edge at depths (d1, d2) closes a
    // cycle of length d1 + d2 + 1 through the root.
    for (int s = 0; s < g.n; ++s) {
        std::vector<int> dist(static_cast<std::size_t>(g.n), -1), parent(static_cast<std::size_t>(g.n), -1);
        std::vector<int> queue{s};
        dist[static_cast<std::size_t>(s)] = 0;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int u = queue[head];
            for (int v : adj[static_cast<std::size_t>(u)]) {
                if (dist[static_cast<std::size_t>(v)] < 0) {
                    dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
                    parent[static_cast<std::size_t>(v)] = u;
                    queue.push_back(v);
                } else if (v != parent[static_cast<std::size_t>(u)]) {
                    int len = dist[static_cast<std::size_t>(u)] + dist[static_cast<std::size_t>(v)] + 1;
                    if (best < 0 || len < best) best = len;
                }
            }
        }
    }
    if (best < 0) return std::nullopt;
    return best;
}

std::vector<std::vector<int>> graph_components(const ConfigGraph& g) {
    auto adj = adjacency(g);
    std::vector<int> comp(static_cast<std::size_t>(g.n), -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < g.n; ++s) {
        if (comp[static_cast<std::size_t>(s)] >= 0) continue;
        int id = static_cast<int>(out.size());
        out.emplace_back();
        std::vector<int> stack{s};
        comp[static_cast<std::size_t>(s)] = id;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            out[static_cast<std::size_t>(id)].push_back(u);
            for (int v : adj[static_cast<std::size_t>(u)])
                if (comp[static_cast<std::size_t>(v)] < 0) {
                    comp[static_cast<std::size_t>(v)] = id;
                    stack.push_back(v);
                }
        }
        std::sort(out[static_cast<std::size_t>(id)].begin(), out[static_cast<std::size_t>(id)].end());
    }
    return out;
}

bool graph_components_are_cliques(const ConfigGraph& g) {
    std::vector<std::vector<bool>> adj(static_cast<std::size_t>(g.n),
                                       std::vector<bool>(static_cast<std::size_t>(g.n), false));
    for (auto [i, j] : g.edges)
        adj[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            adj[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = true;
    for (const auto& comp : graph_components(g))
        for (std::size_t a = 0; a < comp.size(); ++a)
            for (std::size_t b = a + 1; b < comp.size(); ++b)
                if (!adj[static_cast<std::size_t>(comp[a])][static_cast<std::size_t>(comp[b])])
                    return false;
    return true;
}

std::vector<CurveRecord> label_curves(const Cubic& f, const std::vector<VertexRecord>& vertices) {
    std::vector<CurveRecord> out;
    int counter = 0;
    for (const VertexRecord& v : vertices) {
        std::string label;
        if (auto s = structured_label(v.point))
            label = *s;
        else
            label = "E#" + std::to_string(++counter);
        out.push_back(CurveRecord{std::move(label), v, plane_model(f, v)});
    }
    return out;
}

}  // namespace fano
