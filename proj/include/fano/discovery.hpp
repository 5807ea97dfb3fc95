#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fano/geometry.hpp"
#include "fano/groups.hpp"

namespace fano {

/// One discovered elliptic-curve datum: the cone vertex, its reflection, and
/// the plane model of the curve.
struct CurveRecord {
    std::string label;       // "E[i,j]^b" for e_i - b*e_j, "E[i]" for e_i, else "E#k"
    VertexRecord vertex;
    Poly plane_model;        // ternary cubic in (s, t, r)
};

/// Label for a vertex point: E[i,j]^b when the point is e_i - b*e_j with
/// b in {1, w, w2, -1, -w, -w2}, E[i] for a coordinate point, nullopt
/// otherwise (caller falls back to E#k).
std::optional<std::string> structured_label(const ProjectivePoint& p);

struct ParsedLabel {
    std::vector<int> indices;      // {i} or {i, j}, 1-based
    FieldElement beta;             // meaningful for two-index labels
    int discovery_index = -1;      // for "E#k"
};
ParsedLabel parse_label(const std::string& label);  // throws ParseError

enum class GraphFlavor { coxeter, incidence };

/// Simple graph on the curve set.  coxeter: edge iff EE' = 0 (reflections
/// braid); incidence: edge iff EE' = 1 (curves meet, reflections commute).
/// The two flavors are complementary graphs on the same vertex set.
struct ConfigGraph {
    GraphFlavor flavor;
    int n = 0;
    std::vector<std::pair<int, int>> edges;  // i < j, sorted
};

struct Configuration {
    std::vector<CurveRecord> curves;   // sorted by canonical vertex order
    Eigen::MatrixXi matrix;            // diagonal -3, off-diagonal 0/1
    ConfigGraph coxeter;
    ConfigGraph incidence;
    GroupSummary group;
    std::string class_label;           // table row label or "unclassified"
    bool complete = false;             // true only for catalog-pinned inputs
};

/// The stock seed set: the 5 coordinate points and the 60 points
/// e_i - c*e_j, i < j, c in {1, w, w^2, -1, -w, -w^2}; 65 points total.
std::vector<ProjectivePoint> default_candidates();

/// Runs the cone-vertex test over the seeds that lie on F, then closes the
/// vertex set under the third-intersection-point construction and under the
/// action of the discovered reflections, to a fixed point.  More than 30
/// vertices is an InvariantViolation (the proven ceiling); a singular seed
/// on F raises DomainError.
std::vector<VertexRecord> saturate(const Cubic& f, const std::vector<ProjectivePoint>& seeds);

/// Entry (i, j), i != j: 1 when the line through the vertices lies in the
/// cubic, else 0.  Diagonal: -3.
Eigen::MatrixXi intersection_matrix(const Cubic& f, const std::vector<VertexRecord>& vertices);

std::pair<ConfigGraph, ConfigGraph> build_graphs(const Eigen::MatrixXi& m);

/// True iff the incidence-flavor graph has no 3-clique.
bool incidence_triangle_check(const ConfigGraph& g);

// Small exact graph utilities used by the verification suites.
int graph_edge_count(const ConfigGraph& g);
bool graph_is_regular(const ConfigGraph& g, int degree);
/// Length of a shortest cycle; nullopt for a forest.
std::optional<int> graph_girth(const ConfigGraph& g);
std::vector<std::vector<int>> graph_components(const ConfigGraph& g);
bool graph_components_are_cliques(const ConfigGraph& g);

/// Assigns labels (structured where the vertex has candidate shape, E#k
/// otherwise) and attaches plane models; input must be canonically sorted.
std::vector<CurveRecord> label_curves(const Cubic& f, const std::vector<VertexRecord>& vertices);

}  // namespace fano
