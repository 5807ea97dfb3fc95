#pragma once

#include <array>
#include <string>

#include "fano/geometry.hpp"

namespace fano {

/// Rank-1 differential attached to a curve's vertex: N = R - Id, with image
/// spanned by the vertex direction (every column is a multiple of p).
struct IsogenyMatrix {
    Mat5 matrix;
    std::string source_curve;
};

/// N = -(Id + sigma*) = R - Id; in closed form v -> -2 phi(v) p.
IsogenyMatrix n_matrix(const VertexRecord& v, const std::string& label);

/// Entrywise sum of the five rank-1 differentials: the differential of the
/// composed projection onto the product of the five curves.
Mat5 differential_sum(const std::array<IsogenyMatrix, 5>& curves);

/// norm(det M) = det(M) * conj(det(M)): a non-negative rational, the squared
/// absolute value of the determinant.
Rational degree_norm(const Mat5& m);

}  // namespace fano
