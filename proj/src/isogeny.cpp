#include "fano/isogeny.hpp"

namespace fano {

IsogenyMatrix n_matrix(const VertexRecord& v, const std::string& label) {
    Mat5 n = v.reflection - Mat5::Identity();

    // Id + sigma* + N = 0 by construction; keep it as a live check.
    Mat5 sum = Mat5::Identity() + v.sigma_star + n;
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j)
            if (!sum(i, j).is_zero())
                throw InvariantViolation("Id + sigma* + N != 0 for curve " + label);

    return IsogenyMatrix{n, label};
}

Mat5 differential_sum(const std::array<IsogenyMatrix, 5>& curves) {
    Mat5 out = Mat5::Zero();
    for (const IsogenyMatrix& c : curves) out += c.matrix;
    return out;
}

Rational degree_norm(const Mat5& m) {
    return norm(det(MatX(m)));
}

}  // namespace fano
