#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <vector>

#include "fano/field.hpp"

namespace Eigen {

template <>
struct NumTraits<fano::FieldElement> : GenericNumTraits<fano::FieldElement> {
    typedef fano::FieldElement Real;
    typedef fano::FieldElement NonInteger;
    typedef fano::FieldElement Nested;
    enum {
        IsComplex = 0,  // conjugation is handled explicitly, never by Eigen
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 2,
        AddCost = 10,
        MulCost = 20
    };
    static inline Real epsilon() { return Real(0); }
    static inline Real dummy_precision() { return Real(0); }
    static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace fano {

using Vec5 = Eigen::Matrix<FieldElement, 5, 1>;
using Mat5 = Eigen::Matrix<FieldElement, 5, 5>;
using MatX = Eigen::Matrix<FieldElement, Eigen::Dynamic, Eigen::Dynamic>;

template <class A, class B>
bool matrix_equal(const Eigen::MatrixBase<A>& x, const Eigen::MatrixBase<B>& y) {
    if (x.rows() != y.rows() || x.cols() != y.cols()) return false;
    for (Eigen::Index i = 0; i < x.rows(); ++i)
        for (Eigen::Index j = 0; j < x.cols(); ++j)
            if (x(i, j) != y(i, j)) return false;
    return true;
}

template <class A>
std::size_t hash_matrix(const Eigen::MatrixBase<A>& m) {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            h = (h ^ hash_value(m(i, j))) * 1099511628211ULL;
    return h;
}

/// Row echelon rank over the exact field (any nonzero pivot works).
int rank(MatX m);

/// Determinant by exact Gaussian elimination.
FieldElement det(MatX m);

/// Transforms m in place to reduced row echelon form; returns pivot columns.
std::vector<int> rref_inplace(MatX& m);

/// Canonical kernel basis of a k x n matrix, read off the reduced echelon
/// form: one vector per free column j, with +1 in slot j.
std::vector<Eigen::Matrix<FieldElement, Eigen::Dynamic, 1>> kernel_basis(const MatX& m);

/// Exact inverse; throws DomainError on a singular matrix.
Mat5 inverse(const Mat5& m);

/// 5x5 product that skips zero operands; reflections and their products are
/// mostly monomial matrices, so this is the closure hot path.
Mat5 mul(const Mat5& x, const Mat5& y);

bool is_identity(const Mat5& m);

}  // namespace fano
