#include "fano/linalg.hpp"

namespace fano {

namespace {

// Eliminates below (r, c) using the pivot at (r, c); returns false when the
// column has no nonzero entry at or below row r (after row swaps).
bool pivot_and_eliminate(MatX& m, int r, int c) {
    int pr = -1;
    for (int i = r; i < m.rows(); ++i) {
        if (!m(i, c).is_zero()) {
            pr = i;
            break;
        }
    }
    if (pr < 0) return false;
    if (pr != r) m.row(pr).swap(m.row(r));
    for (int i = r + 1; i < m.rows(); ++i) {
        if (m(i, c).is_zero()) continue;
        FieldElement f = m(i, c) / m(r, c);
        for (int j = c; j < m.cols(); ++j)
            m(i, j) -= f * m(r, j);
    }
    return true;
}

}  // namespace

int rank(MatX m) {
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c)
        if (pivot_and_eliminate(m, r, c)) ++r;
    return r;
}

FieldElement det(MatX m) {
    if (m.rows() != m.cols())
        throw DomainError("determinant of a non-square matrix");
    FieldElement d(1);
    for (int r = 0; r < m.rows(); ++r) {
        int pr = -1;
        for (int i = r; i < m.rows(); ++i) {
            if (!m(i, r).is_zero()) {
                pr = i;
                break;
            }
        }
        if (pr < 0) return FieldElement(0);
        if (pr != r) {
            m.row(pr).swap(m.row(r));
            d = -d;
        }
        d *= m(r, r);
        for (int i = r + 1; i < m.rows(); ++i) {
            if (m(i, r).is_zero()) continue;
            FieldElement f = m(i, r) / m(r, r);
            for (int j = r; j < m.cols(); ++j)
                m(i, j) -= f * m(r, j);
        }
    }
    return d;
}

std::vector<int> rref_inplace(MatX& m) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        if (!pivot_and_eliminate(m, r, c)) continue;
        FieldElement inv = m(r, c).inverse();
        for (int j = c; j < m.cols(); ++j)
            m(r, j) *= inv;
        for (int i = 0; i < r; ++i) {
            if (m(i, c).is_zero()) continue;
            FieldElement f = m(i, c);
            for (int j = c; j < m.cols(); ++j)
                m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::vector<Eigen::Matrix<FieldElement, Eigen::Dynamic, 1>> kernel_basis(const MatX& m) {
    MatX r = m;
    std::vector<int> pivots = rref_inplace(r);
    std::vector<Eigen::Matrix<FieldElement, Eigen::Dynamic, 1>> basis;
    std::size_t next_pivot = 0;
    for (int c = 0; c < m.cols(); ++c) {
        if (next_pivot < pivots.size() && pivots[next_pivot] == c) {
            ++next_pivot;
            continue;
        }
        Eigen::Matrix<FieldElement, Eigen::Dynamic, 1> v(m.cols());
        for (int i = 0; i < m.cols(); ++i) v(i) = FieldElement(0);
        v(c) = FieldElement(1);
        for (std::size_t k = 0; k < pivots.size(); ++k)
            v(pivots[k]) = -r(static_cast<int>(k), c);
        basis.push_back(std::move(v));
    }
    return basis;
}

Mat5 inverse(const Mat5& m) {
    MatX aug(5, 10);
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) {
            aug(i, j) = m(i, j);
            aug(i, 5 + j) = FieldElement(i == j ? 1 : 0);
        }
    std::vector<int> pivots = rref_inplace(aug);
    if (pivots.size() != 5 || pivots[4] != 4)
        throw DomainError("matrix is singular");
    Mat5 inv;
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j)
            inv(i, j) = aug(i, 5 + j);
    return inv;
}

Mat5 mul(const Mat5& x, const Mat5& y) {
    Mat5 r = Mat5::Zero();
    for (int i = 0; i < 5; ++i)
        for (int k = 0; k < 5; ++k) {
            const FieldElement& a = x(i, k);
            if (a.is_zero()) continue;
            for (int j = 0; j < 5; ++j) {
                const FieldElement& b = y(k, j);
                if (b.is_zero()) continue;
                r(i, j) += a * b;
            }
        }
    return r;
}

bool is_identity(const Mat5& m) {
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) {
            if (i == j) {
                if (!(m(i, j) == FieldElement(1))) return false;
            } else if (!m(i, j).is_zero()) {
                return false;
            }
        }
    return true;
}

}  // namespace fano
