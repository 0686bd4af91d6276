#pragma once

// Exact dense linear algebra over a field scalar (Rational in practice) and
// integer lattice reduction. Matrices are plain Eigen dense types.

#include <cstddef>
#include <optional>
#include <vector>

#include <Eigen/Core>

#include "kuznum/exact.hpp"

namespace kuznum {

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using RatMatrix = Matrix<Rational>;
using RatVector = Vector<Rational>;
using IntMatrix = Matrix<Integer>;
using IntVector = Vector<Integer>;

/// Reduced row echelon form; pivot columns are appended to `pivots`.
template <typename Scalar>
Matrix<Scalar> rref(Matrix<Scalar> m, std::vector<Eigen::Index>* pivots = nullptr) {
    Eigen::Index row = 0;
    for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
        Eigen::Index pivot = row;
        while (pivot < m.rows() && m(pivot, col) == Scalar(0)) ++pivot;
        if (pivot == m.rows()) continue;
        m.row(pivot).swap(m.row(row));
        const Scalar lead = m(row, col);
        m.row(row) /= lead;
        for (Eigen::Index r = 0; r < m.rows(); ++r) {
            if (r == row || m(r, col) == Scalar(0)) continue;
            const Scalar factor = m(r, col);
            m.row(r) -= factor * m.row(row);
        }
        if (pivots != nullptr) pivots->push_back(col);
        ++row;
    }
    return m;
}

template <typename Scalar>
Eigen::Index rank(const Matrix<Scalar>& m) {
    std::vector<Eigen::Index> pivots;
    rref(m, &pivots);
    return static_cast<Eigen::Index>(pivots.size());
}

/// Null space basis read off the reduced row echelon form: one vector per
/// free column, with a 1 in that column.
template <typename Scalar>
std::vector<Vector<Scalar>> rref_kernel(const Matrix<Scalar>& m) {
    std::vector<Eigen::Index> pivots;
    const Matrix<Scalar> r = rref(m, &pivots);
    std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
    for (auto p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;
    std::vector<Vector<Scalar>> basis;
    for (Eigen::Index free = 0; free < m.cols(); ++free) {
        if (is_pivot[static_cast<std::size_t>(free)]) continue;
        Vector<Scalar> v = Vector<Scalar>::Zero(m.cols());
        v(free) = Scalar(1);
        for (std::size_t i = 0; i < pivots.size(); ++i) v(pivots[i]) = -r(static_cast<Eigen::Index>(i), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Exact inverse by Gauss-Jordan; throws DomainError on a singular matrix.
template <typename Scalar>
Matrix<Scalar> inverse(const Matrix<Scalar>& m) {
    if (m.rows() != m.cols()) throw DomainError("inverse of non-square matrix");
    const Eigen::Index n = m.rows();
    Matrix<Scalar> aug(n, 2 * n);
    aug << m, Matrix<Scalar>::Identity(n, n);
    std::vector<Eigen::Index> pivots;
    const Matrix<Scalar> r = rref(aug, &pivots);
    if (static_cast<Eigen::Index>(pivots.size()) < n || pivots.back() >= n) throw DomainError("singular matrix");
    return r.rightCols(n);
}

/// Kernel of a rational matrix: reduced-echelon free-column basis, each vector
/// scaled to a primitive integer vector with positive leading entry. An empty
/// (0-row) matrix yields the standard basis.
std::vector<RatVector> kernel_basis(const RatMatrix& m);

/// Primitive lattice coordinates of v in the lattice (+) Z e_i / denoms_i:
/// the integer vector x with x_i / denoms_i proportional to v, gcd(x) = 1 and
/// first nonzero entry positive.
IntVector lattice_primitive(const RatVector& v, const std::vector<Integer>& denoms);

/// Saturated integer kernel {x in Z^n : m x = 0} of an integer matrix,
/// returned as the rows of a Hermite normal form.
IntMatrix integer_kernel(const IntMatrix& m);

/// Row-style Hermite normal form of the row lattice (zero rows dropped):
/// pivots positive, entries above each pivot reduced into [0, pivot).
IntMatrix hermite_normal_form(IntMatrix m);

/// Integer solution x of x^T basis = target (basis rows independent), or
/// nullopt when target is not in the row lattice.
std::optional<IntVector> lattice_coordinates(const IntMatrix& basis, const IntVector& target);

RatMatrix to_rational(const IntMatrix& m);

}  // namespace kuznum
