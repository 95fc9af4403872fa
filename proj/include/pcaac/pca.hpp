// SPDX-FileCopyrightText: 2026 pcaac contributors
// SPDX-License-Identifier: Apache-2.0
//
// Dimension reduction of a 3D region to its principal plane and back:
// zero-centering, population covariance, symmetric 3x3 eigen decomposition
// (cyclic Jacobi), projection onto the two dominant eigenvectors, and
// restoration of filtered plane points into 3D.

#ifndef PCAAC_PCA_HPP
#define PCAAC_PCA_HPP

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "pcaac/cloud.hpp"

namespace pcaac {

/// One region's coordinates as three zero-centered rows plus the means
/// that were subtracted.
struct CenteredData {
    std::vector<double> xs, ys, zs;  // centered rows, one entry per point
    Point3 means;
    std::size_t count = 0;
};

using Mat3 = std::array<std::array<double, 3>, 3>;

/// Orthonormal eigenbasis of a region covariance. Columns of `basis` are
/// eigenvectors ordered by non-increasing eigenvalue; the 2x3 projection
/// onto the principal plane is the first two rows of basis^T.
struct PcaBasis {
    std::array<double, 3> eigenvalues{};  // sorted non-increasing, >= 0
    Mat3 basis{};                         // basis[r][c] = component r of eigenvector c

    /// Row i (0 or 1) of the projection matrix, i.e. eigenvector i.
    std::array<double, 3> projection_row(int i) const {
        return {basis[0][i], basis[1][i], basis[2][i]};
    }
};

/// 2D coordinates in the principal plane: row f (first component) and
/// row s (second component).
struct PlaneData {
    std::vector<double> f, s;

    std::size_t size() const { return f.size(); }
};

/// Subtracts per-axis means. Errors on empty input.
CenteredData center(std::span<const Point3> points);

/// C = (1/m) * X * X^T over the centered rows (population divisor).
Mat3 covariance(const CenteredData& data);

/// Eigen decomposition of a symmetric 3x3 matrix by cyclic Jacobi
/// rotations. Eigenvalues are sorted non-increasing with tiny negatives
/// clamped to zero; each eigenvector's sign is fixed so its
/// largest-magnitude entry is positive (ties broken by lowest index).
/// Errors if the input is asymmetric beyond 1e-9 per entry.
PcaBasis eigen_sym3(const Mat3& c);

/// Y = P * X for the centered columns. Errors on size mismatch.
PlaneData project(const PcaBasis& basis, const CenteredData& data);

/// Lifts plane points back to 3D: p = f*e1 + s*e2 + means.
std::vector<Point3> restore(const PcaBasis& basis, const PlaneData& filtered,
                            const Point3& means);

/// (l1+l2)/(l1+l2+l3); 1.0 when all eigenvalues are zero.
double variance_ratio(const PcaBasis& basis);

}  // namespace pcaac

#endif
