// Copyright 2026 The Purify Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace purify {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Largest dense operator dimension the library will build (13 qubits).
inline constexpr Eigen::Index kMaxDimension = Eigen::Index{1} << 13;

/// Throws DimensionCapError if `dim` exceeds kMaxDimension.
void check_dimension_cap(Eigen::Index dim);

/// Largest absolute entry. Zero for empty matrices.
double max_abs(const ComplexMatrix &a);

/// max |A - A^dagger|.
double hermiticity_residual(const ComplexMatrix &a);

bool is_hermitian(const ComplexMatrix &a, double tol = 1e-10);
bool is_unitary(const ComplexMatrix &a, double tol = 1e-10);

/// Tensor product with `a` as the most significant factor.
ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b);

/// Left-to-right tensor product of all factors; the first is most significant.
ComplexMatrix kron_all(std::span<const ComplexMatrix> factors);

/// `a` tensored with itself `copies` times.
ComplexMatrix kron_power(const ComplexMatrix &a, int copies);

inline ComplexMatrix dagger(const ComplexMatrix &a) { return a.adjoint(); }

/// Tr(A B) without forming the product.
Complex trace_product(const ComplexMatrix &a, const ComplexMatrix &b);

struct HermitianEigen {
    RealVector values;     ///< descending
    ComplexMatrix vectors; ///< column k pairs with values[k]
};

/// Eigendecomposition of a Hermitian matrix.
///
/// Eigenvalues come back in descending order. Each eigenvector is
/// phase-fixed so that its first component with magnitude above 1e-12 is
/// real and positive. Eigenvalues within 1e-12 of each other (relative to
/// the spectral scale) are treated as tied and ordered by the lexicographic
/// order of their phase-fixed entries, compared as (real, imag) pairs in
/// descending order, so golden outputs are reproducible.
///
/// Throws PreconditionError if `a` is not Hermitian within
/// 1e-10 * max(1, max|a|).
HermitianEigen hermitian_eig(const ComplexMatrix &a);

/// Traces out every subsystem not listed in `keep`.
///
/// `dims` lists the subsystem dimensions, most significant first; `keep`
/// holds subsystem indices in any order (output keeps the original order).
/// Throws DimensionError if the dims do not multiply to the matrix size or a
/// kept index is out of range.
ComplexMatrix partial_trace(const ComplexMatrix &a,
                            std::span<const std::size_t> dims,
                            std::span<const std::size_t> keep);

/// A Hermitian positive-semidefinite operator.
///
/// Normalized operators (states) have unit trace. Unnormalized ones are used
/// for dual states, which are positive but not necessarily trace one.
/// Construction validates: Hermitian within 1e-10, minimum eigenvalue at least
/// -1e-10 * max(1, |Tr|), and unit trace within 1e-10 when normalized.
class DensityOperator {
  public:
    explicit DensityOperator(ComplexMatrix matrix, bool normalized = true);

    /// |psi><psi|. Throws PreconditionError if psi is not unit norm.
    static DensityOperator pure(const ComplexVector &psi);

    /// |index><index| in a space of dimension `dim`.
    static DensityOperator basis(Eigen::Index dim, Eigen::Index index);

    /// Maximally mixed state I/dim.
    static DensityOperator maximally_mixed(Eigen::Index dim);

    const ComplexMatrix &matrix() const noexcept { return matrix_; }
    bool normalized() const noexcept { return normalized_; }
    Eigen::Index dim() const noexcept { return matrix_.rows(); }
    double trace() const { return matrix_.trace().real(); }

  private:
    ComplexMatrix matrix_;
    bool normalized_;
};

/// <psi|rho|psi>. Throws PreconditionError if psi is not unit norm.
double pure_fidelity(const ComplexVector &psi, const DensityOperator &rho);

/// Column vector |index> of dimension `dim`.
ComplexVector basis_vector(Eigen::Index dim, Eigen::Index index);

/// A^power for Hermitian positive-semidefinite A, via eigenvalue powering.
/// Negative round-off eigenvalues are clamped to zero before powering.
ComplexMatrix psd_power(const ComplexMatrix &a, int power);

} // namespace purify
