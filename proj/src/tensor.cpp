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

#include "purify/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "purify/errors.hpp"

namespace purify {

namespace {

constexpr double kHermitianTol = 1e-10;
constexpr double kPsdTol = 1e-10;
constexpr double kTraceTol = 1e-10;
// Above this size the PSD check in DensityOperator is skipped; the full
// eigensolve would dominate the cost of every composite-state operation.
constexpr Eigen::Index kPsdCheckMaxDim = 1024;

void phase_fix(Eigen::Ref<ComplexVector> v) {
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (std::abs(v[i]) > 1e-12) {
            v *= std::conj(v[i]) / std::abs(v[i]);
            v[i] = Complex{v[i].real(), 0.0};
            return;
        }
    }
}

// true if a should come before b within a block of tied eigenvalues
bool lexicographically_before(const ComplexVector &a, const ComplexVector &b) {
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        if (std::abs(a[i].real() - b[i].real()) > 1e-12) {
            return a[i].real() > b[i].real();
        }
        if (std::abs(a[i].imag() - b[i].imag()) > 1e-12) {
            return a[i].imag() > b[i].imag();
        }
    }
    return false;
}

} // namespace

void check_dimension_cap(Eigen::Index dim) {
    if (dim > kMaxDimension) {
        throw DimensionCapError("dimension " + std::to_string(dim) +
                                " exceeds the dense cap of " +
                                std::to_string(kMaxDimension));
    }
}

double max_abs(const ComplexMatrix &a) {
    if (a.size() == 0) {
        return 0.0;
    }
    return a.cwiseAbs().maxCoeff();
}

double hermiticity_residual(const ComplexMatrix &a) {
    if (a.rows() != a.cols()) {
        throw DimensionError("hermiticity check needs a square matrix");
    }
    return max_abs(a - a.adjoint());
}

bool is_hermitian(const ComplexMatrix &a, double tol) {
    return a.rows() == a.cols() && hermiticity_residual(a) <= tol;
}

bool is_unitary(const ComplexMatrix &a, double tol) {
    if (a.rows() != a.cols()) {
        return false;
    }
    const ComplexMatrix id = ComplexMatrix::Identity(a.rows(), a.cols());
    return max_abs(a.adjoint() * a - id) <= tol;
}

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
    const Eigen::Index rows = a.rows() * b.rows();
    const Eigen::Index cols = a.cols() * b.cols();
    check_dimension_cap(rows);
    check_dimension_cap(cols);
    ComplexMatrix out(rows, cols);
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) =
                a(i, j) * b;
        }
    }
    return out;
}

ComplexMatrix kron_all(std::span<const ComplexMatrix> factors) {
    ComplexMatrix out = ComplexMatrix::Ones(1, 1);
    for (const auto &f : factors) {
        out = kron(out, f);
    }
    return out;
}

ComplexMatrix kron_power(const ComplexMatrix &a, int copies) {
    if (copies < 0) {
        throw PreconditionError("kron_power needs a non-negative copy count");
    }
    // reject oversized results before allocating any intermediate
    Eigen::Index dim = 1;
    for (int k = 0; k < copies; ++k) {
        dim *= std::max(a.rows(), a.cols());
        check_dimension_cap(dim);
    }
    ComplexMatrix out = ComplexMatrix::Ones(1, 1);
    for (int k = 0; k < copies; ++k) {
        out = kron(out, a);
    }
    return out;
}

Complex trace_product(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.cols() != b.rows() || a.rows() != b.cols()) {
        throw DimensionError("trace_product: shapes do not compose to a square");
    }
    // Tr(AB) = sum_ij A_ij B_ji
    return (a.array() * b.transpose().array()).sum();
}

HermitianEigen hermitian_eig(const ComplexMatrix &a) {
    if (a.rows() != a.cols()) {
        throw DimensionError("hermitian_eig needs a square matrix");
    }
    const double scale = std::max(1.0, max_abs(a));
    if (hermiticity_residual(a) > kHermitianTol * scale) {
        throw PreconditionError("hermitian_eig: input is not Hermitian");
    }
    const Eigen::Index n = a.rows();
    const ComplexMatrix sym = 0.5 * (a + a.adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
    if (solver.info() != Eigen::Success) {
        throw NumericalStateError("hermitian_eig: eigensolver did not converge");
    }

    std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), Eigen::Index{0});
    ComplexMatrix vectors = solver.eigenvectors();
    for (Eigen::Index k = 0; k < n; ++k) {
        phase_fix(vectors.col(k));
    }
    const RealVector &values = solver.eigenvalues();
    const double tie_tol = 1e-12 * scale;
    std::stable_sort(order.begin(), order.end(),
                     [&](Eigen::Index x, Eigen::Index y) {
                         if (std::abs(values[x] - values[y]) > tie_tol) {
                             return values[x] > values[y];
                         }
                         return lexicographically_before(vectors.col(x),
                                                         vectors.col(y));
                     });

    HermitianEigen out{RealVector(n), ComplexMatrix(n, n)};
    for (Eigen::Index k = 0; k < n; ++k) {
        out.values[k] = values[order[static_cast<std::size_t>(k)]];
        out.vectors.col(k) = vectors.col(order[static_cast<std::size_t>(k)]);
    }
    return out;
}

ComplexMatrix partial_trace(const ComplexMatrix &a,
                            std::span<const std::size_t> dims,
                            std::span<const std::size_t> keep) {
    if (a.rows() != a.cols()) {
        throw DimensionError("partial_trace needs a square matrix");
    }
    const std::size_t total = std::accumulate(dims.begin(), dims.end(),
                                              std::size_t{1},
                                              std::multiplies<>());
    if (dims.empty() || total != static_cast<std::size_t>(a.rows())) {
        throw DimensionError("partial_trace: subsystem dims multiply to " +
                             std::to_string(total) + ", matrix has dimension " +
                             std::to_string(a.rows()));
    }
    const std::size_t nsys = dims.size();
    std::vector<bool> kept(nsys, false);
    for (std::size_t k : keep) {
        if (k >= nsys) {
            throw DimensionError("partial_trace: kept subsystem " +
                                 std::to_string(k) + " out of range");
        }
        kept[k] = true;
    }

    // strides[s] is the weight of subsystem s's digit in the flat index
    std::vector<std::size_t> strides(nsys);
    std::size_t stride = 1;
    for (std::size_t s = nsys; s-- > 0;) {
        strides[s] = stride;
        stride *= dims[s];
    }

    std::vector<std::size_t> kept_sys;
    std::vector<std::size_t> traced_sys;
    for (std::size_t s = 0; s < nsys; ++s) {
        (kept[s] ? kept_sys : traced_sys).push_back(s);
    }
    std::size_t kept_dim = 1;
    for (std::size_t s : kept_sys) {
        kept_dim *= dims[s];
    }
    std::size_t traced_dim = total / kept_dim;

    // offset in the full index contributed by a kept (or traced) sub-index
    auto spread = [&](std::size_t index, const std::vector<std::size_t> &sys) {
        std::size_t flat = 0;
        for (std::size_t k = sys.size(); k-- > 0;) {
            const std::size_t s = sys[k];
            flat += (index % dims[s]) * strides[s];
            index /= dims[s];
        }
        return flat;
    };

    std::vector<std::size_t> kept_offset(kept_dim);
    for (std::size_t i = 0; i < kept_dim; ++i) {
        kept_offset[i] = spread(i, kept_sys);
    }
    std::vector<std::size_t> traced_offset(traced_dim);
    for (std::size_t t = 0; t < traced_dim; ++t) {
        traced_offset[t] = spread(t, traced_sys);
    }

    const auto kd = static_cast<Eigen::Index>(kept_dim);
    ComplexMatrix out = ComplexMatrix::Zero(kd, kd);
    for (std::size_t r = 0; r < kept_dim; ++r) {
        for (std::size_t c = 0; c < kept_dim; ++c) {
            Complex sum{0.0, 0.0};
            for (std::size_t t = 0; t < traced_dim; ++t) {
                sum += a(static_cast<Eigen::Index>(kept_offset[r] + traced_offset[t]),
                         static_cast<Eigen::Index>(kept_offset[c] + traced_offset[t]));
            }
            out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = sum;
        }
    }
    return out;
}

DensityOperator::DensityOperator(ComplexMatrix matrix, bool normalized)
    : matrix_(std::move(matrix)), normalized_(normalized) {
    if (matrix_.rows() != matrix_.cols() || matrix_.rows() == 0) {
        throw DimensionError("density operator must be a non-empty square matrix");
    }
    check_dimension_cap(matrix_.rows());
    const double scale = std::max(1.0, max_abs(matrix_));
    if (hermiticity_residual(matrix_) > kHermitianTol * scale) {
        throw PreconditionError("density operator is not Hermitian");
    }
    matrix_ = 0.5 * (matrix_ + matrix_.adjoint()).eval();
    const double tr = matrix_.trace().real();
    if (normalized_ && std::abs(tr - 1.0) > kTraceTol) {
        throw PreconditionError("normalized density operator has trace " +
                                std::to_string(tr));
    }
    if (matrix_.rows() <= kPsdCheckMaxDim) {
        Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(
            matrix_, Eigen::EigenvaluesOnly);
        const double min_eig = solver.eigenvalues().minCoeff();
        if (min_eig < -kPsdTol * std::max(1.0, std::abs(tr))) {
            throw PreconditionError("density operator has negative eigenvalue " +
                                    std::to_string(min_eig));
        }
    }
}

DensityOperator DensityOperator::pure(const ComplexVector &psi) {
    if (std::abs(psi.norm() - 1.0) > 1e-10) {
        throw PreconditionError("pure state vector is not normalized");
    }
    return DensityOperator(psi * psi.adjoint(), true);
}

DensityOperator DensityOperator::basis(Eigen::Index dim, Eigen::Index index) {
    return pure(basis_vector(dim, index));
}

DensityOperator DensityOperator::maximally_mixed(Eigen::Index dim) {
    return DensityOperator(
        ComplexMatrix::Identity(dim, dim) / static_cast<double>(dim), true);
}

double pure_fidelity(const ComplexVector &psi, const DensityOperator &rho) {
    if (psi.size() != rho.dim()) {
        throw DimensionError("pure_fidelity: vector and state dimensions differ");
    }
    if (std::abs(psi.norm() - 1.0) > 1e-10) {
        throw PreconditionError("pure_fidelity: psi is not normalized");
    }
    const Complex f = psi.dot(rho.matrix() * psi);
    return f.real();
}

ComplexVector basis_vector(Eigen::Index dim, Eigen::Index index) {
    if (index < 0 || index >= dim) {
        throw DimensionError("basis index out of range");
    }
    ComplexVector v = ComplexVector::Zero(dim);
    v[index] = 1.0;
    return v;
}

ComplexMatrix psd_power(const ComplexMatrix &a, int power) {
    if (power < 0) {
        throw PreconditionError("psd_power needs a non-negative power");
    }
    if (power == 0) {
        return ComplexMatrix::Identity(a.rows(), a.cols());
    }
    if (power == 1) {
        return a;
    }
    const HermitianEigen eig = hermitian_eig(a);
    RealVector powered(eig.values.size());
    for (Eigen::Index k = 0; k < powered.size(); ++k) {
        powered[k] = std::pow(std::max(eig.values[k], 0.0), power);
    }
    return eig.vectors * powered.asDiagonal() * eig.vectors.adjoint();
}

} // namespace purify
