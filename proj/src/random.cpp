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

#include "purify/random.hpp"

#include <cmath>
#include <numbers>

namespace purify {

std::uint64_t split_seed(std::uint64_t master, std::uint64_t stream) {
    std::uint64_t z = master + (stream + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

ComplexMatrix random_ginibre(Rng &rng, Eigen::Index rows, Eigen::Index cols) {
    std::normal_distribution<double> normal(0.0, 1.0);
    ComplexMatrix m(rows, cols);
    for (Eigen::Index j = 0; j < cols; ++j) {
        for (Eigen::Index i = 0; i < rows; ++i) {
            const double re = normal(rng);
            const double im = normal(rng);
            m(i, j) = Complex(re, im);
        }
    }
    return m;
}

ComplexMatrix random_unitary(Rng &rng, Eigen::Index dim) {
    const ComplexMatrix g = random_ginibre(rng, dim, dim);
    Eigen::HouseholderQR<ComplexMatrix> qr(g);
    ComplexMatrix q = qr.householderQ();
    const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index k = 0; k < dim; ++k) {
        const Complex diag = r(k, k);
        if (std::abs(diag) > 0.0) {
            q.col(k) *= diag / std::abs(diag);
        }
    }
    return q;
}

ComplexMatrix random_hermitian(Rng &rng, Eigen::Index dim) {
    const ComplexMatrix g = random_ginibre(rng, dim, dim);
    return 0.5 * (g + g.adjoint());
}

DensityOperator random_density(Rng &rng, Eigen::Index dim) {
    const ComplexMatrix g = random_ginibre(rng, dim, dim);
    ComplexMatrix rho = g * g.adjoint();
    rho /= rho.trace().real();
    return DensityOperator(rho, true);
}

DensityOperator random_positive(Rng &rng, Eigen::Index dim) {
    std::uniform_real_distribution<double> scale(0.05, static_cast<double>(dim));
    const ComplexMatrix g = random_ginibre(rng, dim, dim);
    ComplexMatrix a = g * g.adjoint();
    a *= scale(rng) / a.trace().real();
    return DensityOperator(a, false);
}

ComplexVector random_state_vector(Rng &rng, Eigen::Index dim) {
    ComplexVector v = random_ginibre(rng, dim, 1).col(0);
    return v / v.norm();
}

std::string random_pauli_string(Rng &rng, int n_qubits) {
    static constexpr char kLetters[] = {'I', 'X', 'Y', 'Z'};
    std::uniform_int_distribution<int> pick(0, 3);
    std::string s;
    for (int q = 0; q < n_qubits; ++q) {
        s.push_back(kLetters[pick(rng)]);
    }
    return s;
}

PauliObservable random_pauli_sum(Rng &rng, int n_qubits, int terms) {
    std::uniform_real_distribution<double> coeff(-1.0, 1.0);
    std::vector<PauliTerm> out;
    for (int t = 0; t < terms; ++t) {
        const double c = coeff(rng);
        out.push_back(PauliTerm{c, random_pauli_string(rng, n_qubits)});
    }
    return PauliObservable(std::move(out));
}

GateCircuit random_circuit(Rng &rng, int n_qubits, int depth) {
    static constexpr GateKind kOneQubit[] = {GateKind::X,  GateKind::Y,  GateKind::Z,
                                             GateKind::H,  GateKind::S,  GateKind::T,
                                             GateKind::RX, GateKind::RY, GateKind::RZ};
    static constexpr GateKind kTwoQubit[] = {GateKind::CNOT, GateKind::CZ, GateKind::SWAP};
    std::uniform_int_distribution<int> one(0, 8);
    std::uniform_int_distribution<int> two(0, 2);
    std::uniform_int_distribution<int> qubit(0, n_qubits - 1);
    std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
    std::bernoulli_distribution entangle(n_qubits > 1 ? 0.3 : 0.0);

    GateCircuit circ(n_qubits);
    for (int k = 0; k < depth; ++k) {
        if (entangle(rng)) {
            const int a = qubit(rng);
            int b = qubit(rng);
            while (b == a) {
                b = qubit(rng);
            }
            circ.add(Gate{kTwoQubit[two(rng)], {a, b}, 0.0});
        } else {
            const GateKind kind = kOneQubit[one(rng)];
            circ.add(Gate{kind, {qubit(rng)}, gate_has_angle(kind) ? angle(rng) : 0.0});
        }
    }
    return circ;
}

} // namespace purify
