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

#include <cstdint>
#include <random>
#include <string>

#include "purify/channels.hpp"
#include "purify/pauli.hpp"
#include "purify/tensor.hpp"

namespace purify {

using Rng = std::mt19937_64;

/// Counter-based split of a master seed: the seed of sub-stream `stream`
/// is splitmix64(master + (stream + 1) * golden-ratio increment). Sub-seeds
/// depend only on (master, stream), never on execution order.
std::uint64_t split_seed(std::uint64_t master, std::uint64_t stream);

/// Matrix with i.i.d. standard complex Gaussian entries.
ComplexMatrix random_ginibre(Rng &rng, Eigen::Index rows, Eigen::Index cols);

/// Haar-random unitary (QR of a Ginibre matrix with phase correction).
ComplexMatrix random_unitary(Rng &rng, Eigen::Index dim);

ComplexMatrix random_hermitian(Rng &rng, Eigen::Index dim);

/// Full-rank mixed state from the Ginibre ensemble.
DensityOperator random_density(Rng &rng, Eigen::Index dim);

/// Unnormalized positive operator with trace drawn uniformly from (0, dim].
DensityOperator random_positive(Rng &rng, Eigen::Index dim);

ComplexVector random_state_vector(Rng &rng, Eigen::Index dim);

/// Random Pauli string over IXYZ.
std::string random_pauli_string(Rng &rng, int n_qubits);

/// Sum of `terms` random Pauli strings with coefficients in [-1, 1].
PauliObservable random_pauli_sum(Rng &rng, int n_qubits, int terms);

/// `depth` random gates from the full gate set.
GateCircuit random_circuit(Rng &rng, int n_qubits, int depth);

} // namespace purify
