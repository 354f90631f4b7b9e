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

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "purify/tensor.hpp"

namespace purify {

/// Completely positive map in Kraus form, rho -> sum_k K rho K^dagger.
class KrausChannel {
  public:
    /// Throws DimensionError on empty or mismatched operators, and
    /// PreconditionError if `trace_preserving` is claimed but
    /// sum K^dagger K deviates from I by more than 1e-10.
    KrausChannel(std::vector<ComplexMatrix> kraus_ops, bool trace_preserving);

    static KrausChannel identity(Eigen::Index dim);
    static KrausChannel unitary(const ComplexMatrix &u);

    const std::vector<ComplexMatrix> &kraus_ops() const noexcept { return ops_; }
    bool trace_preserving() const noexcept { return trace_preserving_; }
    Eigen::Index dim() const noexcept { return ops_.front().rows(); }

    /// Applies the map to an arbitrary square matrix (not only states).
    ComplexMatrix operator()(const ComplexMatrix &a) const;

  private:
    std::vector<ComplexMatrix> ops_;
    bool trace_preserving_;
};

/// max |sum K^dagger K - I|.
double completeness_residual(std::span<const ComplexMatrix> kraus_ops);

/// max |sum K K^dagger - I|; zero for unital channels.
double unitality_residual(std::span<const ComplexMatrix> kraus_ops);

DensityOperator apply_channel(const KrausChannel &ch, const DensityOperator &rho);

/// Heisenberg-picture dual: Kraus operators K^dagger.
/// Satisfies Tr(adjoint(ch)(A) B) = Tr(A ch(B)). The result is flagged
/// trace preserving iff the input channel is unital.
KrausChannel adjoint_channel(const KrausChannel &ch);

/// `second` after `first`; Kraus set is every product K2 K1.
KrausChannel compose_channels(const KrausChannel &first, const KrausChannel &second);

/// Same map with at most dim^2 Kraus operators, from the Choi matrix spectrum.
KrausChannel minimal_kraus(const KrausChannel &ch);

enum class NoiseKind {
    None,
    DepolarizingLocal,
    DepolarizingGlobal,
    Dephasing,
    AmplitudeDamping,
};

std::string to_string(NoiseKind kind);
/// Accepts "none", "depolarizing-local", "depolarizing-global", "dephasing",
/// "amplitude-damping". Throws PreconditionError otherwise.
NoiseKind parse_noise_kind(std::string_view text);

/// Noise inserted after every gate.
///
/// Depolarizing with strength p on k qubits is
/// rho -> (1-p) rho + p Tr_k(rho) (x) I/2^k. Dephasing scales each qubit's
/// coherences by (1-p) (a Z flip with probability p/2). Amplitude damping
/// decays |1> to |0> with probability p on each qubit.
struct NoiseModel {
    NoiseKind kind = NoiseKind::None;
    double strength = 0.0;

    NoiseModel() = default;
    /// Throws PreconditionError unless strength lies in [0, 1].
    NoiseModel(NoiseKind kind, double strength);

    static NoiseModel none() { return {}; }

    bool is_noiseless() const noexcept {
        return kind == NoiseKind::None || strength == 0.0;
    }
    bool operator==(const NoiseModel &) const = default;
};

/// Noise channel acting on `n_qubits` qubits. Depolarizing kinds use the
/// joint n-qubit depolarizing map; dephasing and amplitude damping act
/// independently on every qubit.
KrausChannel noise_channel(const NoiseModel &noise, int n_qubits);

enum class GateKind { X, Y, Z, H, S, T, RX, RY, RZ, CNOT, CZ, SWAP };

std::string to_string(GateKind kind);
/// Gate name as written in circuit files (case-insensitive).
std::optional<GateKind> parse_gate_kind(std::string_view name);
int gate_arity(GateKind kind);
bool gate_has_angle(GateKind kind);

struct Gate {
    GateKind kind;
    std::vector<int> qubits; ///< control first for CNOT
    double angle = 0.0;      ///< rotations only

    bool operator==(const Gate &) const = default;
};

/// Unitary on the gate's own qubits, first listed qubit most significant.
ComplexMatrix gate_matrix(const Gate &gate);

/// Ordered gate list on one register of n qubits.
class GateCircuit {
  public:
    explicit GateCircuit(int n_qubits, std::vector<Gate> gates = {});

    /// Throws DimensionError for out-of-range or repeated qubits.
    GateCircuit &add(Gate gate);

    int n_qubits() const noexcept { return n_qubits_; }
    Eigen::Index dim() const noexcept { return Eigen::Index{1} << n_qubits_; }
    const std::vector<Gate> &gates() const noexcept { return gates_; }

    /// Ideal unitary of the whole circuit.
    ComplexMatrix unitary() const;

    bool operator==(const GateCircuit &) const = default;

  private:
    int n_qubits_;
    std::vector<Gate> gates_;
};

/// Reversed gate list with every gate inverted. S and T become
/// RZ(-pi/2) and RZ(-pi/4), which agree with S^dagger and T^dagger up to a
/// global phase.
GateCircuit inverse_circuit(const GateCircuit &circ);

/// Product over gates of (noise after gate) in circuit order. Noise acts on
/// each gate's qubits for the local kinds and on the whole register for
/// depolarizing-global.
KrausChannel noisy_circuit_channel(const GateCircuit &circ, const NoiseModel &noise);

/// Noisy circuit applied to |0...0><0...0|.
DensityOperator prepare_noisy_state(const GateCircuit &circ, const NoiseModel &noise);

/// Dual state: the adjoint of the noisy inverse-circuit channel applied to
/// |0...0><0...0|. Positive, flagged unnormalized, trace in [0, d].
/// `inverse_noise` defaults to `noise`.
DensityOperator dual_state(const GateCircuit &circ, const NoiseModel &noise,
                           const std::optional<NoiseModel> &inverse_noise = std::nullopt);

/// `op` on `qubits` of an n_total-qubit register, identity elsewhere.
ComplexMatrix embed_operator(const ComplexMatrix &op, std::span<const int> qubits,
                             int n_total);

/// op * a, where op acts on `qubits` of an n_total-qubit space.
ComplexMatrix apply_local_left(const ComplexMatrix &a, const ComplexMatrix &op,
                               std::span<const int> qubits, int n_total);

/// op a op^dagger with op local to `qubits`.
ComplexMatrix conjugate_local(const ComplexMatrix &a, const ComplexMatrix &op,
                              std::span<const int> qubits, int n_total);

/// Applies `ch` (defined on qubits.size() qubits) to `qubits` of `a`.
ComplexMatrix apply_local_channel(const ComplexMatrix &a, const KrausChannel &ch,
                                  std::span<const int> qubits, int n_total);

/// Parses the circuit text format. See circuit_io.cpp for the grammar.
GateCircuit parse_circuit(std::string_view text);
GateCircuit read_circuit_file(const std::string &path);
std::string format_circuit(const GateCircuit &circ);

} // namespace purify
