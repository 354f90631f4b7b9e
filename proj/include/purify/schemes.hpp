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
#include <string>
#include <vector>

#include "purify/channels.hpp"
#include "purify/pauli.hpp"
#include "purify/report.hpp"
#include "purify/resources.hpp"
#include "purify/tensor.hpp"

namespace purify {

/// Cyclic permutation C_M on M registers of dimension d.
///
/// C_M |i_1 i_2 ... i_M> = |i_2 ... i_M i_1>: the content of register k moves
/// to register k-1 (mod M). Register 1 is the most significant factor.
/// Equals register_swap(M-2, M-1) * ... * register_swap(0, 1).
ComplexMatrix cyclic_permutation(int copies, Eigen::Index register_dim);

/// Swap of registers a and b among `copies` registers of dimension d.
ComplexMatrix register_swap(int copies, Eigen::Index register_dim, int a, int b);

/// 8x8 controlled swap, control most significant.
ComplexMatrix fredkin_matrix();

/// A qubit-level controlled swap on a (control, a, b) qubit triple.
struct ControlledSwapGate {
    int control;
    int a;
    int b;
    bool operator==(const ControlledSwapGate &) const = default;
};

/// Controlled swap of two n-qubit registers on 1 + 2n qubits: control is
/// qubit 0, register A is qubits 1..n, register B is qubits n+1..2n.
struct ControlledRegisterSwap {
    ComplexMatrix op;                      ///< built as a permutation
    std::vector<ControlledSwapGate> gates; ///< one Fredkin per qubit pair
};

ControlledRegisterSwap controlled_register_swap(int n_qubits);

/// Tr(C_M O_1 rho^(x)M) over Tr(C_M rho^(x)M), evaluated on the composite
/// space. Throws DimensionCapError if d^M exceeds the dense cap.
EstimateReport multicopy_estimate(const DensityOperator &rho, const ComplexMatrix &obs,
                                  int copies);
EstimateReport multicopy_estimate(const DensityOperator &rho, const PauliObservable &obs,
                                  int copies);

/// Tr(rho_bar O rho) / Tr(rho_bar rho). Real parts are used; the imaginary
/// part of the numerator is recorded. Throws VanishingNormError when
/// |Tr(rho_bar rho)| < 1e-12.
EstimateReport state_verification_estimate(const DensityOperator &rho,
                                           const DensityOperator &rho_bar,
                                           const ComplexMatrix &obs);
EstimateReport state_verification_estimate(const DensityOperator &rho,
                                           const DensityOperator &rho_bar,
                                           const PauliObservable &obs);

/// Multi-copy purification with state verification on `verified` of the
/// `copies` registers (defaults to all of them).
///
/// Computes both the composite form Tr((I..I rho_bar..rho_bar) C_M O_1 rho^(x)M)
/// and the reduced form Tr(O rho^(M-b) (rho rho_bar)^b), reporting the reduced
/// one and storing their gap in form_residual. With every copy verified the
/// degree is 2M using M registers; partial verification gives degree M + b.
EstimateReport combined_estimate(const DensityOperator &rho, const DensityOperator &rho_bar,
                                 const ComplexMatrix &obs, int copies,
                                 std::optional<int> verified = std::nullopt);
EstimateReport combined_estimate(const DensityOperator &rho, const DensityOperator &rho_bar,
                                 const PauliObservable &obs, int copies,
                                 std::optional<int> verified = std::nullopt);

/// One scheme configuration at circuit level.
struct SchemeSetup {
    SchemeKind kind = SchemeKind::Raw;
    GateCircuit circuit{1};
    NoiseModel noise;
    /// Noise on the inverse circuit used for verification; defaults to `noise`.
    std::optional<NoiseModel> inverse_noise;
    /// Noise after each ancilla gate and qubit-level controlled swap.
    std::optional<NoiseModel> machinery_noise;
    PauliObservable observable;
    /// Number of registers M (1 for raw and state verification).
    int copies = 1;
};

/// Final-measurement data for one circuit: its end state and the observable
/// measured on it (ancilla X (x) register part, or the bare observable).
struct MeasurementBatch {
    double weight = 1.0;
    ComplexMatrix state;
    ComplexMatrix observable;
    /// Ancilla Y (x) register part; empty when not a Hadamard test.
    ComplexMatrix observable_imag;
};

/// Numerator = sum of weight * <observable> over numerator batches;
/// denominator is the same circuit family with O = I.
struct SchemeMeasurements {
    std::vector<MeasurementBatch> numerator;
    MeasurementBatch denominator;
    ResourceProfile resource;
    double ideal = 0.0;
};

/// Builds the end states of every circuit the scheme runs.
///
/// Hadamard-test schemes put the ancilla on qubit 0 followed by M registers.
/// Each Pauli term of the observable gets its own circuit: H on the ancilla,
/// controlled-P on register 1 qubit by qubit, controlled register swaps
/// (0,1), (1,2), ... realising controlled-C_M, then (for verifying schemes)
/// the noisy inverse circuit on every register, measured against
/// X (x) |0..0><0..0|^(x)M. Raw measures O on the noisy state directly.
SchemeMeasurements build_scheme_measurements(const SchemeSetup &setup);

/// Exact (infinite-shot) ratio of already-built measurements.
EstimateReport evaluate_measurements(const SchemeMeasurements &m);

/// Exact (infinite-shot) value of the scheme.
EstimateReport scheme_exact_estimate(const SchemeSetup &setup);

/// Operator-level reference for the setup, ignoring machinery noise.
EstimateReport scheme_operator_estimate(const SchemeSetup &setup);

/// Full circuit pipeline of the combined scheme for a single Pauli string:
/// M noisy copies, Hadamard test of controlled-(C_M O_1), noisy inverse
/// circuits, |0..0> projectors on every register. Without machinery noise the
/// ratio equals combined_estimate on (rho, rho_bar).
EstimateReport circuit_level_combined(const GateCircuit &circ, const NoiseModel &noise,
                                      const PauliObservable &obs, int copies,
                                      const std::optional<NoiseModel> &machinery_noise =
                                          std::nullopt,
                                      const std::optional<NoiseModel> &inverse_noise =
                                          std::nullopt);

} // namespace purify
