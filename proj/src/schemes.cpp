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

#include "purify/schemes.hpp"

#include <cmath>
#include <string>

#include "purify/errors.hpp"

namespace purify {

namespace {

constexpr double kMinOverlap = 1e-12;

int qubits_for_dim(Eigen::Index d) {
    int n = 0;
    while ((Eigen::Index{1} << n) < d) {
        ++n;
    }
    return std::max(n, 1);
}

Eigen::Index checked_power(Eigen::Index d, int copies) {
    Eigen::Index total = 1;
    for (int k = 0; k < copies; ++k) {
        total *= d;
        check_dimension_cap(total);
    }
    return total;
}

// digits of a flat composite index, register 0 first
std::vector<Eigen::Index> digits_of(Eigen::Index flat, Eigen::Index d, int copies) {
    std::vector<Eigen::Index> out(static_cast<std::size_t>(copies));
    for (int k = copies; k-- > 0;) {
        out[static_cast<std::size_t>(k)] = flat % d;
        flat /= d;
    }
    return out;
}

Eigen::Index flat_of(const std::vector<Eigen::Index> &digits, Eigen::Index d) {
    Eigen::Index flat = 0;
    for (Eigen::Index digit : digits) {
        flat = flat * d + digit;
    }
    return flat;
}

void require_same_dims(const DensityOperator &rho, const DensityOperator &rho_bar,
                       const ComplexMatrix &obs) {
    if (rho.dim() != rho_bar.dim() || obs.rows() != rho.dim() ||
        obs.cols() != rho.dim()) {
        throw DimensionError("state, dual state and observable dimensions differ");
    }
}

ComplexMatrix controlled(const ComplexMatrix &u) {
    const Eigen::Index d = u.rows();
    ComplexMatrix out = ComplexMatrix::Zero(2 * d, 2 * d);
    out.topLeftCorner(d, d).setIdentity();
    out.bottomRightCorner(d, d) = u;
    return out;
}

// Hadamard-test purification circuit on ancilla + `copies` registers.
MeasurementBatch hadamard_test_circuit(const DensityOperator &rho, int n, int copies,
                                       const std::string &pauli,
                                       const std::optional<KrausChannel> &inverse,
                                       const std::optional<NoiseModel> &machinery) {
    const int total = 1 + copies * n;
    check_dimension_cap(Eigen::Index{1} << std::min(total, 62));

    auto noisy = [&](ComplexMatrix &state, std::initializer_list<int> qubits) {
        if (machinery && !machinery->is_noiseless()) {
            const std::vector<int> qs(qubits);
            state = apply_local_channel(
                state, noise_channel(*machinery, static_cast<int>(qs.size())), qs, total);
        }
    };

    ComplexMatrix state = kron(DensityOperator::basis(2, 0).matrix(),
                               kron_power(rho.matrix(), copies));
    state = conjugate_local(state, gate_matrix(Gate{GateKind::H, {0}}), std::vector{0},
                            total);
    noisy(state, {0});

    for (int j = 0; j < static_cast<int>(pauli.size()); ++j) {
        if (pauli[static_cast<std::size_t>(j)] == 'I') {
            continue;
        }
        const ComplexMatrix cp = controlled(pauli_matrix(pauli[static_cast<std::size_t>(j)]));
        state = conjugate_local(state, cp, std::vector{0, 1 + j}, total);
        noisy(state, {0, 1 + j});
    }

    const ComplexMatrix fredkin = fredkin_matrix();
    for (int k = 0; k + 1 < copies; ++k) {
        for (int j = 0; j < n; ++j) {
            const int a = 1 + k * n + j;
            const int b = 1 + (k + 1) * n + j;
            state = conjugate_local(state, fredkin, std::vector{0, a, b}, total);
            noisy(state, {0, a, b});
        }
    }

    const Eigen::Index reg_dim = Eigen::Index{1} << n;
    ComplexMatrix register_part;
    if (inverse) {
        for (int r = 0; r < copies; ++r) {
            std::vector<int> qs(static_cast<std::size_t>(n));
            for (int j = 0; j < n; ++j) {
                qs[static_cast<std::size_t>(j)] = 1 + r * n + j;
            }
            state = apply_local_channel(state, *inverse, qs, total);
        }
        register_part = kron_power(DensityOperator::basis(reg_dim, 0).matrix(), copies);
    } else {
        const Eigen::Index dim = checked_power(reg_dim, copies);
        register_part = ComplexMatrix::Identity(dim, dim);
    }

    MeasurementBatch batch;
    batch.state = 0.5 * (state + state.adjoint());
    batch.observable = kron(pauli_matrix('X'), register_part);
    batch.observable_imag = kron(pauli_matrix('Y'), register_part);
    return batch;
}

Complex expectation(const MeasurementBatch &b) {
    return trace_product(b.observable, b.state);
}

} // namespace

ComplexMatrix cyclic_permutation(int copies, Eigen::Index register_dim) {
    if (copies < 1 || register_dim < 1) {
        throw PreconditionError("cyclic_permutation needs copies >= 1 and d >= 1");
    }
    const Eigen::Index total = checked_power(register_dim, copies);
    ComplexMatrix c = ComplexMatrix::Zero(total, total);
    for (Eigen::Index col = 0; col < total; ++col) {
        auto digits = digits_of(col, register_dim, copies);
        std::rotate(digits.begin(), digits.begin() + 1, digits.end());
        c(flat_of(digits, register_dim), col) = 1.0;
    }
    return c;
}

ComplexMatrix register_swap(int copies, Eigen::Index register_dim, int a, int b) {
    if (a < 0 || b < 0 || a >= copies || b >= copies) {
        throw DimensionError("register_swap: register index out of range");
    }
    const Eigen::Index total = checked_power(register_dim, copies);
    ComplexMatrix s = ComplexMatrix::Zero(total, total);
    for (Eigen::Index col = 0; col < total; ++col) {
        auto digits = digits_of(col, register_dim, copies);
        std::swap(digits[static_cast<std::size_t>(a)], digits[static_cast<std::size_t>(b)]);
        s(flat_of(digits, register_dim), col) = 1.0;
    }
    return s;
}

ComplexMatrix fredkin_matrix() {
    ComplexMatrix f = ComplexMatrix::Identity(8, 8);
    f(5, 5) = f(6, 6) = 0.0;
    f(5, 6) = f(6, 5) = 1.0;
    return f;
}

ControlledRegisterSwap controlled_register_swap(int n_qubits) {
    if (n_qubits < 1) {
        throw PreconditionError("controlled_register_swap needs n >= 1");
    }
    const int total = 1 + 2 * n_qubits;
    const Eigen::Index dim = Eigen::Index{1} << total;
    check_dimension_cap(dim);
    const Eigen::Index reg = Eigen::Index{1} << n_qubits;

    ControlledRegisterSwap out;
    out.op = ComplexMatrix::Zero(dim, dim);
    for (Eigen::Index col = 0; col < dim; ++col) {
        const Eigen::Index control = col / (reg * reg);
        const Eigen::Index a = (col / reg) % reg;
        const Eigen::Index b = col % reg;
        const Eigen::Index row = control == 0 ? col : control * reg * reg + b * reg + a;
        out.op(row, col) = 1.0;
    }
    for (int j = 0; j < n_qubits; ++j) {
        out.gates.push_back(ControlledSwapGate{0, 1 + j, 1 + n_qubits + j});
    }
    return out;
}

EstimateReport multicopy_estimate(const DensityOperator &rho, const ComplexMatrix &obs,
                                  int copies) {
    if (copies < 2) {
        throw PreconditionError("multi-copy purification needs M >= 2");
    }
    const Eigen::Index d = rho.dim();
    if (obs.rows() != d || obs.cols() != d) {
        throw DimensionError("observable does not act on one register");
    }
    const Eigen::Index rest = checked_power(d, copies - 1);
    const ComplexMatrix composite = kron_power(rho.matrix(), copies);
    const ComplexMatrix cyc = cyclic_permutation(copies, d);
    const ComplexMatrix o1 = kron(obs, ComplexMatrix::Identity(rest, rest));

    const Complex num = trace_product(cyc * o1, composite);
    const Complex den = trace_product(cyc, composite);
    if (!(std::abs(den) > 1e-300)) {
        throw VanishingNormError("Tr(rho^M) vanishes");
    }

    EstimateReport r;
    r.numerator_mean = num.real();
    r.numerator_imag = num.imag();
    r.denominator_mean = den.real();
    r.ratio = num.real() / den.real();
    r.exact_ratio = r.ratio;
    r.resource = resource_profile(SchemeKind::MultiCopy, copies, qubits_for_dim(d));
    return r;
}

EstimateReport multicopy_estimate(const DensityOperator &rho, const PauliObservable &obs,
                                  int copies) {
    return multicopy_estimate(rho, obs.matrix(), copies);
}

EstimateReport state_verification_estimate(const DensityOperator &rho,
                                           const DensityOperator &rho_bar,
                                           const ComplexMatrix &obs) {
    require_same_dims(rho, rho_bar, obs);
    const Complex num = trace_product(rho_bar.matrix() * obs, rho.matrix());
    const Complex den = trace_product(rho_bar.matrix(), rho.matrix());
    if (std::abs(den) < kMinOverlap) {
        throw VanishingNormError("Tr(rho_bar rho) vanishes: state and dual state do "
                                 "not overlap");
    }
    EstimateReport r;
    r.numerator_mean = num.real();
    r.numerator_imag = num.imag();
    r.denominator_mean = den.real();
    r.ratio = num.real() / den.real();
    r.exact_ratio = r.ratio;
    r.resource = resource_profile(SchemeKind::StateVerification, 2, qubits_for_dim(rho.dim()));
    return r;
}

EstimateReport state_verification_estimate(const DensityOperator &rho,
                                           const DensityOperator &rho_bar,
                                           const PauliObservable &obs) {
    return state_verification_estimate(rho, rho_bar, obs.matrix());
}

EstimateReport combined_estimate(const DensityOperator &rho, const DensityOperator &rho_bar,
                                 const ComplexMatrix &obs, int copies,
                                 std::optional<int> verified) {
    require_same_dims(rho, rho_bar, obs);
    if (copies < 1) {
        throw PreconditionError("combined purification needs M >= 1");
    }
    const int b = verified.value_or(copies);
    if (b < 0 || b > copies) {
        throw PreconditionError("verified copies must lie in [0, M]");
    }
    const Eigen::Index d = rho.dim();
    const Eigen::Index rest = checked_power(d, copies - 1);
    const ComplexMatrix id = ComplexMatrix::Identity(d, d);

    // composite form: verification on the last b registers
    ComplexMatrix verifier = ComplexMatrix::Ones(1, 1);
    for (int k = 0; k < copies; ++k) {
        verifier = kron(verifier, k >= copies - b ? rho_bar.matrix() : id);
    }
    const ComplexMatrix composite = kron_power(rho.matrix(), copies);
    const ComplexMatrix o1 = kron(obs, ComplexMatrix::Identity(rest, rest));
    const Complex composite_num =
        trace_product(verifier * cyclic_permutation(copies, d) * o1, composite);

    // reduced form: rho^(M-b) (rho rho_bar)^b
    const ComplexMatrix pair = rho.matrix() * rho_bar.matrix();
    ComplexMatrix product = ComplexMatrix::Identity(d, d);
    for (int k = 0; k < copies - b; ++k) {
        product = product * rho.matrix();
    }
    for (int k = 0; k < b; ++k) {
        product = product * pair;
    }
    const Complex num = trace_product(obs, product);
    const Complex den = product.trace();
    if (std::abs(den) < kMinOverlap) {
        throw VanishingNormError("normalisation Tr(rho^a (rho rho_bar)^b) vanishes");
    }

    EstimateReport r;
    r.numerator_mean = num.real();
    r.numerator_imag = num.imag();
    r.denominator_mean = den.real();
    r.ratio = num.real() / den.real();
    r.exact_ratio = r.ratio;
    r.form_residual = std::abs(composite_num - num);

    const int n = qubits_for_dim(d);
    if (b == copies) {
        r.resource = resource_profile(SchemeKind::Combined, 2 * copies, n);
    } else {
        r.resource.degree = copies + b;
        r.resource.registers = copies;
        r.resource.control_register_swaps = copies - 1;
        r.resource.qubit_level_control_swaps = (copies - 1) * n;
        r.resource.depth_factor = b > 0 ? 2 : 1;
        r.resource.ancillas = copies > 1 ? 1 : (b > 0 ? 1 : 0);
    }
    return r;
}

EstimateReport combined_estimate(const DensityOperator &rho, const DensityOperator &rho_bar,
                                 const PauliObservable &obs, int copies,
                                 std::optional<int> verified) {
    return combined_estimate(rho, rho_bar, obs.matrix(), copies, verified);
}

SchemeMeasurements build_scheme_measurements(const SchemeSetup &setup) {
    const GateCircuit &circ = setup.circuit;
    const int n = circ.n_qubits();
    if (setup.observable.terms().empty()) {
        throw PreconditionError("scheme setup has no observable");
    }
    if (setup.observable.n_qubits() != n) {
        throw DimensionError("observable acts on " +
                             std::to_string(setup.observable.n_qubits()) +
                             " qubits but the circuit register has " + std::to_string(n));
    }
    const int degree = scheme_degree(setup.kind, setup.copies);

    SchemeMeasurements out;
    out.resource = resource_profile(setup.kind, degree, n);
    const ComplexMatrix obs = setup.observable.matrix();
    {
        const ComplexVector psi0 = circ.unitary().col(0);
        out.ideal = psi0.dot(obs * psi0).real();
    }
    const DensityOperator rho = prepare_noisy_state(circ, setup.noise);

    if (setup.kind == SchemeKind::Raw) {
        out.numerator.push_back(MeasurementBatch{1.0, rho.matrix(), obs, {}});
        out.denominator = MeasurementBatch{
            1.0, rho.matrix(), ComplexMatrix::Identity(rho.dim(), rho.dim()), {}};
        return out;
    }

    const bool verify = setup.kind == SchemeKind::StateVerification ||
                        setup.kind == SchemeKind::Combined;
    std::optional<KrausChannel> inverse;
    if (verify) {
        inverse = noisy_circuit_channel(inverse_circuit(circ),
                                        setup.inverse_noise.value_or(setup.noise));
    }
    for (const auto &term : setup.observable.terms()) {
        MeasurementBatch batch = hadamard_test_circuit(rho, n, setup.copies, term.paulis,
                                                       inverse, setup.machinery_noise);
        batch.weight = term.coefficient;
        out.numerator.push_back(std::move(batch));
    }
    out.denominator =
        hadamard_test_circuit(rho, n, setup.copies, "", inverse, setup.machinery_noise);
    return out;
}

EstimateReport scheme_exact_estimate(const SchemeSetup &setup) {
    return evaluate_measurements(build_scheme_measurements(setup));
}

EstimateReport evaluate_measurements(const SchemeMeasurements &m) {
    Complex num{0.0, 0.0};
    double num_imag = 0.0;
    for (const auto &b : m.numerator) {
        num += b.weight * expectation(b);
        if (b.observable_imag.size() > 0) {
            num_imag += b.weight * trace_product(b.observable_imag, b.state).real();
        }
    }
    const double den = expectation(m.denominator).real();
    if (std::abs(den) < kMinOverlap) {
        throw VanishingNormError("scheme normalisation vanishes");
    }
    EstimateReport r;
    r.numerator_mean = num.real();
    r.numerator_imag = m.numerator.front().observable_imag.size() > 0 ? num_imag : num.imag();
    r.denominator_mean = den;
    r.ratio = num.real() / den;
    r.exact_ratio = r.ratio;
    r.ideal = m.ideal;
    r.resource = m.resource;
    return r;
}

EstimateReport scheme_operator_estimate(const SchemeSetup &setup) {
    const int n = setup.circuit.n_qubits();
    if (setup.observable.n_qubits() != n) {
        throw DimensionError("observable width does not match the circuit register");
    }
    const int degree = scheme_degree(setup.kind, setup.copies);
    const ComplexMatrix obs = setup.observable.matrix();
    const DensityOperator rho = prepare_noisy_state(setup.circuit, setup.noise);
    EstimateReport r;
    switch (setup.kind) {
    case SchemeKind::Raw: {
        r.numerator_mean = trace_product(obs, rho.matrix()).real();
        r.denominator_mean = 1.0;
        r.ratio = r.numerator_mean;
        r.exact_ratio = r.ratio;
        break;
    }
    case SchemeKind::MultiCopy:
    case SchemeKind::MultiCopyRecycled:
        r = multicopy_estimate(rho, obs, setup.copies);
        break;
    case SchemeKind::StateVerification:
    case SchemeKind::Combined: {
        const DensityOperator rho_bar =
            dual_state(setup.circuit, setup.noise, setup.inverse_noise);
        r = setup.kind == SchemeKind::StateVerification
                ? state_verification_estimate(rho, rho_bar, obs)
                : combined_estimate(rho, rho_bar, obs, setup.copies);
        break;
    }
    }
    r.resource = resource_profile(setup.kind, degree, n);
    const ComplexVector psi0 = setup.circuit.unitary().col(0);
    r.ideal = psi0.dot(obs * psi0).real();
    return r;
}

EstimateReport circuit_level_combined(const GateCircuit &circ, const NoiseModel &noise,
                                      const PauliObservable &obs, int copies,
                                      const std::optional<NoiseModel> &machinery_noise,
                                      const std::optional<NoiseModel> &inverse_noise) {
    if (!obs.is_single_string()) {
        throw PreconditionError("circuit-level protocol needs a single Pauli string "
                                "observable, got '" + obs.to_string() + "'");
    }
    SchemeSetup setup;
    setup.kind = SchemeKind::Combined;
    setup.circuit = circ;
    setup.noise = noise;
    setup.inverse_noise = inverse_noise;
    setup.machinery_noise = machinery_noise;
    setup.observable = obs;
    setup.copies = copies;
    return scheme_exact_estimate(setup);
}

} // namespace purify
