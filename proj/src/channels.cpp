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

#include "purify/channels.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <set>

#include "purify/errors.hpp"
#include "purify/pauli.hpp"

namespace purify {

namespace {

constexpr double kCompletenessTol = 1e-10;

// Every k-letter Pauli string, identity first.
std::vector<std::string> all_pauli_strings(int k) {
    std::vector<std::string> out{""};
    for (int q = 0; q < k; ++q) {
        std::vector<std::string> next;
        next.reserve(out.size() * 4);
        for (const auto &s : out) {
            for (char c : {'I', 'X', 'Y', 'Z'}) {
                next.push_back(s + c);
            }
        }
        out = std::move(next);
    }
    return out;
}

// Tensor products of a per-qubit Kraus set over k qubits.
std::vector<ComplexMatrix> product_kraus(const std::vector<ComplexMatrix> &single,
                                         int k) {
    std::vector<ComplexMatrix> out{ComplexMatrix::Ones(1, 1)};
    for (int q = 0; q < k; ++q) {
        std::vector<ComplexMatrix> next;
        next.reserve(out.size() * single.size());
        for (const auto &a : out) {
            for (const auto &b : single) {
                next.push_back(kron(a, b));
            }
        }
        out = std::move(next);
    }
    return out;
}

std::uint64_t qubit_mask(std::span<const int> qubits, int n_total) {
    std::uint64_t mask = 0;
    for (int q : qubits) {
        if (q < 0 || q >= n_total) {
            throw DimensionError("qubit index " + std::to_string(q) +
                                 " out of range for " + std::to_string(n_total) +
                                 " qubits");
        }
        const std::uint64_t bit = std::uint64_t{1} << (n_total - 1 - q);
        if (mask & bit) {
            throw DimensionError("repeated qubit index " + std::to_string(q));
        }
        mask |= bit;
    }
    return mask;
}

} // namespace

// ---------------------------------------------------------------- KrausChannel

KrausChannel::KrausChannel(std::vector<ComplexMatrix> kraus_ops, bool trace_preserving)
    : ops_(std::move(kraus_ops)), trace_preserving_(trace_preserving) {
    if (ops_.empty()) {
        throw DimensionError("Kraus channel needs at least one operator");
    }
    const Eigen::Index d = ops_.front().rows();
    for (const auto &k : ops_) {
        if (k.rows() != d || k.cols() != d || d == 0) {
            throw DimensionError("Kraus operators must share one square dimension");
        }
    }
    if (trace_preserving_ && completeness_residual(ops_) > kCompletenessTol) {
        throw PreconditionError("Kraus operators are not complete but the channel "
                                "is flagged trace preserving");
    }
}

KrausChannel KrausChannel::identity(Eigen::Index dim) {
    return KrausChannel({ComplexMatrix::Identity(dim, dim)}, true);
}

KrausChannel KrausChannel::unitary(const ComplexMatrix &u) {
    if (!is_unitary(u)) {
        throw PreconditionError("unitary channel needs a unitary matrix");
    }
    return KrausChannel({u}, true);
}

ComplexMatrix KrausChannel::operator()(const ComplexMatrix &a) const {
    if (a.rows() != dim() || a.cols() != dim()) {
        throw DimensionError("channel of dimension " + std::to_string(dim()) +
                             " applied to a " + std::to_string(a.rows()) + "x" +
                             std::to_string(a.cols()) + " matrix");
    }
    ComplexMatrix out = ComplexMatrix::Zero(dim(), dim());
    for (const auto &k : ops_) {
        out.noalias() += k * a * k.adjoint();
    }
    return out;
}

double completeness_residual(std::span<const ComplexMatrix> kraus_ops) {
    const Eigen::Index d = kraus_ops.front().rows();
    ComplexMatrix sum = ComplexMatrix::Zero(d, d);
    for (const auto &k : kraus_ops) {
        sum.noalias() += k.adjoint() * k;
    }
    return max_abs(sum - ComplexMatrix::Identity(d, d));
}

double unitality_residual(std::span<const ComplexMatrix> kraus_ops) {
    const Eigen::Index d = kraus_ops.front().rows();
    ComplexMatrix sum = ComplexMatrix::Zero(d, d);
    for (const auto &k : kraus_ops) {
        sum.noalias() += k * k.adjoint();
    }
    return max_abs(sum - ComplexMatrix::Identity(d, d));
}

DensityOperator apply_channel(const KrausChannel &ch, const DensityOperator &rho) {
    return DensityOperator(ch(rho.matrix()),
                           rho.normalized() && ch.trace_preserving());
}

KrausChannel adjoint_channel(const KrausChannel &ch) {
    std::vector<ComplexMatrix> ops;
    ops.reserve(ch.kraus_ops().size());
    for (const auto &k : ch.kraus_ops()) {
        ops.push_back(k.adjoint());
    }
    const bool tp = completeness_residual(ops) <= kCompletenessTol;
    return KrausChannel(std::move(ops), tp);
}

KrausChannel compose_channels(const KrausChannel &first, const KrausChannel &second) {
    if (first.dim() != second.dim()) {
        throw DimensionError("cannot compose channels of dimension " +
                             std::to_string(first.dim()) + " and " +
                             std::to_string(second.dim()));
    }
    std::vector<ComplexMatrix> ops;
    ops.reserve(first.kraus_ops().size() * second.kraus_ops().size());
    for (const auto &k2 : second.kraus_ops()) {
        for (const auto &k1 : first.kraus_ops()) {
            ops.push_back(k2 * k1);
        }
    }
    return KrausChannel(std::move(ops),
                        first.trace_preserving() && second.trace_preserving());
}

KrausChannel minimal_kraus(const KrausChannel &ch) {
    const Eigen::Index d = ch.dim();
    const Eigen::Index dd = d * d;
    // Choi matrix from column-stacked Kraus operators
    ComplexMatrix choi = ComplexMatrix::Zero(dd, dd);
    for (const auto &k : ch.kraus_ops()) {
        const Eigen::Map<const ComplexVector> v(k.data(), dd);
        choi.noalias() += v * v.adjoint();
    }
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(choi);
    const RealVector &vals = solver.eigenvalues();
    const double cutoff = 1e-14 * std::max(1.0, vals.maxCoeff());
    std::vector<ComplexMatrix> ops;
    for (Eigen::Index i = dd; i-- > 0;) {
        if (vals[i] <= cutoff) {
            continue;
        }
        ComplexVector v = std::sqrt(vals[i]) * solver.eigenvectors().col(i);
        ops.push_back(Eigen::Map<ComplexMatrix>(v.data(), d, d));
    }
    if (ops.empty()) {
        ops.push_back(ComplexMatrix::Zero(d, d));
    }
    return KrausChannel(std::move(ops), ch.trace_preserving());
}

// ------------------------------------------------------------------ NoiseModel

std::string to_string(NoiseKind kind) {
    switch (kind) {
    case NoiseKind::None:
        return "none";
    case NoiseKind::DepolarizingLocal:
        return "depolarizing-local";
    case NoiseKind::DepolarizingGlobal:
        return "depolarizing-global";
    case NoiseKind::Dephasing:
        return "dephasing";
    case NoiseKind::AmplitudeDamping:
        return "amplitude-damping";
    }
    return "none";
}

NoiseKind parse_noise_kind(std::string_view text) {
    for (NoiseKind k : {NoiseKind::None, NoiseKind::DepolarizingLocal,
                        NoiseKind::DepolarizingGlobal, NoiseKind::Dephasing,
                        NoiseKind::AmplitudeDamping}) {
        if (text == to_string(k)) {
            return k;
        }
    }
    throw PreconditionError("unknown noise kind '" + std::string(text) + "'");
}

NoiseModel::NoiseModel(NoiseKind kind_, double strength_)
    : kind(kind_), strength(strength_) {
    if (!(strength >= 0.0 && strength <= 1.0)) {
        throw PreconditionError("noise strength must lie in [0, 1], got " +
                                std::to_string(strength));
    }
}

KrausChannel noise_channel(const NoiseModel &noise, int n_qubits) {
    const Eigen::Index dim = Eigen::Index{1} << n_qubits;
    const double p = noise.strength;
    switch (noise.kind) {
    case NoiseKind::None:
        return KrausChannel::identity(dim);
    case NoiseKind::DepolarizingLocal:
    case NoiseKind::DepolarizingGlobal: {
        const auto strings = all_pauli_strings(n_qubits);
        const double share = p / static_cast<double>(strings.size());
        std::vector<ComplexMatrix> ops;
        ops.reserve(strings.size());
        ops.push_back(std::sqrt(1.0 - p + share) * pauli_string_matrix(strings[0]));
        if (p > 0.0) {
            for (std::size_t i = 1; i < strings.size(); ++i) {
                ops.push_back(std::sqrt(share) * pauli_string_matrix(strings[i]));
            }
        }
        return KrausChannel(std::move(ops), true);
    }
    case NoiseKind::Dephasing: {
        std::vector<ComplexMatrix> single{std::sqrt(1.0 - p / 2) * pauli_matrix('I'),
                                          std::sqrt(p / 2) * pauli_matrix('Z')};
        return KrausChannel(product_kraus(single, n_qubits), true);
    }
    case NoiseKind::AmplitudeDamping: {
        ComplexMatrix k0(2, 2);
        k0 << 1, 0, 0, std::sqrt(1.0 - p);
        ComplexMatrix k1(2, 2);
        k1 << 0, std::sqrt(p), 0, 0;
        return KrausChannel(product_kraus({k0, k1}, n_qubits), true);
    }
    }
    return KrausChannel::identity(dim);
}

// ----------------------------------------------------------------------- Gates

std::string to_string(GateKind kind) {
    switch (kind) {
    case GateKind::X: return "X";
    case GateKind::Y: return "Y";
    case GateKind::Z: return "Z";
    case GateKind::H: return "H";
    case GateKind::S: return "S";
    case GateKind::T: return "T";
    case GateKind::RX: return "RX";
    case GateKind::RY: return "RY";
    case GateKind::RZ: return "RZ";
    case GateKind::CNOT: return "CNOT";
    case GateKind::CZ: return "CZ";
    case GateKind::SWAP: return "SWAP";
    }
    return "?";
}

std::optional<GateKind> parse_gate_kind(std::string_view name) {
    std::string upper(name);
    std::transform(upper.begin(), upper.end(), upper.begin(),
                   [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    if (upper == "CX") {
        return GateKind::CNOT;
    }
    for (GateKind k : {GateKind::X, GateKind::Y, GateKind::Z, GateKind::H, GateKind::S,
                       GateKind::T, GateKind::RX, GateKind::RY, GateKind::RZ,
                       GateKind::CNOT, GateKind::CZ, GateKind::SWAP}) {
        if (upper == to_string(k)) {
            return k;
        }
    }
    return std::nullopt;
}

int gate_arity(GateKind kind) {
    switch (kind) {
    case GateKind::CNOT:
    case GateKind::CZ:
    case GateKind::SWAP:
        return 2;
    default:
        return 1;
    }
}

bool gate_has_angle(GateKind kind) {
    return kind == GateKind::RX || kind == GateKind::RY || kind == GateKind::RZ;
}

ComplexMatrix gate_matrix(const Gate &gate) {
    using std::numbers::pi;
    const Complex i{0.0, 1.0};
    const double c = std::cos(gate.angle / 2);
    const double s = std::sin(gate.angle / 2);
    ComplexMatrix m;
    switch (gate.kind) {
    case GateKind::X:
        return pauli_matrix('X');
    case GateKind::Y:
        return pauli_matrix('Y');
    case GateKind::Z:
        return pauli_matrix('Z');
    case GateKind::H:
        m.resize(2, 2);
        m << 1, 1, 1, -1;
        return m / std::sqrt(2.0);
    case GateKind::S:
        m.resize(2, 2);
        m << 1, 0, 0, i;
        return m;
    case GateKind::T:
        m.resize(2, 2);
        m << 1, 0, 0, std::exp(i * (pi / 4));
        return m;
    case GateKind::RX:
        m.resize(2, 2);
        m << c, -i * s, -i * s, c;
        return m;
    case GateKind::RY:
        m.resize(2, 2);
        m << c, -s, s, c;
        return m;
    case GateKind::RZ:
        m.resize(2, 2);
        m << std::exp(-i * (gate.angle / 2)), 0, 0, std::exp(i * (gate.angle / 2));
        return m;
    case GateKind::CNOT:
        m = ComplexMatrix::Zero(4, 4);
        m(0, 0) = m(1, 1) = m(2, 3) = m(3, 2) = 1;
        return m;
    case GateKind::CZ:
        m = ComplexMatrix::Identity(4, 4);
        m(3, 3) = -1;
        return m;
    case GateKind::SWAP:
        m = ComplexMatrix::Zero(4, 4);
        m(0, 0) = m(1, 2) = m(2, 1) = m(3, 3) = 1;
        return m;
    }
    return m;
}

// ----------------------------------------------------------------- GateCircuit

GateCircuit::GateCircuit(int n_qubits, std::vector<Gate> gates) : n_qubits_(n_qubits) {
    if (n_qubits < 1) {
        throw DimensionError("circuit needs at least one qubit");
    }
    check_dimension_cap(Eigen::Index{1} << std::min(n_qubits, 62));
    for (auto &g : gates) {
        add(std::move(g));
    }
}

GateCircuit &GateCircuit::add(Gate gate) {
    if (static_cast<int>(gate.qubits.size()) != gate_arity(gate.kind)) {
        throw DimensionError(to_string(gate.kind) + " acts on " +
                             std::to_string(gate_arity(gate.kind)) + " qubit(s), got " +
                             std::to_string(gate.qubits.size()));
    }
    qubit_mask(gate.qubits, n_qubits_);
    if (!gate_has_angle(gate.kind)) {
        gate.angle = 0.0;
    }
    gates_.push_back(std::move(gate));
    return *this;
}

ComplexMatrix GateCircuit::unitary() const {
    ComplexMatrix u = ComplexMatrix::Identity(dim(), dim());
    for (const auto &g : gates_) {
        u = apply_local_left(u, gate_matrix(g), g.qubits, n_qubits_);
    }
    return u;
}

GateCircuit inverse_circuit(const GateCircuit &circ) {
    using std::numbers::pi;
    GateCircuit out(circ.n_qubits());
    for (auto it = circ.gates().rbegin(); it != circ.gates().rend(); ++it) {
        Gate g = *it;
        switch (g.kind) {
        case GateKind::RX:
        case GateKind::RY:
        case GateKind::RZ:
            g.angle = -g.angle;
            break;
        case GateKind::S:
            g = Gate{GateKind::RZ, g.qubits, -pi / 2};
            break;
        case GateKind::T:
            g = Gate{GateKind::RZ, g.qubits, -pi / 4};
            break;
        default:
            break;
        }
        out.add(std::move(g));
    }
    return out;
}

KrausChannel noisy_circuit_channel(const GateCircuit &circ, const NoiseModel &noise) {
    const int n = circ.n_qubits();
    const Eigen::Index d = circ.dim();
    KrausChannel total = KrausChannel::identity(d);
    const std::optional<KrausChannel> global_noise =
        noise.kind == NoiseKind::DepolarizingGlobal
            ? std::optional<KrausChannel>(noise_channel(noise, n))
            : std::nullopt;

    for (const auto &g : circ.gates()) {
        const ComplexMatrix u = embed_operator(gate_matrix(g), g.qubits, n);
        std::vector<ComplexMatrix> step;
        if (noise.kind == NoiseKind::None) {
            step.push_back(u);
        } else if (global_noise) {
            for (const auto &k : global_noise->kraus_ops()) {
                step.push_back(k * u);
            }
        } else {
            const KrausChannel local =
                noise_channel(noise, static_cast<int>(g.qubits.size()));
            for (const auto &k : local.kraus_ops()) {
                step.push_back(embed_operator(k, g.qubits, n) * u);
            }
        }
        total = compose_channels(total, KrausChannel(std::move(step), true));
        if (static_cast<Eigen::Index>(total.kraus_ops().size()) > d * d) {
            total = minimal_kraus(total);
        }
    }
    return total;
}

DensityOperator prepare_noisy_state(const GateCircuit &circ, const NoiseModel &noise) {
    const DensityOperator zero = DensityOperator::basis(circ.dim(), 0);
    return apply_channel(noisy_circuit_channel(circ, noise), zero);
}

DensityOperator dual_state(const GateCircuit &circ, const NoiseModel &noise,
                           const std::optional<NoiseModel> &inverse_noise) {
    const KrausChannel inverse =
        noisy_circuit_channel(inverse_circuit(circ), inverse_noise.value_or(noise));
    const ComplexMatrix zero = DensityOperator::basis(circ.dim(), 0).matrix();
    return DensityOperator(adjoint_channel(inverse)(zero), false);
}

// ------------------------------------------------------- local operator action

ComplexMatrix apply_local_left(const ComplexMatrix &a, const ComplexMatrix &op,
                               std::span<const int> qubits, int n_total) {
    const Eigen::Index dim = Eigen::Index{1} << n_total;
    const int k = static_cast<int>(qubits.size());
    const Eigen::Index local = Eigen::Index{1} << k;
    if (a.rows() != dim) {
        throw DimensionError("local operator applied to a matrix of wrong size");
    }
    if (op.rows() != local || op.cols() != local) {
        throw DimensionError("local operator size does not match its qubit count");
    }
    const std::uint64_t mask = qubit_mask(qubits, n_total);

    // offsets[s]: flat-index contribution of local basis state s
    std::vector<Eigen::Index> offsets(static_cast<std::size_t>(local), 0);
    for (Eigen::Index s = 0; s < local; ++s) {
        Eigen::Index off = 0;
        for (int j = 0; j < k; ++j) {
            if ((s >> (k - 1 - j)) & 1) {
                off |= Eigen::Index{1} << (n_total - 1 - qubits[static_cast<std::size_t>(j)]);
            }
        }
        offsets[static_cast<std::size_t>(s)] = off;
    }

    ComplexMatrix out(a.rows(), a.cols());
    ComplexMatrix gathered(local, a.cols());
    for (Eigen::Index base = 0; base < dim; ++base) {
        if (static_cast<std::uint64_t>(base) & mask) {
            continue;
        }
        for (Eigen::Index s = 0; s < local; ++s) {
            gathered.row(s) = a.row(base + offsets[static_cast<std::size_t>(s)]);
        }
        const ComplexMatrix mixed = op * gathered;
        for (Eigen::Index s = 0; s < local; ++s) {
            out.row(base + offsets[static_cast<std::size_t>(s)]) = mixed.row(s);
        }
    }
    return out;
}

ComplexMatrix conjugate_local(const ComplexMatrix &a, const ComplexMatrix &op,
                              std::span<const int> qubits, int n_total) {
    // op a op^dagger = (op (op a)^dagger)^dagger
    const ComplexMatrix left = apply_local_left(a, op, qubits, n_total);
    return apply_local_left(left.adjoint(), op, qubits, n_total).adjoint();
}

ComplexMatrix apply_local_channel(const ComplexMatrix &a, const KrausChannel &ch,
                                  std::span<const int> qubits, int n_total) {
    ComplexMatrix out = ComplexMatrix::Zero(a.rows(), a.cols());
    for (const auto &k : ch.kraus_ops()) {
        out += conjugate_local(a, k, qubits, n_total);
    }
    return out;
}

ComplexMatrix embed_operator(const ComplexMatrix &op, std::span<const int> qubits,
                             int n_total) {
    const Eigen::Index dim = Eigen::Index{1} << n_total;
    check_dimension_cap(dim);
    return apply_local_left(ComplexMatrix::Identity(dim, dim), op, qubits, n_total);
}

} // namespace purify
