// Copyright 2026 The hbent Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hbent/recognition.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace hbent::recognition {

namespace {

constexpr std::size_t kMaxBonds = 4;

void require_two_qubits(const StateVector &s, const char *what) {
    const auto &subs = s.layout().subsystems();
    if (subs.size() != 2 || subs[0].dim != 2 || subs[1].dim != 2) {
        throw InvalidArgument(std::string(what) + " must be a two-qubit state");
    }
}

void require_psi_span(const StateVector &s) {
    if (std::abs(s[3]) > tol::kStructural) {
        throw DomainError("bond state leaves the psi-span (|11> amplitude " +
                          std::to_string(std::abs(s[3])) + ")");
    }
}

// psi-coefficients (c1, c2, c3) -> amplitudes on (|00>, |01>, |10>, |11>)
CVector psi_amplitudes(Complex c1, Complex c2, Complex c3) {
    CVector v(4);
    v << c3, c2, c1, 0.0;
    return v;
}

std::uint64_t pow3(std::size_t n) {
    std::uint64_t p = 1;
    for (std::size_t i = 0; i < n; ++i) {
        p *= 3;
    }
    return p;
}

} // namespace

// ---------------------------------------------------------------------------
// EigenBasis and ligands

EigenBasis::EigenBasis(std::array<StateVector, 3> eps) : eps_(std::move(eps)) {
    for (std::size_t j = 0; j < 3; ++j) {
        require_two_qubits(eps_[j], "eigenbasis vector");
        require_psi_span(eps_[j]);
        for (std::size_t i = 0; i < j; ++i) {
            if (std::abs(eps_[i].amplitudes().dot(eps_[j].amplitudes())) >
                tol::kStructural) {
                throw InvalidArgument("eigenbasis vectors are not orthogonal");
            }
        }
    }
}

EigenBasis EigenBasis::from_psi_coefficients(
    const std::array<std::array<Complex, 3>, 3> &rows) {
    const auto layout = RegisterLayout::qubits({kReceptorDonor, kAcceptor});
    auto make = [&](const std::array<Complex, 3> &c) {
        return StateVector(layout, psi_amplitudes(c[0], c[1], c[2]));
    };
    return EigenBasis({make(rows[0]), make(rows[1]), make(rows[2])});
}

EigenBasis EigenBasis::standard() {
    const double s2 = 1.0 / std::sqrt(2.0);
    const double s3 = 1.0 / std::sqrt(3.0);
    const double s6 = 1.0 / std::sqrt(6.0);
    return from_psi_coefficients({{{s2, 0.0, -s2},
                                   {s3, s3, s3},
                                   {s6, -2.0 * s6, s6}}});
}

LigandProfile ligand_b() {
    const double s3 = 1.0 / std::sqrt(3.0);
    return {"B", {s3, s3, s3, bonds::Delocalization::Proton}};
}

LigandProfile ligand_c() {
    const double s6 = 1.0 / std::sqrt(6.0);
    return {"C", {s6, -2.0 * s6, s6, bonds::Delocalization::Proton}};
}

LigandProfile ligand_d() {
    const double s6 = 1.0 / std::sqrt(6.0);
    return {"D", {s6, 2.0 * s6, s6, bonds::Delocalization::Proton}};
}

StateVector ligand_bond(const LigandProfile &ligand) {
    return bonds::unified_state(ligand.coeffs, kLigandDonor, kAcceptor);
}

// ---------------------------------------------------------------------------
// Conformational dynamics

std::array<Complex, 3> decompose_in_eigenbasis(const StateVector &state,
                                               const EigenBasis &basis) {
    require_two_qubits(state, "bond state");
    require_psi_span(state);
    std::array<Complex, 3> lambda{};
    double total = 0.0;
    for (std::size_t j = 0; j < 3; ++j) {
        lambda[j] = basis[j].amplitudes().dot(state.amplitudes());
        total += std::norm(lambda[j]);
    }
    if (std::abs(total - 1.0) > tol::kStructural) {
        throw NumericalError("eigenbasis does not resolve the bond state");
    }
    return lambda;
}

StateVector apply_ua(const StateVector &bond_state, const EigenBasis &basis,
                     const ConformationRegister &conformations) {
    const auto lambda = decompose_in_eigenbasis(bond_state, basis);
    const RegisterLayout layout = bond_state.layout().concat(
        RegisterLayout({{conformations.subsystem, 3}}));
    CVector out = CVector::Zero(12);
    for (std::size_t b = 0; b < 4; ++b) {
        for (std::size_t j = 0; j < 3; ++j) {
            out[static_cast<Eigen::Index>(b * 3 + j)] = lambda[j] * basis[j][b];
        }
    }
    return StateVector::normalized(layout, std::move(out));
}

StateVector apply_ua_multi(const std::vector<StateVector> &bond_states,
                           const std::vector<EigenBasis> &bases) {
    const std::size_t n = bond_states.size();
    if (n < 1 || n > kMaxBonds) {
        throw InvalidArgument("apply_ua_multi supports 1 to 4 bonds");
    }
    if (bases.size() != n) {
        throw InvalidArgument("apply_ua_multi needs one eigenbasis per bond");
    }
    std::vector<std::array<Complex, 3>> lambdas;
    RegisterLayout layout;
    for (std::size_t k = 0; k < n; ++k) {
        lambdas.push_back(decompose_in_eigenbasis(bond_states[k], bases[k]));
        layout = layout.concat(bond_states[k].layout());
    }
    for (std::size_t k = 0; k < n; ++k) {
        layout = layout.concat(
            RegisterLayout({{"chi" + std::to_string(k + 1), 3}}));
    }

    const std::size_t bond_dim = std::size_t{1} << (2 * n);
    const std::uint64_t conf_dim = pow3(n);
    CVector out = CVector::Zero(static_cast<Eigen::Index>(bond_dim * conf_dim));
    for (std::size_t b = 0; b < bond_dim; ++b) {
        for (std::uint64_t t = 0; t < conf_dim; ++t) {
            Complex amp = 1.0;
            std::size_t brem = b;
            std::uint64_t trem = t;
            // least significant bond / conformation digit is bond n
            for (std::size_t k = n; k-- > 0 && amp != Complex(0.0);) {
                const std::size_t local = brem % 4;
                const auto j = static_cast<std::size_t>(trem % 3);
                brem /= 4;
                trem /= 3;
                amp *= lambdas[k][j] * bases[k][j][local];
            }
            out[static_cast<Eigen::Index>(b * conf_dim + t)] = amp;
        }
    }
    return StateVector::normalized(layout, std::move(out));
}

std::vector<double>
branch_weights(const StateVector &joint,
               const std::vector<std::string> &conformations) {
    const auto reduced = partial_trace(joint, conformations);
    std::vector<double> w(reduced.dim());
    for (std::size_t i = 0; i < w.size(); ++i) {
        w[i] = std::max(0.0, reduced(i, i).real());
    }
    return w;
}

// ---------------------------------------------------------------------------
// Entanglement swapping

CMatrix ligand_measurement_basis(Complex l1, Complex l2) {
    if (std::abs(std::norm(l1) + std::norm(l2) - 1.0) > tol::kStructural) {
        throw InvalidArgument("measurement amplitudes must be normalized");
    }
    CMatrix basis(2, 2);
    // column 0: l1|1> + l2|0>; column 1: conj(l2)|1> - conj(l1)|0>
    basis << l2, -std::conj(l1), l1, std::conj(l2);
    return basis;
}

StateVector default_x2_init() {
    const double s2 = 1.0 / std::sqrt(2.0);
    CVector v(2);
    v << -s2, s2;
    return {RegisterLayout::qubits({kReceptorDonor}), std::move(v)};
}

SwapResult swap_protocol(const LigandProfile &ligand,
                         const StateVector &x2_init, std::uint64_t seed) {
    ligand.coeffs.validate();
    if (std::abs(ligand.coeffs.c3) > tol::kStructural) {
        throw DomainError("swap protocol requires a ligand without ionic "
                          "component (c3 = 0); ligand " +
                          ligand.name + " has |c3| = " +
                          std::to_string(std::abs(ligand.coeffs.c3)));
    }
    const auto &x2_layout = x2_init.layout().subsystems();
    if (x2_layout.size() != 1 || x2_layout[0].dim != 2) {
        throw InvalidArgument("X2 preparation must be a single qubit");
    }
    const StateVector x2(RegisterLayout::qubits({kReceptorDonor}),
                         x2_init.amplitudes());

    SwapTranscript transcript;
    const StateVector joint = tensor(ligand_bond(ligand), x2);
    transcript.steps.push_back("prepare (XN,X1) ligand bond with X2");

    const double s2 = 1.0 / std::sqrt(2.0);
    const CMatrix basis = ligand_measurement_basis(s2, s2);
    const auto measured = measure_projective(joint, kLigandDonor, basis, seed);
    transcript.outcome = measured.outcome;
    transcript.probability = measured.probability;
    transcript.steps.push_back("measure XN -> outcome " +
                               std::to_string(measured.outcome));

    StateVector pair = contract(measured.post_state, kLigandDonor,
                                basis.col(static_cast<Eigen::Index>(
                                    measured.outcome)));
    if (measured.outcome == 1) {
        CMatrix z(2, 2);
        z << 1.0, 0.0, 0.0, -1.0;
        pair = apply_operator(pair, {kAcceptor}, z);
        transcript.pauli_z = true;
        transcript.steps.push_back("apply Z on X1");
    }

    // rows: targets |00>,|01>,|10>,|11>; built as sum |out><in|
    CMatrix u = CMatrix::Zero(4, 4);
    auto map = [&](std::size_t target, const CVector &in) {
        CVector out = CVector::Zero(4);
        out[static_cast<Eigen::Index>(target)] = 1.0;
        u += out * in.adjoint();
    };
    CVector in(4);
    in << -s2, s2, 0.0, 0.0; // (|01> - |00>)/sqrt2
    map(1, in);
    in << 0.0, 0.0, s2, s2; // (|11> + |10>)/sqrt2
    map(3, in);
    in << 0.0, 0.0, -s2, s2; // (|11> - |10>)/sqrt2
    map(2, in);
    in << s2, s2, 0.0, 0.0; // (|01> + |00>)/sqrt2
    map(0, in);
    pair = apply_operator(pair, {kAcceptor, kReceptorDonor}, u);
    transcript.joint_unitary = true;
    transcript.steps.push_back("apply joint unitary on (X1,X2)");

    return {std::move(pair), std::move(transcript)};
}

SwapResult swap_protocol(const LigandProfile &ligand, std::uint64_t seed) {
    return swap_protocol(ligand, default_x2_init(), seed);
}

StateVector swap_distribute(const LigandProfile &ligand,
                            const EigenBasis &basis) {
    return bonds::unified_state(ligand.coeffs,
                                basis[0].layout().subsystems()[0].label,
                                basis[0].layout().subsystems()[1].label);
}

// ---------------------------------------------------------------------------
// Classification and capacity

RecognitionOutcome classify(const LigandProfile &ligand,
                            const EigenBasis &basis, double tol) {
    return classify_multi({ligand}, {basis}, tol);
}

RecognitionOutcome classify_multi(const std::vector<LigandProfile> &bonds,
                                  const std::vector<EigenBasis> &bases,
                                  double tol) {
    if (!(tol > 0.0 && tol < 0.5)) {
        throw InvalidArgument("classification tolerance must lie in (0, 0.5)");
    }
    if (bonds.size() != bases.size() || bonds.empty() ||
        bonds.size() > kMaxBonds) {
        throw InvalidArgument("classify needs 1 to 4 bonds with one basis each");
    }
    const std::size_t n = bonds.size();
    std::vector<StateVector> swapped;
    std::vector<EigenBasis> relabeled;
    std::vector<std::string> conf_labels;
    for (std::size_t k = 0; k < n; ++k) {
        // distinct labels per bond so the joint register is well formed
        const std::string suffix = n == 1 ? "" : std::to_string(k + 1);
        const auto layout = RegisterLayout::qubits(
            {kReceptorDonor + suffix, kAcceptor + suffix});
        swapped.emplace_back(layout,
                             swap_distribute(bonds[k], bases[k]).amplitudes());
        std::array<StateVector, 3> eps{
            StateVector(layout, bases[k][0].amplitudes()),
            StateVector(layout, bases[k][1].amplitudes()),
            StateVector(layout, bases[k][2].amplitudes())};
        relabeled.emplace_back(std::move(eps));
        conf_labels.push_back("chi" + std::to_string(k + 1));
    }
    const auto joint = apply_ua_multi(swapped, relabeled);

    RecognitionOutcome out;
    out.conformation_distribution = branch_weights(joint, conf_labels);
    const auto &w = out.conformation_distribution;
    const auto best = static_cast<std::size_t>(
        std::max_element(w.begin(), w.end()) - w.begin());
    out.coherence_residual = std::max(0.0, 1.0 - w[best]);

    std::vector<int> tuple(n);
    std::size_t rem = best;
    for (std::size_t k = n; k-- > 0;) {
        tuple[k] = static_cast<int>(rem % 3) + 1;
        rem /= 3;
    }
    const bool resting =
        std::all_of(tuple.begin(), tuple.end(), [](int j) { return j == 1; });
    if (w[best] >= 1.0 - tol && !resting) {
        out.verdict = Verdict::Agonist;
        out.agonist = std::move(tuple);
    }
    return out;
}

std::vector<std::vector<int>>
enumerate_agonists(const std::vector<EigenBasis> &bases) {
    const std::size_t n = bases.size();
    if (n < 1 || n > kMaxBonds) {
        throw InvalidArgument("enumerate_agonists supports 1 to 4 bonds");
    }
    std::vector<EigenBasis> relabeled;
    std::vector<std::string> conf_labels;
    for (std::size_t k = 0; k < n; ++k) {
        const auto layout = RegisterLayout::qubits(
            {kReceptorDonor + std::to_string(k + 1),
             kAcceptor + std::to_string(k + 1)});
        relabeled.emplace_back(std::array<StateVector, 3>{
            StateVector(layout, bases[k][0].amplitudes()),
            StateVector(layout, bases[k][1].amplitudes()),
            StateVector(layout, bases[k][2].amplitudes())});
        conf_labels.push_back("chi" + std::to_string(k + 1));
    }

    std::vector<std::vector<int>> agonists;
    const std::uint64_t tuples = pow3(n);
    for (std::uint64_t t = 0; t < tuples; ++t) {
        std::vector<int> tuple(n);
        std::uint64_t rem = t;
        for (std::size_t k = n; k-- > 0;) {
            tuple[k] = static_cast<int>(rem % 3) + 1;
            rem /= 3;
        }
        std::vector<StateVector> inputs;
        for (std::size_t k = 0; k < n; ++k) {
            inputs.push_back(relabeled[k][static_cast<std::size_t>(tuple[k] - 1)]);
        }
        const auto w = branch_weights(apply_ua_multi(inputs, relabeled),
                                      conf_labels);
        const bool single = w[t] >= 1.0 - tol::kStructural;
        const bool resting = t == 0;
        if (single && !resting) {
            agonists.push_back(std::move(tuple));
        }
    }
    return agonists;
}

std::uint64_t capacity(int n) {
    if (n < 1 || n > 20) {
        throw InvalidArgument("capacity is defined for 1 <= n <= 20");
    }
    return pow3(static_cast<std::size_t>(n)) - 1;
}

BondCount min_bonds(std::uint64_t ligands) {
    if (ligands < 1) {
        throw InvalidArgument("min_bonds needs at least one ligand");
    }
    const double exact =
        std::log(static_cast<double>(ligands) + 1.0) / std::log(3.0);
    return {exact, std::round(exact * 100.0) / 100.0};
}

Marginals reduced_marginals(const LigandProfile &ligand) {
    const auto bond = ligand_bond(ligand);
    return {partial_trace(bond, {kLigandDonor}),
            partial_trace(bond, {kAcceptor})};
}

} // namespace hbent::recognition
