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

#include "hbent/bonds.hpp"

#include <cmath>
#include <sstream>

namespace hbent::bonds {

namespace {

void require_unit(double norm2, const char *what) {
    if (!std::isfinite(norm2) || std::abs(norm2 - 1.0) > tol::kStructural) {
        std::ostringstream msg;
        msg << what << " must have unit squared norm (got " << norm2 << ")";
        throw InvalidArgument(msg.str());
    }
}

} // namespace

void CovalentAmplitudes::validate() const {
    require_unit(std::norm(a) + std::norm(b), "covalent split (a, b)");
    require_unit(std::norm(alpha) + std::norm(beta) + std::norm(gamma),
                 "bond amplitudes (alpha, beta, gamma)");
}

void HBondAmplitudes::validate() const {
    require_unit(std::norm(c1) + std::norm(c2) + std::norm(c3),
                 "H-bond amplitudes (c1, c2, c3)");
}

StateVector covalent_qubit(const CovalentAmplitudes &amps) {
    amps.validate();
    CVector v(4);
    v << amps.beta, amps.a * amps.alpha, amps.b * amps.alpha, amps.gamma;
    return {RegisterLayout::qubits({"e1", "e2"}), std::move(v)};
}

StateVector covalent_qutrit(const CovalentAmplitudes &amps) {
    amps.validate();
    CVector v = CVector::Zero(9);
    v[1 * 3 + 1] = amps.alpha;
    v[2 * 3 + 0] = amps.beta;
    v[0 * 3 + 2] = amps.gamma;
    return {RegisterLayout::qutrits({"X", "Y"}), std::move(v)};
}

StateVector classical_hbond(Complex alpha_p, Complex beta_p) {
    require_unit(std::norm(alpha_p) + std::norm(beta_p), "(alpha', beta')");
    CVector pair = CVector::Zero(9);
    pair[1 * 3 + 1] = alpha_p;
    pair[2 * 3 + 0] = beta_p;
    const StateVector x1h(RegisterLayout::qutrits({"X1", "H"}), pair);
    const auto x2 = StateVector::basis_state(RegisterLayout::qutrits({"X2"}), {2});
    return tensor(x1h, x2);
}

StateVector covalent_hbond_electron(Complex alpha_m, Complex delta_m) {
    require_unit(std::norm(alpha_m) + std::norm(delta_m), "(alpha-, delta-)");
    const auto sigma =
        StateVector::basis_state(RegisterLayout::qutrits({"sigma"}), {2});
    CVector pair = CVector::Zero(9);
    pair[0 * 3 + 2] = alpha_m;
    pair[1 * 3 + 1] = delta_m;
    const StateVector rest(RegisterLayout::qutrits({"sigma*", "X2"}), pair);
    return tensor(sigma, rest);
}

StateVector covalent_hbond_proton(Complex alpha_p, Complex delta_p) {
    require_unit(std::norm(alpha_p) + std::norm(delta_p), "(alpha+, delta+)");
    CVector v(4);
    v << 0.0, delta_p, alpha_p, 0.0;
    return {RegisterLayout::qubits({"X1", "X2"}), std::move(v)};
}

StateVector unified_state(const HBondAmplitudes &amps,
                          const std::string &donor,
                          const std::string &acceptor) {
    amps.validate();
    CVector v(4);
    v << amps.c3, amps.c2, amps.c1, 0.0;
    return {RegisterLayout::qubits({donor, acceptor}), std::move(v)};
}

CovalentAmplitudes polarize(const CovalentAmplitudes &amps, Complex beta_new) {
    amps.validate();
    if (!(std::abs(beta_new) > std::abs(amps.beta))) {
        throw DomainError("polarize: ionic amplitude must strictly increase");
    }
    if (std::abs(beta_new) > 1.0) {
        throw InvalidArgument("polarize: |beta_new| exceeds 1");
    }
    const double covalent = std::sqrt(std::max(0.0, 1.0 - std::norm(beta_new)));
    const Complex phase = std::abs(amps.alpha) > 0.0
                              ? amps.alpha / std::abs(amps.alpha)
                              : Complex(1.0, 0.0);
    CovalentAmplitudes out = amps;
    out.alpha = covalent * phase;
    out.beta = beta_new;
    out.gamma = 0.0;
    if (!(std::norm(out.alpha) < std::norm(amps.alpha))) {
        throw DomainError("polarize: covalent weight would not decrease");
    }
    return out;
}

} // namespace hbent::bonds
