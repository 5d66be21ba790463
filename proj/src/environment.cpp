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

#include "hbent/environment.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "hbent/bonds.hpp"

namespace hbent::environment {

EigenSystem::EigenSystem(std::vector<StateVector> states)
    : states_(std::move(states)) {
    if (states_.empty()) {
        throw InvalidArgument("eigensystem needs at least one level");
    }
    for (std::size_t i = 0; i < states_.size(); ++i) {
        if (!(states_[i].layout() == states_.front().layout())) {
            throw InvalidArgument("eigensystem levels must share one layout");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (std::abs(states_[i].inner(states_[j])) > tol::kSpectral) {
                throw InvalidArgument("eigensystem levels " +
                                      std::to_string(j) + " and " +
                                      std::to_string(i) +
                                      " are not orthogonal");
            }
        }
    }
}

EigenSystem EigenSystem::from_energies(std::vector<double> energies,
                                       std::vector<StateVector> states) {
    if (energies.size() != states.size()) {
        throw InvalidArgument("one energy per level is required");
    }
    for (double e : energies) {
        if (!std::isfinite(e)) {
            throw InvalidArgument("energies must be finite");
        }
    }
    EigenSystem sys(std::move(states));
    sys.energies_ = std::move(energies);
    return sys;
}

EigenSystem EigenSystem::from_weights(std::vector<double> weights,
                                      std::vector<StateVector> states) {
    if (weights.size() != states.size()) {
        throw InvalidArgument("one weight per level is required");
    }
    for (double w : weights) {
        if (!std::isfinite(w) || w < 0.0) {
            throw InvalidArgument("weights must be finite and non-negative");
        }
    }
    const double sum = std::accumulate(weights.begin(), weights.end(), 0.0);
    if (std::abs(sum - 1.0) > tol::kStructural) {
        throw InvalidArgument("weights sum to " + std::to_string(sum) +
                              ", expected 1");
    }
    EigenSystem sys(std::move(states));
    sys.weights_ = std::move(weights);
    return sys;
}

std::vector<double> boltzmann_weights(const std::vector<double> &energies,
                                      double inverse_temperature) {
    if (energies.empty()) {
        throw InvalidArgument("no energy levels");
    }
    if (!(inverse_temperature >= 0.0) || !std::isfinite(inverse_temperature)) {
        throw InvalidArgument("inverse temperature must be finite and >= 0");
    }
    const double ground = *std::min_element(energies.begin(), energies.end());
    std::vector<double> w(energies.size());
    double z = 0.0;
    for (std::size_t m = 0; m < energies.size(); ++m) {
        w[m] = std::exp(-inverse_temperature * (energies[m] - ground));
        z += w[m];
    }
    for (auto &x : w) {
        x /= z;
    }
    return w;
}

DensityMatrix thermal_state(const EigenSystem &sys, double inverse_temperature) {
    if (!sys.energies()) {
        throw InvalidArgument("thermal_state needs level energies");
    }
    return DensityMatrix::mixture(
        boltzmann_weights(*sys.energies(), inverse_temperature), sys.states());
}

DensityMatrix thermal_state_from_weights(const EigenSystem &sys) {
    if (!sys.weights()) {
        throw InvalidArgument("thermal_state_from_weights needs level weights");
    }
    return DensityMatrix::mixture(*sys.weights(), sys.states());
}

DensityMatrix dephase(const DensityMatrix &rho, const CMatrix &basis) {
    const auto n = static_cast<Eigen::Index>(rho.dim());
    if (basis.rows() != n || basis.cols() != n) {
        throw InvalidArgument("dephasing basis is incomplete: need " +
                              std::to_string(n) + " vectors of length " +
                              std::to_string(n));
    }
    if (!is_orthonormal(basis)) {
        throw InvalidArgument("dephasing basis is not orthonormal");
    }
    CMatrix out = CMatrix::Zero(n, n);
    for (Eigen::Index k = 0; k < n; ++k) {
        const CVector v = basis.col(k);
        const double p = v.dot(rho.entries() * v).real();
        out.noalias() += p * (v * v.adjoint());
    }
    return {rho.layout(), std::move(out)};
}

DensityMatrix dephase(const DensityMatrix &rho) {
    const auto n = static_cast<Eigen::Index>(rho.dim());
    CMatrix out = CMatrix::Zero(n, n);
    out.diagonal() = rho.entries().diagonal().real().cast<Complex>();
    return {rho.layout(), std::move(out)};
}

std::array<StateVector, 3> hbond_excitations(const std::string &donor,
                                             const std::string &acceptor) {
    const double s3 = 1.0 / std::sqrt(3.0);
    const double s6 = 1.0 / std::sqrt(6.0);
    const double s2 = 1.0 / std::sqrt(2.0);
    using bonds::HBondAmplitudes;
    return {bonds::unified_state(HBondAmplitudes{s3, s3, s3}, donor, acceptor),
            bonds::unified_state(HBondAmplitudes{s6, s6, -2.0 * s6}, donor,
                                 acceptor),
            bonds::unified_state(HBondAmplitudes{s2, -s2, 0.0}, donor,
                                 acceptor)};
}

} // namespace hbent::environment
