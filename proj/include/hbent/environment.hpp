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

#pragma once

/**
 * @file
 * Long-time endpoints of a bond coupled to its surroundings: the Gibbs state
 * over a supplied set of energy eigenstates, and full dephasing in a chosen
 * basis.
 */

#include <array>
#include <optional>
#include <vector>

#include "hbent/qmath.hpp"

namespace hbent::environment {

/// Mutually orthogonal eigenstates carrying either energies or
/// pre-computed Boltzmann weights.
class EigenSystem {
  public:
    static EigenSystem from_energies(std::vector<double> energies,
                                     std::vector<StateVector> states);
    /// Weights must be non-negative and sum to 1 within 1e-9.
    static EigenSystem from_weights(std::vector<double> weights,
                                    std::vector<StateVector> states);

    [[nodiscard]] const std::vector<StateVector> &states() const {
        return states_;
    }
    [[nodiscard]] const std::optional<std::vector<double>> &energies() const {
        return energies_;
    }
    [[nodiscard]] const std::optional<std::vector<double>> &weights() const {
        return weights_;
    }
    [[nodiscard]] std::size_t size() const { return states_.size(); }

  private:
    explicit EigenSystem(std::vector<StateVector> states);

    std::vector<StateVector> states_;
    std::optional<std::vector<double>> energies_;
    std::optional<std::vector<double>> weights_;
};

/// e^{-beta E_m} / Z, evaluated with the ground energy shifted to zero.
std::vector<double> boltzmann_weights(const std::vector<double> &energies,
                                      double inverse_temperature);

/// sum_m e^{-beta E_m}/Z |E_m><E_m|. Only the product beta * E matters, so
/// any energy unit works with beta in the reciprocal unit.
DensityMatrix thermal_state(const EigenSystem &sys, double inverse_temperature);

/// sum_m w_m |E_m><E_m| with the weights stored in `sys`.
DensityMatrix thermal_state_from_weights(const EigenSystem &sys);

/// Removes every off-diagonal element in the orthonormal basis given by the
/// columns of `basis`, which must span the whole space.
DensityMatrix dephase(const DensityMatrix &rho, const CMatrix &basis);
/// Dephasing in the computational basis.
DensityMatrix dephase(const DensityMatrix &rho);

/// Ground state plus two excitations of a symmetric H-bond in the span of
/// {|10>, |01>, |00>} on (donor, acceptor):
///   (psi1 + psi2 + psi3)/sqrt3, (psi1 + psi2 - 2 psi3)/sqrt6,
///   (psi1 - psi2)/sqrt2.
std::array<StateVector, 3> hbond_excitations(const std::string &donor = "X1",
                                             const std::string &acceptor = "X2");

} // namespace hbent::environment
