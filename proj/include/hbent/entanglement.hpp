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
 * Entanglement quantifiers: entropy of entanglement for pure states, the
 * closed two-qubit entanglement of formation via the concurrence, and a
 * numerical convex-roof search that works for any bipartite cut of a small
 * register.
 */

#include <cstdint>
#include <string>
#include <vector>

#include "hbent/qmath.hpp"

namespace hbent::entanglement {

/// One side of a bipartition, given as subsystem labels. The other side is
/// the complement within the layout.
using Cut = std::vector<std::string>;

double binary_entropy(double p);

/// Von Neumann entropy (bits) of the reduced state on either side of `cut`.
/// Throws InvalidArgument when the cut leaves one side empty.
double entropy_of_entanglement(const StateVector &psi, const Cut &cut);

/// Closed-form concurrence for a state on exactly two qubits.
double concurrence_2q(const DensityMatrix &rho);
/// h((1 + sqrt(1 - C^2)) / 2).
double eof_from_concurrence(double concurrence);
double eof_2q(const DensityMatrix &rho);

struct DecompositionEnsemble {
    std::vector<double> weights;
    std::vector<StateVector> states;

    [[nodiscard]] CMatrix reconstruct() const;
    /// sum_i w_i E(psi_i) across `cut`.
    [[nodiscard]] double average_entanglement(const Cut &cut) const;
};

struct RoofOptions {
    /// Number of ensemble members; 0 selects rank(rho)^2.
    std::size_t ensemble_size = 0;
    /// Restart 0 always starts from the eigendecomposition; the others start
    /// from Haar-random isometries.
    std::size_t restarts = 4;
    /// Sweep cap per restart.
    std::size_t max_iters = 2000;
    std::uint64_t seed = 0;
    /// A sweep improving the objective by less than this shrinks the step;
    /// convergence is declared once the step is below `min_step`.
    double sweep_tolerance = 1e-7;
    double min_step = 1e-5;
    /// Restarts run on up to this many threads. Results do not depend on it.
    unsigned threads = 1;
};

struct RoofResult {
    double value = 0.0;
    DecompositionEnsemble witness;
    bool converged = false;
    std::size_t sweeps = 0;       ///< sweeps of the winning restart
    std::size_t best_restart = 0; ///< index of the winning restart
    double eigen_average = 0.0;   ///< objective of the spectral ensemble
};

/// Entanglement of formation by direct minimization over pure-state
/// decompositions of `rho`.
///
/// Every decomposition into K members is
///   |psi~_k> = sum_i U_ki sqrt(lambda_i) |e_i>
/// for an isometry U (K x rank). The search rotates pairs of members with
/// complex Givens rotations, which preserves sum_k |psi~_k><psi~_k| = rho
/// exactly, and accepts only improving moves. Total dimension is capped at
/// 81. The result is the best witnessed ensemble; `converged` is false when
/// the winning restart hit `max_iters`.
RoofResult eof_minimize(const DensityMatrix &rho, const Cut &cut,
                        const RoofOptions &opts = {});

} // namespace hbent::entanglement
