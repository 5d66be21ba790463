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

#include "hbent/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "cut.hpp"

namespace hbent::entanglement {

double binary_entropy(double p) {
    p = std::clamp(p, 0.0, 1.0);
    double h = 0.0;
    if (p > 0.0) {
        h -= p * std::log2(p);
    }
    if (p < 1.0) {
        h -= (1.0 - p) * std::log2(1.0 - p);
    }
    return h;
}

double entropy_of_entanglement(const StateVector &psi, const Cut &cut) {
    const auto sides = detail::resolve_cut(psi.layout(), cut);
    // The smaller side keeps the reduced matrix small; both sides share the
    // same nonzero spectrum.
    const auto &keep = sides.dim_a <= sides.dim_b ? sides.a : sides.b;
    const double s = von_neumann_entropy(partial_trace(psi, keep));
    return std::clamp(s, 0.0,
                      std::log2(static_cast<double>(
                          std::min(sides.dim_a, sides.dim_b))));
}

namespace {

void require_two_qubits(const DensityMatrix &rho) {
    const auto &subs = rho.layout().subsystems();
    if (subs.size() != 2 || subs[0].dim != 2 || subs[1].dim != 2) {
        throw InvalidArgument("two-qubit closed form needs exactly two qubits");
    }
}

} // namespace

double concurrence_2q(const DensityMatrix &rho) {
    require_two_qubits(rho);
    // sigma_y (x) sigma_y is real and anti-diagonal: (+1 on 00<->11 corners,
    // -1 on 01<->10).
    CMatrix yy = CMatrix::Zero(4, 4);
    yy(0, 3) = -1.0;
    yy(1, 2) = 1.0;
    yy(2, 1) = 1.0;
    yy(3, 0) = -1.0;
    // With rho = W W^dagger (W = eigenvectors scaled by sqrt of eigenvalues),
    // the Wootters lambdas are the singular values of tau = W^T yy W. This
    // avoids square roots of round-off-level eigenvalues, which would inject
    // errors of order sqrt(machine epsilon).
    constexpr double kNoiseFloor = 1e-14;
    const auto er = eig_hermitian(rho.entries());
    Eigen::Index rank = 0;
    while (rank < er.values.size() && er.values[rank] > kNoiseFloor) {
        ++rank;
    }
    if (rank == 0) {
        return 0.0;
    }
    CMatrix w = er.vectors.leftCols(rank);
    for (Eigen::Index k = 0; k < rank; ++k) {
        w.col(k) *= std::sqrt(er.values[k]);
    }
    const CMatrix tau = w.transpose() * yy * w;
    RVector lambda = RVector::Zero(4);
    lambda.head(rank) = Eigen::JacobiSVD<CMatrix>(tau).singularValues();
    const double c = lambda[0] - lambda[1] - lambda[2] - lambda[3];
    return std::clamp(c, 0.0, 1.0);
}

double eof_from_concurrence(double concurrence) {
    const double c = std::clamp(concurrence, 0.0, 1.0);
    return binary_entropy(0.5 * (1.0 + std::sqrt(std::max(0.0, 1.0 - c * c))));
}

double eof_2q(const DensityMatrix &rho) {
    return eof_from_concurrence(concurrence_2q(rho));
}

CMatrix DecompositionEnsemble::reconstruct() const {
    if (states.empty()) {
        return {};
    }
    const auto n = static_cast<Eigen::Index>(states.front().dim());
    CMatrix out = CMatrix::Zero(n, n);
    for (std::size_t i = 0; i < states.size(); ++i) {
        const CVector &a = states[i].amplitudes();
        out.noalias() += weights[i] * (a * a.adjoint());
    }
    return out;
}

double DecompositionEnsemble::average_entanglement(const Cut &cut) const {
    double total = 0.0;
    for (std::size_t i = 0; i < states.size(); ++i) {
        total += weights[i] * entropy_of_entanglement(states[i], cut);
    }
    return total;
}

} // namespace hbent::entanglement
