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
 * Dense linear algebra and quantum-state primitives for small composite
 * registers of qubits and qutrits.
 *
 * Tensor ordering follows the RegisterLayout: the first subsystem is the most
 * significant digit of a basis index, so |01> on two qubits is index 1.
 */

#include <complex>
#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "hbent/error.hpp"

namespace hbent {

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;
using RVector = Eigen::VectorXd;

namespace tol {
inline constexpr double kStructural = 1e-9;
inline constexpr double kSpectral = 1e-8;
inline constexpr double kReference = 1e-4;
} // namespace tol

struct Subsystem {
    std::string label;
    int dim = 2;

    friend bool operator==(const Subsystem &, const Subsystem &) = default;
};

/// Ordered list of labeled subsystems with local dimension 2 or 3.
class RegisterLayout {
  public:
    RegisterLayout() = default;
    explicit RegisterLayout(std::vector<Subsystem> subsystems);

    static RegisterLayout qubits(const std::vector<std::string> &labels);
    static RegisterLayout qutrits(const std::vector<std::string> &labels);

    [[nodiscard]] const std::vector<Subsystem> &subsystems() const {
        return subsystems_;
    }
    [[nodiscard]] std::size_t size() const { return subsystems_.size(); }
    [[nodiscard]] std::size_t total_dim() const { return total_dim_; }
    [[nodiscard]] bool contains(std::string_view label) const;
    /// Position of `label`; throws InvalidArgument when absent.
    [[nodiscard]] std::size_t position(std::string_view label) const;
    [[nodiscard]] std::vector<std::string> labels() const;

    /// Layout of this register followed by `other`; labels must be disjoint.
    [[nodiscard]] RegisterLayout concat(const RegisterLayout &other) const;
    /// Sub-layout of the given positions, kept in ascending order.
    [[nodiscard]] RegisterLayout select(std::vector<std::size_t> positions) const;

    /// Mixed-radix digits of a flat basis index.
    [[nodiscard]] std::vector<int> digits(std::size_t index) const;
    [[nodiscard]] std::size_t index(const std::vector<int> &digits) const;

    friend bool operator==(const RegisterLayout &a, const RegisterLayout &b) {
        return a.subsystems_ == b.subsystems_;
    }

  private:
    std::vector<Subsystem> subsystems_;
    std::size_t total_dim_ = 1;
};

/// Normalized pure state. Immutable once built.
class StateVector {
  public:
    /// Throws InvalidArgument unless the squared norm is 1 within 1e-9.
    StateVector(RegisterLayout layout, CVector amps);

    /// Rescales `amps` to unit norm; throws NumericalError on a zero vector.
    static StateVector normalized(RegisterLayout layout, CVector amps);
    static StateVector basis_state(RegisterLayout layout,
                                   const std::vector<int> &digits);

    [[nodiscard]] const RegisterLayout &layout() const { return layout_; }
    [[nodiscard]] const CVector &amplitudes() const { return amps_; }
    [[nodiscard]] std::size_t dim() const {
        return static_cast<std::size_t>(amps_.size());
    }
    [[nodiscard]] Complex operator[](std::size_t i) const {
        return amps_[static_cast<Eigen::Index>(i)];
    }

    /// <this|other>; layouts must match.
    [[nodiscard]] Complex inner(const StateVector &other) const;

  private:
    RegisterLayout layout_;
    CVector amps_;
};

/// Hermitian, unit-trace, positive-semidefinite operator.
class DensityMatrix {
  public:
    /// Validates Hermiticity and trace within 1e-9 and eigenvalues >= -1e-9.
    DensityMatrix(RegisterLayout layout, CMatrix entries);

    static DensityMatrix pure(const StateVector &psi);
    /// sum_i w_i |psi_i><psi_i| over states sharing one layout.
    static DensityMatrix mixture(const std::vector<double> &weights,
                                 const std::vector<StateVector> &states);

    [[nodiscard]] const RegisterLayout &layout() const { return layout_; }
    [[nodiscard]] const CMatrix &entries() const { return entries_; }
    [[nodiscard]] std::size_t dim() const {
        return static_cast<std::size_t>(entries_.rows());
    }
    [[nodiscard]] Complex operator()(std::size_t i, std::size_t j) const {
        return entries_(static_cast<Eigen::Index>(i),
                        static_cast<Eigen::Index>(j));
    }

  private:
    RegisterLayout layout_;
    CMatrix entries_;
};

struct EigenDecomposition {
    RVector values;  ///< descending
    CMatrix vectors; ///< orthonormal columns matching `values`
};

StateVector tensor(const StateVector &a, const StateVector &b);

DensityMatrix partial_trace(const DensityMatrix &rho,
                            const std::vector<std::string> &keep);
/// Same as partial_trace(DensityMatrix::pure(psi), keep) without forming the
/// full projector.
DensityMatrix partial_trace(const StateVector &psi,
                            const std::vector<std::string> &keep);

/// Throws NumericalError when `m` is not Hermitian within 1e-9 (relative to
/// its largest entry when that exceeds 1).
EigenDecomposition eig_hermitian(const CMatrix &m);
EigenDecomposition eig_hermitian(const DensityMatrix &rho);

/// Shannon entropy in bits of a probability spectrum. Entries in [-1e-9, 0)
/// are clamped to zero; anything more negative throws NumericalError.
double spectrum_entropy(const RVector &spectrum);
double von_neumann_entropy(const DensityMatrix &rho);

/// Uhlmann fidelity (tr sqrt(sqrt(rho) sigma sqrt(rho)))^2.
double fidelity(const DensityMatrix &rho, const DensityMatrix &sigma);

/// Columns of `basis` are the measurement vectors on one subsystem.
struct MeasurementBranch {
    std::size_t outcome = 0;
    double probability = 0.0;
    CVector projected; ///< unnormalized (P_k (x) I)|psi>
};

struct MeasurementResult {
    std::size_t outcome;
    StateVector post_state;
    double probability;
};

/// Every branch of a projective measurement, including zero-probability
/// ones.
std::vector<MeasurementBranch>
measurement_branches(const StateVector &psi, std::string_view label,
                     const CMatrix &basis);

/// Born-rule sample driven only by `seed`.
MeasurementResult measure_projective(const StateVector &psi,
                                     std::string_view label,
                                     const CMatrix &basis, std::uint64_t seed);

/// Applies `op` to the listed subsystems (in the listed order, first label
/// most significant) and identity elsewhere. `op` need not be unitary; the
/// result is renormalized and a zero image throws NumericalError.
StateVector apply_operator(const StateVector &psi,
                           const std::vector<std::string> &labels,
                           const CMatrix &op);

/// Contracts subsystem `label` with <bra| and returns the normalized state of
/// the remaining subsystems.
StateVector contract(const StateVector &psi, std::string_view label,
                     const CVector &bra);

/// |<a|b>| >= 1 - tolerance, i.e. equal up to a global phase.
bool equal_up_to_phase(const StateVector &a, const StateVector &b,
                       double tolerance = tol::kStructural);

/// Max-norm distance between matrices of the same shape.
double max_abs_diff(const CMatrix &a, const CMatrix &b);

/// Haar-distributed unitary from the QR decomposition of a Ginibre matrix.
CMatrix random_unitary(Eigen::Index n, std::mt19937_64 &rng);

/// Checks that the columns of `basis` are orthonormal within `tolerance`.
bool is_orthonormal(const CMatrix &basis, double tolerance = tol::kStructural);

} // namespace hbent
