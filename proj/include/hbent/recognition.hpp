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
 * Ligand recognition through H-bond entanglement.
 *
 * A receptor holds an intramolecular H-bond (donor X2, acceptor X1) whose
 * three eigenstates eps_1..eps_3 are each locked to one conformation
 * chi_1..chi_3. A ligand binds X1 through an intermolecular H-bond
 * (donor XN, acceptor X1). Entanglement swapping moves the ligand's bond
 * state onto (X2, X1); the conformational dynamics then branches on the
 * eps-decomposition of that state.
 *
 * Bond states are two-qubit vectors in the psi-encoding: psi1 = |10>,
 * psi2 = |01>, psi3 = |00> with the donor first. Operations that take a bond
 * state read its amplitudes positionally and keep its labels.
 */

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "hbent/bonds.hpp"
#include "hbent/qmath.hpp"

namespace hbent::recognition {

inline constexpr const char *kLigandDonor = "XN";
inline constexpr const char *kAcceptor = "X1";
inline constexpr const char *kReceptorDonor = "X2";

/// Receptor bond eigenstates on (X2, X1). Mutually orthogonal and inside the
/// psi-span.
class EigenBasis {
  public:
    /// eps1 = (psi1 - psi3)/sqrt2, eps2 = (psi1 + psi2 + psi3)/sqrt3,
    /// eps3 = (psi1 - 2 psi2 + psi3)/sqrt6.
    static EigenBasis standard();
    /// Rows are psi-coefficients (c1, c2, c3) of eps_1..eps_3.
    static EigenBasis from_psi_coefficients(
        const std::array<std::array<Complex, 3>, 3> &rows);
    /// Validates orthogonality (1e-9) and the psi-span condition.
    explicit EigenBasis(std::array<StateVector, 3> eps);

    [[nodiscard]] const StateVector &operator[](std::size_t j) const {
        return eps_.at(j);
    }
    [[nodiscard]] const std::array<StateVector, 3> &states() const {
        return eps_;
    }

  private:
    std::array<StateVector, 3> eps_;
};

struct LigandProfile {
    std::string name;
    bonds::HBondAmplitudes coeffs;
};

/// (psi1 + psi2 + psi3)/sqrt3
LigandProfile ligand_b();
/// (psi1 - 2 psi2 + psi3)/sqrt6
LigandProfile ligand_c();
/// (psi1 + 2 psi2 + psi3)/sqrt6; same ionic weight and tunneling probability
/// as C.
LigandProfile ligand_d();

/// The conformation qutrit. Basis state j-1 is conformation labels[j-1].
struct ConformationRegister {
    std::string subsystem = "chi";
    std::array<std::string, 3> labels{"chi1", "chi2", "chi3"};
};

/// Intermolecular (XN, X1) state of a ligand.
StateVector ligand_bond(const LigandProfile &ligand);

/// lambda_j = <eps_j|state>. Throws DomainError when the state has weight on
/// |11> beyond 1e-9.
std::array<Complex, 3> decompose_in_eigenbasis(const StateVector &state,
                                               const EigenBasis &basis);

/// sum_j (M_j|psi>) (x) |chi_j> with M_j = |eps_j><eps_j|, on the layout of
/// `bond_state` followed by the conformation qutrit.
StateVector apply_ua(const StateVector &bond_state, const EigenBasis &basis,
                     const ConformationRegister &conformations = {});

/// Independent conformational branching for n = 1..4 bonds. Bond k drives
/// its own conformation qutrit "chi<k>" whose levels are
/// chi_{3(k-1)+1..3k}. The layout is every bond's two qubits in order,
/// followed by chi1..chin. Bond labels must be distinct across bonds.
StateVector apply_ua_multi(const std::vector<StateVector> &bond_states,
                           const std::vector<EigenBasis> &bases);

/// Diagonal of the reduced state on the conformation subsystems, indexed by
/// the mixed-radix conformation tuple (first subsystem most significant).
std::vector<double> branch_weights(const StateVector &joint,
                                   const std::vector<std::string> &conformations);

/// Pauli corrections and measurement record of one swap run.
struct SwapTranscript {
    std::size_t outcome = 0;   ///< 0: first basis vector, 1: second
    double probability = 0.0;  ///< Born probability of `outcome`
    bool pauli_z = false;      ///< Z applied to X1 after outcome 1
    bool joint_unitary = true; ///< the (X1, X2) rotation to the target
    std::vector<std::string> steps;
};

struct SwapResult {
    StateVector final_state; ///< on (X1, X2)
    SwapTranscript transcript;
};

/// {l1|1> + l2|0>, conj(l2)|1> - conj(l1)|0>} as matrix columns.
CMatrix ligand_measurement_basis(Complex l1, Complex l2);

/// (|1> - |0>)/sqrt2 on X2.
StateVector default_x2_init();

/// Moves the ligand's (XN, X1) entanglement onto (X1, X2):
///   1. measure XN in the l1 = l2 = 1/sqrt2 basis (seeded Born sampling);
///   2. on the second outcome apply Z to X1;
///   3. apply the joint (X1, X2) unitary
///        (|01> - |00>)/sqrt2 -> |01>,  (|11> + |10>)/sqrt2 -> |11>,
///        (|11> - |10>)/sqrt2 -> |10>,  (|01> + |00>)/sqrt2 -> |00>.
/// With the default X2 preparation the result is c1|01> + c2|10>.
/// Throws DomainError if the ligand has an ionic component (c3 != 0).
SwapResult swap_protocol(const LigandProfile &ligand,
                         const StateVector &x2_init, std::uint64_t seed);
SwapResult swap_protocol(const LigandProfile &ligand, std::uint64_t seed);

/// Ideal swap endpoint for a general three-component ligand: (X2, X1)
/// carrying exactly (c1, c2, c3), labeled like `basis`.
StateVector swap_distribute(const LigandProfile &ligand,
                            const EigenBasis &basis);

enum class Verdict { Agonist, Antagonist };

struct RecognitionOutcome {
    Verdict verdict = Verdict::Antagonist;
    /// 1-based eps index per bond; empty for antagonists.
    std::vector<int> agonist;
    /// Dephased branch weights |lambda|^2 over conformation tuples.
    std::vector<double> conformation_distribution;
    /// 1 - largest branch weight.
    double coherence_residual = 0.0;
};

/// Agonist(j) iff the largest branch weight is >= 1 - tol and j != 1; a
/// ligand that lands on eps_1 leaves the receptor at rest and counts as an
/// antagonist. tol must lie in (0, 0.5).
RecognitionOutcome classify(const LigandProfile &ligand,
                            const EigenBasis &basis, double tol = 1e-6);

/// One ligand bond per receptor bond. Agonist(tuple) iff every bond lands on
/// a single eigenstate and the tuple is not all eps_1.
RecognitionOutcome classify_multi(const std::vector<LigandProfile> &bonds,
                                  const std::vector<EigenBasis> &bases,
                                  double tol = 1e-6);

/// Every eps-tuple that apply_ua_multi maps onto a single non-resting
/// conformation branch, found by running it on all 3^n eigenstate inputs.
std::vector<std::vector<int>>
enumerate_agonists(const std::vector<EigenBasis> &bases);

/// 3^n - 1 for 1 <= n <= 20.
std::uint64_t capacity(int n);

struct BondCount {
    double exact;   ///< log_3(N + 1)
    double rounded; ///< exact, rounded to two decimals
};
/// Fractional number of bonds needed to discriminate N >= 1 ligands.
BondCount min_bonds(std::uint64_t ligands);

struct Marginals {
    DensityMatrix keep_first;  ///< on XN
    DensityMatrix keep_second; ///< on X1
};
Marginals reduced_marginals(const LigandProfile &ligand);

} // namespace hbent::recognition
