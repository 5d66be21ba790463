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
 * Ground-state constructors for covalent and hydrogen bonds in the qubit
 * (which-atom) and qutrit (orbital occupation number) encodings.
 *
 * Amplitudes are direct inputs. Nothing here models how they depend on bond
 * length or angle.
 *
 * Caveat on covalent_qubit: the two electrons of a covalent bond are
 * identical particles, so |01> and |10> of the electron register cannot be
 * told apart physically. The entropy computed on that labeled register (1 bit
 * for a symmetric superposition) is therefore not a usable resource; prefer
 * covalent_qutrit for statements about usable entanglement.
 */

#include <string>

#include "hbent/qmath.hpp"

namespace hbent::bonds {

/// a, b: covalent term split; alpha: covalent weight; beta, gamma: the two
/// ionic structures.
struct CovalentAmplitudes {
    Complex a{1.0, 0.0};
    Complex b{0.0, 0.0};
    Complex alpha{1.0, 0.0};
    Complex beta{0.0, 0.0};
    Complex gamma{0.0, 0.0};

    /// Throws InvalidArgument unless |a|^2+|b|^2 = 1 and
    /// |alpha|^2+|beta|^2+|gamma|^2 = 1 within 1e-9.
    void validate() const;
};

enum class Delocalization { Electron, Proton };

/// Coefficients on |psi1> (neutral), |psi2> (delocalized), |psi3> (ionic).
struct HBondAmplitudes {
    Complex c1{1.0, 0.0};
    Complex c2{0.0, 0.0};
    Complex c3{0.0, 0.0};
    Delocalization mode = Delocalization::Proton;

    void validate() const;
};

/// a*alpha|01> + b*alpha|10> + beta|00> + gamma|11> on electrons (e1, e2).
StateVector covalent_qubit(const CovalentAmplitudes &amps);

/// alpha|11> + beta|20> + gamma|02> on orbitals (X, Y). `a` and `b` are
/// checked but otherwise unused.
StateVector covalent_qutrit(const CovalentAmplitudes &amps);

/// (alpha'|11> + beta'|20>) on (X1, H), times |2> on X2.
StateVector classical_hbond(Complex alpha_p, Complex beta_p);

/// |2> on sigma, times (alpha-|02> + delta-|11>) on (sigma*, X2).
/// The ionic amplitude beta- is taken as zero.
StateVector covalent_hbond_electron(Complex alpha_m, Complex delta_m);

/// alpha+|10> + delta+|01> on (X1, X2), with beta+ = 0.
StateVector covalent_hbond_proton(Complex alpha_p, Complex delta_p);

/// c1|10> + c2|01> + c3|00> on (donor, acceptor).
StateVector unified_state(const HBondAmplitudes &amps,
                          const std::string &donor = "X1",
                          const std::string &acceptor = "X2");

/// Raises the ionic amplitude to `beta_new` and renormalizes the covalent
/// weight, leaving gamma at zero. The phase of alpha is kept.
/// Throws DomainError unless |beta_new| > |beta| and the covalent weight
/// strictly drops.
CovalentAmplitudes polarize(const CovalentAmplitudes &amps, Complex beta_new);

} // namespace hbent::bonds
