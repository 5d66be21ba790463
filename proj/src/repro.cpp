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

#include "hbent/repro.hpp"

#include <cmath>
#include <functional>
#include <limits>

#include "hbent/bonds.hpp"
#include "hbent/entanglement.hpp"
#include "hbent/environment.hpp"
#include "hbent/qmath.hpp"
#include "hbent/recognition.hpp"

namespace hbent::repro {

namespace {

using bonds::CovalentAmplitudes;
using bonds::HBondAmplitudes;
namespace ent = entanglement;
namespace rec = recognition;

struct Claim {
    std::string id;
    std::string description;
    double paper_value;
    std::function<double()> compute;
};

const double kS2 = 1.0 / std::sqrt(2.0);

double pure_eof(const StateVector &psi) {
    return ent::entropy_of_entanglement(
        psi, {psi.layout().subsystems().front().label});
}

DensityMatrix example_thermal_state() {
    const auto eps = environment::hbond_excitations();
    return environment::thermal_state_from_weights(
        environment::EigenSystem::from_weights({0.7, 0.2, 0.1},
                                               {eps[0], eps[1], eps[2]}));
}

CovalentAmplitudes qubit_covalent(double beta, double gamma) {
    // a*alpha = b*alpha = 0.5 with alpha = 1/sqrt2, a = b = 1/sqrt2
    CovalentAmplitudes amps;
    amps.a = kS2;
    amps.b = kS2;
    amps.alpha = kS2;
    amps.beta = beta;
    amps.gamma = gamma;
    return amps;
}

double matrix_match(const DensityMatrix &a, const DensityMatrix &b,
                    const CMatrix &target) {
    return std::min(max_abs_diff(a.entries(), target),
                    max_abs_diff(b.entries(), target));
}

// Post-measurement (X1, X2) state for a given outcome on XN.
StateVector swap_branch(double alpha, double gamma, std::size_t outcome) {
    const rec::LigandProfile ligand{"AG", HBondAmplitudes{alpha, gamma, 0.0}};
    const auto joint = tensor(rec::ligand_bond(ligand), rec::default_x2_init());
    const CMatrix basis = rec::ligand_measurement_basis(kS2, kS2);
    return contract(joint, rec::kLigandDonor,
                    basis.col(static_cast<Eigen::Index>(outcome)));
}

double swap_target_overlap(double alpha, double gamma) {
    const rec::LigandProfile ligand{"AG", HBondAmplitudes{alpha, gamma, 0.0}};
    CVector target(4);
    target << 0.0, alpha, gamma, 0.0;
    const StateVector want(RegisterLayout::qubits({"X1", "X2"}), target);
    bool seen[2] = {false, false};
    double worst = 1.0;
    for (std::uint64_t seed = 0; seed < 64 && !(seen[0] && seen[1]); ++seed) {
        const auto run = rec::swap_protocol(ligand, seed);
        seen[run.transcript.outcome] = true;
        worst = std::min(worst, std::abs(want.inner(run.final_state)));
    }
    return (seen[0] && seen[1]) ? worst : 0.0;
}

std::vector<Claim> build_manifest() {
    std::vector<Claim> m;

    m.push_back({"tensor_amplitude",
                 "|11>_{X1 H} (x) |2>_{X2} has unit amplitude on |112> of 27",
                 1.0, [] {
                     const auto s = bonds::classical_hbond(1.0, 0.0);
                     return s.dim() == 27 ? std::abs(s[1 * 9 + 1 * 3 + 2]) : 0.0;
                 }});
    m.push_back({"covalent_50pct_ionic_eof",
                 "qubit covalent bond, a*alpha=b*alpha=beta=gamma=0.5", 0.0,
                 [] { return pure_eof(bonds::covalent_qubit(qubit_covalent(0.5, 0.5))); }});
    m.push_back({"covalent_sign_flip_eof",
                 "qubit covalent bond with beta=-0.5", 1.0,
                 [] { return pure_eof(bonds::covalent_qubit(qubit_covalent(-0.5, 0.5))); }});
    m.push_back({"covalent_double_flip_eof",
                 "qubit covalent bond with beta=gamma=-0.5", 0.0,
                 [] { return pure_eof(bonds::covalent_qubit(qubit_covalent(-0.5, -0.5))); }});
    m.push_back({"qutrit_pure_covalent_eof",
                 "qutrit covalent bond alpha=1 carries no entanglement", 0.0,
                 [] { return pure_eof(bonds::covalent_qutrit(CovalentAmplitudes{})); }});
    m.push_back({"electron_hbond_no_transfer_eof",
                 "electron-delocalized H-bond with delta-=0", 0.0, [] {
                     return ent::entropy_of_entanglement(
                         bonds::covalent_hbond_electron(1.0, 0.0), {"sigma*"});
                 }});
    m.push_back({"proton_electron_eof_match",
                 "|E_F(proton) - E_F(electron)| at delta+=delta-=sqrt(0.3)",
                 0.0, [] {
                     const double d = std::sqrt(0.3), a = std::sqrt(0.7);
                     const double ep = ent::entropy_of_entanglement(
                         bonds::covalent_hbond_proton(a, d), {"X1"});
                     const double ee = ent::entropy_of_entanglement(
                         bonds::covalent_hbond_electron(a, d), {"sigma*"});
                     return std::abs(ep - ee);
                 }});

    m.push_back({"eof_eps1", "E_F of (psi1+psi2+psi3)/sqrt3", 0.550048,
                 [] { return pure_eof(environment::hbond_excitations()[0]); }});
    m.push_back({"eof_eps2", "E_F of (psi1+psi2-2psi3)/sqrt6", 0.187299,
                 [] { return pure_eof(environment::hbond_excitations()[1]); }});
    m.push_back({"eof_eps3", "E_F of (psi1-psi2)/sqrt2", 1.0,
                 [] { return pure_eof(environment::hbond_excitations()[2]); }});
    m.push_back({"eof_rho_th", "E_F of thermal mixture {0.7,0.2,0.1} (closed form)",
                 0.283771, [] { return ent::eof_2q(example_thermal_state()); }});
    m.push_back({"eof_rho_th_roof",
                 "E_F of thermal mixture {0.7,0.2,0.1} (convex-roof search)",
                 0.283771, [] {
                     ent::RoofOptions opts;
                     opts.seed = 2024;
                     return ent::eof_minimize(example_thermal_state(), {"X1"}, opts)
                         .value;
                 }});
    const char *diag_ids[] = {"rho_d_00", "rho_d_01", "rho_d_10", "rho_d_11"};
    const double diag_vals[] = {22.0 / 60.0, 19.0 / 60.0, 19.0 / 60.0, 0.0};
    for (int i = 0; i < 4; ++i) {
        m.push_back({diag_ids[i], "dephased thermal state, diagonal entry",
                     diag_vals[i], [i] {
                         return environment::dephase(example_thermal_state())(
                                    static_cast<std::size_t>(i),
                                    static_cast<std::size_t>(i))
                             .real();
                     }});
    }
    m.push_back({"rho_d_zero_eof", "E_F of the dephased thermal state", 0.0,
                 [] {
                     return ent::eof_2q(
                         environment::dephase(example_thermal_state()));
                 }});

    m.push_back({"eof_ligand_b", "E_F of the X_B-(H)-X1 bond", 0.550048,
                 [] { return pure_eof(rec::ligand_bond(rec::ligand_b())); }});
    m.push_back({"eof_ligand_c", "E_F of the X_C-(H)-X1 bond", 0.550048,
                 [] { return pure_eof(rec::ligand_bond(rec::ligand_c())); }});
    m.push_back({"marginal_b",
                 "max-norm distance of a B marginal from (2,1;1,1)/3", 0.0, [] {
                     const auto mg = rec::reduced_marginals(rec::ligand_b());
                     CMatrix t(2, 2);
                     t << 2.0, 1.0, 1.0, 1.0;
                     return matrix_match(mg.keep_first, mg.keep_second, t / 3.0);
                 }});
    m.push_back({"marginal_c",
                 "max-norm distance of a C marginal from (5,1;1,1)/6", 0.0, [] {
                     const auto mg = rec::reduced_marginals(rec::ligand_c());
                     CMatrix t(2, 2);
                     t << 5.0, 1.0, 1.0, 1.0;
                     return matrix_match(mg.keep_first, mg.keep_second, t / 6.0);
                 }});
    m.push_back({"swap_b_to_eps2", "|<eps2|swapped B>|", 1.0, [] {
                     const auto basis = rec::EigenBasis::standard();
                     return std::abs(basis[1].inner(
                         rec::swap_distribute(rec::ligand_b(), basis)));
                 }});
    m.push_back({"swap_c_to_eps3", "|<eps3|swapped C>|", 1.0, [] {
                     const auto basis = rec::EigenBasis::standard();
                     return std::abs(basis[2].inner(
                         rec::swap_distribute(rec::ligand_c(), basis)));
                 }});
    for (int j = 0; j < 3; ++j) {
        const double expected[] = {0.0, 2.0 * std::sqrt(2.0) / 3.0, -1.0 / 3.0};
        m.push_back({"decompose_d_eps" + std::to_string(j + 1),
                     "lambda_" + std::to_string(j + 1) + " of swapped D",
                     expected[j], [j] {
                         const auto basis = rec::EigenBasis::standard();
                         const auto l = rec::decompose_in_eigenbasis(
                             rec::swap_distribute(rec::ligand_d(), basis), basis);
                         return l[static_cast<std::size_t>(j)].real();
                     }});
    }
    m.push_back({"apply_ua_d_state",
                 "|<(2sqrt2 eps2 chi2 - eps3 chi3)/3 | U_A D>|", 1.0, [] {
                     const auto basis = rec::EigenBasis::standard();
                     const auto out = rec::apply_ua(
                         rec::swap_distribute(rec::ligand_d(), basis), basis);
                     CVector want = CVector::Zero(12);
                     for (int b = 0; b < 4; ++b) {
                         want[b * 3 + 1] = 2.0 * std::sqrt(2.0) / 3.0 * basis[1][b];
                         want[b * 3 + 2] = -1.0 / 3.0 * basis[2][b];
                     }
                     return std::abs(StateVector(out.layout(), want).inner(out));
                 }});
    m.push_back({"classify_b_index", "agonist index for B", 2.0, [] {
                     const auto o = rec::classify(rec::ligand_b(),
                                                  rec::EigenBasis::standard());
                     return o.verdict == rec::Verdict::Agonist
                                ? static_cast<double>(o.agonist.at(0))
                                : 0.0;
                 }});
    m.push_back({"classify_c_index", "agonist index for C", 3.0, [] {
                     const auto o = rec::classify(rec::ligand_c(),
                                                  rec::EigenBasis::standard());
                     return o.verdict == rec::Verdict::Agonist
                                ? static_cast<double>(o.agonist.at(0))
                                : 0.0;
                 }});

    m.push_back({"swap_outcome_probability",
                 "probability of |+> on XN for alpha=0.6, gamma=0.8", 0.5, [] {
                     const rec::LigandProfile l{"AG", HBondAmplitudes{0.6, 0.8, 0.0}};
                     const auto joint = tensor(rec::ligand_bond(l),
                                               rec::default_x2_init());
                     return measurement_branches(
                                joint, rec::kLigandDonor,
                                rec::ligand_measurement_basis(kS2, kS2))[0]
                         .probability;
                 }});
    m.push_back({"swap_post_plus", "|<A3|post-measurement state, outcome +>|",
                 1.0, [] {
                     const double a = 0.6, g = 0.8;
                     CVector v(4);
                     v << -a * kS2, a * kS2, -g * kS2, g * kS2;
                     return std::abs(StateVector(RegisterLayout::qubits({"X1", "X2"}), v)
                                         .inner(swap_branch(a, g, 0)));
                 }});
    m.push_back({"swap_post_minus", "|<A4|post-measurement state, outcome ->|",
                 1.0, [] {
                     const double a = 0.6, g = 0.8;
                     CVector v(4);
                     v << -a * kS2, a * kS2, g * kS2, -g * kS2;
                     return std::abs(StateVector(RegisterLayout::qubits({"X1", "X2"}), v)
                                         .inner(swap_branch(a, g, 1)));
                 }});
    m.push_back({"swap_target_state",
                 "min over outcomes of |<alpha 01 + gamma 10|final>|", 1.0,
                 [] { return swap_target_overlap(0.6, 0.8); }});

    for (int n = 1; n <= 3; ++n) {
        const double expected[] = {2.0, 8.0, 26.0};
        m.push_back({"capacity_n" + std::to_string(n),
                     "3^n - 1 agonists for n = " + std::to_string(n),
                     expected[n - 1], [n] {
                         return static_cast<double>(rec::capacity(n));
                     }});
    }
    m.push_back({"agonists_n2_enumerated",
                 "agonist tuples found by running the two-bond dynamics", 8.0,
                 [] {
                     const auto b = rec::EigenBasis::standard();
                     return static_cast<double>(rec::enumerate_agonists({b, b}).size());
                 }});
    m.push_back({"min_bonds_4", "bonds needed for 4 ligands (2 decimals)", 1.47,
                 [] { return rec::min_bonds(4).rounded; }});
    m.push_back({"min_bonds_6", "bonds needed for 6 ligands (2 decimals)", 1.77,
                 [] { return rec::min_bonds(6).rounded; }});
    return m;
}

const std::vector<Claim> &manifest() {
    static const std::vector<Claim> claims = build_manifest();
    return claims;
}

} // namespace

bool ReproReport::all_pass() const {
    for (const auto &r : rows) {
        if (!r.pass) {
            return false;
        }
    }
    return !rows.empty();
}

const std::vector<std::string> &claim_ids() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> out;
        for (const auto &c : manifest()) {
            out.push_back(c.id);
        }
        return out;
    }();
    return ids;
}

ReproReport reproduce_paper() {
    ReproReport report;
    for (const auto &claim : manifest()) {
        ClaimRow row{claim.id, claim.description, claim.paper_value};
        try {
            row.computed_value = claim.compute();
            row.abs_diff = std::abs(row.computed_value - row.paper_value);
            row.pass = std::isfinite(row.abs_diff) &&
                       row.abs_diff <= kClaimTolerance;
        } catch (const std::exception &e) {
            row.computed_value = std::numeric_limits<double>::quiet_NaN();
            row.abs_diff = std::numeric_limits<double>::quiet_NaN();
            row.description += std::string(" [error: ") + e.what() + "]";
            row.pass = false;
        }
        report.rows.push_back(std::move(row));
    }
    return report;
}

} // namespace hbent::repro
