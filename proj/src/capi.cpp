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

#include "hbent/hbent.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <exception>
#include <new>
#include <string>
#include <utility>
#include <vector>

#include "hbent/bonds.hpp"
#include "hbent/entanglement.hpp"
#include "hbent/environment.hpp"
#include "hbent/recognition.hpp"
#include "hbent/repro.hpp"

struct hb_state {
    hbent::StateVector value;
    std::vector<std::string> labels;
};

struct hb_density {
    hbent::DensityMatrix value;
    std::vector<std::string> labels;
};

struct hb_ensemble {
    hbent::entanglement::DecompositionEnsemble value;
};

struct hb_report {
    hbent::repro::ReproReport value;
};

namespace {

using hbent::CMatrix;
using hbent::Complex;
using hbent::CVector;

thread_local std::string g_last_error;

struct NullArgument {};

template <typename... Ptrs> void require(const Ptrs *...ptrs) {
    if (((ptrs == nullptr) || ...))
        throw NullArgument{};
}

template <typename F> hb_status guard(F &&body) {
    try {
        body();
        g_last_error.clear();
        return HB_OK;
    } catch (const NullArgument &) {
        g_last_error = "required pointer argument is NULL";
        return HB_ERR_NULL_ARGUMENT;
    } catch (const hbent::InvalidArgument &e) {
        g_last_error = e.what();
        return HB_ERR_INVALID_ARGUMENT;
    } catch (const hbent::DomainError &e) {
        g_last_error = e.what();
        return HB_ERR_DOMAIN;
    } catch (const hbent::NumericalError &e) {
        g_last_error = e.what();
        return HB_ERR_NUMERICAL;
    } catch (const std::invalid_argument &e) {
        g_last_error = e.what();
        return HB_ERR_INVALID_ARGUMENT;
    } catch (const std::out_of_range &e) {
        g_last_error = e.what();
        return HB_ERR_INVALID_ARGUMENT;
    } catch (const std::bad_alloc &) {
        g_last_error = "out of memory";
        return HB_ERR_INTERNAL;
    } catch (const std::exception &e) {
        g_last_error = e.what();
        return HB_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown error";
        return HB_ERR_INTERNAL;
    }
}

hb_status buffer_error(std::size_t needed) {
    g_last_error = "output buffer too small; need " + std::to_string(needed) +
                   " entries";
    return HB_ERR_BUFFER_TOO_SMALL;
}

Complex to_cpp(hb_complex z) { return {z.re, z.im}; }
hb_complex to_c(Complex z) { return {z.real(), z.imag()}; }

hbent::RegisterLayout make_layout(const char *const *labels, const int *dims,
                                  std::size_t n) {
    require(labels, dims);
    std::vector<hbent::Subsystem> subs;
    subs.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        require(labels[i]);
        subs.push_back({labels[i], dims[i]});
    }
    return hbent::RegisterLayout(std::move(subs));
}

std::vector<std::string> to_strings(const char *const *items, std::size_t n) {
    if (n > 0)
        require(items);
    std::vector<std::string> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        require(items[i]);
        out.emplace_back(items[i]);
    }
    return out;
}

hb_state *wrap(hbent::StateVector v) {
    auto labels = v.layout().labels();
    return new hb_state{std::move(v), std::move(labels)};
}

hb_density *wrap(hbent::DensityMatrix m) {
    auto labels = m.layout().labels();
    return new hb_density{std::move(m), std::move(labels)};
}

CMatrix column_major(const hb_complex *data, std::size_t dim) {
    require(data);
    CMatrix m(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (std::size_t c = 0; c < dim; ++c)
        for (std::size_t r = 0; r < dim; ++r)
            m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
                to_cpp(data[c * dim + r]);
    return m;
}

hbent::bonds::CovalentAmplitudes to_cpp(const hb_covalent_amps &a) {
    return {to_cpp(a.a), to_cpp(a.b), to_cpp(a.alpha), to_cpp(a.beta),
            to_cpp(a.gamma)};
}

hb_covalent_amps to_c(const hbent::bonds::CovalentAmplitudes &a) {
    return {to_c(a.a), to_c(a.b), to_c(a.alpha), to_c(a.beta), to_c(a.gamma)};
}

hbent::recognition::EigenBasis basis_or_standard(const hb_complex *rows) {
    if (rows == nullptr)
        return hbent::recognition::EigenBasis::standard();
    std::array<std::array<Complex, 3>, 3> r{};
    for (std::size_t j = 0; j < 3; ++j)
        for (std::size_t k = 0; k < 3; ++k)
            r[j][k] = to_cpp(rows[j * 3 + k]);
    return hbent::recognition::EigenBasis::from_psi_coefficients(r);
}

hbent::recognition::LigandProfile to_cpp(const hb_ligand &l) {
    hbent::recognition::LigandProfile p;
    p.name = l.name != nullptr ? l.name : "";
    p.coeffs.c1 = to_cpp(l.c[0]);
    p.coeffs.c2 = to_cpp(l.c[1]);
    p.coeffs.c3 = to_cpp(l.c[2]);
    p.coeffs.validate();
    return p;
}

std::vector<hbent::StateVector> collect(const hb_state *const *levels,
                                        std::size_t n) {
    require(levels);
    std::vector<hbent::StateVector> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        require(levels[i]);
        out.push_back(levels[i]->value);
    }
    return out;
}

template <typename Handle>
hb_status subsystem_of(const Handle *h, std::size_t index, const char **label,
                       int *dim) {
    return guard([&] {
        require(h, label, dim);
        const auto &subs = h->value.layout().subsystems();
        if (index >= subs.size())
            throw hbent::InvalidArgument("subsystem index out of range");
        *label = h->labels[index].c_str();
        *dim = subs[index].dim;
    });
}

} // namespace

extern "C" {

const char *hb_version(void) { return "1.0.0"; }

const char *hb_status_string(hb_status status) {
    switch (status) {
    case HB_OK:
        return "ok";
    case HB_ERR_NULL_ARGUMENT:
        return "null argument";
    case HB_ERR_INVALID_ARGUMENT:
        return "invalid argument";
    case HB_ERR_DOMAIN:
        return "domain error";
    case HB_ERR_NUMERICAL:
        return "numerical error";
    case HB_ERR_BUFFER_TOO_SMALL:
        return "buffer too small";
    case HB_ERR_INTERNAL:
        return "internal error";
    }
    return "unknown status";
}

const char *hb_last_error_message(void) { return g_last_error.c_str(); }

/* ---- states and density matrices -------------------------------------- */

hb_status hb_state_create(const char *const *labels, const int *dims,
                          size_t num_subsystems, const hb_complex *amps,
                          size_t num_amps, hb_state **out) {
    return guard([&] {
        require(amps, out);
        auto layout = make_layout(labels, dims, num_subsystems);
        if (num_amps != layout.total_dim())
            throw hbent::InvalidArgument(
                "amplitude count does not match the register dimension");
        CVector v(static_cast<Eigen::Index>(num_amps));
        for (std::size_t i = 0; i < num_amps; ++i)
            v[static_cast<Eigen::Index>(i)] = to_cpp(amps[i]);
        *out = wrap(hbent::StateVector(std::move(layout), std::move(v)));
    });
}

hb_status hb_state_clone(const hb_state *state, hb_state **out) {
    return guard([&] {
        require(state, out);
        *out = new hb_state(*state);
    });
}

void hb_state_free(hb_state *state) { delete state; }

size_t hb_state_dim(const hb_state *state) {
    return state != nullptr ? state->value.dim() : 0;
}

size_t hb_state_num_subsystems(const hb_state *state) {
    return state != nullptr ? state->labels.size() : 0;
}

hb_status hb_state_subsystem(const hb_state *state, size_t index,
                             const char **label, int *dim) {
    return subsystem_of(state, index, label, dim);
}

hb_status hb_state_amplitudes(const hb_state *state, hb_complex *out,
                              size_t capacity) {
    if (state != nullptr && out != nullptr && capacity < state->value.dim())
        return buffer_error(state->value.dim());
    return guard([&] {
        require(state, out);
        for (std::size_t i = 0; i < state->value.dim(); ++i)
            out[i] = to_c(state->value[i]);
    });
}

hb_status hb_state_tensor(const hb_state *a, const hb_state *b,
                          hb_state **out) {
    return guard([&] {
        require(a, b, out);
        *out = wrap(hbent::tensor(a->value, b->value));
    });
}

hb_status hb_state_overlap(const hb_state *a, const hb_state *b, double *out) {
    return guard([&] {
        require(a, b, out);
        *out = std::abs(a->value.inner(b->value));
    });
}

hb_status hb_density_create(const char *const *labels, const int *dims,
                            size_t num_subsystems, const hb_complex *entries,
                            size_t num_entries, hb_density **out) {
    return guard([&] {
        require(entries, out);
        auto layout = make_layout(labels, dims, num_subsystems);
        const std::size_t d = layout.total_dim();
        if (num_entries != d * d)
            throw hbent::InvalidArgument(
                "entry count does not match the register dimension");
        CMatrix m(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
        for (std::size_t r = 0; r < d; ++r)
            for (std::size_t c = 0; c < d; ++c)
                m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
                    to_cpp(entries[r * d + c]);
        *out = wrap(hbent::DensityMatrix(std::move(layout), std::move(m)));
    });
}

hb_status hb_density_from_state(const hb_state *state, hb_density **out) {
    return guard([&] {
        require(state, out);
        *out = wrap(hbent::DensityMatrix::pure(state->value));
    });
}

void hb_density_free(hb_density *rho) { delete rho; }

size_t hb_density_dim(const hb_density *rho) {
    return rho != nullptr ? rho->value.dim() : 0;
}

size_t hb_density_num_subsystems(const hb_density *rho) {
    return rho != nullptr ? rho->labels.size() : 0;
}

hb_status hb_density_subsystem(const hb_density *rho, size_t index,
                               const char **label, int *dim) {
    return subsystem_of(rho, index, label, dim);
}

hb_status hb_density_entries(const hb_density *rho, hb_complex *out,
                             size_t capacity) {
    if (rho != nullptr && out != nullptr &&
        capacity < rho->value.dim() * rho->value.dim())
        return buffer_error(rho->value.dim() * rho->value.dim());
    return guard([&] {
        require(rho, out);
        const std::size_t d = rho->value.dim();
        for (std::size_t r = 0; r < d; ++r)
            for (std::size_t c = 0; c < d; ++c)
                out[r * d + c] = to_c(rho->value(r, c));
    });
}

hb_status hb_partial_trace(const hb_density *rho, const char *const *keep,
                           size_t num_keep, hb_density **out) {
    return guard([&] {
        require(rho, out);
        *out = wrap(hbent::partial_trace(rho->value, to_strings(keep, num_keep)));
    });
}

hb_status hb_eig_hermitian(const hb_density *rho, double *values,
                           hb_complex *vectors, size_t dim) {
    if (rho != nullptr && values != nullptr && dim < rho->value.dim())
        return buffer_error(rho->value.dim());
    return guard([&] {
        require(rho, values);
        const auto eig = hbent::eig_hermitian(rho->value);
        const std::size_t d = rho->value.dim();
        for (std::size_t k = 0; k < d; ++k) {
            values[k] = eig.values[static_cast<Eigen::Index>(k)];
            if (vectors != nullptr)
                for (std::size_t r = 0; r < d; ++r)
                    vectors[k * d + r] = to_c(eig.vectors(
                        static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(k)));
        }
    });
}

hb_status hb_von_neumann_entropy(const hb_density *rho, double *out) {
    return guard([&] {
        require(rho, out);
        *out = hbent::von_neumann_entropy(rho->value);
    });
}

hb_status hb_fidelity(const hb_density *rho, const hb_density *sigma,
                      double *out) {
    return guard([&] {
        require(rho, sigma, out);
        *out = hbent::fidelity(rho->value, sigma->value);
    });
}

hb_status hb_measure_projective(const hb_state *state, const char *label,
                                const hb_complex *basis, size_t local_dim,
                                uint64_t seed, size_t *outcome,
                                double *probability, hb_state **post_state) {
    return guard([&] {
        require(state, label, basis, outcome, probability, post_state);
        auto r = hbent::measure_projective(state->value, label,
                                           column_major(basis, local_dim), seed);
        *outcome = r.outcome;
        *probability = r.probability;
        *post_state = wrap(std::move(r.post_state));
    });
}

/* ---- bond constructors ------------------------------------------------- */

hb_status hb_covalent_qubit(const hb_covalent_amps *amps, hb_state **out) {
    return guard([&] {
        require(amps, out);
        *out = wrap(hbent::bonds::covalent_qubit(to_cpp(*amps)));
    });
}

hb_status hb_covalent_qutrit(const hb_covalent_amps *amps, hb_state **out) {
    return guard([&] {
        require(amps, out);
        *out = wrap(hbent::bonds::covalent_qutrit(to_cpp(*amps)));
    });
}

hb_status hb_classical_hbond(hb_complex alpha_p, hb_complex beta_p,
                             hb_state **out) {
    return guard([&] {
        require(out);
        *out = wrap(hbent::bonds::classical_hbond(to_cpp(alpha_p), to_cpp(beta_p)));
    });
}

hb_status hb_covalent_hbond_electron(hb_complex alpha_m, hb_complex delta_m,
                                     hb_state **out) {
    return guard([&] {
        require(out);
        *out = wrap(hbent::bonds::covalent_hbond_electron(to_cpp(alpha_m),
                                                          to_cpp(delta_m)));
    });
}

hb_status hb_covalent_hbond_proton(hb_complex alpha_p, hb_complex delta_p,
                                   hb_state **out) {
    return guard([&] {
        require(out);
        *out = wrap(hbent::bonds::covalent_hbond_proton(to_cpp(alpha_p),
                                                        to_cpp(delta_p)));
    });
}

hb_status hb_unified_state(const hb_complex *c, const char *donor,
                           const char *acceptor, hb_state **out) {
    return guard([&] {
        require(c, out);
        hbent::bonds::HBondAmplitudes amps;
        amps.c1 = to_cpp(c[0]);
        amps.c2 = to_cpp(c[1]);
        amps.c3 = to_cpp(c[2]);
        *out = wrap(hbent::bonds::unified_state(
            amps, donor != nullptr ? donor : "X1",
            acceptor != nullptr ? acceptor : "X2"));
    });
}

hb_status hb_polarize(const hb_covalent_amps *amps, hb_complex beta_new,
                      hb_covalent_amps *out) {
    return guard([&] {
        require(amps, out);
        *out = to_c(hbent::bonds::polarize(to_cpp(*amps), to_cpp(beta_new)));
    });
}

/* ---- entanglement ------------------------------------------------------ */

hb_status hb_entropy_of_entanglement(const hb_state *state,
                                     const char *const *side, size_t num_side,
                                     double *out) {
    return guard([&] {
        require(state, out);
        *out = hbent::entanglement::entropy_of_entanglement(
            state->value, to_strings(side, num_side));
    });
}

hb_status hb_concurrence_2q(const hb_density *rho, double *out) {
    return guard([&] {
        require(rho, out);
        *out = hbent::entanglement::concurrence_2q(rho->value);
    });
}

hb_status hb_eof_2q(const hb_density *rho, double *out) {
    return guard([&] {
        require(rho, out);
        *out = hbent::entanglement::eof_2q(rho->value);
    });
}

void hb_roof_options_default(hb_roof_options *opts) {
    if (opts == nullptr)
        return;
    const hbent::entanglement::RoofOptions d;
    opts->ensemble_size = d.ensemble_size;
    opts->restarts = d.restarts;
    opts->max_iters = d.max_iters;
    opts->seed = d.seed;
    opts->threads = d.threads;
}

hb_status hb_eof_minimize(const hb_density *rho, const char *const *side,
                          size_t num_side, const hb_roof_options *opts,
                          hb_roof_result *result, hb_ensemble **witness) {
    return guard([&] {
        require(rho, result);
        hbent::entanglement::RoofOptions o;
        if (opts != nullptr) {
            o.ensemble_size = opts->ensemble_size;
            o.restarts = opts->restarts;
            o.max_iters = opts->max_iters;
            o.seed = opts->seed;
            o.threads = opts->threads;
        }
        auto r = hbent::entanglement::eof_minimize(
            rho->value, to_strings(side, num_side), o);
        result->value = r.value;
        result->eigen_average = r.eigen_average;
        result->converged = r.converged ? 1 : 0;
        result->sweeps = r.sweeps;
        if (witness != nullptr)
            *witness = new hb_ensemble{std::move(r.witness)};
    });
}

void hb_ensemble_free(hb_ensemble *ensemble) { delete ensemble; }

size_t hb_ensemble_size(const hb_ensemble *ensemble) {
    return ensemble != nullptr ? ensemble->value.states.size() : 0;
}

hb_status hb_ensemble_member(const hb_ensemble *ensemble, size_t index,
                             double *weight, hb_state **state) {
    return guard([&] {
        require(ensemble, weight, state);
        if (index >= ensemble->value.states.size())
            throw hbent::InvalidArgument("ensemble index out of range");
        *weight = ensemble->value.weights[index];
        *state = wrap(ensemble->value.states[index]);
    });
}

/* ---- environment ------------------------------------------------------- */

hb_status hb_thermal_state(const hb_state *const *levels,
                           const double *energies, size_t num_levels,
                           double inverse_temperature, hb_density **out) {
    return guard([&] {
        require(energies, out);
        auto sys = hbent::environment::EigenSystem::from_energies(
            std::vector<double>(energies, energies + num_levels),
            collect(levels, num_levels));
        *out = wrap(hbent::environment::thermal_state(sys, inverse_temperature));
    });
}

hb_status hb_thermal_state_from_weights(const hb_state *const *levels,
                                        const double *weights,
                                        size_t num_levels, hb_density **out) {
    return guard([&] {
        require(weights, out);
        auto sys = hbent::environment::EigenSystem::from_weights(
            std::vector<double>(weights, weights + num_levels),
            collect(levels, num_levels));
        *out = wrap(hbent::environment::thermal_state_from_weights(sys));
    });
}

hb_status hb_dephase(const hb_density *rho, const hb_complex *basis, size_t dim,
                     hb_density **out) {
    return guard([&] {
        require(rho, out);
        if (basis == nullptr) {
            *out = wrap(hbent::environment::dephase(rho->value));
            return;
        }
        *out = wrap(hbent::environment::dephase(rho->value,
                                                column_major(basis, dim)));
    });
}

hb_status hb_hbond_excitations(hb_state **levels) {
    return guard([&] {
        require(levels);
        auto eps = hbent::environment::hbond_excitations();
        for (std::size_t i = 0; i < 3; ++i)
            levels[i] = wrap(eps[i]);
    });
}

/* ---- recognition ------------------------------------------------------- */

hb_status hb_standard_eigenbasis(hb_complex *rows) {
    return guard([&] {
        require(rows);
        const auto basis = hbent::recognition::EigenBasis::standard();
        // psi1 = |10> (index 2), psi2 = |01> (index 1), psi3 = |00> (index 0)
        for (std::size_t j = 0; j < 3; ++j) {
            rows[j * 3 + 0] = to_c(basis[j][2]);
            rows[j * 3 + 1] = to_c(basis[j][1]);
            rows[j * 3 + 2] = to_c(basis[j][0]);
        }
    });
}

hb_status hb_ligand_builtin(const char *name, hb_ligand *out) {
    return guard([&] {
        require(name, out);
        static const char *const kNames[] = {"B", "C", "D"};
        const std::string n(name);
        hbent::recognition::LigandProfile p;
        if (n == "B" || n == "b") {
            p = hbent::recognition::ligand_b();
            out->name = kNames[0];
        } else if (n == "C" || n == "c") {
            p = hbent::recognition::ligand_c();
            out->name = kNames[1];
        } else if (n == "D" || n == "d") {
            p = hbent::recognition::ligand_d();
            out->name = kNames[2];
        } else {
            throw hbent::InvalidArgument("unknown built-in ligand: " + n);
        }
        out->c[0] = to_c(p.coeffs.c1);
        out->c[1] = to_c(p.coeffs.c2);
        out->c[2] = to_c(p.coeffs.c3);
    });
}

hb_status hb_apply_ua(const hb_state *bond, const hb_complex *basis,
                      hb_state **out) {
    return guard([&] {
        require(bond, out);
        *out = wrap(hbent::recognition::apply_ua(bond->value,
                                                 basis_or_standard(basis)));
    });
}

hb_status hb_apply_ua_multi(const hb_state *const *bonds,
                            const hb_complex *const *bases, size_t num_bonds,
                            hb_state **out) {
    return guard([&] {
        require(out);
        auto states = collect(bonds, num_bonds);
        std::vector<hbent::recognition::EigenBasis> b;
        b.reserve(num_bonds);
        for (std::size_t k = 0; k < num_bonds; ++k)
            b.push_back(basis_or_standard(bases != nullptr ? bases[k] : nullptr));
        *out = wrap(hbent::recognition::apply_ua_multi(states, b));
    });
}

hb_status hb_branch_weights(const hb_state *joint,
                            const char *const *conformations,
                            size_t num_conformations, double *weights,
                            size_t capacity) {
    std::vector<double> w;
    const hb_status s = guard([&] {
        require(joint, weights);
        w = hbent::recognition::branch_weights(
            joint->value, to_strings(conformations, num_conformations));
    });
    if (s != HB_OK)
        return s;
    if (capacity < w.size())
        return buffer_error(w.size());
    std::copy(w.begin(), w.end(), weights);
    return HB_OK;
}

hb_status hb_swap_protocol(const hb_ligand *ligand, const hb_state *x2_init,
                           uint64_t seed, hb_state **final_state,
                           hb_swap_transcript *transcript) {
    return guard([&] {
        require(ligand, final_state);
        const auto profile = to_cpp(*ligand);
        auto r = x2_init != nullptr
                     ? hbent::recognition::swap_protocol(profile, x2_init->value,
                                                         seed)
                     : hbent::recognition::swap_protocol(profile, seed);
        if (transcript != nullptr) {
            transcript->outcome = r.transcript.outcome;
            transcript->probability = r.transcript.probability;
            transcript->pauli_z = r.transcript.pauli_z ? 1 : 0;
            transcript->joint_unitary = r.transcript.joint_unitary ? 1 : 0;
        }
        *final_state = wrap(std::move(r.final_state));
    });
}

hb_status hb_swap_distribute(const hb_ligand *ligand, const hb_complex *basis,
                             hb_state **out) {
    return guard([&] {
        require(ligand, out);
        *out = wrap(hbent::recognition::swap_distribute(
            to_cpp(*ligand), basis_or_standard(basis)));
    });
}

hb_status hb_decompose_in_eigenbasis(const hb_state *state,
                                     const hb_complex *basis,
                                     hb_complex *lambda) {
    return guard([&] {
        require(state, lambda);
        const auto l = hbent::recognition::decompose_in_eigenbasis(
            state->value, basis_or_standard(basis));
        for (std::size_t j = 0; j < 3; ++j)
            lambda[j] = to_c(l[j]);
    });
}

hb_status hb_classify(const hb_ligand *ligand, const hb_complex *basis,
                      double tol, hb_recognition_outcome *out) {
    return guard([&] {
        require(ligand, out);
        const auto r = hbent::recognition::classify(
            to_cpp(*ligand), basis_or_standard(basis), tol);
        out->verdict = r.verdict == hbent::recognition::Verdict::Agonist
                           ? HB_AGONIST
                           : HB_ANTAGONIST;
        out->agonist_index = r.agonist.empty() ? 0 : r.agonist.front();
        for (std::size_t j = 0; j < 3; ++j)
            out->distribution[j] = r.conformation_distribution.at(j);
        out->coherence_residual = r.coherence_residual;
    });
}

hb_status hb_reduced_marginals(const hb_ligand *ligand, hb_density **keep_first,
                               hb_density **keep_second) {
    return guard([&] {
        require(ligand, keep_first, keep_second);
        auto m = hbent::recognition::reduced_marginals(to_cpp(*ligand));
        *keep_first = wrap(std::move(m.keep_first));
        *keep_second = wrap(std::move(m.keep_second));
    });
}

hb_status hb_capacity(int n, uint64_t *out) {
    return guard([&] {
        require(out);
        *out = hbent::recognition::capacity(n);
    });
}

hb_status hb_min_bonds(uint64_t ligands, double *exact, double *rounded) {
    return guard([&] {
        require(exact, rounded);
        const auto b = hbent::recognition::min_bonds(ligands);
        *exact = b.exact;
        *rounded = b.rounded;
    });
}

hb_status hb_count_agonists(int n, size_t *out) {
    return guard([&] {
        require(out);
        if (n < 1 || n > 4)
            throw hbent::InvalidArgument("bond count must be in [1, 4]");
        std::vector<hbent::recognition::EigenBasis> bases(
            static_cast<std::size_t>(n), hbent::recognition::EigenBasis::standard());
        *out = hbent::recognition::enumerate_agonists(bases).size();
    });
}

/* ---- claim reproduction ------------------------------------------------ */

hb_status hb_reproduce_paper(hb_report **out) {
    return guard([&] {
        require(out);
        *out = new hb_report{hbent::repro::reproduce_paper()};
    });
}

void hb_report_free(hb_report *report) { delete report; }

size_t hb_report_size(const hb_report *report) {
    return report != nullptr ? report->value.rows.size() : 0;
}

hb_status hb_report_row(const hb_report *report, size_t index,
                        hb_claim_row *row) {
    return guard([&] {
        require(report, row);
        const auto &r = report->value.rows.at(index);
        row->id = r.id.c_str();
        row->description = r.description.c_str();
        row->paper_value = r.paper_value;
        row->computed_value = r.computed_value;
        row->abs_diff = r.abs_diff;
        row->pass = r.pass ? 1 : 0;
    });
}

int hb_report_all_pass(const hb_report *report) {
    return report != nullptr && report->value.all_pass() ? 1 : 0;
}

} // extern "C"
