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

/*
 * C interface to the hbent library.
 *
 * Objects are opaque handles owned by the caller and released with the
 * matching *_free function. Every fallible call returns an hb_status; on
 * failure hb_last_error_message() describes the problem for the calling
 * thread. Output handles are written only on success.
 *
 * Matrices are passed as flat arrays. Density matrices are row-major.
 * Bases are column-major: column k (entries k*dim .. k*dim+dim-1) is the
 * k-th basis vector.
 *
 * Two-qubit bond states use the psi-encoding with the donor first:
 * psi1 = |10>, psi2 = |01>, psi3 = |00>.
 */
#ifndef HBENT_HBENT_H
#define HBENT_HBENT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define HBENT_API __declspec(dllexport)
#else
#define HBENT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hb_status {
    HB_OK = 0,
    HB_ERR_NULL_ARGUMENT = 1,
    HB_ERR_INVALID_ARGUMENT = 2,
    HB_ERR_DOMAIN = 3,
    HB_ERR_NUMERICAL = 4,
    HB_ERR_BUFFER_TOO_SMALL = 5,
    HB_ERR_INTERNAL = 6
} hb_status;

typedef struct hb_complex {
    double re;
    double im;
} hb_complex;

typedef struct hb_state hb_state;       /* normalized pure state */
typedef struct hb_density hb_density;   /* density matrix */
typedef struct hb_ensemble hb_ensemble; /* pure-state decomposition */
typedef struct hb_report hb_report;     /* claim reproduction report */

HBENT_API const char *hb_version(void);
HBENT_API const char *hb_status_string(hb_status status);
/* Message for the last failed call on this thread; "" if none. */
HBENT_API const char *hb_last_error_message(void);

/* ---- states and density matrices -------------------------------------- */

/* dims[i] must be 2 or 3; amps has prod(dims) entries and unit norm. */
HBENT_API hb_status hb_state_create(const char *const *labels, const int *dims,
                                    size_t num_subsystems,
                                    const hb_complex *amps, size_t num_amps,
                                    hb_state **out);
HBENT_API hb_status hb_state_clone(const hb_state *state, hb_state **out);
HBENT_API void hb_state_free(hb_state *state);
HBENT_API size_t hb_state_dim(const hb_state *state);
HBENT_API size_t hb_state_num_subsystems(const hb_state *state);
/* The label pointer stays valid for the lifetime of the handle. */
HBENT_API hb_status hb_state_subsystem(const hb_state *state, size_t index,
                                       const char **label, int *dim);
HBENT_API hb_status hb_state_amplitudes(const hb_state *state, hb_complex *out,
                                        size_t capacity);
HBENT_API hb_status hb_state_tensor(const hb_state *a, const hb_state *b,
                                    hb_state **out);
/* |<a|b>|, layouts must match. */
HBENT_API hb_status hb_state_overlap(const hb_state *a, const hb_state *b,
                                     double *out);

HBENT_API hb_status hb_density_create(const char *const *labels,
                                      const int *dims, size_t num_subsystems,
                                      const hb_complex *entries,
                                      size_t num_entries, hb_density **out);
HBENT_API hb_status hb_density_from_state(const hb_state *state,
                                          hb_density **out);
HBENT_API void hb_density_free(hb_density *rho);
HBENT_API size_t hb_density_dim(const hb_density *rho);
HBENT_API size_t hb_density_num_subsystems(const hb_density *rho);
HBENT_API hb_status hb_density_subsystem(const hb_density *rho, size_t index,
                                         const char **label, int *dim);
HBENT_API hb_status hb_density_entries(const hb_density *rho, hb_complex *out,
                                       size_t capacity);

HBENT_API hb_status hb_partial_trace(const hb_density *rho,
                                     const char *const *keep, size_t num_keep,
                                     hb_density **out);
/* Descending eigenvalues; vectors (optional) column-major. */
HBENT_API hb_status hb_eig_hermitian(const hb_density *rho, double *values,
                                     hb_complex *vectors, size_t dim);
HBENT_API hb_status hb_von_neumann_entropy(const hb_density *rho, double *out);
HBENT_API hb_status hb_fidelity(const hb_density *rho, const hb_density *sigma,
                                double *out);
HBENT_API hb_status hb_measure_projective(const hb_state *state,
                                          const char *label,
                                          const hb_complex *basis,
                                          size_t local_dim, uint64_t seed,
                                          size_t *outcome, double *probability,
                                          hb_state **post_state);

/* ---- bond constructors ------------------------------------------------- */

typedef struct hb_covalent_amps {
    hb_complex a, b, alpha, beta, gamma;
} hb_covalent_amps;

HBENT_API hb_status hb_covalent_qubit(const hb_covalent_amps *amps,
                                      hb_state **out);
HBENT_API hb_status hb_covalent_qutrit(const hb_covalent_amps *amps,
                                       hb_state **out);
HBENT_API hb_status hb_classical_hbond(hb_complex alpha_p, hb_complex beta_p,
                                       hb_state **out);
HBENT_API hb_status hb_covalent_hbond_electron(hb_complex alpha_m,
                                               hb_complex delta_m,
                                               hb_state **out);
HBENT_API hb_status hb_covalent_hbond_proton(hb_complex alpha_p,
                                             hb_complex delta_p,
                                             hb_state **out);
/* c[3] = psi-coefficients; labels may be NULL for ("X1", "X2"). */
HBENT_API hb_status hb_unified_state(const hb_complex *c, const char *donor,
                                     const char *acceptor, hb_state **out);
HBENT_API hb_status hb_polarize(const hb_covalent_amps *amps,
                                hb_complex beta_new, hb_covalent_amps *out);

/* ---- entanglement ------------------------------------------------------ */

HBENT_API hb_status hb_entropy_of_entanglement(const hb_state *state,
                                               const char *const *side,
                                               size_t num_side, double *out);
HBENT_API hb_status hb_concurrence_2q(const hb_density *rho, double *out);
HBENT_API hb_status hb_eof_2q(const hb_density *rho, double *out);

typedef struct hb_roof_options {
    size_t ensemble_size; /* 0: rank^2 */
    size_t restarts;
    size_t max_iters;
    uint64_t seed;
    unsigned threads;
} hb_roof_options;

typedef struct hb_roof_result {
    double value;
    double eigen_average;
    int converged;
    size_t sweeps;
} hb_roof_result;

HBENT_API void hb_roof_options_default(hb_roof_options *opts);
/* witness may be NULL. */
HBENT_API hb_status hb_eof_minimize(const hb_density *rho,
                                    const char *const *side, size_t num_side,
                                    const hb_roof_options *opts,
                                    hb_roof_result *result,
                                    hb_ensemble **witness);
HBENT_API void hb_ensemble_free(hb_ensemble *ensemble);
HBENT_API size_t hb_ensemble_size(const hb_ensemble *ensemble);
HBENT_API hb_status hb_ensemble_member(const hb_ensemble *ensemble,
                                       size_t index, double *weight,
                                       hb_state **state);

/* ---- environment ------------------------------------------------------- */

HBENT_API hb_status hb_thermal_state(const hb_state *const *levels,
                                     const double *energies, size_t num_levels,
                                     double inverse_temperature,
                                     hb_density **out);
HBENT_API hb_status hb_thermal_state_from_weights(const hb_state *const *levels,
                                                  const double *weights,
                                                  size_t num_levels,
                                                  hb_density **out);
/* basis NULL: computational basis. Otherwise dim x dim, column-major. */
HBENT_API hb_status hb_dephase(const hb_density *rho, const hb_complex *basis,
                               size_t dim, hb_density **out);
/* Three levels of the symmetric H-bond example on ("X1", "X2"). */
HBENT_API hb_status hb_hbond_excitations(hb_state **levels /* [3] */);

/* ---- recognition ------------------------------------------------------- */

typedef struct hb_ligand {
    const char *name;
    hb_complex c[3];
} hb_ligand;

/* Eigenbases: 9 psi-coefficients, row j = eps_{j+1}; NULL for the standard
 * receptor basis. */
HBENT_API hb_status hb_standard_eigenbasis(hb_complex *rows /* [9] */);
HBENT_API hb_status hb_ligand_builtin(const char *name, hb_ligand *out);

HBENT_API hb_status hb_apply_ua(const hb_state *bond, const hb_complex *basis,
                                hb_state **out);
HBENT_API hb_status hb_apply_ua_multi(const hb_state *const *bonds,
                                      const hb_complex *const *bases,
                                      size_t num_bonds, hb_state **out);
/* weights has 3^(number of conformation labels) entries. */
HBENT_API hb_status hb_branch_weights(const hb_state *joint,
                                      const char *const *conformations,
                                      size_t num_conformations,
                                      double *weights, size_t capacity);

typedef struct hb_swap_transcript {
    size_t outcome;
    double probability;
    int pauli_z;
    int joint_unitary;
} hb_swap_transcript;

/* x2_init NULL: (|1> - |0>)/sqrt2. Final state on ("X1", "X2"). */
HBENT_API hb_status hb_swap_protocol(const hb_ligand *ligand,
                                     const hb_state *x2_init, uint64_t seed,
                                     hb_state **final_state,
                                     hb_swap_transcript *transcript);
HBENT_API hb_status hb_swap_distribute(const hb_ligand *ligand,
                                       const hb_complex *basis,
                                       hb_state **out);
HBENT_API hb_status hb_decompose_in_eigenbasis(const hb_state *state,
                                               const hb_complex *basis,
                                               hb_complex *lambda /* [3] */);

typedef enum hb_verdict { HB_AGONIST = 0, HB_ANTAGONIST = 1 } hb_verdict;

typedef struct hb_recognition_outcome {
    hb_verdict verdict;
    int agonist_index; /* 1..3, 0 for antagonists */
    double distribution[3];
    double coherence_residual;
} hb_recognition_outcome;

HBENT_API hb_status hb_classify(const hb_ligand *ligand,
                                const hb_complex *basis, double tol,
                                hb_recognition_outcome *out);
HBENT_API hb_status hb_reduced_marginals(const hb_ligand *ligand,
                                         hb_density **keep_first,
                                         hb_density **keep_second);
HBENT_API hb_status hb_capacity(int n, uint64_t *out);
HBENT_API hb_status hb_min_bonds(uint64_t ligands, double *exact,
                                 double *rounded);
/* Number of agonist tuples found by running the n-bond dynamics with the
 * standard basis on every bond. */
HBENT_API hb_status hb_count_agonists(int n, size_t *out);

/* ---- claim reproduction ------------------------------------------------ */

typedef struct hb_claim_row {
    const char *id;
    const char *description;
    double paper_value;
    double computed_value;
    double abs_diff;
    int pass;
} hb_claim_row;

HBENT_API hb_status hb_reproduce_paper(hb_report **out);
HBENT_API void hb_report_free(hb_report *report);
HBENT_API size_t hb_report_size(const hb_report *report);
/* Strings stay valid for the lifetime of the report. */
HBENT_API hb_status hb_report_row(const hb_report *report, size_t index,
                                  hb_claim_row *row);
HBENT_API int hb_report_all_pass(const hb_report *report);

#ifdef __cplusplus
}
#endif

#endif /* HBENT_HBENT_H */
