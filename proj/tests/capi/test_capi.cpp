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

#include <cmath>
#include <cstring>
#include <string>
#include <thread>
#include <vector>

#include <gtest/gtest.h>

#include "hbent/hbent.h"

extern "C" int hb_c_client_eof_eps1(double *out);

namespace {

constexpr double kTol = 1e-9;
const double kS2 = 1.0 / std::sqrt(2.0);
const double kS3 = 1.0 / std::sqrt(3.0);

hb_complex re(double x) { return {x, 0.0}; }

struct StateGuard {
    hb_state *p = nullptr;
    ~StateGuard() { hb_state_free(p); }
};
struct DensityGuard {
    hb_density *p = nullptr;
    ~DensityGuard() { hb_density_free(p); }
};

TEST(CApi, VersionAndStatusStrings) {
    EXPECT_STRNE(hb_version(), "");
    EXPECT_STREQ(hb_status_string(HB_OK), "ok");
    EXPECT_STREQ(hb_status_string(HB_ERR_DOMAIN), "domain error");
}

TEST(CApi, PlainCClient) {
    double e = 0.0;
    ASSERT_EQ(hb_c_client_eof_eps1(&e), 0);
    EXPECT_NEAR(e, 0.550048, 1e-4);
}

TEST(CApi, StateRoundTrip) {
    const char *labels[] = {"a", "b"};
    const int dims[] = {2, 3};
    std::vector<hb_complex> amps(6, re(0.0));
    amps[1] = re(0.6);
    amps[5] = re(0.8);
    StateGuard s;
    ASSERT_EQ(hb_state_create(labels, dims, 2, amps.data(), amps.size(), &s.p), HB_OK);
    EXPECT_EQ(hb_state_dim(s.p), 6u);
    EXPECT_EQ(hb_state_num_subsystems(s.p), 2u);
    const char *label = nullptr;
    int dim = 0;
    ASSERT_EQ(hb_state_subsystem(s.p, 1, &label, &dim), HB_OK);
    EXPECT_STREQ(label, "b");
    EXPECT_EQ(dim, 3);
    std::vector<hb_complex> back(6);
    ASSERT_EQ(hb_state_amplitudes(s.p, back.data(), back.size()), HB_OK);
    EXPECT_NEAR(back[5].re, 0.8, kTol);
    EXPECT_EQ(hb_state_amplitudes(s.p, back.data(), 2), HB_ERR_BUFFER_TOO_SMALL);
    EXPECT_EQ(hb_state_subsystem(s.p, 5, &label, &dim), HB_ERR_INVALID_ARGUMENT);
}

TEST(CApi, ErrorCodesAndMessages) {
    const char *labels[] = {"a"};
    const int dims[] = {2};
    hb_complex amps[2] = {re(1.0), re(1.0)};
    hb_state *s = nullptr;
    EXPECT_EQ(hb_state_create(labels, dims, 1, amps, 2, &s), HB_ERR_INVALID_ARGUMENT);
    EXPECT_EQ(s, nullptr);
    EXPECT_NE(std::string(hb_last_error_message()).find("norm"), std::string::npos);
    EXPECT_EQ(hb_state_create(labels, dims, 1, amps, 3, &s), HB_ERR_INVALID_ARGUMENT);
    EXPECT_EQ(hb_state_create(nullptr, dims, 1, amps, 2, &s), HB_ERR_NULL_ARGUMENT);
    EXPECT_EQ(hb_eof_2q(nullptr, nullptr), HB_ERR_NULL_ARGUMENT);

    hb_ligand b{};
    ASSERT_EQ(hb_ligand_builtin("B", &b), HB_OK);
    EXPECT_STREQ(hb_last_error_message(), "");
    hb_state *fin = nullptr;
    EXPECT_EQ(hb_swap_protocol(&b, nullptr, 0, &fin, nullptr), HB_ERR_DOMAIN);
    EXPECT_EQ(hb_ligand_builtin("Q", &b), HB_ERR_INVALID_ARGUMENT);
    hb_covalent_amps amps_c{re(1.0), re(0.0), re(1.0), re(0.0), re(0.0)};
    hb_covalent_amps out{};
    EXPECT_EQ(hb_polarize(&amps_c, re(0.0), &out), HB_ERR_DOMAIN);
    // freeing NULL is a no-op
    hb_state_free(nullptr);
    hb_density_free(nullptr);
    hb_ensemble_free(nullptr);
    hb_report_free(nullptr);
}

TEST(CApi, ErrorMessageIsThreadLocal) {
    hb_ligand b{};
    EXPECT_EQ(hb_ligand_builtin("Q", &b), HB_ERR_INVALID_ARGUMENT);
    std::string other;
    std::thread t([&] { other = hb_last_error_message(); });
    t.join();
    EXPECT_EQ(other, "");
    EXPECT_STRNE(hb_last_error_message(), "");
}

TEST(CApi, BondsAndEntanglement) {
    StateGuard s;
    ASSERT_EQ(hb_covalent_hbond_proton(re(std::sqrt(0.7)), re(std::sqrt(0.3)), &s.p),
              HB_OK);
    const char *side[] = {"X1"};
    double e = 0.0;
    ASSERT_EQ(hb_entropy_of_entanglement(s.p, side, 1, &e), HB_OK);
    EXPECT_NEAR(e, -0.3 * std::log2(0.3) - 0.7 * std::log2(0.7), kTol);

    hb_covalent_amps amps{re(kS2), re(kS2), re(kS2), re(-0.5), re(0.5)};
    StateGuard q;
    ASSERT_EQ(hb_covalent_qubit(&amps, &q.p), HB_OK);
    const char *e1[] = {"e1"};
    ASSERT_EQ(hb_entropy_of_entanglement(q.p, e1, 1, &e), HB_OK);
    EXPECT_NEAR(e, 1.0, kTol);

    StateGuard c;
    ASSERT_EQ(hb_classical_hbond(re(kS2), re(kS2), &c.p), HB_OK);
    const char *x1h[] = {"X1", "H"};
    ASSERT_EQ(hb_entropy_of_entanglement(c.p, x1h, 2, &e), HB_OK);
    EXPECT_NEAR(e, 0.0, kTol);
}

TEST(CApi, ThermalDephaseAndRoof) {
    hb_state *levels[3] = {nullptr, nullptr, nullptr};
    ASSERT_EQ(hb_hbond_excitations(levels), HB_OK);
    const double w[3] = {0.7, 0.2, 0.1};
    const hb_state *lp[3] = {levels[0], levels[1], levels[2]};
    DensityGuard rho;
    ASSERT_EQ(hb_thermal_state_from_weights(lp, w, 3, &rho.p), HB_OK);
    double eof = 0.0;
    ASSERT_EQ(hb_eof_2q(rho.p, &eof), HB_OK);
    EXPECT_NEAR(eof, 0.283771, 1e-4);

    DensityGuard d;
    ASSERT_EQ(hb_dephase(rho.p, nullptr, 0, &d.p), HB_OK);
    std::vector<hb_complex> e(16);
    ASSERT_EQ(hb_density_entries(d.p, e.data(), e.size()), HB_OK);
    EXPECT_NEAR(e[0].re, 22.0 / 60.0, kTol);
    EXPECT_NEAR(e[5].re, 19.0 / 60.0, kTol);

    hb_roof_options opts;
    hb_roof_options_default(&opts);
    EXPECT_EQ(opts.restarts, 4u);
    hb_roof_result res{};
    hb_ensemble *wit = nullptr;
    const char *side[] = {"X1"};
    ASSERT_EQ(hb_eof_minimize(rho.p, side, 1, &opts, &res, &wit), HB_OK);
    EXPECT_NEAR(res.value, eof, 1e-3);
    EXPECT_GT(hb_ensemble_size(wit), 0u);
    double weight = 0.0;
    hb_state *member = nullptr;
    ASSERT_EQ(hb_ensemble_member(wit, 0, &weight, &member), HB_OK);
    EXPECT_GT(weight, 0.0);
    hb_state_free(member);
    hb_ensemble_free(wit);

    const double energies[3] = {0.0, 1.0, 2.0};
    DensityGuard cold;
    ASSERT_EQ(hb_thermal_state(lp, energies, 3, 200.0, &cold.p), HB_OK);
    double s = 1.0;
    ASSERT_EQ(hb_von_neumann_entropy(cold.p, &s), HB_OK);
    EXPECT_NEAR(s, 0.0, 1e-9);
    for (auto *l : levels)
        hb_state_free(l);
}

TEST(CApi, PartialTraceAndFidelity) {
    hb_ligand b{}, c{};
    ASSERT_EQ(hb_ligand_builtin("B", &b), HB_OK);
    ASSERT_EQ(hb_ligand_builtin("C", &c), HB_OK);
    DensityGuard b1, b2, c1, c2;
    ASSERT_EQ(hb_reduced_marginals(&b, &b1.p, &b2.p), HB_OK);
    ASSERT_EQ(hb_reduced_marginals(&c, &c1.p, &c2.p), HB_OK);
    double f = 0.0;
    ASSERT_EQ(hb_fidelity(b1.p, c1.p, &f), HB_OK);
    EXPECT_GT(f, 0.0);

    StateGuard bond;
    ASSERT_EQ(hb_unified_state(b.c, "XN", "X1", &bond.p), HB_OK);
    DensityGuard full, part;
    ASSERT_EQ(hb_density_from_state(bond.p, &full.p), HB_OK);
    const char *keep[] = {"XN"};
    ASSERT_EQ(hb_partial_trace(full.p, keep, 1, &part.p), HB_OK);
    std::vector<hb_complex> e1(4), e2(4);
    ASSERT_EQ(hb_density_entries(part.p, e1.data(), 4), HB_OK);
    ASSERT_EQ(hb_density_entries(b1.p, e2.data(), 4), HB_OK);
    for (int i = 0; i < 4; ++i)
        EXPECT_NEAR(e1[i].re, e2[i].re, kTol);
    double vals[2];
    std::vector<hb_complex> vecs(4);
    ASSERT_EQ(hb_eig_hermitian(part.p, vals, vecs.data(), 2), HB_OK);
    EXPECT_GE(vals[0], vals[1]);
}

TEST(CApi, MeasureProjective) {
    const char *labels[] = {"a", "b"};
    const int dims[] = {2, 2};
    hb_complex amps[4] = {re(0.6), re(0.0), re(0.0), re(0.8)};
    StateGuard s;
    ASSERT_EQ(hb_state_create(labels, dims, 2, amps, 4, &s.p), HB_OK);
    const hb_complex basis[4] = {re(1.0), re(0.0), re(0.0), re(1.0)};
    size_t outcome = 9;
    double p = 0.0;
    StateGuard post;
    ASSERT_EQ(hb_measure_projective(s.p, "a", basis, 2, 3, &outcome, &p, &post.p),
              HB_OK);
    EXPECT_NEAR(p, outcome == 0 ? 0.36 : 0.64, kTol);
}

TEST(CApi, Recognition) {
    hb_complex rows[9];
    ASSERT_EQ(hb_standard_eigenbasis(rows), HB_OK);
    EXPECT_NEAR(rows[0].re, kS2, kTol);  // eps1: c1
    EXPECT_NEAR(rows[2].re, -kS2, kTol); // eps1: c3
    EXPECT_NEAR(rows[3].re, kS3, kTol);

    hb_ligand d{};
    ASSERT_EQ(hb_ligand_builtin("D", &d), HB_OK);
    hb_recognition_outcome out{};
    ASSERT_EQ(hb_classify(&d, nullptr, 1e-6, &out), HB_OK);
    EXPECT_EQ(out.verdict, HB_ANTAGONIST);
    EXPECT_NEAR(out.distribution[1], 8.0 / 9.0, kTol);
    // passing the standard basis explicitly gives the same answer
    hb_recognition_outcome again{};
    ASSERT_EQ(hb_classify(&d, rows, 1e-6, &again), HB_OK);
    EXPECT_NEAR(again.distribution[2], 1.0 / 9.0, kTol);

    hb_ligand b{};
    ASSERT_EQ(hb_ligand_builtin("b", &b), HB_OK);
    EXPECT_STREQ(b.name, "B");
    ASSERT_EQ(hb_classify(&b, nullptr, 1e-6, &out), HB_OK);
    EXPECT_EQ(out.verdict, HB_AGONIST);
    EXPECT_EQ(out.agonist_index, 2);

    StateGuard bond, joint;
    ASSERT_EQ(hb_unified_state(d.c, "X2", "X1", &bond.p), HB_OK);
    hb_complex lambda[3];
    ASSERT_EQ(hb_decompose_in_eigenbasis(bond.p, nullptr, lambda), HB_OK);
    EXPECT_NEAR(lambda[1].re, 2.0 * std::sqrt(2.0) / 3.0, kTol);
    ASSERT_EQ(hb_apply_ua(bond.p, nullptr, &joint.p), HB_OK);
    const char *chi[] = {"chi"};
    double w[3];
    ASSERT_EQ(hb_branch_weights(joint.p, chi, 1, w, 3), HB_OK);
    EXPECT_NEAR(w[2], 1.0 / 9.0, kTol);
    EXPECT_EQ(hb_branch_weights(joint.p, chi, 1, w, 2), HB_ERR_BUFFER_TOO_SMALL);

    StateGuard dist;
    ASSERT_EQ(hb_swap_distribute(&b, nullptr, &dist.p), HB_OK);
    EXPECT_EQ(hb_state_dim(dist.p), 4u);
}

TEST(CApi, ApplyUAMulti) {
    hb_ligand b{};
    ASSERT_EQ(hb_ligand_builtin("B", &b), HB_OK);
    StateGuard s1, s2, joint;
    ASSERT_EQ(hb_unified_state(b.c, "X21", "X11", &s1.p), HB_OK);
    ASSERT_EQ(hb_unified_state(b.c, "X22", "X12", &s2.p), HB_OK);
    const hb_state *bonds[2] = {s1.p, s2.p};
    ASSERT_EQ(hb_apply_ua_multi(bonds, nullptr, 2, &joint.p), HB_OK);
    const char *chi[] = {"chi1", "chi2"};
    std::vector<double> w(9);
    ASSERT_EQ(hb_branch_weights(joint.p, chi, 2, w.data(), w.size()), HB_OK);
    EXPECT_NEAR(w[4], 1.0, kTol);
}

TEST(CApi, SwapProtocol) {
    hb_ligand lig{"x", {re(0.6), re(0.8), re(0.0)}};
    for (uint64_t seed = 0; seed < 10; ++seed) {
        StateGuard fin;
        hb_swap_transcript tr{};
        ASSERT_EQ(hb_swap_protocol(&lig, nullptr, seed, &fin.p, &tr), HB_OK);
        hb_complex a[4];
        ASSERT_EQ(hb_state_amplitudes(fin.p, a, 4), HB_OK);
        EXPECT_NEAR(std::hypot(a[1].re, a[1].im), 0.6, kTol);
        EXPECT_NEAR(std::hypot(a[2].re, a[2].im), 0.8, kTol);
        EXPECT_EQ(tr.pauli_z, tr.outcome == 1 ? 1 : 0);
        EXPECT_NEAR(tr.probability, 0.5, kTol);
    }
}

TEST(CApi, CapacityAndMinBonds) {
    uint64_t cap = 0;
    ASSERT_EQ(hb_capacity(3, &cap), HB_OK);
    EXPECT_EQ(cap, 26u);
    EXPECT_EQ(hb_capacity(0, &cap), HB_ERR_INVALID_ARGUMENT);
    double exact = 0.0, rounded = 0.0;
    ASSERT_EQ(hb_min_bonds(6, &exact, &rounded), HB_OK);
    EXPECT_NEAR(rounded, 1.77, 1e-12);
    size_t count = 0;
    ASSERT_EQ(hb_count_agonists(2, &count), HB_OK);
    EXPECT_EQ(count, 8u);
    EXPECT_EQ(hb_count_agonists(5, &count), HB_ERR_INVALID_ARGUMENT);
}

TEST(CApi, Report) {
    hb_report *r = nullptr;
    ASSERT_EQ(hb_reproduce_paper(&r), HB_OK);
    ASSERT_GT(hb_report_size(r), 30u);
    hb_claim_row row{};
    ASSERT_EQ(hb_report_row(r, 0, &row), HB_OK);
    EXPECT_STREQ(row.id, "tensor_amplitude");
    EXPECT_EQ(hb_report_row(r, 1000, &row), HB_ERR_INVALID_ARGUMENT);
    bool any_fail = false;
    for (size_t i = 0; i < hb_report_size(r); ++i) {
        ASSERT_EQ(hb_report_row(r, i, &row), HB_OK);
        any_fail = any_fail || row.pass == 0;
    }
    EXPECT_EQ(hb_report_all_pass(r), any_fail ? 0 : 1);
    hb_report_free(r);
}

} // namespace
