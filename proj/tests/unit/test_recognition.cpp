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
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "hbent/entanglement.hpp"
#include "hbent/recognition.hpp"
#include "oracles.hpp"

namespace hbent::recognition {
namespace {

using entanglement::entropy_of_entanglement;

constexpr double kTol = 1e-9;
const double kS2 = 1.0 / std::sqrt(2.0);
const double kS3 = 1.0 / std::sqrt(3.0);
const double kS6 = 1.0 / std::sqrt(6.0);

// Two-qubit bond state on (X2, X1) from psi-coefficients.
StateVector bond(Complex c1, Complex c2, Complex c3) {
    return bonds::unified_state({c1, c2, c3}, kReceptorDonor, kAcceptor);
}

LigandProfile profile(Complex c1, Complex c2, Complex c3) {
    return {"test", {c1, c2, c3, bonds::Delocalization::Proton}};
}

StateVector random_psi_span(std::mt19937_64 &rng) {
    const CVector v = testing::random_vector(3, rng);
    return bond(v[0], v[1], v[2]);
}

TEST(EigenBasis, StandardIsOrthonormalAndInSpan) {
    const auto b = EigenBasis::standard();
    for (std::size_t i = 0; i < 3; ++i) {
        EXPECT_NEAR(std::abs(b[i][3]), 0.0, kTol);
        for (std::size_t j = 0; j < 3; ++j)
            EXPECT_NEAR(std::abs(b[i].inner(b[j])), i == j ? 1.0 : 0.0, kTol);
    }
    // eps1 = (psi1 - psi3)/sqrt2: psi1 = |10> (index 2), psi3 = |00> (index 0)
    EXPECT_NEAR(b[0][2].real(), kS2, kTol);
    EXPECT_NEAR(b[0][0].real(), -kS2, kTol);
}

TEST(EigenBasis, RejectsBadBases) {
    EXPECT_THROW(EigenBasis::from_psi_coefficients(
                     {{{1.0, 0.0, 0.0}, {1.0, 0.0, 0.0}, {0.0, 0.0, 1.0}}}),
                 InvalidArgument);
    const auto l = RegisterLayout::qubits({"X2", "X1"});
    const auto out_of_span = StateVector::basis_state(l, {1, 1});
    EXPECT_THROW(EigenBasis({out_of_span, bond(0, 1, 0), bond(0, 0, 1)}),
                 DomainError);
}

TEST(Ligands, BuiltIns) {
    EXPECT_NEAR(ligand_b().coeffs.c2.real(), kS3, kTol);
    EXPECT_NEAR(ligand_c().coeffs.c2.real(), -2.0 * kS6, kTol);
    EXPECT_NEAR(ligand_d().coeffs.c2.real(), 2.0 * kS6, kTol);
    const auto lb = ligand_bond(ligand_b());
    EXPECT_EQ(lb.layout().labels(), (std::vector<std::string>{"XN", "X1"}));
}

TEST(Decompose, Examples) {
    const auto basis = EigenBasis::standard();
    const auto e3 = decompose_in_eigenbasis(basis[2], basis);
    EXPECT_NEAR(std::abs(e3[2]), 1.0, kTol);
    // inner-product oracle for B = (1,1,1)/sqrt3 against eps2 = (1,1,1)/sqrt3
    const auto lb = decompose_in_eigenbasis(bond(kS3, kS3, kS3), basis);
    EXPECT_NEAR(std::abs(lb[0]), 0.0, kTol);
    EXPECT_NEAR(lb[1].real(), 1.0, kTol);
    const auto ld = decompose_in_eigenbasis(bond(kS6, 2 * kS6, kS6), basis);
    EXPECT_NEAR(std::abs(ld[0]), 0.0, kTol);
    EXPECT_NEAR(ld[1].real(), 2.0 * std::sqrt(2.0) / 3.0, kTol);
    EXPECT_NEAR(ld[2].real(), -1.0 / 3.0, kTol);
}

TEST(Decompose, SpanViolation) {
    const auto l = RegisterLayout::qubits({"X2", "X1"});
    EXPECT_THROW(decompose_in_eigenbasis(StateVector::basis_state(l, {1, 1}),
                                         EigenBasis::standard()),
                 DomainError);
    const auto three = StateVector::basis_state(RegisterLayout::qubits({"a", "b", "c"}),
                                                {0, 0, 0});
    EXPECT_THROW(decompose_in_eigenbasis(three, EigenBasis::standard()), InvalidArgument);
}

TEST(ApplyUA, EigenstatesLockConformation) {
    const auto basis = EigenBasis::standard();
    for (std::size_t j = 0; j < 3; ++j) {
        const auto out = apply_ua(basis[j], basis);
        const auto w = branch_weights(out, {"chi"});
        for (std::size_t k = 0; k < 3; ++k)
            EXPECT_NEAR(w[k], j == k ? 1.0 : 0.0, kTol);
        const auto chi = StateVector::basis_state(RegisterLayout({{"chi", 3}}),
                                                  {static_cast<int>(j)});
        EXPECT_TRUE(equal_up_to_phase(out, tensor(basis[j], chi)));
    }
}

TEST(ApplyUA, LigandDState) {
    const auto basis = EigenBasis::standard();
    const auto out = apply_ua(bond(kS6, 2 * kS6, kS6), basis);
    const auto l3 = RegisterLayout({{"chi", 3}});
    const CVector expect =
        (2.0 * std::sqrt(2.0) *
             tensor(basis[1], StateVector::basis_state(l3, {1})).amplitudes() -
         tensor(basis[2], StateVector::basis_state(l3, {2})).amplitudes()) /
        3.0;
    EXPECT_LT((out.amplitudes() - expect).norm(), kTol);
}

TEST(ApplyUA, PreservesInnerProducts) {
    std::mt19937_64 rng(21);
    const auto basis = EigenBasis::standard();
    for (int t = 0; t < 100; ++t) {
        const auto a = random_psi_span(rng);
        const auto b = random_psi_span(rng);
        EXPECT_NEAR(std::abs(apply_ua(a, basis).inner(apply_ua(b, basis))),
                    std::abs(a.inner(b)), kTol);
    }
}

TEST(ApplyUA, CustomConformationLabels) {
    ConformationRegister reg;
    reg.subsystem = "fold";
    const auto out = apply_ua(EigenBasis::standard()[1], EigenBasis::standard(), reg);
    EXPECT_TRUE(out.layout().contains("fold"));
}

TEST(ApplyUAMulti, ReducesToSingleBond) {
    std::mt19937_64 rng(22);
    const auto basis = EigenBasis::standard();
    const auto s = random_psi_span(rng);
    const auto one = apply_ua(s, basis);
    const auto multi = apply_ua_multi({s}, {basis});
    EXPECT_LT((one.amplitudes() - multi.amplitudes()).norm(), kTol);
}

TEST(ApplyUAMulti, TwoBondExamples) {
    const auto b1 = EigenBasis::standard();
    const auto eps = b1.states();
    std::array<StateVector, 3> eps2_states{
        bonds::unified_state({kS2, 0.0, -kS2}, "Y2", "Y1"),
        bonds::unified_state({kS3, kS3, kS3}, "Y2", "Y1"),
        bonds::unified_state({kS6, -2 * kS6, kS6}, "Y2", "Y1")};
    const EigenBasis b2(eps2_states);

    const auto both = apply_ua_multi({eps[1], eps2_states[1]}, {b1, b2});
    const auto w = branch_weights(both, {"chi1", "chi2"});
    ASSERT_EQ(w.size(), 9u);
    EXPECT_NEAR(w[1 * 3 + 1], 1.0, kTol);

    const auto d = bonds::unified_state({kS6, 2 * kS6, kS6}, "Y2", "Y1");
    const auto mixed = apply_ua_multi({eps[1], d}, {b1, b2});
    const auto wm = branch_weights(mixed, {"chi1", "chi2"});
    EXPECT_NEAR(wm[1 * 3 + 1], 8.0 / 9.0, kTol);
    EXPECT_NEAR(wm[1 * 3 + 2], 1.0 / 9.0, kTol);
    int nonzero = 0;
    for (double x : wm)
        nonzero += x > 1e-12 ? 1 : 0;
    EXPECT_EQ(nonzero, 2);
}

TEST(ApplyUAMulti, Errors) {
    const auto b = EigenBasis::standard();
    EXPECT_THROW(apply_ua_multi({}, {}), InvalidArgument);
    EXPECT_THROW(apply_ua_multi({b[0]}, {b, b}), InvalidArgument);
    std::vector<StateVector> five;
    std::vector<EigenBasis> bases;
    for (int k = 0; k < 5; ++k) {
        const std::string s = std::to_string(k);
        five.push_back(bonds::unified_state({1.0, 0.0, 0.0}, "D" + s, "A" + s));
        bases.push_back(b);
    }
    EXPECT_THROW(apply_ua_multi(five, bases), InvalidArgument);
}

TEST(Swap, TargetStateForRandomAmplitudes) {
    std::mt19937_64 rng(31);
    std::set<std::size_t> outcomes;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const CVector v = testing::random_vector(2, rng);
        const auto r = swap_protocol(profile(v[0], v[1], 0.0), seed);
        CVector target = CVector::Zero(4);
        target[1] = v[0]; // alpha |01> on (X1, X2)
        target[2] = v[1]; // gamma |10>
        EXPECT_TRUE(equal_up_to_phase(
            r.final_state, StateVector(r.final_state.layout(), target)));
        EXPECT_EQ(r.final_state.layout().labels(),
                  (std::vector<std::string>{"X1", "X2"}));
        EXPECT_NEAR(r.transcript.probability, 0.5, kTol);
        EXPECT_EQ(r.transcript.pauli_z, r.transcript.outcome == 1);
        outcomes.insert(r.transcript.outcome);
        // entanglement is conserved through the protocol
        EXPECT_NEAR(entropy_of_entanglement(ligand_bond(profile(v[0], v[1], 0.0)), {"XN"}),
                    entropy_of_entanglement(r.final_state, {"X1"}), kTol);
    }
    EXPECT_EQ(outcomes.size(), 2u);
}

TEST(Swap, OutcomeIndependence) {
    const auto lig = profile(0.6, 0.8, 0.0);
    const auto ref = swap_protocol(lig, 0).final_state;
    for (std::uint64_t seed = 1; seed < 100; ++seed)
        EXPECT_TRUE(equal_up_to_phase(swap_protocol(lig, seed).final_state, ref));
    EXPECT_NEAR(std::abs(ref[1]), 0.6, kTol);
    EXPECT_NEAR(std::abs(ref[2]), 0.8, kTol);
}

TEST(Swap, NoEntanglementToSwap) {
    const auto r = swap_protocol(profile(1.0, 0.0, 0.0), 5);
    EXPECT_NEAR(std::abs(r.final_state[1]), 1.0, kTol);
}

TEST(Swap, Errors) {
    EXPECT_THROW(swap_protocol(ligand_b(), 0), DomainError);
    EXPECT_THROW(swap_protocol(profile(1.0, 1.0, 0.0), 0), InvalidArgument);
    const auto bad = StateVector::basis_state(RegisterLayout::qutrits({"X2"}), {0});
    EXPECT_THROW(swap_protocol(profile(1.0, 0.0, 0.0), bad, 0), InvalidArgument);
}

TEST(Swap, TranscriptIsSeeded) {
    const auto lig = profile(0.6, 0.8, 0.0);
    EXPECT_EQ(swap_protocol(lig, 9).transcript.outcome,
              swap_protocol(lig, 9).transcript.outcome);
    EXPECT_FALSE(swap_protocol(lig, 9).transcript.steps.empty());
}

TEST(MeasurementBasis, OrthonormalForAnyAmplitudes) {
    std::mt19937_64 rng(32);
    for (int t = 0; t < 20; ++t) {
        const CVector v = testing::random_vector(2, rng);
        EXPECT_TRUE(is_orthonormal(ligand_measurement_basis(v[0], v[1])));
    }
    EXPECT_THROW(ligand_measurement_basis(1.0, 1.0), InvalidArgument);
}

TEST(SwapDistribute, Examples) {
    const auto basis = EigenBasis::standard();
    EXPECT_TRUE(equal_up_to_phase(swap_distribute(ligand_b(), basis), basis[1]));
    EXPECT_TRUE(equal_up_to_phase(swap_distribute(ligand_c(), basis), basis[2]));
    const auto d = decompose_in_eigenbasis(swap_distribute(ligand_d(), basis), basis);
    EXPECT_NEAR(d[1].real(), 2.0 * std::sqrt(2.0) / 3.0, kTol);
    EXPECT_NEAR(d[2].real(), -1.0 / 3.0, kTol);
}

TEST(Classify, Examples) {
    const auto basis = EigenBasis::standard();
    const auto b = classify(ligand_b(), basis);
    EXPECT_EQ(b.verdict, Verdict::Agonist);
    EXPECT_EQ(b.agonist, (std::vector<int>{2}));
    EXPECT_NEAR(b.conformation_distribution[1], 1.0, kTol);
    const auto c = classify(ligand_c(), basis);
    EXPECT_EQ(c.verdict, Verdict::Agonist);
    EXPECT_EQ(c.agonist, (std::vector<int>{3}));
    const auto d = classify(ligand_d(), basis);
    EXPECT_EQ(d.verdict, Verdict::Antagonist);
    EXPECT_TRUE(d.agonist.empty());
    EXPECT_NEAR(d.conformation_distribution[0], 0.0, kTol);
    EXPECT_NEAR(d.conformation_distribution[1], 8.0 / 9.0, kTol);
    EXPECT_NEAR(d.conformation_distribution[2], 1.0 / 9.0, kTol);
    EXPECT_NEAR(d.coherence_residual, 1.0 / 9.0, kTol);
}

TEST(Classify, GroundEigenstateIsNotAnAgonist) {
    const auto r = classify(profile(kS2, 0.0, -kS2), EigenBasis::standard());
    EXPECT_EQ(r.verdict, Verdict::Antagonist);
    EXPECT_NEAR(r.conformation_distribution[0], 1.0, kTol);
}

TEST(Classify, BAndCShareEntanglement) {
    const double eb = entropy_of_entanglement(ligand_bond(ligand_b()), {"XN"});
    const double ec = entropy_of_entanglement(ligand_bond(ligand_c()), {"XN"});
    EXPECT_NEAR(eb, ec, 1e-4);
    EXPECT_NEAR(eb, 0.550048, 1e-4);
}

TEST(Classify, ToleranceRange) {
    EXPECT_THROW(classify(ligand_b(), EigenBasis::standard(), 0.0), InvalidArgument);
    EXPECT_THROW(classify(ligand_b(), EigenBasis::standard(), 0.5), InvalidArgument);
    // a loose tolerance accepts a nearly pure branch
    const auto near_b = profile(kS3 * 1.01, kS3, kS3 * 0.99);
    LigandProfile n = near_b;
    const double norm = std::sqrt(std::norm(n.coeffs.c1) + std::norm(n.coeffs.c2) +
                                  std::norm(n.coeffs.c3));
    n.coeffs.c1 /= norm;
    n.coeffs.c2 /= norm;
    n.coeffs.c3 /= norm;
    EXPECT_EQ(classify(n, EigenBasis::standard(), 1e-6).verdict, Verdict::Antagonist);
    EXPECT_EQ(classify(n, EigenBasis::standard(), 1e-2).verdict, Verdict::Agonist);
}

TEST(ClassifyMulti, OrderIndependentAndTupleVerdict) {
    const auto s = EigenBasis::standard();
    const auto r = classify_multi({ligand_b(), ligand_c()}, {s, s});
    EXPECT_EQ(r.verdict, Verdict::Agonist);
    EXPECT_EQ(r.agonist, (std::vector<int>{2, 3}));
    const auto swapped = classify_multi({ligand_c(), ligand_b()}, {s, s});
    EXPECT_EQ(swapped.agonist, (std::vector<int>{3, 2}));
    EXPECT_EQ(classify_multi({ligand_b(), ligand_d()}, {s, s}).verdict,
              Verdict::Antagonist);
}

TEST(Enumerate, AgonistCountMatchesCapacity) {
    for (int n = 1; n <= 3; ++n) {
        const std::vector<EigenBasis> bases(static_cast<std::size_t>(n),
                                            EigenBasis::standard());
        const auto tuples = enumerate_agonists(bases);
        EXPECT_EQ(tuples.size(), capacity(n));
        for (const auto &t : tuples)
            EXPECT_FALSE(std::all_of(t.begin(), t.end(), [](int j) { return j == 1; }));
    }
}

TEST(Capacity, Values) {
    EXPECT_EQ(capacity(1), 2u);
    EXPECT_EQ(capacity(2), 8u);
    EXPECT_EQ(capacity(3), 26u);
    EXPECT_THROW(capacity(0), InvalidArgument);
    EXPECT_THROW(capacity(21), InvalidArgument);
}

TEST(MinBonds, Values) {
    // log_3(N + 1) oracle
    EXPECT_NEAR(min_bonds(4).exact, std::log(5.0) / std::log(3.0), 1e-12);
    EXPECT_NEAR(min_bonds(4).exact, 1.46497, 1e-5);
    EXPECT_DOUBLE_EQ(min_bonds(4).rounded, 1.46);
    EXPECT_NEAR(min_bonds(6).exact, 1.77124, 1e-5);
    EXPECT_DOUBLE_EQ(min_bonds(6).rounded, 1.77);
    EXPECT_NEAR(min_bonds(2).exact, 1.0, 1e-12);
    EXPECT_THROW(min_bonds(0), InvalidArgument);
}

TEST(Marginals, ReferenceMatrices) {
    auto matches = [](const Marginals &m, const CMatrix &target) {
        return max_abs_diff(m.keep_first.entries(), target) < kTol ||
               max_abs_diff(m.keep_second.entries(), target) < kTol;
    };
    CMatrix mb(2, 2), mc(2, 2);
    mb << 2.0 / 3, 1.0 / 3, 1.0 / 3, 1.0 / 3;
    mc << 5.0 / 6, 1.0 / 6, 1.0 / 6, 1.0 / 6;
    const auto b = reduced_marginals(ligand_b());
    const auto c = reduced_marginals(ligand_c());
    EXPECT_TRUE(matches(b, mb));
    EXPECT_TRUE(matches(c, mc));
    EXPECT_EQ(b.keep_first.layout().labels(), (std::vector<std::string>{"XN"}));
    EXPECT_EQ(b.keep_second.layout().labels(), (std::vector<std::string>{"X1"}));
    EXPECT_GT(fidelity(b.keep_first, c.keep_first), 0.0);
    EXPECT_GT(fidelity(b.keep_second, c.keep_second), 0.0);
}

TEST(Marginals, ProductStateIsPure) {
    const auto m = reduced_marginals(profile(1.0, 0.0, 0.0));
    EXPECT_NEAR(von_neumann_entropy(m.keep_first), 0.0, kTol);
    EXPECT_NEAR(von_neumann_entropy(m.keep_second), 0.0, kTol);
}

} // namespace
} // namespace hbent::recognition
