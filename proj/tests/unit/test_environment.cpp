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

#include <gtest/gtest.h>

#include "hbent/entanglement.hpp"
#include "hbent/environment.hpp"
#include "oracles.hpp"

namespace hbent::environment {
namespace {

using entanglement::eof_2q;

constexpr double kTol = 1e-9;

std::vector<StateVector> levels() {
    const auto e = hbond_excitations();
    return {e[0], e[1], e[2]};
}

TEST(Excitations, OrthonormalWithReferenceEntanglement) {
    const auto e = hbond_excitations();
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            EXPECT_NEAR(std::abs(e[i].inner(e[j])), i == j ? 1.0 : 0.0, kTol);
    EXPECT_NEAR(eof_2q(DensityMatrix::pure(e[0])), 0.550048, 1e-4);
    EXPECT_NEAR(eof_2q(DensityMatrix::pure(e[1])), 0.187299, 1e-4);
    EXPECT_NEAR(eof_2q(DensityMatrix::pure(e[2])), 1.0, 1e-4);
}

TEST(Boltzmann, WeightsNormalizedAndDecreasing) {
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> u(-5.0, 5.0), b(0.01, 10.0);
    for (int t = 0; t < 50; ++t) {
        std::vector<double> e{u(rng), u(rng), u(rng), u(rng)};
        const auto w = boltzmann_weights(e, b(rng));
        double total = 0.0;
        for (double x : w)
            total += x;
        EXPECT_NEAR(total, 1.0, kTol);
        for (std::size_t i = 0; i < e.size(); ++i)
            for (std::size_t j = 0; j < e.size(); ++j)
                if (e[i] < e[j]) {
                    EXPECT_GE(w[i], w[j]);
                }
    }
}

TEST(Boltzmann, RatioMatchesExponential) {
    const auto w = boltzmann_weights({0.0, 1.0, 2.5}, 0.8);
    EXPECT_NEAR(w[1] / w[0], std::exp(-0.8), kTol);
    EXPECT_NEAR(w[2] / w[0], std::exp(-2.0), kTol);
}

TEST(Boltzmann, HugeEnergiesStayFinite) {
    const auto w = boltzmann_weights({1000.0, 1001.0}, 50.0);
    EXPECT_NEAR(w[0], 1.0 / (1.0 + std::exp(-50.0)), kTol);
}

TEST(Thermal, InfiniteTemperatureIsUniform) {
    const auto sys = EigenSystem::from_energies({0.0, 1.0, 2.0}, levels());
    const auto rho = thermal_state(sys, 0.0);
    const auto uniform = DensityMatrix::mixture({1.0 / 3, 1.0 / 3, 1.0 / 3}, levels());
    EXPECT_LT(max_abs_diff(rho.entries(), uniform.entries()), kTol);
}

TEST(Thermal, ZeroTemperatureIsGroundProjector) {
    const auto sys = EigenSystem::from_energies({0.0, 1.0, 2.0}, levels());
    const auto rho = thermal_state(sys, 100.0);
    const auto ground = DensityMatrix::pure(levels()[0]);
    EXPECT_LT(max_abs_diff(rho.entries(), ground.entries()), kTol);
}

TEST(Thermal, ReferenceWeights) {
    const auto sys = EigenSystem::from_weights({0.7, 0.2, 0.1}, levels());
    const auto rho = thermal_state_from_weights(sys);
    EXPECT_NEAR(eof_2q(rho), 0.283771, 1e-4);
    // Convexity of the roof against the level values.
    double bound = 0.0;
    const double w[3] = {0.7, 0.2, 0.1};
    for (std::size_t i = 0; i < 3; ++i)
        bound += w[i] * eof_2q(DensityMatrix::pure(levels()[i]));
    EXPECT_LT(eof_2q(rho), bound);
}

TEST(Thermal, EnergiesReproducingReferenceWeights) {
    // energies -ln(w) at beta = 1 give back the same state
    const auto sys_e = EigenSystem::from_energies(
        {-std::log(0.7), -std::log(0.2), -std::log(0.1)}, levels());
    const auto sys_w = EigenSystem::from_weights({0.7, 0.2, 0.1}, levels());
    EXPECT_LT(max_abs_diff(thermal_state(sys_e, 1.0).entries(),
                           thermal_state_from_weights(sys_w).entries()),
              kTol);
}

TEST(ThermalFromWeights, Examples) {
    const auto e = levels();
    const auto pure = thermal_state_from_weights(EigenSystem::from_weights({1.0}, {e[0]}));
    EXPECT_LT(max_abs_diff(pure.entries(), DensityMatrix::pure(e[0]).entries()), kTol);
    const auto mixed = thermal_state_from_weights(
        EigenSystem::from_weights({1.0 / 3, 1.0 / 3, 1.0 / 3}, e));
    // maximally mixed on span{|00>, |01>, |10>}
    for (int i = 0; i < 3; ++i)
        EXPECT_NEAR(mixed(i, i).real(), 1.0 / 3.0, kTol);
    EXPECT_NEAR(mixed(3, 3).real(), 0.0, kTol);
    EXPECT_NEAR(std::abs(mixed(0, 1)), 0.0, kTol);
}

TEST(EigenSystem, Errors) {
    const auto e = levels();
    EXPECT_THROW(EigenSystem::from_weights({0.7, 0.2}, e), InvalidArgument);
    EXPECT_THROW(EigenSystem::from_weights({0.7, 0.2, 0.2}, e), InvalidArgument);
    EXPECT_THROW(EigenSystem::from_weights({1.1, -0.1}, {e[0], e[1]}), InvalidArgument);
    EXPECT_THROW(EigenSystem::from_energies({}, {}), InvalidArgument);
    EXPECT_THROW(EigenSystem::from_energies({0.0, 1.0}, {e[0], e[0]}), InvalidArgument);
    const auto sys = EigenSystem::from_energies({0.0, 1.0, 2.0}, e);
    EXPECT_THROW(thermal_state(sys, -1.0), InvalidArgument);
    EXPECT_THROW(thermal_state_from_weights(sys), InvalidArgument);
    const auto sw = EigenSystem::from_weights({0.7, 0.2, 0.1}, e);
    EXPECT_THROW(thermal_state(sw, 1.0), InvalidArgument);
}

TEST(Dephase, ReferenceDiagonal) {
    const auto rho = thermal_state_from_weights(
        EigenSystem::from_weights({0.7, 0.2, 0.1}, levels()));
    const auto d = dephase(rho);
    // |00> = psi3, |01> = psi2, |10> = psi1
    EXPECT_NEAR(d(0, 0).real(), 22.0 / 60.0, kTol);
    EXPECT_NEAR(d(1, 1).real(), 19.0 / 60.0, kTol);
    EXPECT_NEAR(d(2, 2).real(), 19.0 / 60.0, kTol);
    EXPECT_NEAR(d(3, 3).real(), 0.0, kTol);
    EXPECT_NEAR((d.entries() - CMatrix(d.entries().diagonal().asDiagonal())).norm(),
                0.0, kTol);
    EXPECT_NEAR(eof_2q(d), 0.0, kTol);
}

TEST(Dephase, DiagonalIsFixedPoint) {
    CMatrix m = CMatrix::Zero(4, 4);
    m(0, 0) = 0.1;
    m(1, 1) = 0.2;
    m(2, 2) = 0.3;
    m(3, 3) = 0.4;
    const DensityMatrix rho(RegisterLayout::qubits({"A", "B"}), m);
    EXPECT_LT(max_abs_diff(dephase(rho).entries(), m), kTol);
}

TEST(Dephase, BellProjector) {
    CVector v(4);
    v << 0.0, 1.0, 1.0, 0.0;
    const auto bell = DensityMatrix::pure(
        StateVector::normalized(RegisterLayout::qubits({"A", "B"}), v));
    const auto d = dephase(bell);
    CMatrix expect = CMatrix::Zero(4, 4);
    expect(1, 1) = expect(2, 2) = 0.5;
    EXPECT_LT(max_abs_diff(d.entries(), expect), kTol);
    EXPECT_NEAR(eof_2q(d), 0.0, kTol);
}

TEST(Dephase, IdempotentAndNeverRaisesEntanglement) {
    std::mt19937_64 rng(3);
    const auto layout = RegisterLayout::qubits({"A", "B"});
    for (int t = 0; t < 50; ++t) {
        const DensityMatrix rho(layout, testing::random_density(4, 1 + t % 4, rng));
        const CMatrix basis = random_unitary(4, rng);
        const auto once = dephase(rho, basis);
        const auto twice = dephase(once, basis);
        EXPECT_LT(max_abs_diff(once.entries(), twice.entries()), 1e-12);
        const auto comp = dephase(rho);
        EXPECT_LT(max_abs_diff(comp.entries(), dephase(comp).entries()), 1e-15);
        EXPECT_LE(eof_2q(comp), eof_2q(rho) + 1e-8);
        EXPECT_NEAR(once.entries().trace().real(), 1.0, kTol);
    }
}

TEST(Dephase, BasisErrors) {
    const DensityMatrix rho(RegisterLayout::qubits({"A", "B"}),
                            CMatrix::Identity(4, 4) / 4.0);
    EXPECT_THROW(dephase(rho, CMatrix::Identity(4, 3)), InvalidArgument);
    CMatrix skew = CMatrix::Identity(4, 4);
    skew(0, 1) = 0.5;
    EXPECT_THROW(dephase(rho, skew), InvalidArgument);
}

} // namespace
} // namespace hbent::environment
