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

#include <algorithm>
#include <array>
#include <cmath>
#include <future>
#include <limits>
#include <numbers>
#include <random>

#include "cut.hpp"
#include "hbent/entanglement.hpp"

namespace hbent::entanglement {

namespace {

constexpr std::size_t kMaxRoofDim = 81;
constexpr double kRankThreshold = 1e-12;

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

double xlog2x(double x) { return x > 0.0 ? x * std::log2(x) : 0.0; }

// p * E(psi~ / sqrt(p)) for an unnormalized member psi~ with p = |psi~|^2.
class MemberCost {
  public:
    MemberCost(const RegisterLayout &layout, const detail::ResolvedCut &cut) {
        const bool a_rows = cut.dim_a <= cut.dim_b;
        rows_ = static_cast<Eigen::Index>(a_rows ? cut.dim_a : cut.dim_b);
        cols_ = static_cast<Eigen::Index>(a_rows ? cut.dim_b : cut.dim_a);
        std::vector<bool> in_a(layout.size(), false);
        for (auto p : cut.positions_a) {
            in_a[p] = true;
        }
        const auto &subs = layout.subsystems();
        const std::size_t total = layout.total_dim();
        row_.resize(total);
        col_.resize(total);
        for (std::size_t i = 0; i < total; ++i) {
            std::size_t rem = i, ra = 0, ma = 1, rb = 0, mb = 1;
            for (std::size_t k = subs.size(); k-- > 0;) {
                const auto d = static_cast<std::size_t>(subs[k].dim);
                const std::size_t digit = rem % d;
                rem /= d;
                if (in_a[k]) {
                    ra += digit * ma;
                    ma *= d;
                } else {
                    rb += digit * mb;
                    mb *= d;
                }
            }
            row_[i] = static_cast<Eigen::Index>(a_rows ? ra : rb);
            col_[i] = static_cast<Eigen::Index>(a_rows ? rb : ra);
        }
        work_.resize(rows_, cols_);
    }

    double operator()(const CVector &member) {
        const double p = member.squaredNorm();
        if (p <= 1e-300) {
            return 0.0;
        }
        work_.setZero();
        for (Eigen::Index i = 0; i < member.size(); ++i) {
            work_(row_[static_cast<std::size_t>(i)],
                  col_[static_cast<std::size_t>(i)]) = member[i];
        }
        double s = 0.0;
        if (rows_ == 2) {
            const double a = work_.row(0).squaredNorm();
            const double d = work_.row(1).squaredNorm();
            const Complex b = work_.row(0).dot(work_.row(1));
            const double half = 0.5 * (a + d);
            const double disc =
                std::sqrt(0.25 * (a - d) * (a - d) + std::norm(b));
            s = -xlog2x(half + disc) - xlog2x(std::max(0.0, half - disc));
        } else {
            const CMatrix reduced = work_ * work_.adjoint();
            Eigen::SelfAdjointEigenSolver<CMatrix> solver(
                reduced, Eigen::EigenvaluesOnly);
            const RVector &mu = solver.eigenvalues();
            for (Eigen::Index k = 0; k < mu.size(); ++k) {
                s -= xlog2x(std::max(0.0, mu[k]));
            }
        }
        return std::max(0.0, s + xlog2x(p));
    }

  private:
    Eigen::Index rows_ = 1;
    Eigen::Index cols_ = 1;
    std::vector<Eigen::Index> row_;
    std::vector<Eigen::Index> col_;
    CMatrix work_;
};

struct RestartOutcome {
    CMatrix members; // columns are unnormalized ensemble members
    double value = std::numeric_limits<double>::infinity();
    std::size_t sweeps = 0;
    bool converged = false;
};

// Coordinate search over Givens rotations of member pairs. Each accepted move
// keeps sum_k |m_k><m_k| unchanged.
RestartOutcome refine(CMatrix members, MemberCost cost,
                      const RoofOptions &opts) {
    const auto k = members.cols();
    std::vector<double> c(static_cast<std::size_t>(k));
    for (Eigen::Index j = 0; j < k; ++j) {
        c[static_cast<std::size_t>(j)] = cost(members.col(j));
    }
    auto total = [&] {
        double t = 0.0;
        for (double v : c) {
            t += v;
        }
        return t;
    };

    RestartOutcome out;
    double step = 0.5;
    CVector mp, mq;
    const std::array<double, 2> phases{0.0, std::numbers::pi / 2.0};

    auto rotated = [&](Eigen::Index p, Eigen::Index q, double theta,
                       double phi, CVector &np, CVector &nq) {
        const double cs = std::cos(theta);
        const double sn = std::sin(theta);
        const Complex e = std::polar(1.0, phi);
        np = cs * members.col(p) - e * sn * members.col(q);
        nq = std::conj(e) * sn * members.col(p) + cs * members.col(q);
    };

    for (out.sweeps = 0; out.sweeps < opts.max_iters; ++out.sweeps) {
        const double before = total();
        for (Eigen::Index p = 0; p + 1 < k; ++p) {
            for (Eigen::Index q = p + 1; q < k; ++q) {
                for (double phi : phases) {
                    auto &cp = c[static_cast<std::size_t>(p)];
                    auto &cq = c[static_cast<std::size_t>(q)];
                    const double f0 = cp + cq;
                    if (members.col(p).squaredNorm() <= 1e-300 &&
                        members.col(q).squaredNorm() <= 1e-300) {
                        continue;
                    }
                    CVector pp, pq, mp2, mq2;
                    rotated(p, q, step, phi, pp, pq);
                    const double cpp = cost(pp), cpq = cost(pq);
                    rotated(p, q, -step, phi, mp2, mq2);
                    const double cmp = cost(mp2), cmq = cost(mq2);
                    const double fplus = cpp + cpq;
                    const double fminus = cmp + cmq;

                    double best_f = f0;
                    double best_theta = 0.0;
                    double best_cp = cp, best_cq = cq;
                    if (fplus < best_f) {
                        best_f = fplus;
                        best_theta = step;
                        best_cp = cpp;
                        best_cq = cpq;
                    }
                    if (fminus < best_f) {
                        best_f = fminus;
                        best_theta = -step;
                        best_cp = cmp;
                        best_cq = cmq;
                    }
                    // parabola through (-step, 0, +step)
                    const double curv = fplus - 2.0 * f0 + fminus;
                    if (curv > 1e-15) {
                        double t = 0.5 * step * (fminus - fplus) / curv;
                        t = std::clamp(t, -2.0 * step, 2.0 * step);
                        if (std::abs(t) > 1e-12 && std::abs(t) != step) {
                            rotated(p, q, t, phi, mp, mq);
                            const double tp = cost(mp), tq = cost(mq);
                            if (tp + tq < best_f) {
                                best_f = tp + tq;
                                best_theta = t;
                                best_cp = tp;
                                best_cq = tq;
                            }
                        }
                    }
                    if (best_theta != 0.0 && best_f < f0) {
                        rotated(p, q, best_theta, phi, mp, mq);
                        members.col(p) = mp;
                        members.col(q) = mq;
                        cp = best_cp;
                        cq = best_cq;
                    }
                }
            }
        }
        const double gain = before - total();
        if (gain < opts.sweep_tolerance) {
            step *= 0.25;
            if (step < opts.min_step) {
                out.converged = true;
                ++out.sweeps;
                break;
            }
        } else if (gain > 1e-3 && step < 0.5) {
            step = std::min(0.5, step * 2.0);
        }
    }
    if (k <= 1) {
        out.converged = true;
    }
    out.value = total();
    out.members = std::move(members);
    return out;
}

} // namespace

RoofResult eof_minimize(const DensityMatrix &rho, const Cut &cut,
                        const RoofOptions &opts) {
    const auto &layout = rho.layout();
    if (layout.total_dim() > kMaxRoofDim) {
        throw InvalidArgument("eof_minimize: total dimension " +
                              std::to_string(layout.total_dim()) +
                              " exceeds 81");
    }
    const auto sides = detail::resolve_cut(layout, cut);

    const auto eig = eig_hermitian(rho);
    Eigen::Index rank = 0;
    while (rank < eig.values.size() && eig.values[rank] > kRankThreshold) {
        ++rank;
    }
    const auto dim = static_cast<Eigen::Index>(layout.total_dim());
    // weighted spectral vectors sqrt(lambda_i)|e_i>
    CMatrix spectral(dim, rank);
    for (Eigen::Index i = 0; i < rank; ++i) {
        spectral.col(i) = std::sqrt(eig.values[i]) * eig.vectors.col(i);
    }

    const auto k = static_cast<Eigen::Index>(
        opts.ensemble_size == 0 ? static_cast<std::size_t>(rank * rank)
                                : opts.ensemble_size);
    if (k < rank) {
        throw InvalidArgument("eof_minimize: ensemble_size below rank(rho)");
    }
    const MemberCost cost(layout, sides);
    const std::size_t restarts = std::max<std::size_t>(1, opts.restarts);

    auto run = [&](std::size_t r) {
        CMatrix start = CMatrix::Zero(dim, k);
        if (r == 0) {
            start.leftCols(rank) = spectral;
        } else {
            std::mt19937_64 rng(splitmix64(opts.seed ^ splitmix64(r)));
            const CMatrix u = random_unitary(k, rng);
            // member m = sum_i U(m, i) sqrt(lambda_i)|e_i>
            start = spectral * u.leftCols(rank).transpose();
        }
        return refine(std::move(start), cost, opts);
    };

    std::vector<RestartOutcome> outcomes(restarts);
    if (opts.threads > 1 && restarts > 1) {
        for (std::size_t base = 0; base < restarts; base += opts.threads) {
            std::vector<std::future<RestartOutcome>> batch;
            for (std::size_t r = base;
                 r < std::min(restarts, base + opts.threads); ++r) {
                batch.push_back(std::async(std::launch::async, run, r));
            }
            for (std::size_t j = 0; j < batch.size(); ++j) {
                outcomes[base + j] = batch[j].get();
            }
        }
    } else {
        for (std::size_t r = 0; r < restarts; ++r) {
            outcomes[r] = run(r);
        }
    }

    RoofResult result;
    {
        MemberCost c0 = cost;
        double avg = 0.0;
        for (Eigen::Index i = 0; i < rank; ++i) {
            avg += c0(spectral.col(i));
        }
        result.eigen_average = avg;
    }
    std::size_t best = 0;
    for (std::size_t r = 1; r < restarts; ++r) {
        if (outcomes[r].value < outcomes[best].value) {
            best = r;
        }
    }
    const auto &win = outcomes[best];
    result.best_restart = best;
    result.sweeps = win.sweeps;
    result.converged = win.converged;

    double weight_sum = 0.0;
    for (Eigen::Index j = 0; j < win.members.cols(); ++j) {
        const double w = win.members.col(j).squaredNorm();
        if (w > 1e-14) {
            result.witness.weights.push_back(w);
            result.witness.states.push_back(
                StateVector::normalized(layout, win.members.col(j)));
            weight_sum += w;
        }
    }
    for (auto &w : result.witness.weights) {
        w /= weight_sum;
    }
    const double cap =
        std::log2(static_cast<double>(std::min(sides.dim_a, sides.dim_b)));
    result.value = std::clamp(win.value, 0.0, cap);
    return result;
}

} // namespace hbent::entanglement
