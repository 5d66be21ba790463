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

#include "hbent/qmath.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

namespace hbent {

namespace {

std::size_t stride_of(const RegisterLayout &layout, std::size_t position) {
    std::size_t stride = 1;
    const auto &subs = layout.subsystems();
    for (std::size_t k = position + 1; k < subs.size(); ++k) {
        stride *= static_cast<std::size_t>(subs[k].dim);
    }
    return stride;
}

double hermiticity_defect(const CMatrix &m) {
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

// Splits every flat index into (kept index, traced index) for the given kept
// positions.
struct IndexSplit {
    std::vector<std::size_t> kept;
    std::vector<std::size_t> traced;
    std::size_t kept_dim = 1;
    std::size_t traced_dim = 1;
};

IndexSplit split_indices(const RegisterLayout &layout,
                         const std::vector<std::size_t> &keep_positions) {
    IndexSplit split;
    const auto &subs = layout.subsystems();
    std::vector<bool> is_kept(subs.size(), false);
    for (auto p : keep_positions) {
        is_kept[p] = true;
    }
    for (std::size_t k = 0; k < subs.size(); ++k) {
        (is_kept[k] ? split.kept_dim : split.traced_dim) *=
            static_cast<std::size_t>(subs[k].dim);
    }
    const std::size_t total = layout.total_dim();
    split.kept.resize(total);
    split.traced.resize(total);
    for (std::size_t i = 0; i < total; ++i) {
        std::size_t rem = i;
        std::size_t kept = 0, kept_mul = 1, traced = 0, traced_mul = 1;
        for (std::size_t k = subs.size(); k-- > 0;) {
            const auto d = static_cast<std::size_t>(subs[k].dim);
            const std::size_t digit = rem % d;
            rem /= d;
            if (is_kept[k]) {
                kept += digit * kept_mul;
                kept_mul *= d;
            } else {
                traced += digit * traced_mul;
                traced_mul *= d;
            }
        }
        split.kept[i] = kept;
        split.traced[i] = traced;
    }
    return split;
}

std::vector<std::size_t> keep_positions(const RegisterLayout &layout,
                                        const std::vector<std::string> &keep) {
    if (keep.empty()) {
        throw InvalidArgument("partial_trace: keep set is empty");
    }
    std::set<std::size_t> positions;
    for (const auto &label : keep) {
        positions.insert(layout.position(label));
    }
    return {positions.begin(), positions.end()};
}

void check_local_basis(const CMatrix &basis, int dim) {
    if (basis.rows() != dim || basis.cols() != dim) {
        throw InvalidArgument("measurement basis must be a complete " +
                              std::to_string(dim) + "x" + std::to_string(dim) +
                              " set of columns");
    }
    if (!is_orthonormal(basis)) {
        throw InvalidArgument("measurement basis is not orthonormal");
    }
}

} // namespace

// ---------------------------------------------------------------------------
// RegisterLayout

RegisterLayout::RegisterLayout(std::vector<Subsystem> subsystems)
    : subsystems_(std::move(subsystems)) {
    std::set<std::string> seen;
    for (const auto &s : subsystems_) {
        if (s.label.empty()) {
            throw InvalidArgument("subsystem label must be non-empty");
        }
        if (s.dim != 2 && s.dim != 3) {
            throw InvalidArgument("subsystem '" + s.label +
                                  "' has unsupported dimension " +
                                  std::to_string(s.dim));
        }
        if (!seen.insert(s.label).second) {
            throw InvalidArgument("duplicate subsystem label '" + s.label +
                                  "'");
        }
        total_dim_ *= static_cast<std::size_t>(s.dim);
    }
}

RegisterLayout RegisterLayout::qubits(const std::vector<std::string> &labels) {
    std::vector<Subsystem> subs;
    for (const auto &l : labels) {
        subs.push_back({l, 2});
    }
    return RegisterLayout(std::move(subs));
}

RegisterLayout RegisterLayout::qutrits(const std::vector<std::string> &labels) {
    std::vector<Subsystem> subs;
    for (const auto &l : labels) {
        subs.push_back({l, 3});
    }
    return RegisterLayout(std::move(subs));
}

bool RegisterLayout::contains(std::string_view label) const {
    return std::any_of(subsystems_.begin(), subsystems_.end(),
                       [&](const Subsystem &s) { return s.label == label; });
}

std::size_t RegisterLayout::position(std::string_view label) const {
    for (std::size_t k = 0; k < subsystems_.size(); ++k) {
        if (subsystems_[k].label == label) {
            return k;
        }
    }
    throw InvalidArgument("unknown subsystem label '" + std::string(label) +
                          "'");
}

std::vector<std::string> RegisterLayout::labels() const {
    std::vector<std::string> out;
    out.reserve(subsystems_.size());
    for (const auto &s : subsystems_) {
        out.push_back(s.label);
    }
    return out;
}

RegisterLayout RegisterLayout::concat(const RegisterLayout &other) const {
    std::vector<Subsystem> subs = subsystems_;
    subs.insert(subs.end(), other.subsystems_.begin(), other.subsystems_.end());
    return RegisterLayout(std::move(subs));
}

RegisterLayout RegisterLayout::select(std::vector<std::size_t> positions) const {
    std::sort(positions.begin(), positions.end());
    std::vector<Subsystem> subs;
    for (auto p : positions) {
        subs.push_back(subsystems_.at(p));
    }
    return RegisterLayout(std::move(subs));
}

std::vector<int> RegisterLayout::digits(std::size_t index) const {
    std::vector<int> out(subsystems_.size());
    for (std::size_t k = subsystems_.size(); k-- > 0;) {
        const auto d = static_cast<std::size_t>(subsystems_[k].dim);
        out[k] = static_cast<int>(index % d);
        index /= d;
    }
    return out;
}

std::size_t RegisterLayout::index(const std::vector<int> &digits) const {
    if (digits.size() != subsystems_.size()) {
        throw InvalidArgument("digit count does not match register size");
    }
    std::size_t idx = 0;
    for (std::size_t k = 0; k < digits.size(); ++k) {
        if (digits[k] < 0 || digits[k] >= subsystems_[k].dim) {
            throw InvalidArgument("basis digit out of range for '" +
                                  subsystems_[k].label + "'");
        }
        idx = idx * static_cast<std::size_t>(subsystems_[k].dim) +
              static_cast<std::size_t>(digits[k]);
    }
    return idx;
}

// ---------------------------------------------------------------------------
// StateVector

StateVector::StateVector(RegisterLayout layout, CVector amps)
    : layout_(std::move(layout)), amps_(std::move(amps)) {
    if (static_cast<std::size_t>(amps_.size()) != layout_.total_dim()) {
        throw InvalidArgument("amplitude count " +
                              std::to_string(amps_.size()) +
                              " does not match register dimension " +
                              std::to_string(layout_.total_dim()));
    }
    if (!amps_.allFinite()) {
        throw InvalidArgument("amplitudes must be finite");
    }
    const double norm2 = amps_.squaredNorm();
    if (std::abs(norm2 - 1.0) > tol::kStructural) {
        std::ostringstream msg;
        msg << "state is not normalized (squared norm " << norm2 << ")";
        throw InvalidArgument(msg.str());
    }
}

StateVector StateVector::normalized(RegisterLayout layout, CVector amps) {
    const double norm = amps.norm();
    if (!(norm > 1e-300) || !std::isfinite(norm)) {
        throw NumericalError("cannot normalize a zero or non-finite vector");
    }
    amps /= norm;
    return {std::move(layout), std::move(amps)};
}

StateVector StateVector::basis_state(RegisterLayout layout,
                                     const std::vector<int> &digits) {
    CVector amps = CVector::Zero(static_cast<Eigen::Index>(layout.total_dim()));
    amps[static_cast<Eigen::Index>(layout.index(digits))] = 1.0;
    return {std::move(layout), std::move(amps)};
}

Complex StateVector::inner(const StateVector &other) const {
    if (!(layout_ == other.layout_)) {
        throw InvalidArgument("inner product of states on different layouts");
    }
    return amps_.dot(other.amps_);
}

// ---------------------------------------------------------------------------
// DensityMatrix

DensityMatrix::DensityMatrix(RegisterLayout layout, CMatrix entries)
    : layout_(std::move(layout)), entries_(std::move(entries)) {
    const auto n = static_cast<Eigen::Index>(layout_.total_dim());
    if (entries_.rows() != n || entries_.cols() != n) {
        throw InvalidArgument("density matrix shape does not match register "
                              "dimension " +
                              std::to_string(n));
    }
    if (!entries_.allFinite()) {
        throw InvalidArgument("density matrix entries must be finite");
    }
    if (hermiticity_defect(entries_) > tol::kStructural) {
        throw InvalidArgument("density matrix is not Hermitian");
    }
    entries_ = (0.5 * (entries_ + entries_.adjoint())).eval();
    const Complex tr = entries_.trace();
    if (std::abs(tr - 1.0) > tol::kStructural) {
        std::ostringstream msg;
        msg << "density matrix trace is " << tr.real() << ", expected 1";
        throw InvalidArgument(msg.str());
    }
    const auto spectrum = eig_hermitian(entries_).values;
    if (spectrum.minCoeff() < -tol::kStructural) {
        std::ostringstream msg;
        msg << "density matrix has negative eigenvalue " << spectrum.minCoeff();
        throw InvalidArgument(msg.str());
    }
}

DensityMatrix DensityMatrix::pure(const StateVector &psi) {
    const CVector &a = psi.amplitudes();
    return {psi.layout(), a * a.adjoint()};
}

DensityMatrix DensityMatrix::mixture(const std::vector<double> &weights,
                                     const std::vector<StateVector> &states) {
    if (weights.size() != states.size() || states.empty()) {
        throw InvalidArgument("mixture needs one weight per state");
    }
    const auto &layout = states.front().layout();
    const auto n = static_cast<Eigen::Index>(layout.total_dim());
    CMatrix rho = CMatrix::Zero(n, n);
    for (std::size_t i = 0; i < states.size(); ++i) {
        if (!(states[i].layout() == layout)) {
            throw InvalidArgument("mixture members must share one layout");
        }
        if (weights[i] < 0.0) {
            throw InvalidArgument("mixture weights must be non-negative");
        }
        const CVector &a = states[i].amplitudes();
        rho.noalias() += weights[i] * (a * a.adjoint());
    }
    return {layout, std::move(rho)};
}

// ---------------------------------------------------------------------------
// Operations

StateVector tensor(const StateVector &a, const StateVector &b) {
    RegisterLayout layout = a.layout().concat(b.layout());
    const auto na = a.amplitudes().size();
    const auto nb = b.amplitudes().size();
    CVector amps(na * nb);
    for (Eigen::Index i = 0; i < na; ++i) {
        amps.segment(i * nb, nb) = a.amplitudes()[i] * b.amplitudes();
    }
    return StateVector::normalized(std::move(layout), std::move(amps));
}

DensityMatrix partial_trace(const DensityMatrix &rho,
                            const std::vector<std::string> &keep) {
    const auto &layout = rho.layout();
    const auto positions = keep_positions(layout, keep);
    const auto split = split_indices(layout, positions);

    // Group flat indices by their traced part so the sum is O(dT * dK^2).
    std::vector<std::vector<std::size_t>> by_traced(split.traced_dim);
    for (std::size_t i = 0; i < layout.total_dim(); ++i) {
        by_traced[split.traced[i]].push_back(i);
    }
    const auto dk = static_cast<Eigen::Index>(split.kept_dim);
    CMatrix out = CMatrix::Zero(dk, dk);
    const CMatrix &m = rho.entries();
    for (const auto &group : by_traced) {
        for (auto i : group) {
            for (auto j : group) {
                out(static_cast<Eigen::Index>(split.kept[i]),
                    static_cast<Eigen::Index>(split.kept[j])) +=
                    m(static_cast<Eigen::Index>(i),
                      static_cast<Eigen::Index>(j));
            }
        }
    }
    return {layout.select(positions), std::move(out)};
}

DensityMatrix partial_trace(const StateVector &psi,
                            const std::vector<std::string> &keep) {
    const auto &layout = psi.layout();
    const auto positions = keep_positions(layout, keep);
    const auto split = split_indices(layout, positions);
    CMatrix m = CMatrix::Zero(static_cast<Eigen::Index>(split.kept_dim),
                              static_cast<Eigen::Index>(split.traced_dim));
    for (std::size_t i = 0; i < layout.total_dim(); ++i) {
        m(static_cast<Eigen::Index>(split.kept[i]),
          static_cast<Eigen::Index>(split.traced[i])) = psi[i];
    }
    return {layout.select(positions), m * m.adjoint()};
}

EigenDecomposition eig_hermitian(const CMatrix &m) {
    if (m.rows() != m.cols()) {
        throw InvalidArgument("eig_hermitian: matrix is not square");
    }
    const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
    if (hermiticity_defect(m) > tol::kStructural * scale) {
        throw NumericalError("eig_hermitian: matrix is not Hermitian");
    }
    const CMatrix h = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(h);
    if (solver.info() != Eigen::Success) {
        throw NumericalError("eig_hermitian: eigensolver did not converge");
    }
    EigenDecomposition out;
    out.values = solver.eigenvalues().reverse();
    out.vectors = solver.eigenvectors().rowwise().reverse();
    return out;
}

EigenDecomposition eig_hermitian(const DensityMatrix &rho) {
    return eig_hermitian(rho.entries());
}

double spectrum_entropy(const RVector &spectrum) {
    double s = 0.0;
    for (Eigen::Index i = 0; i < spectrum.size(); ++i) {
        const double p = spectrum[i];
        if (p < -tol::kStructural) {
            throw NumericalError("negative eigenvalue " + std::to_string(p) +
                                 " beyond round-off tolerance");
        }
        if (p > 0.0) {
            s -= p * std::log2(p);
        }
    }
    return std::max(0.0, s);
}

double von_neumann_entropy(const DensityMatrix &rho) {
    const double s = spectrum_entropy(eig_hermitian(rho).values);
    return std::min(s, std::log2(static_cast<double>(rho.dim())));
}

double fidelity(const DensityMatrix &rho, const DensityMatrix &sigma) {
    if (!(rho.layout() == sigma.layout())) {
        throw InvalidArgument("fidelity: layout mismatch");
    }
    const auto er = eig_hermitian(rho);
    const RVector root = er.values.cwiseMax(0.0).cwiseSqrt();
    const CMatrix sqrt_rho =
        er.vectors * root.asDiagonal() * er.vectors.adjoint();
    const CMatrix inner = sqrt_rho * sigma.entries() * sqrt_rho;
    const auto ei = eig_hermitian(0.5 * (inner + inner.adjoint()));
    const double tr = ei.values.cwiseMax(0.0).cwiseSqrt().sum();
    return std::clamp(tr * tr, 0.0, 1.0);
}

std::vector<MeasurementBranch>
measurement_branches(const StateVector &psi, std::string_view label,
                     const CMatrix &basis) {
    const auto &layout = psi.layout();
    const std::size_t pos = layout.position(label);
    const int d = layout.subsystems()[pos].dim;
    check_local_basis(basis, d);

    const std::size_t stride = stride_of(layout, pos);
    const std::size_t block = stride * static_cast<std::size_t>(d);
    const std::size_t rest = layout.total_dim() / static_cast<std::size_t>(d);

    std::vector<MeasurementBranch> branches;
    for (int k = 0; k < d; ++k) {
        // coefficient of <b_k| on the measured digit, for every other digit
        // configuration
        CVector coeff = CVector::Zero(static_cast<Eigen::Index>(rest));
        CVector projected =
            CVector::Zero(static_cast<Eigen::Index>(layout.total_dim()));
        for (std::size_t r = 0; r < rest; ++r) {
            const std::size_t high = r / stride;
            const std::size_t low = r % stride;
            Complex c = 0.0;
            for (int x = 0; x < d; ++x) {
                c += std::conj(basis(x, k)) *
                     psi[high * block + static_cast<std::size_t>(x) * stride +
                         low];
            }
            for (int x = 0; x < d; ++x) {
                projected[static_cast<Eigen::Index>(
                    high * block + static_cast<std::size_t>(x) * stride +
                    low)] = basis(x, k) * c;
            }
        }
        branches.push_back({static_cast<std::size_t>(k),
                            projected.squaredNorm(), std::move(projected)});
    }
    return branches;
}

MeasurementResult measure_projective(const StateVector &psi,
                                     std::string_view label,
                                     const CMatrix &basis,
                                     std::uint64_t seed) {
    auto branches = measurement_branches(psi, label, basis);
    std::mt19937_64 rng(seed);
    const double u = std::uniform_real_distribution<double>(0.0, 1.0)(rng);

    double cumulative = 0.0;
    const MeasurementBranch *chosen = nullptr;
    for (const auto &b : branches) {
        if (b.probability <= 0.0) {
            continue;
        }
        cumulative += b.probability;
        chosen = &b;
        if (u < cumulative) {
            break;
        }
    }
    if (chosen == nullptr || chosen->probability <= 1e-300) {
        throw NumericalError("measurement selected a zero-probability branch");
    }
    return {chosen->outcome,
            StateVector::normalized(psi.layout(), chosen->projected),
            chosen->probability};
}

StateVector apply_operator(const StateVector &psi,
                           const std::vector<std::string> &labels,
                           const CMatrix &op) {
    const auto &layout = psi.layout();
    std::vector<std::size_t> positions;
    std::vector<std::size_t> strides;
    std::size_t sub_dim = 1;
    for (const auto &l : labels) {
        const auto p = layout.position(l);
        if (std::find(positions.begin(), positions.end(), p) !=
            positions.end()) {
            throw InvalidArgument("apply_operator: repeated label '" + l + "'");
        }
        positions.push_back(p);
        strides.push_back(stride_of(layout, p));
        sub_dim *= static_cast<std::size_t>(layout.subsystems()[p].dim);
    }
    if (static_cast<std::size_t>(op.rows()) != sub_dim ||
        static_cast<std::size_t>(op.cols()) != sub_dim) {
        throw InvalidArgument("apply_operator: operator dimension mismatch");
    }

    // offset[s] is the flat-index contribution of local configuration s
    std::vector<std::size_t> offset(sub_dim, 0);
    for (std::size_t s = 0; s < sub_dim; ++s) {
        std::size_t rem = s;
        std::size_t off = 0;
        for (std::size_t k = positions.size(); k-- > 0;) {
            const auto d =
                static_cast<std::size_t>(layout.subsystems()[positions[k]].dim);
            off += (rem % d) * strides[k];
            rem /= d;
        }
        offset[s] = off;
    }

    const std::size_t total = layout.total_dim();
    CVector out = CVector::Zero(static_cast<Eigen::Index>(total));
    for (std::size_t i = 0; i < total; ++i) {
        const Complex a = psi[i];
        if (a == Complex(0.0)) {
            continue;
        }
        const auto digits = layout.digits(i);
        std::size_t s = 0;
        for (auto p : positions) {
            s = s * static_cast<std::size_t>(layout.subsystems()[p].dim) +
                static_cast<std::size_t>(digits[p]);
        }
        const std::size_t base = i - offset[s];
        for (std::size_t t = 0; t < sub_dim; ++t) {
            out[static_cast<Eigen::Index>(base + offset[t])] +=
                op(static_cast<Eigen::Index>(t), static_cast<Eigen::Index>(s)) *
                a;
        }
    }
    return StateVector::normalized(layout, std::move(out));
}

StateVector contract(const StateVector &psi, std::string_view label,
                     const CVector &bra) {
    const auto &layout = psi.layout();
    const std::size_t pos = layout.position(label);
    const int d = layout.subsystems()[pos].dim;
    if (bra.size() != d) {
        throw InvalidArgument("contract: vector dimension mismatch");
    }
    const std::size_t stride = stride_of(layout, pos);
    const std::size_t block = stride * static_cast<std::size_t>(d);
    const std::size_t rest = layout.total_dim() / static_cast<std::size_t>(d);
    CVector out = CVector::Zero(static_cast<Eigen::Index>(rest));
    for (std::size_t r = 0; r < rest; ++r) {
        const std::size_t high = r / stride;
        const std::size_t low = r % stride;
        Complex c = 0.0;
        for (int x = 0; x < d; ++x) {
            c += std::conj(bra[x]) *
                 psi[high * block + static_cast<std::size_t>(x) * stride + low];
        }
        out[static_cast<Eigen::Index>(r)] = c;
    }
    std::vector<std::size_t> remaining;
    for (std::size_t k = 0; k < layout.size(); ++k) {
        if (k != pos) {
            remaining.push_back(k);
        }
    }
    return StateVector::normalized(layout.select(remaining), std::move(out));
}

bool equal_up_to_phase(const StateVector &a, const StateVector &b,
                       double tolerance) {
    if (!(a.layout() == b.layout())) {
        return false;
    }
    return std::abs(a.inner(b)) >= 1.0 - tolerance;
}

double max_abs_diff(const CMatrix &a, const CMatrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw InvalidArgument("max_abs_diff: shape mismatch");
    }
    if (a.size() == 0) {
        return 0.0;
    }
    return (a - b).cwiseAbs().maxCoeff();
}

CMatrix random_unitary(Eigen::Index n, std::mt19937_64 &rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    CMatrix g(n, n);
    for (Eigen::Index j = 0; j < n; ++j) {
        for (Eigen::Index i = 0; i < n; ++i) {
            g(i, j) = Complex(normal(rng), normal(rng));
        }
    }
    Eigen::HouseholderQR<CMatrix> qr(g);
    CMatrix q = qr.householderQ();
    const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index j = 0; j < n; ++j) {
        const double mag = std::abs(r(j, j));
        if (mag > 0.0) {
            q.col(j) *= r(j, j) / mag;
        }
    }
    return q;
}

bool is_orthonormal(const CMatrix &basis, double tolerance) {
    const CMatrix gram = basis.adjoint() * basis;
    return max_abs_diff(gram, CMatrix::Identity(gram.rows(), gram.cols())) <=
           tolerance;
}

} // namespace hbent
