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

// Command-line front end over the C API.
//
// Usage: hbent <bond|thermal|swap|recognize|capacity> --config FILE
//        hbent reproduce-paper
// Exit codes: 0 success, 2 configuration error, 3 numerical or domain error.

#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hbent/hbent.h"

namespace {

using json = nlohmann::json;
using cplx = std::complex<double>;

constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;
constexpr double kNormReject = 1e-6;
constexpr double kNormQuiet = 1e-9;

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ApiError : std::runtime_error {
    ApiError(hb_status s, const std::string &msg)
        : std::runtime_error(msg), status(s) {}
    hb_status status;
};

void check(hb_status s) {
    if (s != HB_OK)
        throw ApiError(s, std::string(hb_status_string(s)) + ": " +
                              hb_last_error_message());
}

// RAII owners for API handles.
struct StateFree {
    void operator()(hb_state *p) const { hb_state_free(p); }
};
struct DensityFree {
    void operator()(hb_density *p) const { hb_density_free(p); }
};
struct ReportFree {
    void operator()(hb_report *p) const { hb_report_free(p); }
};
using State = std::unique_ptr<hb_state, StateFree>;
using Density = std::unique_ptr<hb_density, DensityFree>;
using Report = std::unique_ptr<hb_report, ReportFree>;

template <typename F> State make_state(F &&f) {
    hb_state *raw = nullptr;
    check(f(&raw));
    return State(raw);
}

template <typename F> Density make_density(F &&f) {
    hb_density *raw = nullptr;
    check(f(&raw));
    return Density(raw);
}

// ---- number formatting --------------------------------------------------

double r9(double x) {
    if (!std::isfinite(x))
        return x;
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", x);
    const double y = std::strtod(buf, nullptr);
    return y == 0.0 ? 0.0 : y;
}

json jnum(double x) {
    if (!std::isfinite(x))
        return nullptr;
    return r9(x);
}

json jcomplex(hb_complex z) { return json::array({jnum(z.re), jnum(z.im)}); }

std::string fmt9(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", r9(x));
    return buf;
}

// ---- config parsing -----------------------------------------------------

const json &field(const json &obj, const char *key) {
    if (!obj.contains(key))
        throw ConfigError(std::string("missing required field '") + key + "'");
    return obj.at(key);
}

double real_of(const json &v, const std::string &what) {
    if (!v.is_number())
        throw ConfigError(what + " must be a number");
    const double x = v.get<double>();
    if (!std::isfinite(x))
        throw ConfigError(what + " must be finite");
    return x;
}

cplx complex_of(const json &v, const std::string &what) {
    if (v.is_number())
        return {real_of(v, what), 0.0};
    if (v.is_array() && v.size() == 2)
        return {real_of(v[0], what + "[0]"), real_of(v[1], what + "[1]")};
    throw ConfigError(what + " must be a number or a [re, im] pair");
}

std::vector<cplx> complex_list(const json &v, std::size_t n,
                               const std::string &what) {
    if (!v.is_array() || v.size() != n)
        throw ConfigError(what + " must be an array of " + std::to_string(n) +
                          " amplitudes");
    std::vector<cplx> out;
    for (std::size_t i = 0; i < n; ++i)
        out.push_back(complex_of(v[i], what + "[" + std::to_string(i) + "]"));
    return out;
}

// Rejects groups off unit norm by more than 1e-6; rescales (with a warning)
// those off by more than 1e-9.
void normalize_group(std::vector<cplx *> group, const std::string &what) {
    double n2 = 0.0;
    for (const cplx *z : group)
        n2 += std::norm(*z);
    const double dev = std::abs(n2 - 1.0);
    if (dev > kNormReject)
        throw ConfigError(what + " is not normalized (squared norm " +
                          fmt9(n2) + ")");
    if (dev > kNormQuiet) {
        std::cerr << "warning: renormalizing " << what << " (squared norm "
                  << fmt9(n2) << ")\n";
        const double s = 1.0 / std::sqrt(n2);
        for (cplx *z : group)
            *z *= s;
    }
}

void normalize_list(std::vector<cplx> &v, const std::string &what) {
    std::vector<cplx *> ptrs;
    for (auto &z : v)
        ptrs.push_back(&z);
    normalize_group(ptrs, what);
}

void normalize_weights(std::vector<double> &w, const std::string &what) {
    double sum = 0.0;
    for (double x : w) {
        if (x < 0.0)
            throw ConfigError(what + " must be non-negative");
        sum += x;
    }
    const double dev = std::abs(sum - 1.0);
    if (dev > kNormReject)
        throw ConfigError(what + " must sum to 1 (sum " + fmt9(sum) + ")");
    if (dev > kNormQuiet) {
        std::cerr << "warning: renormalizing " << what << " (sum " << fmt9(sum)
                  << ")\n";
        for (double &x : w)
            x /= sum;
    }
}

hb_complex to_c(cplx z) { return {z.real(), z.imag()}; }

std::vector<std::string> string_list(const json &v, const std::string &what) {
    if (!v.is_array() || v.empty())
        throw ConfigError(what + " must be a non-empty array of labels");
    std::vector<std::string> out;
    for (const auto &s : v) {
        if (!s.is_string())
            throw ConfigError(what + " entries must be strings");
        out.push_back(s.get<std::string>());
    }
    return out;
}

std::vector<const char *> cstrs(const std::vector<std::string> &v) {
    std::vector<const char *> out;
    for (const auto &s : v)
        out.push_back(s.c_str());
    return out;
}

// Optional eigenbasis: 3 rows of 3 psi-coefficients.
std::optional<std::vector<hb_complex>> basis_of(const json &cfg) {
    if (!cfg.contains("basis"))
        return std::nullopt;
    const json &b = cfg.at("basis");
    if (!b.is_array() || b.size() != 3)
        throw ConfigError("basis must be an array of 3 rows");
    std::vector<hb_complex> rows;
    for (std::size_t j = 0; j < 3; ++j) {
        auto row = complex_list(b[j], 3, "basis[" + std::to_string(j) + "]");
        normalize_list(row, "basis[" + std::to_string(j) + "]");
        for (const auto &z : row)
            rows.push_back(to_c(z));
    }
    return rows;
}

// ---- state summaries ----------------------------------------------------

std::vector<std::string> labels_of(const hb_state *s) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < hb_state_num_subsystems(s); ++i) {
        const char *label = nullptr;
        int dim = 0;
        check(hb_state_subsystem(s, i, &label, &dim));
        out.emplace_back(label);
    }
    return out;
}

json state_json(const hb_state *s) {
    std::vector<hb_complex> amps(hb_state_dim(s));
    check(hb_state_amplitudes(s, amps.data(), amps.size()));
    json a = json::array();
    for (const auto &z : amps)
        a.push_back(jcomplex(z));
    json dims = json::array();
    for (std::size_t i = 0; i < hb_state_num_subsystems(s); ++i) {
        const char *label = nullptr;
        int dim = 0;
        check(hb_state_subsystem(s, i, &label, &dim));
        dims.push_back(dim);
    }
    return {{"labels", labels_of(s)}, {"dims", dims}, {"amplitudes", a}};
}

json density_json(const hb_density *rho) {
    const std::size_t d = hb_density_dim(rho);
    std::vector<hb_complex> e(d * d);
    check(hb_density_entries(rho, e.data(), e.size()));
    json m = json::array();
    for (std::size_t r = 0; r < d; ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < d; ++c)
            row.push_back(jcomplex(e[r * d + c]));
        m.push_back(row);
    }
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < hb_density_num_subsystems(rho); ++i) {
        const char *label = nullptr;
        int dim = 0;
        check(hb_density_subsystem(rho, i, &label, &dim));
        labels.emplace_back(label);
    }
    return {{"labels", labels}, {"entries", m}};
}

double eoe(const hb_state *s, const std::vector<std::string> &cut) {
    auto c = cstrs(cut);
    double v = 0.0;
    check(hb_entropy_of_entanglement(s, c.data(), c.size(), &v));
    return v;
}

std::vector<std::string> cut_of(const json &cfg, const hb_state *s) {
    if (cfg.contains("cut"))
        return string_list(cfg.at("cut"), "cut");
    return {labels_of(s).front()};
}

// ---- scenarios ----------------------------------------------------------

hb_covalent_amps covalent_amps(const json &cfg) {
    cplx a = cfg.contains("a") ? complex_of(cfg["a"], "a") : cplx{1.0, 0.0};
    cplx b = cfg.contains("b") ? complex_of(cfg["b"], "b") : cplx{0.0, 0.0};
    cplx alpha = complex_of(field(cfg, "alpha"), "alpha");
    cplx beta = cfg.contains("beta") ? complex_of(cfg["beta"], "beta") : cplx{};
    cplx gamma =
        cfg.contains("gamma") ? complex_of(cfg["gamma"], "gamma") : cplx{};
    normalize_group({&a, &b}, "(a, b)");
    normalize_group({&alpha, &beta, &gamma}, "(alpha, beta, gamma)");
    return {to_c(a), to_c(b), to_c(alpha), to_c(beta), to_c(gamma)};
}

json run_covalent(const json &cfg) {
    const std::string model = cfg.value("model", "qutrit");
    if (model != "qubit" && model != "qutrit")
        throw ConfigError("covalent model must be 'qubit' or 'qutrit'");
    auto amps = covalent_amps(cfg);
    auto build = [&](const hb_covalent_amps &x) {
        return make_state([&](hb_state **o) {
            return model == "qubit" ? hb_covalent_qubit(&x, o)
                                    : hb_covalent_qutrit(&x, o);
        });
    };
    const State s = build(amps);
    const auto cut = cut_of(cfg, s.get());
    json out = {{"model", model}, {"state", state_json(s.get())},
                {"cut", cut}, {"eof", jnum(eoe(s.get(), cut))}};
    if (cfg.contains("polarize_beta")) {
        const hb_complex nb = to_c(complex_of(cfg["polarize_beta"], "polarize_beta"));
        hb_covalent_amps pol{};
        check(hb_polarize(&amps, nb, &pol));
        const State p = build(pol);
        out["polarized"] = {{"alpha", jcomplex(pol.alpha)},
                            {"beta", jcomplex(pol.beta)},
                            {"gamma", jcomplex(pol.gamma)},
                            {"eof", jnum(eoe(p.get(), cut))}};
    }
    return out;
}

json run_hbond(const json &cfg) {
    const std::string model = cfg.value("model", "unified");
    State s;
    if (model == "unified") {
        auto c = complex_list(field(cfg, "c"), 3, "c");
        normalize_list(c, "c");
        const hb_complex cc[3] = {to_c(c[0]), to_c(c[1]), to_c(c[2])};
        s = make_state([&](hb_state **o) {
            return hb_unified_state(cc, nullptr, nullptr, o);
        });
    } else if (model == "classical" || model == "electron" ||
               model == "proton") {
        const char *second = model == "classical" ? "beta" : "delta";
        cplx x = complex_of(field(cfg, "alpha"), "alpha");
        cplx y = complex_of(field(cfg, second), second);
        normalize_group({&x, &y}, std::string("(alpha, ") + second + ")");
        s = make_state([&](hb_state **o) {
            if (model == "classical")
                return hb_classical_hbond(to_c(x), to_c(y), o);
            if (model == "electron")
                return hb_covalent_hbond_electron(to_c(x), to_c(y), o);
            return hb_covalent_hbond_proton(to_c(x), to_c(y), o);
        });
    } else {
        throw ConfigError(
            "hbond model must be one of unified, classical, electron, proton");
    }
    const auto cut = cut_of(cfg, s.get());
    return {{"model", model}, {"state", state_json(s.get())}, {"cut", cut},
            {"eof", jnum(eoe(s.get(), cut))}};
}

json run_thermal(const json &cfg, std::uint64_t seed) {
    std::vector<State> levels;
    if (cfg.contains("levels")) {
        const json &lv = cfg.at("levels");
        if (!lv.is_array() || lv.empty())
            throw ConfigError("levels must be a non-empty array of c-triples");
        for (std::size_t i = 0; i < lv.size(); ++i) {
            const std::string what = "levels[" + std::to_string(i) + "]";
            auto c = complex_list(lv[i], 3, what);
            normalize_list(c, what);
            const hb_complex cc[3] = {to_c(c[0]), to_c(c[1]), to_c(c[2])};
            levels.push_back(make_state([&](hb_state **o) {
                return hb_unified_state(cc, nullptr, nullptr, o);
            }));
        }
    } else {
        hb_state *raw[3] = {nullptr, nullptr, nullptr};
        check(hb_hbond_excitations(raw));
        for (auto *p : raw)
            levels.emplace_back(p);
    }
    std::vector<const hb_state *> lp;
    for (const auto &l : levels)
        lp.push_back(l.get());

    Density rho;
    json out;
    if (cfg.contains("weights")) {
        const json &w = cfg.at("weights");
        if (!w.is_array() || w.size() != levels.size())
            throw ConfigError("weights must have one entry per level");
        std::vector<double> wv;
        for (std::size_t i = 0; i < w.size(); ++i)
            wv.push_back(real_of(w[i], "weights[" + std::to_string(i) + "]"));
        normalize_weights(wv, "weights");
        rho = make_density([&](hb_density **o) {
            return hb_thermal_state_from_weights(lp.data(), wv.data(), wv.size(), o);
        });
    } else if (cfg.contains("energies")) {
        const json &e = cfg.at("energies");
        if (!e.is_array() || e.size() != levels.size())
            throw ConfigError("energies must have one entry per level");
        std::vector<double> ev;
        for (std::size_t i = 0; i < e.size(); ++i)
            ev.push_back(real_of(e[i], "energies[" + std::to_string(i) + "]"));
        const double beta = real_of(field(cfg, "beta"), "beta");
        rho = make_density([&](hb_density **o) {
            return hb_thermal_state(lp.data(), ev.data(), ev.size(), beta, o);
        });
    } else {
        throw ConfigError("thermal config needs 'weights' or 'energies'");
    }

    double conc = 0.0, eof = 0.0;
    check(hb_concurrence_2q(rho.get(), &conc));
    check(hb_eof_2q(rho.get(), &eof));
    out["density"] = density_json(rho.get());
    out["concurrence"] = jnum(conc);
    out["eof"] = jnum(eof);

    const Density deph = make_density(
        [&](hb_density **o) { return hb_dephase(rho.get(), nullptr, 0, o); });
    const std::size_t d = hb_density_dim(deph.get());
    std::vector<hb_complex> e(d * d);
    check(hb_density_entries(deph.get(), e.data(), e.size()));
    json diag = json::array();
    for (std::size_t i = 0; i < d; ++i)
        diag.push_back(jnum(e[i * d + i].re));
    double eof_d = 0.0;
    check(hb_eof_2q(deph.get(), &eof_d));
    out["dephased"] = {{"diagonal", diag}, {"eof", jnum(eof_d)}};

    if (cfg.value("roof", false)) {
        hb_roof_options opts;
        hb_roof_options_default(&opts);
        opts.seed = seed;
        hb_roof_result res{};
        const char *side[] = {"X1"};
        check(hb_eof_minimize(rho.get(), side, 1, &opts, &res, nullptr));
        out["roof"] = {{"eof", jnum(res.value)},
                       {"converged", res.converged != 0},
                       {"spectral_average", jnum(res.eigen_average)}};
    }
    return out;
}

hb_ligand ligand_of(const json &entry, std::vector<std::string> &names,
                    const std::string &what) {
    hb_ligand lig{};
    if (entry.is_string()) {
        check(hb_ligand_builtin(entry.get<std::string>().c_str(), &lig));
        return lig;
    }
    if (!entry.is_object())
        throw ConfigError(what + " must be a built-in name or an object");
    if (!entry.contains("c")) {
        check(hb_ligand_builtin(field(entry, "name").get<std::string>().c_str(),
                                &lig));
        return lig;
    }
    auto c = complex_list(entry.at("c"), 3, what + ".c");
    normalize_list(c, what + ".c");
    names.push_back(entry.value("name", what));
    lig.name = nullptr;
    for (std::size_t i = 0; i < 3; ++i)
        lig.c[i] = to_c(c[i]);
    return lig;
}

json run_swap(const json &cfg, std::uint64_t seed) {
    std::vector<std::string> names;
    hb_ligand lig{};
    if (cfg.contains("ligand")) {
        lig = ligand_of(cfg.at("ligand"), names, "ligand");
    } else {
        auto c = complex_list(field(cfg, "c"), 3, "c");
        normalize_list(c, "c");
        for (std::size_t i = 0; i < 3; ++i)
            lig.c[i] = to_c(c[i]);
    }
    State x2;
    if (cfg.contains("x2_init")) {
        auto v = complex_list(cfg.at("x2_init"), 2, "x2_init");
        normalize_list(v, "x2_init");
        const char *label[] = {"X2"};
        const int dim[] = {2};
        const hb_complex amps[2] = {to_c(v[0]), to_c(v[1])};
        x2 = make_state([&](hb_state **o) {
            return hb_state_create(label, dim, 1, amps, 2, o);
        });
    }
    hb_swap_transcript tr{};
    const State fin = make_state([&](hb_state **o) {
        return hb_swap_protocol(&lig, x2.get(), seed, o, &tr);
    });
    const State before = make_state(
        [&](hb_state **o) { return hb_unified_state(lig.c, "XN", "X1", o); });
    return {{"outcome", tr.outcome},
            {"probability", jnum(tr.probability)},
            {"pauli_z_on_X1", tr.pauli_z != 0},
            {"final_state", state_json(fin.get())},
            {"eof_before", jnum(eoe(before.get(), {"XN"}))},
            {"eof_after", jnum(eoe(fin.get(), {"X1"}))}};
}

json run_recognize(const json &cfg) {
    const json &ls = field(cfg, "ligands");
    if (!ls.is_array() || ls.empty())
        throw ConfigError("ligands must be a non-empty array");
    const double tol = cfg.contains("tol") ? real_of(cfg["tol"], "tol") : 1e-6;
    const auto basis = basis_of(cfg);
    const hb_complex *bp = basis ? basis->data() : nullptr;
    json rows = json::array();
    for (std::size_t i = 0; i < ls.size(); ++i) {
        std::vector<std::string> names;
        const std::string what = "ligands[" + std::to_string(i) + "]";
        const hb_ligand lig = ligand_of(ls[i], names, what);
        const std::string name = lig.name != nullptr ? lig.name : names.front();
        const State bond = make_state(
            [&](hb_state **o) { return hb_unified_state(lig.c, "X2", "X1", o); });
        hb_complex lambda[3];
        check(hb_decompose_in_eigenbasis(bond.get(), bp, lambda));
        hb_recognition_outcome rec{};
        check(hb_classify(&lig, bp, tol, &rec));
        json dist = json::array(), lam = json::array();
        for (std::size_t j = 0; j < 3; ++j) {
            dist.push_back(jnum(rec.distribution[j]));
            lam.push_back(jcomplex(lambda[j]));
        }
        rows.push_back(
            {{"name", name},
             {"verdict", rec.verdict == HB_AGONIST ? "agonist" : "antagonist"},
             {"eigenstate", rec.agonist_index},
             {"decomposition", lam},
             {"conformation_weights", dist},
             {"coherence_residual", jnum(rec.coherence_residual)},
             {"eof", jnum(eoe(bond.get(), {"X2"}))}});
    }
    return {{"ligands", rows}};
}

int int_of(const json &v, const std::string &what) {
    if (!v.is_number_integer())
        throw ConfigError(what + " must be an integer");
    return v.get<int>();
}

json run_capacity(const json &cfg) {
    json out;
    const json &n = field(cfg, "n");
    auto one = [&](int k) {
        std::uint64_t cap = 0;
        check(hb_capacity(k, &cap));
        return cap;
    };
    if (n.is_array()) {
        json rows = json::array();
        for (std::size_t i = 0; i < n.size(); ++i) {
            const int k = int_of(n[i], "n[" + std::to_string(i) + "]");
            rows.push_back({{"n", k}, {"capacity", one(k)}});
        }
        out["capacity"] = rows;
    } else {
        out["capacity"] = one(int_of(n, "n"));
    }
    if (cfg.contains("enumerate")) {
        const int k = int_of(cfg["enumerate"], "enumerate");
        std::size_t count = 0;
        check(hb_count_agonists(k, &count));
        out["agonists_enumerated"] = {{"n", k}, {"count", count}};
    }
    if (cfg.contains("ligands")) {
        const json &lv = cfg.at("ligands");
        std::vector<std::int64_t> ns;
        if (lv.is_array()) {
            for (std::size_t i = 0; i < lv.size(); ++i)
                ns.push_back(int_of(lv[i], "ligands[" + std::to_string(i) + "]"));
        } else {
            ns.push_back(int_of(lv, "ligands"));
        }
        json rows = json::array();
        for (auto k : ns) {
            if (k < 1)
                throw ConfigError("ligand count must be at least 1");
            double exact = 0.0, rounded = 0.0;
            check(hb_min_bonds(static_cast<std::uint64_t>(k), &exact, &rounded));
            rows.push_back({{"ligands", k},
                            {"min_bonds", jnum(exact)},
                            {"min_bonds_2dp", jnum(rounded)}});
        }
        out["min_bonds"] = rows;
    }
    return out;
}

// ---- output -------------------------------------------------------------

void flatten(const json &v, const std::string &prefix,
             std::vector<std::pair<std::string, std::string>> &rows) {
    const bool leaf_array =
        v.is_array() && std::all_of(v.begin(), v.end(), [](const json &x) {
            return x.is_primitive() ||
                   (x.is_array() && x.size() == 2 && x[0].is_number());
        });
    if (v.is_object()) {
        for (auto it = v.begin(); it != v.end(); ++it)
            flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(),
                    rows);
    } else if (v.is_array() && !leaf_array) {
        for (std::size_t i = 0; i < v.size(); ++i)
            flatten(v[i], prefix + "[" + std::to_string(i) + "]", rows);
    } else {
        rows.emplace_back(prefix, v.is_string() ? v.get<std::string>() : v.dump());
    }
}

std::string render_table(const json &doc) {
    std::vector<std::pair<std::string, std::string>> rows;
    flatten(doc, "", rows);
    std::size_t width = 0;
    for (const auto &r : rows)
        width = std::max(width, r.first.size());
    std::ostringstream os;
    for (const auto &r : rows)
        os << r.first << std::string(width - r.first.size() + 2, ' ')
           << r.second << '\n';
    return os.str();
}

void emit(const json &doc, const std::string &format, const std::string &out) {
    const std::string text = doc.dump(2) + "\n";
    if (!out.empty()) {
        std::ofstream f(out, std::ios::binary);
        if (!f)
            throw ConfigError("cannot open output file '" + out + "'");
        f << text;
    }
    std::cout << (format == "json" ? text : render_table(doc));
}

json load_config(const std::string &path) {
    std::ifstream f(path, std::ios::binary);
    if (!f)
        throw ConfigError("cannot open config file '" + path + "'");
    json cfg;
    try {
        cfg = json::parse(f);
    } catch (const json::parse_error &e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    if (!cfg.is_object())
        throw ConfigError("config must be a JSON object");
    return cfg;
}

struct Options {
    std::string config;
    std::optional<std::uint64_t> seed;
    std::string out;
    std::string format = "table";
};

int run_scenario(const std::string &command, const Options &opt) {
    const json cfg = load_config(opt.config);
    const std::string kind = field(cfg, "kind").is_string()
                                 ? cfg.at("kind").get<std::string>()
                                 : throw ConfigError("kind must be a string");
    const bool matches =
        (command == "bond" && (kind == "covalent" || kind == "hbond")) ||
        command == kind;
    if (!matches)
        throw ConfigError("config kind '" + kind +
                          "' does not belong to subcommand '" + command + "'");
    std::uint64_t seed = 0;
    if (opt.seed) {
        seed = *opt.seed;
    } else if (cfg.contains("seed")) {
        if (!cfg["seed"].is_number_unsigned())
            throw ConfigError("seed must be a non-negative integer");
        seed = cfg["seed"].get<std::uint64_t>();
    }
    std::string out = opt.out;
    if (out.empty() && cfg.contains("output_path")) {
        if (!cfg["output_path"].is_string())
            throw ConfigError("output_path must be a string");
        out = cfg["output_path"].get<std::string>();
    }

    json result;
    if (kind == "covalent")
        result = run_covalent(cfg);
    else if (kind == "hbond")
        result = run_hbond(cfg);
    else if (kind == "thermal")
        result = run_thermal(cfg, seed);
    else if (kind == "swap")
        result = run_swap(cfg, seed);
    else if (kind == "recognize")
        result = run_recognize(cfg);
    else if (kind == "capacity")
        result = run_capacity(cfg);
    else
        throw ConfigError("unknown kind '" + kind + "'");

    result["kind"] = kind;
    result["seed"] = seed;
    emit(result, opt.format, out);
    return 0;
}

int run_reproduce(const Options &opt) {
    hb_report *raw = nullptr;
    check(hb_reproduce_paper(&raw));
    const Report report(raw);
    json rows = json::array();
    std::ostringstream table;
    table << std::left;
    char line[256];
    std::snprintf(line, sizeof line, "%-30s %-14s %-14s %-10s %s\n", "claim",
                  "expected", "computed", "abs_diff", "result");
    table << line;
    for (std::size_t i = 0; i < hb_report_size(report.get()); ++i) {
        hb_claim_row r{};
        check(hb_report_row(report.get(), i, &r));
        rows.push_back({{"id", r.id},
                        {"description", r.description},
                        {"paper", jnum(r.paper_value)},
                        {"computed", jnum(r.computed_value)},
                        {"abs_diff", jnum(r.abs_diff)},
                        {"pass", r.pass != 0}});
        std::snprintf(line, sizeof line, "%-30s %-14s %-14s %-10s %s\n", r.id,
                      fmt9(r.paper_value).c_str(), fmt9(r.computed_value).c_str(),
                      fmt9(r.abs_diff).c_str(), r.pass ? "PASS" : "FAIL");
        table << line;
    }
    const bool all = hb_report_all_pass(report.get()) != 0;
    const json doc = {{"claims", rows},
                      {"tolerance", 1e-4},
                      {"all_pass", all}};
    if (!opt.out.empty()) {
        std::ofstream f(opt.out, std::ios::binary);
        if (!f)
            throw ConfigError("cannot open output file '" + opt.out + "'");
        f << doc.dump(2) << "\n";
    }
    if (opt.format == "json")
        std::cout << doc.dump(2) << "\n";
    else
        std::cout << table.str() << (all ? "all claims pass\n"
                                         : "one or more claims FAIL\n");
    return all ? 0 : 1;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Entanglement in covalent and hydrogen bonds"};
    app.require_subcommand(1);
    Options opt;
    std::uint64_t seed = 0;

    auto add_common = [&](CLI::App *sub, bool needs_config) {
        auto *c = sub->add_option("--config", opt.config, "scenario JSON file");
        if (needs_config)
            c->required()->check(CLI::ExistingFile);
        sub->add_option("--seed", seed, "RNG seed (overrides the config)");
        sub->add_option("--out", opt.out, "write the JSON result document here");
        sub->add_option("--format", opt.format, "stdout format")
            ->check(CLI::IsMember({"table", "json"}));
    };
    const std::vector<std::pair<std::string, std::string>> scenarios = {
        {"bond", "covalent or H-bond ground state and its entanglement"},
        {"thermal", "thermal mixture, dephasing and entanglement of formation"},
        {"swap", "entanglement swapping from ligand to receptor"},
        {"recognize", "classify ligands as agonists or antagonists"},
        {"capacity", "recognition capacity and minimal bond count"},
    };
    for (const auto &[name, help] : scenarios)
        add_common(app.add_subcommand(name, help), true);
    add_common(app.add_subcommand("reproduce-paper",
                                  "evaluate the fixed claim manifest"),
               false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitConfig;
    }

    CLI::App *sub = app.get_subcommands().front();
    if (sub->count("--seed") > 0)
        opt.seed = seed;
    try {
        if (sub->get_name() == "reproduce-paper")
            return run_reproduce(opt);
        return run_scenario(sub->get_name(), opt);
    } catch (const ConfigError &e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const ApiError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.status == HB_ERR_INVALID_ARGUMENT ? kExitConfig : kExitNumerical;
    } catch (const json::exception &e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    }
}
