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

#include <set>
#include <string>
#include <vector>

#include "hbent/qmath.hpp"

namespace hbent::detail {

struct ResolvedCut {
    std::vector<std::string> a;
    std::vector<std::string> b;
    std::vector<std::size_t> positions_a;
    std::size_t dim_a = 1;
    std::size_t dim_b = 1;
};

inline ResolvedCut resolve_cut(const RegisterLayout &layout,
                               const std::vector<std::string> &side) {
    std::set<std::size_t> in_a;
    for (const auto &label : side) {
        if (!in_a.insert(layout.position(label)).second) {
            throw InvalidArgument("cut repeats label '" + label + "'");
        }
    }
    if (in_a.empty() || in_a.size() == layout.size()) {
        throw InvalidArgument("cut must leave both sides non-empty");
    }
    ResolvedCut out;
    const auto &subs = layout.subsystems();
    for (std::size_t k = 0; k < subs.size(); ++k) {
        const auto d = static_cast<std::size_t>(subs[k].dim);
        if (in_a.count(k) != 0) {
            out.a.push_back(subs[k].label);
            out.positions_a.push_back(k);
            out.dim_a *= d;
        } else {
            out.b.push_back(subs[k].label);
            out.dim_b *= d;
        }
    }
    return out;
}

} // namespace hbent::detail
