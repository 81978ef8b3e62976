// Copyright 2026 The mixdense Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Test-only reference for linear-optics amplitudes via matrix permanents.
//
// Independent of apply_element(): elements are embedded into a full M x M
// interferometer matrix, composed by matrix multiplication, and transition
// amplitudes are <out|U|in> = perm(U[rows(out), cols(in)]) / sqrt(prod n_in! prod n_out!).

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <numeric>
#include <vector>

#include <Eigen/Dense>

#include "mixdense/fock.hpp"

namespace oracle {

using Complex = std::complex<double>;
using Occupation = std::vector<int>;

inline double factorial(int n) {
    double f = 1.0;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

/// Brute-force permanent over all permutations.
inline Complex permanent(const Eigen::MatrixXcd& m) {
    const int n = static_cast<int>(m.rows());
    if (n == 0) return 1.0;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Complex sum = 0.0;
    do {
        Complex term = 1.0;
        for (int i = 0; i < n; ++i) term *= m(i, perm[i]);
        sum += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return sum;
}

/// Embeds one element into the identity on the full registry.
inline Eigen::MatrixXcd embed(const mixdense::ModeRegistry& registry, const mixdense::ModeUnitary& element) {
    const auto m = static_cast<Eigen::Index>(registry.size());
    Eigen::MatrixXcd full = Eigen::MatrixXcd::Identity(m, m);
    const auto targets = element.targets();
    std::vector<Eigen::Index> idx;
    for (const auto& t : targets) idx.push_back(static_cast<Eigen::Index>(registry.index_of(t)));
    for (std::size_t j = 0; j < idx.size(); ++j) {
        for (std::size_t k = 0; k < idx.size(); ++k) {
            full(idx[k], idx[j]) = element.matrix()(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(j));
        }
    }
    return full;
}

/// U_total = U_last * ... * U_first.
inline Eigen::MatrixXcd compose(const mixdense::ModeRegistry& registry,
                                const std::vector<mixdense::ModeUnitary>& circuit) {
    const auto m = static_cast<Eigen::Index>(registry.size());
    Eigen::MatrixXcd total = Eigen::MatrixXcd::Identity(m, m);
    for (const auto& e : circuit) total = embed(registry, e) * total;
    return total;
}

/// All occupation vectors of `modes` modes holding `photons` photons.
inline std::vector<Occupation> occupations(int modes, int photons) {
    std::vector<Occupation> out;
    Occupation cur(modes, 0);
    auto rec = [&](auto&& self, int mode, int left) -> void {
        if (mode == modes - 1) {
            cur[mode] = left;
            out.push_back(cur);
            return;
        }
        for (int k = left; k >= 0; --k) {
            cur[mode] = k;
            self(self, mode + 1, left - k);
        }
    };
    rec(rec, 0, photons);
    return out;
}

inline std::vector<int> expand(const Occupation& occ) {
    std::vector<int> v;
    for (int m = 0; m < static_cast<int>(occ.size()); ++m)
        for (int c = 0; c < occ[m]; ++c) v.push_back(m);
    return v;
}

inline Complex transition(const Eigen::MatrixXcd& u, const Occupation& in, const Occupation& out) {
    const auto cols = expand(in);
    const auto rows = expand(out);
    if (rows.size() != cols.size()) return 0.0;
    const auto n = static_cast<Eigen::Index>(rows.size());
    Eigen::MatrixXcd sub(n, n);
    for (Eigen::Index r = 0; r < n; ++r)
        for (Eigen::Index c = 0; c < n; ++c) sub(r, c) = u(rows[r], cols[c]);
    double norm = 1.0;
    for (int k : in) norm *= factorial(k);
    for (int k : out) norm *= factorial(k);
    return permanent(sub) / std::sqrt(norm);
}

/// Output amplitudes for a superposition input.
inline std::map<Occupation, Complex> evolve(const Eigen::MatrixXcd& u, const mixdense::PureState& state) {
    std::map<Occupation, Complex> out;
    const int modes = static_cast<int>(u.rows());
    for (const auto& target : occupations(modes, state.photon_number())) {
        Complex amp = 0.0;
        for (const auto& [basis, a] : state.amplitudes()) amp += a * transition(u, basis.occupations, target);
        if (std::abs(amp) > 1e-14) out[target] = amp;
    }
    return out;
}

}  // namespace oracle
