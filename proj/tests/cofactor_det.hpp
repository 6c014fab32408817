/*
   Copyright 2026 The k3nine authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

// Test-only determinant oracle: Laplace cofactor expansion along rows,
// memoized over column subsets so 16x16 inputs stay fast. Independent of the
// Bareiss elimination used by the library.

#include <optional>
#include <vector>

#include "k3nine/lattice.hpp"

inline k3nine::Int cofactor_determinant(const k3nine::lattice::Gram& g) {
    using k3nine::Int;
    const int n = g.n;
    std::vector<std::optional<Int>> memo(1u << n);
    auto solve = [&](auto&& self, unsigned mask) -> Int {
        if (mask == 0) return Int(1);
        if (memo[mask]) return *memo[mask];
        int row = n - __builtin_popcount(mask);
        Int acc(0);
        int sign = 1;
        for (int j = 0; j < n; ++j) {
            if (!(mask & (1u << j))) continue;
            if (g.at(row, j) != 0)
                acc += Int(sign) * g.at(row, j) * self(self, mask & ~(1u << j));
            sign = -sign;
        }
        memo[mask] = acc;
        return acc;
    };
    return solve(solve, (1u << n) - 1u);
}
